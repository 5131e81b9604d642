#include "chipfire/exactalg.hpp"

#include <utility>

namespace chipfire {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

RatVector to_rational(const IntVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& e : v) out.emplace_back(e);
  return out;
}

bool is_integral(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r.is_integer(); });
}

bool is_integral(const RatMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_integer()) return false;
  return true;
}

IntVector to_integer(const RatVector& v) {
  IntVector out;
  out.reserve(v.size());
  for (const auto& r : v) {
    if (!r.is_integer()) throw Error(ErrorCode::InvalidInput, "non-integer entry " + r.to_string());
    out.push_back(r.numerator());
  }
  return out;
}

IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_integer()) {
        throw Error(ErrorCode::InvalidInput, "non-integer entry " + m(i, j).to_string());
      }
      out(i, j) = m(i, j).numerator();
    }
  return out;
}

bool is_nonnegative(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r.sign() >= 0; });
}

BigInt det(const IntMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::NonSquare, "determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(t);
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

RatMatrix rat_inverse(const RatMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::NonSquare, "inverse of non-square matrix");
  const std::size_t n = a.rows();
  RatMatrix m = a;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k).is_zero()) ++pivot;
    if (pivot == n) throw Error(ErrorCode::SingularMatrix, "matrix is not invertible");
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(k, j), m(pivot, j));
        std::swap(inv(k, j), inv(pivot, j));
      }
    }
    const Rational p = m(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      m(k, j) /= p;
      inv(k, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m(i, k).is_zero()) continue;
      const Rational factor = m(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= factor * m(k, j);
        inv(i, j) -= factor * inv(k, j);
      }
    }
  }
  return inv;
}

RatVector solve(const RatMatrix& a, const RatVector& b) {
  if (!a.is_square()) throw Error(ErrorCode::NonSquare, "solve with non-square matrix");
  const std::size_t n = a.rows();
  if (b.size() != n) throw Error(ErrorCode::DimensionMismatch, "right-hand side length");
  RatMatrix m = a;
  RatVector x = b;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k).is_zero()) ++pivot;
    if (pivot == n) throw Error(ErrorCode::SingularMatrix, "system is singular");
    if (pivot != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(pivot, j));
      std::swap(x[k], x[pivot]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      const Rational factor = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= factor * m(k, j);
      x[i] -= factor * x[k];
    }
  }
  for (std::size_t k = n; k-- > 0;) {
    Rational acc = x[k];
    for (std::size_t j = k + 1; j < n; ++j) acc -= m(k, j) * x[j];
    x[k] = acc / m(k, k);
  }
  return x;
}

IntVector SmithDecomposition::invariant_factors() const {
  IntVector out(d.rows());
  for (std::size_t i = 0; i < d.rows(); ++i) out[i] = d(i, i);
  return out;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row[dst] += k * row[src]
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& k) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += k * m(src, j);
}

// col[dst] += k * col[src]
void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& k) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += k * m(i, src);
}

BigInt truncated_quotient(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::NonSquare, "Smith normal form of non-square matrix");
  if (det(a) == 0) throw Error(ErrorCode::SingularMatrix, "Smith normal form needs det != 0");

  const std::size_t n = a.rows();
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(n);
  IntMatrix u_inv = IntMatrix::identity(n);
  IntMatrix v = IntMatrix::identity(n);

  // Row operation E applied as d <- E d, u <- E u, u_inv <- u_inv E^-1.
  auto row_swap = [&](std::size_t r1, std::size_t r2) {
    swap_rows(d, r1, r2);
    swap_rows(u, r1, r2);
    swap_cols(u_inv, r1, r2);
  };
  auto row_add = [&](std::size_t dst, std::size_t src, const BigInt& k) {
    add_row(d, dst, src, k);
    add_row(u, dst, src, k);
    add_col(u_inv, src, dst, BigInt(-k));
  };
  auto row_negate = [&](std::size_t r) {
    for (std::size_t j = 0; j < n; ++j) {
      d(r, j) = -d(r, j);
      u(r, j) = -u(r, j);
      u_inv(j, r) = -u_inv(j, r);
    }
  };
  auto col_swap = [&](std::size_t c1, std::size_t c2) {
    swap_cols(d, c1, c2);
    swap_cols(v, c1, c2);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const BigInt& k) {
    add_col(d, dst, src, k);
    add_col(v, dst, src, k);
  };

  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // Smallest nonzero |entry| in the trailing block becomes the pivot.
      std::size_t pr = t, pc = t;
      bool found = false;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (d(i, j) == 0) continue;
          if (!found || mpz_cmpabs(d(i, j).get_mpz_t(), d(pr, pc).get_mpz_t()) < 0) {
            pr = i;
            pc = j;
            found = true;
          }
        }
      row_swap(t, pr);
      col_swap(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (d(i, t) == 0) continue;
        row_add(i, t, BigInt(-truncated_quotient(d(i, t), d(t, t))));
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        col_add(j, t, BigInt(-truncated_quotient(d(t, j), d(t, t))));
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into the pivot row and retry.
      bool divides = true;
      for (std::size_t i = t + 1; i < n && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            row_add(t, i, BigInt(1));
            divides = false;
            break;
          }
        }
      if (divides) break;
    }
    if (d(t, t) < 0) row_negate(t);
  }

  return SmithDecomposition{std::move(u), std::move(d), std::move(v), std::move(u_inv)};
}

}  // namespace chipfire

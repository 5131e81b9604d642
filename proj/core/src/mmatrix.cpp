#include "chipfire/mmatrix.hpp"

#include "chipfire/exactalg.hpp"

namespace chipfire {

std::string_view to_string(MMatrixFailure f) noexcept {
  switch (f) {
    case MMatrixFailure::BadSignPattern: return "BadSignPattern";
    case MMatrixFailure::Singular: return "Singular";
    case MMatrixFailure::NegativeInverseEntry: return "NegativeInverseEntry";
  }
  return "Unknown";
}

MMatrixVerdict check_m_matrix(const RatMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NonSquare, "M-matrix candidate must be square");
  const std::size_t n = m.rows();
  MMatrixVerdict verdict;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const int s = m(i, j).sign();
      if ((i == j && s <= 0) || (i != j && s > 0)) {
        verdict.failure_reason = MMatrixFailure::BadSignPattern;
        return verdict;
      }
    }

  RatMatrix inv;
  try {
    inv = rat_inverse(m);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SingularMatrix) throw;
    verdict.failure_reason = MMatrixFailure::Singular;
    return verdict;
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (inv(i, j).sign() < 0) {
        verdict.failure_reason = MMatrixFailure::NegativeInverseEntry;
        verdict.inverse = std::move(inv);
        return verdict;
      }

  verdict.is_m_matrix = true;
  verdict.positive_witness = inv * RatVector(n, Rational(1));
  verdict.inverse = std::move(inv);
  return verdict;
}

MMatrixVerdict check_m_matrix(const IntMatrix& m) { return check_m_matrix(to_rational(m)); }

RatVector positive_vector_witness(const RatMatrix& m) {
  auto verdict = check_m_matrix(m);
  if (!verdict.is_m_matrix) throw Error(ErrorCode::NotAnMMatrix, "no positive witness");
  return *verdict.positive_witness;
}

IntegerWitness integer_positive_witness(const RatMatrix& m) {
  const RatVector w = positive_vector_witness(m);
  BigInt kappa = 1;
  for (const auto& r : w) {
    const BigInt den = r.denominator();
    mpz_lcm(kappa.get_mpz_t(), kappa.get_mpz_t(), den.get_mpz_t());
  }
  IntVector u;
  u.reserve(w.size());
  for (const auto& r : w) u.push_back((r * Rational(kappa)).numerator());
  return IntegerWitness{std::move(u), std::move(kappa)};
}

}  // namespace chipfire

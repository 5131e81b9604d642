#pragma once

// Seeded random instance generators for the property suites.

#include <random>

#include "chipfire/constructors.hpp"

namespace chipfire::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline IntMatrix random_int_matrix(Rng& rng, std::size_t n, long lo, long hi) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = uniform(rng, lo, hi);
  return m;
}

// Numerators and denominators drawn from [-9, 9].
inline RatMatrix random_rat_matrix(Rng& rng, std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      long den = 0;
      while (den == 0) den = uniform(rng, -9, 9);
      m(i, j) = Rational(BigInt(uniform(rng, -9, 9)), BigInt(den));
    }
  return m;
}

// Entries in [-3, 3], |det| in [det_lo, det_hi].
inline IntMatrix random_invertible(Rng& rng, std::size_t n, long det_lo = 1, long det_hi = 30) {
  for (;;) {
    IntMatrix l = random_int_matrix(rng, n, -3, 3);
    const BigInt d = abs(det(l));
    if (d >= det_lo && d <= det_hi) return l;
  }
}

// Strictly diagonally dominant with nonpositive off-diagonal entries in
// steps of 1/2, hence an M-matrix.
inline RatMatrix random_m_matrix(Rng& rng, std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational off_sum = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      m(i, j) = Rational(BigInt(-uniform(rng, 0, 4)), BigInt(2));
      off_sum -= m(i, j);
    }
    m(i, i) = off_sum + Rational(BigInt(uniform(rng, 1, 4)), BigInt(2));
  }
  return m;
}

inline Pairing random_pairing(Rng& rng, std::size_t n, long det_hi = 30) {
  return make_pairing(random_invertible(rng, n, 1, det_hi), random_m_matrix(rng, n));
}

// A configuration of S+: a random integer vector pushed into S+ by the
// smallest number of translations along L u, plus up to `slack` more.
inline ConfigS random_s_plus(Rng& rng, const Pairing& p, long spread = 5, long slack = 3) {
  const std::size_t n = p.n();
  ConfigS f{IntVector(n)};
  for (auto& v : f.f) v = uniform(rng, -spread, spread);
  const RatVector x = to_r_coords(p, f).x;
  const auto& w = p.witness();
  BigInt m = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const BigInt need = (-x[i] / Rational(w.kappa)).ceil();
    if (need > m) m = need;
  }
  m += uniform(rng, 0, slack);
  const IntVector lu = p.l() * w.u;
  for (std::size_t i = 0; i < n; ++i) f.f[i] += m * lu[i];
  return f;
}

// Rejection-samples the box [-spread, spread]^n for a member of S+, which
// keeps M^-1 x small; falls back to random_s_plus.
inline ConfigS random_small_s_plus(Rng& rng, const Pairing& p, long spread = 4) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    ConfigS f{IntVector(p.n())};
    for (auto& v : f.f) v = uniform(rng, -spread, spread);
    if (in_s_plus(p, f)) return f;
  }
  return random_s_plus(rng, p, 0, 0);
}

inline IntVector random_int_vector(Rng& rng, std::size_t n, long lo, long hi) {
  IntVector v(n);
  for (auto& e : v) e = uniform(rng, lo, hi);
  return v;
}

// Reduced Laplacian of a random connected undirected graph on `vertices`
// vertices (a random spanning tree plus extra edges).
inline IntMatrix random_connected_graph_laplacian(Rng& rng, std::size_t vertices) {
  Digraph g;
  g.vertex_count = vertices;
  for (std::size_t v = 1; v < vertices; ++v) {
    g.add_undirected(v, static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(v) - 1)),
                     static_cast<std::uint64_t>(uniform(rng, 1, 2)));
  }
  for (std::size_t u = 0; u < vertices; ++u)
    for (std::size_t v = u + 1; v < vertices; ++v)
      if (uniform(rng, 0, 2) == 0) g.add_undirected(u, v);
  g.sink = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(vertices) - 1));
  return reduced_graph_laplacian(g);
}

}  // namespace chipfire::testing

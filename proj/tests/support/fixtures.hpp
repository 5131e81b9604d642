#pragma once

#include "chipfire/constructors.hpp"

namespace chipfire::testing {

// L and M of the running example: L is the reduced combinatorial Laplacian
// of the tetrahedron boundary, M the reduced Laplacian of K4.
inline IntMatrix running_l() { return IntMatrix{{2, -1, 1}, {-1, 2, -1}, {1, -1, 2}}; }
inline IntMatrix running_m_int() { return IntMatrix{{3, -1, -1}, {-1, 3, -1}, {-1, -1, 3}}; }
inline RatMatrix running_m() { return to_rational(running_m_int()); }
inline Pairing running_pairing() { return make_pairing(running_l(), running_m()); }

inline IntMatrix path_laplacian() { return IntMatrix{{2, -1}, {-1, 2}}; }

inline RatVector rat_vec(std::initializer_list<Rational> v) { return RatVector(v); }
inline IntVector int_vec(std::initializer_list<long> v) {
  IntVector out;
  for (long e : v) out.emplace_back(e);
  return out;
}

}  // namespace chipfire::testing

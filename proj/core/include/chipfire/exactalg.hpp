#pragma once

#include "chipfire/matrix.hpp"

namespace chipfire {

// Determinant by Bareiss fraction-free elimination; every intermediate
// value stays an integer.
BigInt det(const IntMatrix& a);

// Gauss-Jordan inverse over the rationals. Throws SingularMatrix.
RatMatrix rat_inverse(const RatMatrix& a);

// Unique solution of a * x = b. Throws SingularMatrix.
RatVector solve(const RatMatrix& a, const RatVector& b);

/// Smith normal form of a square nonsingular integer matrix.
///
/// `u * a * v == d` with `u`, `v` unimodular and `d` diagonal, positive,
/// and each diagonal entry dividing the next. `u_inverse` is carried along
/// so coset representatives can be rebuilt from residues without another
/// elimination.
struct SmithDecomposition {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
  IntMatrix u_inverse;

  IntVector invariant_factors() const;
};

// Pivot is the smallest nonzero |entry| of the remaining block.
// Throws SingularMatrix if det a == 0, NonSquare if a is not square.
SmithDecomposition smith_normal_form(const IntMatrix& a);

}  // namespace chipfire

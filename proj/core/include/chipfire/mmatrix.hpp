#pragma once

#include <optional>

#include "chipfire/matrix.hpp"

namespace chipfire {

enum class MMatrixFailure { BadSignPattern, Singular, NegativeInverseEntry };

std::string_view to_string(MMatrixFailure f) noexcept;

struct MMatrixVerdict {
  bool is_m_matrix = false;
  std::optional<MMatrixFailure> failure_reason;
  std::optional<RatMatrix> inverse;
  // w >= 0 with M w = 1 (all ones), present only for M-matrices.
  std::optional<RatVector> positive_witness;
};

// Decides membership by checking the sign pattern first (off-diagonal <= 0,
// diagonal > 0) and then entrywise nonnegativity of the exact inverse.
// Throws NonSquare.
MMatrixVerdict check_m_matrix(const RatMatrix& m);
MMatrixVerdict check_m_matrix(const IntMatrix& m);

// M^-1 * 1. Throws NotAnMMatrix.
RatVector positive_vector_witness(const RatMatrix& m);

struct IntegerWitness {
  IntVector u;   // kappa * M^-1 * 1, nonnegative
  BigInt kappa;  // lcm of denominators of M^-1 * 1; M u = kappa * 1
};

IntegerWitness integer_positive_witness(const RatMatrix& m);

}  // namespace chipfire

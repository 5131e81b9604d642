#pragma once

/*
 * The (L, M) pairing.
 *
 * L is an invertible integer matrix that drives firing; M is an M-matrix
 * that decides which configurations are valid. With N = L M^-1, the valid
 * integer configurations are S+ = { N x : x >= 0, N x integer } and the
 * coordinate vectors x form R+. Firing site i subtracts L e_i from f and,
 * equivalently, M e_i from x.
 */

#include "chipfire/exactalg.hpp"
#include "chipfire/mmatrix.hpp"

namespace chipfire {

// Integer configuration f (chips or flow per site). Entries may be negative.
struct ConfigS {
  IntVector f;

  std::size_t size() const { return f.size(); }
  friend bool operator==(const ConfigS&, const ConfigS&) = default;
  friend auto operator<=>(const ConfigS& a, const ConfigS& b) {
    return std::lexicographical_compare_three_way(a.f.begin(), a.f.end(), b.f.begin(), b.f.end(),
                                                  [](const BigInt& x, const BigInt& y) {
                                                    const int c = cmp(x, y);
                                                    return c < 0 ? std::strong_ordering::less
                                                           : c > 0 ? std::strong_ordering::greater
                                                                   : std::strong_ordering::equal;
                                                  });
  }
};

// Coordinate vector x with f = N x.
struct ConfigR {
  RatVector x;

  std::size_t size() const { return x.size(); }
  friend bool operator==(const ConfigR&, const ConfigR&) = default;
};

ConfigS make_config(std::initializer_list<long> values);

class Pairing {
 public:
  // Throws DimensionMismatch, SingularL, NotAnMMatrix.
  static Pairing make(const IntMatrix& l, const RatMatrix& m);
  static Pairing make(const IntMatrix& l, const IntMatrix& m) { return make(l, to_rational(m)); }

  std::size_t n() const { return l_.rows(); }
  const IntMatrix& l() const { return l_; }
  const RatMatrix& m() const { return m_; }
  const RatMatrix& l_inverse() const { return l_inv_; }
  const RatMatrix& m_inverse() const { return m_inv_; }
  const RatMatrix& n_matrix() const { return n_; }
  const RatMatrix& n_inverse() const { return n_inv_; }
  const BigInt& det_l_abs() const { return det_l_abs_; }
  const SmithDecomposition& smith() const { return smith_; }
  const IntegerWitness& witness() const { return witness_; }

 private:
  Pairing() = default;

  IntMatrix l_;
  RatMatrix l_rat_;
  RatMatrix m_;
  RatMatrix l_inv_;
  RatMatrix m_inv_;
  RatMatrix n_;
  RatMatrix n_inv_;
  BigInt det_l_abs_;
  SmithDecomposition smith_;
  IntegerWitness witness_;
};

inline Pairing make_pairing(const IntMatrix& l, const RatMatrix& m) { return Pairing::make(l, m); }
inline Pairing make_pairing(const IntMatrix& l, const IntMatrix& m) { return Pairing::make(l, m); }

// x = N^-1 f.
ConfigR to_r_coords(const Pairing& p, const ConfigS& f);
// f = N x; throws InvalidConfiguration if N x is not integral.
ConfigS to_s_coords(const Pairing& p, const ConfigR& x);

bool in_s_plus(const Pairing& p, const ConfigS& f);
bool in_r_plus(const Pairing& p, const ConfigR& x);

// f ~ g under L: L^-1 (g - f) is integral.
bool same_class(const Pairing& p, const ConfigS& f, const ConfigS& g);
// x ~ y under M: M^-1 (y - x) is integral.
bool same_class_r(const Pairing& p, const ConfigR& x, const ConfigR& y);

}  // namespace chipfire

#pragma once

/*
 * Representatives of the critical group coker(L) = Z^n / im L.
 *
 * Classes are labelled through the Smith normal form U L V = D: the label
 * of f is (U f) mod d_i. Each class holds exactly one critical and one
 * superstable configuration of S+; the superstable one is also the unique
 * minimizer of the energy ||L^-1 f||^2 within the class.
 */

#include <optional>
#include <vector>

#include "chipfire/dynamics.hpp"

namespace chipfire {

struct CosetLabel {
  IntVector residues;

  friend bool operator==(const CosetLabel&, const CosetLabel&) = default;
  friend bool operator<(const CosetLabel& a, const CosetLabel& b) {
    return ConfigS{a.residues} < ConfigS{b.residues};
  }
};

struct ClassReport {
  CosetLabel label;
  ConfigS critical;
  ConfigS superstable;
  Rational energy_of_superstable;
};

struct DualityResult {
  bool holds = false;
  // A critical c whose dual D - c is not superstable, or a superstable s
  // whose dual is not critical.
  std::optional<ConfigS> counterexample;
};

inline constexpr std::uint64_t kDefaultDetCap = 10'000;
inline constexpr std::uint64_t kDefaultBallCap = 10'000'000;

CosetLabel coset_label(const Pairing& p, const ConfigS& f);

// Every label, in lexicographic order of residues. Throws DeterminantExceedsCap.
std::vector<CosetLabel> all_labels(const Pairing& p, const BigInt& det_cap = kDefaultDetCap);

// A member of the class in which every site can fire (x_i >= M_ii). Built as
// r + m L u with r a lattice preimage of the label and u the integer witness
// of M; m is the smallest value clearing the thresholds, plus
// `extra_translations`.
ConfigS find_valid_representative(const Pairing& p, const CosetLabel& label,
                                  std::uint64_t extra_translations = 0);

ConfigS critical_config(const Pairing& p, const CosetLabel& label,
                        const StabilizeOptions& options = {});

// Stable and equal to the critical configuration of its own class.
bool is_critical(const Pairing& p, const ConfigS& f);

// ||L^-1 f||^2.
Rational energy(const Pairing& p, const ConfigS& f);
// ||M^-1 x||^2, equal to energy(N x).
Rational energy_r(const Pairing& p, const ConfigR& x);

// Greedy descent from the critical configuration along violating scripts.
ConfigS superstable_config(const Pairing& p, const CosetLabel& label,
                           const BigInt& box_cap = kDefaultBoxCap);

// Independent check of the minimizer: enumerates every z with
// ||L^-1 f - z||^2 <= energy(f) and keeps the lowest-energy f - L z in S+.
// Throws InvalidConfiguration, BallTooLarge.
ConfigS energy_minimizer_bruteforce(const Pairing& p, const ConfigS& f,
                                    const BigInt& ball_cap = kDefaultBallCap);

std::vector<ClassReport> all_class_reports(const Pairing& p, const BigInt& det_cap = kDefaultDetCap,
                                           const BigInt& box_cap = kDefaultBoxCap);

// Tests whether c -> D - c with D_i = L_ii - 1 maps criticals onto superstables.
DualityResult check_duality(const Pairing& p, const BigInt& det_cap = kDefaultDetCap);
DualityResult check_duality(const std::vector<ClassReport>& reports, const IntMatrix& l);

}  // namespace chipfire

#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "chipfire/pairing.hpp"

namespace chipfire {

// z_i = number of times site i fires.
struct FiringScript {
  IntVector z;

  friend bool operator==(const FiringScript&, const FiringScript&) = default;
};

struct FiringPolicy {
  enum class Kind { LowestIndex, HighestIndex, Random };

  Kind kind = Kind::LowestIndex;
  std::uint64_t seed = 0;

  static FiringPolicy lowest() { return {Kind::LowestIndex, 0}; }
  static FiringPolicy highest() { return {Kind::HighestIndex, 0}; }
  static FiringPolicy random(std::uint64_t seed) { return {Kind::Random, seed}; }
};

struct StabilizationResult {
  ConfigS stable_config;
  FiringScript total_firings;
  std::uint64_t steps = 0;
};

// Observer hook called after every single firing.
struct FiringStep {
  std::size_t site;
  const ConfigS& config;
  const ConfigR& coords;
};

struct StabilizeOptions {
  std::uint64_t iteration_cap = 1'000'000;
  std::function<void(const FiringStep&)> on_fire;
};

inline constexpr std::uint64_t kDefaultBoxCap = 10'000'000;

// Threshold test x_i >= M_ii. Throws InvalidConfiguration, IndexOutOfRange.
bool can_fire(const Pairing& p, const ConfigS& f, std::size_t site);
// Same question answered by testing f - L e_i for membership in S+.
bool can_fire_by_membership(const Pairing& p, const ConfigS& f, std::size_t site);

// f - L e_i. Throws CannotFire naming the coordinate of x - M e_i that went negative.
ConfigS fire(const Pairing& p, const ConfigS& f, std::size_t site);

// M z <= x. Throws InvalidConfiguration, NegativeScript.
bool can_multifire(const Pairing& p, const ConfigS& f, const FiringScript& z);
// f - L z. Throws CannotFire when the script leaves S+.
ConfigS multifire(const Pairing& p, const ConfigS& f, const FiringScript& z);

// Fires ready sites per policy until none is ready. The final configuration
// and firing script do not depend on the policy.
StabilizationResult stabilize(const Pairing& p, const ConfigS& f,
                              FiringPolicy policy = FiringPolicy::lowest(),
                              const StabilizeOptions& options = {});

bool is_stable(const Pairing& p, const ConfigS& f);

struct SuperstabilityCertificate {
  bool superstable = false;
  // Number of scripts in the search box 0 <= z <= floor(M^-1 x).
  BigInt box_volume;
  // Lexicographically first nonzero z with f - L z in S+, when one exists.
  std::optional<FiringScript> violating_script;
};

// Exhaustive search of the box 0 <= z <= floor(M^-1 x); any legal script
// satisfies M z <= x and hence z <= M^-1 x because M^-1 >= 0.
// Throws InvalidConfiguration, BoxTooLarge.
SuperstabilityCertificate check_superstable(const Pairing& p, const ConfigS& f,
                                            const BigInt& box_cap = kDefaultBoxCap);
bool is_superstable(const Pairing& p, const ConfigS& f, const BigInt& box_cap = kDefaultBoxCap);

// z+ : negative entries clamped to zero.
IntVector positive_part(const IntVector& z);

}  // namespace chipfire

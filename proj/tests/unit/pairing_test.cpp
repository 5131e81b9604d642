#include <gtest/gtest.h>

#include "chipfire/pairing.hpp"
#include "../support/fixtures.hpp"
#include "../support/generators.hpp"

namespace chipfire {
namespace {

using testing::running_l;
using testing::running_m;
using testing::running_pairing;

Rational q(long num, long den) { return Rational(BigInt(num), BigInt(den)); }

TEST(MakePairing, IdentityGivesIdentityN) {
  const Pairing p = make_pairing(IntMatrix::identity(2), RatMatrix::identity(2));
  EXPECT_EQ(p.n_matrix(), RatMatrix::identity(2));
  EXPECT_EQ(p.det_l_abs(), 1);
}

TEST(MakePairing, RunningExampleN) {
  const Pairing p = running_pairing();
  const RatMatrix expected{{1, q(1, 4), q(3, 4)}, {q(-1, 4), q(1, 2), q(-1, 4)}, {q(3, 4), q(1, 4), 1}};
  EXPECT_EQ(p.n_matrix(), expected);
  EXPECT_EQ(p.n_matrix() * p.n_inverse(), RatMatrix::identity(3));
  EXPECT_EQ(p.det_l_abs(), 4);
}

TEST(MakePairing, SelfPairingGivesIdentityN) {
  const IntMatrix m = testing::running_m_int();
  EXPECT_EQ(make_pairing(m, m).n_matrix(), RatMatrix::identity(3));
}

TEST(MakePairing, Errors) {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  EXPECT_EQ(code_of([] { make_pairing(IntMatrix{{1, 2}, {2, 4}}, RatMatrix::identity(2)); }),
            ErrorCode::SingularL);
  EXPECT_EQ(code_of([] { make_pairing(running_l(), to_rational(running_l())); }), ErrorCode::NotAnMMatrix);
  EXPECT_EQ(code_of([] { make_pairing(running_l(), RatMatrix::identity(2)); }), ErrorCode::DimensionMismatch);
}

TEST(ToRCoords, RunningExample) {
  const Pairing p = running_pairing();
  EXPECT_EQ(to_r_coords(p, make_config({0, 0, 1})).x, (RatVector{q(-7, 4), q(1, 4), q(9, 4)}));
  EXPECT_EQ(to_r_coords(p, make_config({1, -1, 1})).x, (RatVector{q(3, 4), q(-5, 4), q(3, 4)}));
  EXPECT_EQ(to_r_coords(p, make_config({0, 0, 0})).x, (RatVector{0, 0, 0}));
  EXPECT_THROW(to_r_coords(p, make_config({1, 2})), Error);
}

TEST(InSPlus, RunningExample) {
  const Pairing p = running_pairing();
  EXPECT_TRUE(in_s_plus(p, make_config({0, 0, 0})));
  EXPECT_TRUE(in_s_plus(p, make_config({1, 0, 1})));
  EXPECT_TRUE(in_s_plus(p, make_config({3, -1, 4})));
  EXPECT_FALSE(in_s_plus(p, make_config({0, 0, 1})));
  EXPECT_FALSE(in_s_plus(p, make_config({1, -1, 1})));
}

TEST(InRPlus, RunningExample) {
  const Pairing p = running_pairing();
  EXPECT_TRUE(in_r_plus(p, ConfigR{RatVector{0, 0, 0}}));
  EXPECT_TRUE(in_r_plus(p, to_r_coords(p, make_config({1, 0, 1}))));
  // N (1/8, 0, 0) = (1/8, -1/32, 3/32).
  EXPECT_FALSE(in_r_plus(p, ConfigR{RatVector{q(1, 8), 0, 0}}));
  EXPECT_FALSE(in_r_plus(p, to_r_coords(p, make_config({1, -1, 1}))));
}

TEST(SameClass, RunningExample) {
  const Pairing p = running_pairing();
  EXPECT_TRUE(same_class(p, make_config({1, 2, 3}), make_config({1, 2, 3})));
  EXPECT_TRUE(same_class(p, make_config({0, 0, 0}), make_config({4, 0, 4})));
  EXPECT_FALSE(same_class(p, make_config({0, 0, 0}), make_config({4, -1, 4})));
}

TEST(PairingProperties, ClassCorrespondenceBetweenCoordinateSystems) {
  testing::Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const Pairing p = testing::random_pairing(rng, static_cast<std::size_t>(testing::uniform(rng, 1, 3)));
    const ConfigS f = testing::random_s_plus(rng, p);
    ConfigS g = testing::random_s_plus(rng, p);
    if (trial % 2 == 0) {
      // Force a same-class pair half the time.
      g = ConfigS{f.f - p.l() * testing::random_int_vector(rng, p.n(), -2, 2)};
      if (!in_s_plus(p, g)) continue;
    }
    ASSERT_EQ(same_class(p, f, g), same_class_r(p, to_r_coords(p, f), to_r_coords(p, g)));
  }
}

TEST(PairingProperties, SPlusMembershipMatchesRPlus) {
  testing::Rng rng(32);
  for (int trial = 0; trial < 300; ++trial) {
    const Pairing p = testing::random_pairing(rng, static_cast<std::size_t>(testing::uniform(rng, 1, 3)));
    const ConfigS f{testing::random_int_vector(rng, p.n(), -6, 6)};
    ASSERT_EQ(in_s_plus(p, f), in_r_plus(p, to_r_coords(p, f)));
    if (in_s_plus(p, f)) ASSERT_EQ(to_s_coords(p, to_r_coords(p, f)), f);
  }
}

TEST(PairingProperties, DiagonalScalingLeavesSPlusUnchanged) {
  testing::Rng rng(33);
  int pairs = 0;
  for (int trial = 0; trial < 400 && pairs < 40; ++trial) {
    const std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 1, 3));
    const IntMatrix l = testing::random_invertible(rng, n);
    const RatMatrix m = testing::random_m_matrix(rng, n);
    RatVector d(n);
    for (auto& e : d) e = testing::uniform(rng, 1, 4);
    const RatMatrix dm = RatMatrix::diagonal(d) * m;
    if (!check_m_matrix(dm).is_m_matrix) continue;
    ++pairs;
    const Pairing a = make_pairing(l, m);
    const Pairing b = make_pairing(l, dm);
    for (int s = 0; s < 50; ++s) {
      const ConfigS f{testing::random_int_vector(rng, n, -5, 5)};
      ASSERT_EQ(in_s_plus(a, f), in_s_plus(b, f));
    }
  }
  EXPECT_GE(pairs, 20);
}

}  // namespace
}  // namespace chipfire

#include "hyperfn/pants_trig.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <random>

#include "hyperfn/error.hpp"
#include "reference_values.hpp"

namespace hyperfn {
namespace {

constexpr int kTrials = 1000;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::ParseError;
}

double rel(double lhs, double rhs) { return std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)); }

double seam_rhs(double li, double lj, double lk) {
  return (std::cosh(lk / 2) + std::cosh(li / 2) * std::cosh(lj / 2)) / (std::sinh(li / 2) * std::sinh(lj / 2));
}

TEST(Seam, EquilateralReference) {
  const SeamLengths s = seam_lengths({2.0, 2.0, 2.0});
  ASSERT_TRUE(s.d12 && s.d13 && s.d23);
  EXPECT_NEAR(*s.d12, ref::kSeam222, 1e-14);
  EXPECT_EQ(*s.d12, *s.d13);
  EXPECT_EQ(*s.d12, *s.d23);
}

TEST(Seam, PunctureReference) {
  const SeamLengths s = seam_lengths({2.0, 2.0, 0.0});
  ASSERT_TRUE(s.d12);
  EXPECT_NEAR(*s.d12, ref::kSeam220, 1e-14);
  EXPECT_FALSE(s.d13);
  EXPECT_FALSE(s.d23);
  EXPECT_EQ(code_of([] { seam_length({2.0, 2.0, 0.0}, 0, 2); }), ErrorCode::PunctureSeam);
  EXPECT_EQ(code_of([] { seam_length({2.0, 2.0, 0.0}, 2, 1); }), ErrorCode::PunctureSeam);
}

TEST(Seam, SwappingCuffsPermutesSeamsExactly) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.01, 10.0);
  for (int i = 0; i < kTrials; ++i) {
    const double a = u(rng), b = u(rng), c = u(rng);
    const SeamLengths s = seam_lengths({a, b, c});
    const SeamLengths t = seam_lengths({b, a, c});
    EXPECT_EQ(*s.d12, *t.d12);
    EXPECT_EQ(*s.d13, *t.d23);
    EXPECT_EQ(*s.d23, *t.d13);
  }
}

TEST(Seam, IdentityResidual) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(0.01, 10.0);
  for (int i = 0; i < kTrials; ++i) {
    const double l[3] = {u(rng), u(rng), u(rng)};
    for (int a = 0; a < 3; ++a) {
      for (int b = a + 1; b < 3; ++b) {
        const double d = seam_length({l[0], l[1], l[2]}, a, b);
        EXPECT_GT(d, 0.0);
        EXPECT_LT(rel(std::cosh(d), seam_rhs(l[a], l[b], l[3 - a - b])), 1e-12);
      }
    }
  }
}

TEST(Seam, RejectsBadInput) {
  EXPECT_EQ(code_of([] { seam_length({30.0, 1.0, 1.0}, 0, 1); }), ErrorCode::OverflowGuard);
  EXPECT_EQ(code_of([] { seam_length({-1.0, 1.0, 1.0}, 0, 1); }), ErrorCode::BadParameter);
  EXPECT_EQ(code_of([] { seam_length({1.0, 1.0, 1.0}, 1, 1); }), ErrorCode::BadParameter);
}

TEST(Pentagon, SymmetricSolution) {
  EXPECT_NEAR(pentagon_perpendicular_length(ref::kAsinh1, 0.0), ref::kAsinh1, 1e-15);
}

TEST(Pentagon, IdentityResidual) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> ua(0.01, 5.0);
  std::uniform_real_distribution<double> ul(0.0, 10.0);
  for (int i = 0; i < kTrials; ++i) {
    const double a = ua(rng), l = ul(rng);
    const double d = pentagon_perpendicular_length(a, l);
    EXPECT_GT(d, 0.0);
    EXPECT_LT(rel(std::sinh(d) * std::sinh(a), std::cosh(l / 2)), 1e-12);
  }
}

TEST(Pentagon, DecreasesInSide) {
  for (double l : {0.0, 0.5, 2.0, 7.0}) {
    double prev = pentagon_perpendicular_length(0.01, l);
    for (int i = 1; i <= 200; ++i) {
      const double d = pentagon_perpendicular_length(0.01 + 0.025 * i, l);
      EXPECT_LT(d, prev);
      prev = d;
    }
  }
}

TEST(Pentagon, RejectsNonpositiveSide) {
  EXPECT_EQ(code_of([] { pentagon_perpendicular_length(0.0, 1.0); }), ErrorCode::NonpositiveSide);
  EXPECT_EQ(code_of([] { pentagon_perpendicular_length(-0.5, 1.0); }), ErrorCode::NonpositiveSide);
}

TEST(Handle, Reference) { EXPECT_NEAR(handle_orthogeodesic_length(2.0, 2.0), ref::kHandle22, 1e-14); }

TEST(Handle, IdentityResidual) {
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> uc(0.01, 8.0);
  std::uniform_real_distribution<double> uo(0.0, 8.0);
  for (int i = 0; i < kTrials; ++i) {
    const double l = uc(rng), o = uo(rng);
    const double d = handle_orthogeodesic_length(l, o);
    const double s = std::sinh(l / 2), c = std::cosh(l / 2);
    EXPECT_LT(rel(std::cosh(d) * s * s, std::cosh(o) + c * c), 1e-12);
  }
}

TEST(Handle, IsTheSeamBetweenTheTwoCopies) {
  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> u(0.01, 8.0);
  for (int i = 0; i < 200; ++i) {
    const double l = u(rng), third = u(rng);
    EXPECT_NEAR(handle_orthogeodesic_length(l, third / 2), seam_length({l, l, third}, 0, 1), 1e-12);
  }
}

TEST(Handle, TwoLogLaw) {
  double lo = INFINITY, hi = -INFINITY;
  for (int n = 5; n <= 30; ++n) {
    const double l = std::exp(-n);
    const double v = std::exp(handle_orthogeodesic_length(l, 1.0)) * l * l;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  EXPECT_GT(lo, 0.0);
  EXPECT_LT(hi / lo, 10.0);
}

TEST(Handle, DeviationBoundedForShortCuffs) {
  double lo = INFINITY, hi = -INFINITY;
  for (double l = 0.1; l > 1e-12; l *= 0.7) {
    for (double o : {0.5, 1.0, 2.0, 4.0}) {
      const double v = handle_orthogeodesic_length(l, o) + 2.0 * std::log(l);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  // cosh(o) + 1 ranges over [2.13, 28.3] and the law is d + 2 log l -> log(8 (cosh o + 1)).
  EXPECT_GT(lo, std::log(8.0 * 2.0));
  EXPECT_LT(hi, std::log(8.0 * 30.0));
}

TEST(Handle, RejectsNonpositiveCuff) {
  EXPECT_EQ(code_of([] { handle_orthogeodesic_length(0.0, 1.0); }), ErrorCode::NonpositiveCuff);
}

TEST(SelfOrthogeodesic, BothPentagonsClose) {
  std::mt19937_64 rng(16);
  std::uniform_real_distribution<double> ul(0.01, 10.0);
  std::uniform_real_distribution<double> uo(0.0, 10.0);
  for (int i = 0; i < kTrials; ++i) {
    const double l = ul(rng), a = uo(rng), b = uo(rng);
    const SelfOrthogeodesic g = self_orthogeodesic(l, a, b);
    ASSERT_GT(g.foot_offset, 0.0);
    ASSERT_LT(g.foot_offset, l / 2);
    EXPECT_NEAR(g.half_length, pentagon_perpendicular_length(g.foot_offset, a), 1e-12);
    EXPECT_NEAR(g.half_length, pentagon_perpendicular_length(l / 2 - g.foot_offset, b), 1e-9);
  }
}

TEST(SelfOrthogeodesic, SymmetricSplitForEqualCuffs) {
  const SelfOrthogeodesic g = self_orthogeodesic(1.2, 0.7, 0.7);
  EXPECT_NEAR(g.foot_offset, 0.3, 1e-15);
  EXPECT_NEAR(2.0 * pentagon_perpendicular_length(1.2 / 4, 0.7), 2.0 * g.half_length, 1e-12);
}

}  // namespace
}  // namespace hyperfn

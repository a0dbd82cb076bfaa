#include "hyperfn/isometry.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <random>

#include "hyperfn/error.hpp"

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

// Random element of SL(2,R) with entries of moderate size.
Isometry random_sl2(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::uniform_real_distribution<double> mag(0.5, 2.0);
  const double a = mag(rng) * (rng() % 2 ? 1.0 : -1.0);
  const double b = u(rng);
  const double c = u(rng);
  return Isometry::from_entries(a, b, c, (1.0 + b * c) / a);
}

// Hyperbolic element with known translation length, conjugated at random.
Isometry random_hyperbolic(std::mt19937_64& rng, double* length = nullptr) {
  std::uniform_real_distribution<double> ul(0.1, 5.0);
  const double l = ul(rng);
  if (length) *length = l;
  const Isometry c = random_sl2(rng);
  return compose(compose(c, Isometry::axis_translation(l)), c.inverse());
}

double max_entry_diff(const Isometry& a, const Isometry& b) {
  return std::max({std::abs(a.m11() - b.m11()), std::abs(a.m12() - b.m12()), std::abs(a.m21() - b.m21()),
                   std::abs(a.m22() - b.m22())});
}

TEST(Compose, IdentityIsNeutral) {
  std::mt19937_64 rng(1);
  const Isometry a = random_sl2(rng);
  EXPECT_EQ(max_entry_diff(compose(Isometry(), a), a), 0.0);
  EXPECT_EQ(max_entry_diff(compose(a, Isometry()), a), 0.0);
}

TEST(Compose, DiagonalMultiplies) {
  const double e = std::exp(1.0);
  const Isometry d = Isometry::from_entries(e, 0.0, 0.0, 1.0 / e);
  const Isometry d2 = compose(d, d);
  EXPECT_NEAR(d2.m11(), e * e, 1e-14);
  EXPECT_NEAR(d2.m22(), 1.0 / (e * e), 1e-16);
  EXPECT_EQ(d2.m12(), 0.0);
  EXPECT_EQ(d2.m21(), 0.0);
}

TEST(Compose, InverseGivesIdentity) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < kTrials; ++i) {
    const Isometry a = random_hyperbolic(rng);
    EXPECT_LT(max_entry_diff(compose(a, a.inverse()), Isometry()), 1e-12);
  }
}

TEST(Compose, RenormalizesSmallDrift) {
  const Isometry a = Isometry::from_entries(1.0 + 5e-13, 0.0, 0.0, 1.0);
  EXPECT_GT(std::abs(a.determinant() - 1.0), 1e-13);
  EXPECT_LT(std::abs(compose(a, Isometry()).determinant() - 1.0), 1e-15);
}

TEST(Compose, LongProductsKeepUnitDeterminant) {
  std::mt19937_64 rng(3);
  Isometry p;
  for (int i = 0; i < 400; ++i) {
    const Isometry a = random_sl2(rng);
    p = compose(compose(p, a), a.inverse());
  }
  const double scale = std::abs(p.m11() * p.m22()) + std::abs(p.m12() * p.m21());
  EXPECT_LT(std::abs(p.determinant() - 1.0) / std::max(1.0, scale), 1e-14);
}

TEST(Compose, OverflowIsDrift) {
  const Isometry big = Isometry::axis_translation(1400.0);
  EXPECT_EQ(code_of([&] { compose(big, big); }), ErrorCode::DeterminantDrift);
}

TEST(FromEntries, RejectsWrongDeterminant) {
  EXPECT_EQ(code_of([] { Isometry::from_entries(2.0, 0.0, 0.0, 1.0); }), ErrorCode::BadParameter);
  EXPECT_EQ(code_of([] { Isometry::from_entries(NAN, 0.0, 0.0, 1.0); }), ErrorCode::BadParameter);
}

TEST(TranslationLength, Diagonal) {
  const double e = std::exp(1.0);
  EXPECT_NEAR(translation_length(Isometry::from_entries(e, 0.0, 0.0, 1.0 / e)), 2.0, 1e-15);
}

TEST(TranslationLength, NonHyperbolicElementsThrow) {
  EXPECT_EQ(code_of([] { translation_length(Isometry()); }), ErrorCode::NotHyperbolic);
  EXPECT_EQ(code_of([] { translation_length(Isometry::from_entries(1.0, 1.0, 0.0, 1.0)); }), ErrorCode::NotHyperbolic);
  const double c = std::cos(0.3), s = std::sin(0.3);
  const Isometry rot = Isometry::from_entries(c, -s, s, c);
  EXPECT_EQ(rot.type(), IsometryType::Elliptic);
  EXPECT_EQ(code_of([&] { translation_length(rot); }), ErrorCode::NotHyperbolic);
}

TEST(TranslationLength, Classification) {
  EXPECT_EQ(Isometry::axis_translation(0.5).type(), IsometryType::Hyperbolic);
  EXPECT_EQ(Isometry::from_entries(1.0, 2.0, 0.0, 1.0).type(), IsometryType::Parabolic);
  EXPECT_EQ(Isometry::from_entries(-1.0, 0.0, 0.0, -1.0).type(), IsometryType::Parabolic);
}

TEST(TranslationLength, ShortTranslationsAreResolved) {
  for (double l : {1e-3, 1e-6, 1e-9, 1e-13}) {
    // Diagonal entries e^{+-l/2} are only stored to 1 ulp of 1, which caps
    // the absolute accuracy; the off-diagonal form carries sinh(l/2) itself.
    EXPECT_NEAR(translation_length(Isometry::axis_translation(l)), l, 1e-15) << l;
    EXPECT_NEAR(translation_length(Isometry::perpendicular_translation(l)) / l, 1.0, 1e-12) << l;
  }
}

TEST(TranslationLength, SignOfMatrixIsIrrelevant) {
  const Isometry a = Isometry::axis_translation(1.7);
  const Isometry minus = Isometry::from_entries(-a.m11(), -a.m12(), -a.m21(), -a.m22());
  EXPECT_DOUBLE_EQ(translation_length(a), translation_length(minus));
}

TEST(TranslationLength, ConjugationInvariant) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < kTrials; ++i) {
    const Isometry a = random_hyperbolic(rng);
    const Isometry c = random_sl2(rng);
    const Isometry cac = compose(compose(c, a), c.inverse());
    EXPECT_LT(std::abs(translation_length(cac) - translation_length(a)), 1e-10);
  }
}

TEST(TranslationLength, MatchesConstruction) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < kTrials; ++i) {
    double l = 0.0;
    const Isometry a = random_hyperbolic(rng, &l);
    EXPECT_NEAR(translation_length(a), l, 1e-10);
  }
}

TEST(TranslationLength, PowersScaleLength) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < kTrials; ++i) {
    const Isometry a = random_hyperbolic(rng);
    const double l = translation_length(a);
    for (int k = 1; k <= 10; ++k) {
      EXPECT_NEAR(translation_length(a.power(k)), k * l, 1e-9);
    }
    EXPECT_NEAR(translation_length(a.power(-3)), 3 * l, 1e-9);
  }
}

TEST(Power, ZeroIsIdentity) {
  std::mt19937_64 rng(7);
  EXPECT_EQ(max_entry_diff(random_sl2(rng).power(0), Isometry()), 0.0);
}

TEST(Apply, MobiusActionWithInfinity) {
  const Isometry g = Isometry::from_entries(2.0, 1.0, 1.0, 1.0);
  EXPECT_EQ(apply(g, BoundaryPoint::infinity()), BoundaryPoint(2.0));
  EXPECT_EQ(apply(g, BoundaryPoint(-1.0)), BoundaryPoint::infinity());
  EXPECT_EQ(apply(g, BoundaryPoint(0.0)), BoundaryPoint(1.0));
  EXPECT_TRUE(apply(Isometry::axis_translation(1.0), BoundaryPoint::infinity()).is_infinity());
}

TEST(CrossRatio, NormalizationAtZeroOneInfinity) {
  EXPECT_NEAR(log_cross_ratio(BoundaryPoint(-1.0), BoundaryPoint(0.0), BoundaryPoint(1.0), BoundaryPoint::infinity()),
              std::log(2.0), 1e-15);
  // (1 - x) / (-x) at x = 3 is 2/3 in absolute value.
  EXPECT_NEAR(log_cross_ratio(BoundaryPoint(3.0), BoundaryPoint(0.0), BoundaryPoint(1.0), BoundaryPoint::infinity()),
              std::log(2.0 / 3.0), 1e-15);
}

TEST(CrossRatio, RepeatedPointIsDegenerate) {
  EXPECT_EQ(code_of([] {
              log_cross_ratio(BoundaryPoint(0.0), BoundaryPoint(0.0), BoundaryPoint(1.0), BoundaryPoint::infinity());
            }),
            ErrorCode::DegenerateQuadruple);
  EXPECT_EQ(code_of([] {
              log_cross_ratio(BoundaryPoint::infinity(), BoundaryPoint(0.0), BoundaryPoint(1.0),
                              BoundaryPoint::infinity());
            }),
            ErrorCode::DegenerateQuadruple);
}

TEST(CrossRatio, InfinityIsTheLimit) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  const double far = 1e7;
  for (int i = 0; i < 100; ++i) {
    const double a = u(rng), b = u(rng), c = u(rng);
    const BoundaryPoint x(a), y(b), z(c), inf = BoundaryPoint::infinity(), w(far);
    EXPECT_NEAR(log_cross_ratio(x, y, z, inf), log_cross_ratio(x, y, z, w), 1e-5);
    EXPECT_NEAR(log_cross_ratio(inf, y, z, x), log_cross_ratio(w, y, z, x), 1e-5);
    EXPECT_NEAR(log_cross_ratio(x, inf, z, y), log_cross_ratio(x, w, z, y), 1e-5);
    EXPECT_NEAR(log_cross_ratio(x, y, inf, z), log_cross_ratio(x, y, w, z), 1e-5);
  }
}

TEST(CrossRatio, MobiusInvariant) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  int checked = 0;
  while (checked < kTrials) {
    const Isometry g = random_sl2(rng);
    double v[4] = {u(rng), u(rng), u(rng), u(rng)};
    // Keep the quadruple well conditioned: separated points, none near the
    // pole of g.
    bool ok = true;
    for (int i = 0; i < 4; ++i) {
      ok = ok && std::abs(g.m21() * v[i] + g.m22()) > 0.1;
      for (int j = i + 1; j < 4; ++j) ok = ok && std::abs(v[i] - v[j]) > 0.1;
    }
    if (!ok) continue;
    BoundaryPoint p[4] = {BoundaryPoint(v[0]), BoundaryPoint(v[1]), BoundaryPoint(v[2]), BoundaryPoint(v[3])};
    if (checked % 5 == 0) p[checked % 4] = BoundaryPoint::infinity();
    const double base = log_cross_ratio(p[0], p[1], p[2], p[3]);
    const double moved = log_cross_ratio(apply(g, p[0]), apply(g, p[1]), apply(g, p[2]), apply(g, p[3]));
    EXPECT_NEAR(moved, base, 1e-10);
    ++checked;
  }
}

}  // namespace
}  // namespace hyperfn

#include "hyperfn/isometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hyperfn/error.hpp"

namespace hyperfn {
namespace {

constexpr double kConstructionTolerance = 1e-12;
constexpr double kRenormalizeAbove = 1e-14;
constexpr double kDriftFailure = 1e-8;
constexpr double kHyperbolicTraceBand = 1e-12;

// a*b - c*d with one rounding error (Kahan).
double diff_of_products(double a, double b, double c, double d) {
  const double w = c * d;
  const double e = std::fma(-c, d, w);
  const double f = std::fma(a, b, -w);
  return f + e;
}

double relative_drift(double m11, double m12, double m21, double m22) {
  const double det = diff_of_products(m11, m22, m12, m21);
  const double scale = std::max(1.0, std::abs(m11 * m22) + std::abs(m12 * m21));
  return std::abs(det - 1.0) / scale;
}

double acosh_stable(double x) {
  const double s = std::max(0.0, (x - 1.0) * (x + 1.0));
  return std::log(x + std::sqrt(s));
}

}  // namespace

Isometry Isometry::from_entries(double m11, double m12, double m21, double m22) {
  if (!std::isfinite(m11) || !std::isfinite(m12) || !std::isfinite(m21) || !std::isfinite(m22)) {
    throw Error(ErrorCode::BadParameter, "isometry entries must be finite");
  }
  if (relative_drift(m11, m12, m21, m22) > kConstructionTolerance) {
    throw Error(ErrorCode::BadParameter, "isometry determinant differs from 1");
  }
  return Isometry(m11, m12, m21, m22);
}

Isometry Isometry::axis_translation(double s) {
  const double e = std::exp(0.5 * s);
  return Isometry(e, 0.0, 0.0, 1.0 / e);
}

Isometry Isometry::perpendicular_translation(double d) {
  const double c = std::cosh(0.5 * d);
  const double s = std::sinh(0.5 * d);
  return Isometry(c, s, s, c);
}

double Isometry::determinant() const noexcept { return diff_of_products(m11_, m22_, m12_, m21_); }

double Isometry::discriminant() const noexcept {
  const double diff = m11_ - m22_;
  return std::fma(diff, diff, 4.0 * m12_ * m21_);
}

IsometryType Isometry::type() const noexcept {
  const double t = std::abs(trace());
  if (t > 2.0 + kHyperbolicTraceBand) return IsometryType::Hyperbolic;
  if (t < 2.0 - kHyperbolicTraceBand) return IsometryType::Elliptic;
  return IsometryType::Parabolic;
}

Isometry Isometry::inverse() const noexcept { return Isometry(m22_, -m12_, -m21_, m11_); }

Isometry Isometry::power(int k) const {
  Isometry base = k < 0 ? inverse() : *this;
  unsigned n = static_cast<unsigned>(k < 0 ? -static_cast<long>(k) : k);
  Isometry result;
  while (n != 0) {
    if (n & 1U) result = compose(result, base);
    n >>= 1U;
    if (n != 0) base = compose(base, base);
  }
  return result;
}

double Isometry::max_abs_entry() const noexcept {
  return std::max({std::abs(m11_), std::abs(m12_), std::abs(m21_), std::abs(m22_)});
}

Isometry compose(const Isometry& a, const Isometry& b) {
  double m11 = a.m11_ * b.m11_ + a.m12_ * b.m21_;
  double m12 = a.m11_ * b.m12_ + a.m12_ * b.m22_;
  double m21 = a.m21_ * b.m11_ + a.m22_ * b.m21_;
  double m22 = a.m21_ * b.m12_ + a.m22_ * b.m22_;
  const double drift = relative_drift(m11, m12, m21, m22);
  if (drift > kDriftFailure || !std::isfinite(drift)) {
    throw Error(ErrorCode::DeterminantDrift, "determinant lost in composition");
  }
  if (drift > kRenormalizeAbove) {
    const double det = diff_of_products(m11, m22, m12, m21);
    // Away from this band the computed determinant is rounding noise of the
    // large entries, not a drift a rescale could repair.
    if (det > 0.5 && det < 1.5) {
      const double r = 1.0 / std::sqrt(det);
      m11 *= r;
      m12 *= r;
      m21 *= r;
      m22 *= r;
    }
  }
  return Isometry(m11, m12, m21, m22);
}

double translation_length(const Isometry& a) {
  const double x = 0.5 * std::abs(a.trace());
  const double disc = a.discriminant();
  if (x > 1.0 + 0.5 * kHyperbolicTraceBand) {
    if (x < 1.5 && disc > 0.0) return 2.0 * std::asinh(0.5 * std::sqrt(disc));
    return 2.0 * acosh_stable(x);
  }
  // Very short translations have |tr| within rounding of 2; the
  // discriminant still resolves them as long as it clears the noise floor
  // of the entries.
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, a.max_abs_entry());
  if (disc > floor * floor) return 2.0 * std::asinh(0.5 * std::sqrt(disc));
  throw Error(ErrorCode::NotHyperbolic, "|trace| <= 2: element is not hyperbolic");
}

BoundaryPoint apply(const Isometry& g, const BoundaryPoint& x) {
  if (x.is_infinity()) {
    if (g.m21() == 0.0) return BoundaryPoint::infinity();
    return BoundaryPoint(g.m11() / g.m21());
  }
  const double den = g.m21() * x.value() + g.m22();
  if (den == 0.0) return BoundaryPoint::infinity();
  return BoundaryPoint((g.m11() * x.value() + g.m12()) / den);
}

double log_cross_ratio(const BoundaryPoint& x, const BoundaryPoint& y, const BoundaryPoint& z,
                       const BoundaryPoint& w) {
  const BoundaryPoint pts[4] = {x, y, z, w};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (pts[i] == pts[j]) throw Error(ErrorCode::DegenerateQuadruple, "cross-ratio points coincide");
    }
  }
  // cr = (x-z)(y-w) / ((x-y)(z-w)); a point at infinity cancels between the
  // numerator and denominator factors it appears in, leaving a sign.
  double num = 1.0;
  double den = 1.0;
  if (x.is_infinity()) {
    num = y.value() - w.value();
    den = z.value() - w.value();
  } else if (y.is_infinity()) {
    num = -(x.value() - z.value());
    den = z.value() - w.value();
  } else if (z.is_infinity()) {
    num = -(y.value() - w.value());
    den = x.value() - y.value();
  } else if (w.is_infinity()) {
    num = x.value() - z.value();
    den = x.value() - y.value();
  } else {
    num = (x.value() - z.value()) * (y.value() - w.value());
    den = (x.value() - y.value()) * (z.value() - w.value());
  }
  return std::log(std::abs(num / den));
}

}  // namespace hyperfn

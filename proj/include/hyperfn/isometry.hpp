#pragma once

// Orientation-preserving isometries of the upper half-plane, represented as
// real 2x2 matrices of determinant one (up to sign), together with the
// boundary-at-infinity quantities the rest of the library needs.

#include <optional>

namespace hyperfn {

enum class IsometryType { Hyperbolic, Parabolic, Elliptic };

class Isometry {
 public:
  /// Identity.
  Isometry() = default;

  /// Throws BadParameter unless the determinant is 1 to within 1e-12
  /// (relative to the size of the entries).
  static Isometry from_entries(double m11, double m12, double m21, double m22);

  /// Translation by `s` along the imaginary axis: diag(e^{s/2}, e^{-s/2}).
  static Isometry axis_translation(double s);

  /// Translation by `d` along the unit semicircle, the geodesic through i
  /// perpendicular to the imaginary axis. Positive `d` moves i towards +1.
  static Isometry perpendicular_translation(double d);

  double m11() const noexcept { return m11_; }
  double m12() const noexcept { return m12_; }
  double m21() const noexcept { return m21_; }
  double m22() const noexcept { return m22_; }

  double trace() const noexcept { return m11_ + m22_; }
  double determinant() const noexcept;

  /// tr^2 - 4 evaluated as (m11 - m22)^2 + 4 m12 m21, which keeps its
  /// relative accuracy for elements close to the identity.
  double discriminant() const noexcept;

  /// Classification by |trace| with a 1e-12 band around 2.
  IsometryType type() const noexcept;

  /// Adjugate; exact for unit determinant.
  Isometry inverse() const noexcept;

  Isometry power(int k) const;

  double max_abs_entry() const noexcept;

 private:
  Isometry(double m11, double m12, double m21, double m22) noexcept
      : m11_(m11), m12_(m12), m21_(m21), m22_(m22) {}

  friend Isometry compose(const Isometry& a, const Isometry& b);

  double m11_ = 1.0;
  double m12_ = 0.0;
  double m21_ = 0.0;
  double m22_ = 1.0;
};

/// Matrix product a*b (apply b first). Renormalizes when the relative
/// determinant drift exceeds 1e-14; throws DeterminantDrift above 1e-8.
Isometry compose(const Isometry& a, const Isometry& b);

/// 2 arccosh(|tr|/2). Throws NotHyperbolic for parabolic, elliptic and
/// identity-like elements.
double translation_length(const Isometry& a);

/// A point of the real line or the point at infinity.
class BoundaryPoint {
 public:
  explicit BoundaryPoint(double value) : value_(value) {}
  static BoundaryPoint infinity() { return BoundaryPoint(); }

  bool is_infinity() const noexcept { return !value_.has_value(); }
  /// Undefined for the point at infinity.
  double value() const { return *value_; }

  friend bool operator==(const BoundaryPoint&, const BoundaryPoint&) = default;

 private:
  BoundaryPoint() = default;
  std::optional<double> value_;
};

/// Action of an isometry on the boundary by the Mobius map z -> (az+b)/(cz+d).
BoundaryPoint apply(const Isometry& g, const BoundaryPoint& x);

/// Log of |cr(x,y,z,w)| with cr(x,y,z,w) = (x-z)(y-w) / ((x-y)(z-w)), so that
/// cr(x,0,1,inf) = (1-x)/(-x). Factors involving infinity are taken as limits.
/// Throws DegenerateQuadruple if two of the points coincide.
double log_cross_ratio(const BoundaryPoint& x, const BoundaryPoint& y, const BoundaryPoint& z,
                       const BoundaryPoint& w);

}  // namespace hyperfn

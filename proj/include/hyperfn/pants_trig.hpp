#pragma once

// Closed-form trigonometry of a hyperbolic pair of pants. Cuff length 0
// stands for a puncture; every formula uses cosh(0/2) = 1 where the
// quantity stays finite.

#include <optional>

namespace hyperfn {

/// Inputs above this are rejected with OverflowGuard.
inline constexpr double kMaxTrigInput = 25.0;

struct PantsShape {
  double l1 = 0.0;
  double l2 = 0.0;
  double l3 = 0.0;

  double cuff(int i) const;  // 0-based
};

/// Seams between pairs of cuffs; empty where one of the two cuffs is a
/// puncture (the seam would run into the cusp).
struct SeamLengths {
  std::optional<double> d12;
  std::optional<double> d13;
  std::optional<double> d23;
};

/// Seam between cuffs i and j (0-based, i != j). Throws PunctureSeam if
/// either cuff has length 0.
double seam_length(const PantsShape& p, int i, int j);

SeamLengths seam_lengths(const PantsShape& p);

/// d with sinh(d) sinh(a) = cosh(l_adj/2). Throws NonpositiveSide for a <= 0.
double pentagon_perpendicular_length(double a, double l_adj);

/// Length of the orthogeodesic from a cuff of length l_cuff back to itself
/// in the hexagon whose third side has length l_other:
/// cosh(d) sinh^2(l_cuff/2) = cosh(l_other) + cosh^2(l_cuff/2).
/// For a one-holed torus cut along a curve of length l, l_other is the
/// seam between the two copies of the cut curve, i.e. half the boundary.
double handle_orthogeodesic_length(double l_cuff, double l_other);

/// The simple orthogeodesic from a cuff of length l to itself, separating
/// the other two cuffs. foot_offset is the distance along the cuff from the
/// foot of the seam to l_ref to the nearer foot of the orthogeodesic;
/// half_length is half its length.
struct SelfOrthogeodesic {
  double foot_offset = 0.0;
  double half_length = 0.0;
};

SelfOrthogeodesic self_orthogeodesic(double l, double l_ref, double l_other);

}  // namespace hyperfn

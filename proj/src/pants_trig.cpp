#include "hyperfn/pants_trig.hpp"

#include <cmath>
#include <string>

#include "hyperfn/error.hpp"

namespace hyperfn {
namespace {

void check_length(double l, const char* what) {
  if (!std::isfinite(l) || l < 0.0) {
    throw Error(ErrorCode::BadParameter, std::string(what) + " must be finite and >= 0");
  }
  if (l > kMaxTrigInput) {
    throw Error(ErrorCode::OverflowGuard, std::string(what) + " exceeds " + std::to_string(kMaxTrigInput));
  }
}

// arccosh(1 + u) without forming 1 + u.
double acosh1p(double u) { return std::log1p(u + std::sqrt(u * (u + 2.0))); }

}  // namespace

double PantsShape::cuff(int i) const {
  switch (i) {
    case 0: return l1;
    case 1: return l2;
    case 2: return l3;
    default: throw Error(ErrorCode::BadParameter, "cuff index out of range: " + std::to_string(i));
  }
}

double seam_length(const PantsShape& p, int i, int j) {
  if (i == j || i < 0 || j < 0 || i > 2 || j > 2) {
    throw Error(ErrorCode::BadParameter, "seam needs two distinct cuffs");
  }
  const int k = 3 - i - j;
  const double li = p.cuff(i), lj = p.cuff(j), lk = p.cuff(k);
  check_length(li, "cuff length");
  check_length(lj, "cuff length");
  check_length(lk, "cuff length");
  if (li == 0.0 || lj == 0.0) {
    throw Error(ErrorCode::PunctureSeam, "seam to a puncture has infinite length");
  }
  // cosh d - 1 = (cosh(lk/2) + cosh((li-lj)/2)) / (sinh(li/2) sinh(lj/2))
  const double u = (std::cosh(0.5 * lk) + std::cosh(0.5 * (li - lj))) / (std::sinh(0.5 * li) * std::sinh(0.5 * lj));
  return acosh1p(u);
}

SeamLengths seam_lengths(const PantsShape& p) {
  check_length(p.l1, "cuff length");
  check_length(p.l2, "cuff length");
  check_length(p.l3, "cuff length");
  SeamLengths s;
  if (p.l1 > 0.0 && p.l2 > 0.0) s.d12 = seam_length(p, 0, 1);
  if (p.l1 > 0.0 && p.l3 > 0.0) s.d13 = seam_length(p, 0, 2);
  if (p.l2 > 0.0 && p.l3 > 0.0) s.d23 = seam_length(p, 1, 2);
  return s;
}

double pentagon_perpendicular_length(double a, double l_adj) {
  if (!(a > 0.0)) throw Error(ErrorCode::NonpositiveSide, "pentagon side must be positive");
  check_length(a, "pentagon side");
  check_length(l_adj, "adjacent cuff length");
  return std::asinh(std::cosh(0.5 * l_adj) / std::sinh(a));
}

double handle_orthogeodesic_length(double l_cuff, double l_other) {
  if (!(l_cuff > 0.0)) throw Error(ErrorCode::NonpositiveCuff, "handle cuff must have positive length");
  check_length(l_cuff, "handle cuff length");
  check_length(l_other, "hexagon side");
  const double s = std::sinh(0.5 * l_cuff);
  return acosh1p((std::cosh(l_other) + 1.0) / (s * s));
}

SelfOrthogeodesic self_orthogeodesic(double l, double l_ref, double l_other) {
  if (!(l > 0.0)) throw Error(ErrorCode::NonpositiveCuff, "cuff must have positive length");
  check_length(l, "cuff length");
  check_length(l_ref, "cuff length");
  check_length(l_other, "cuff length");
  const double ca = std::cosh(0.5 * l_ref);
  const double cb = std::cosh(0.5 * l_other);
  SelfOrthogeodesic g;
  g.foot_offset = std::atanh(ca * std::sinh(0.5 * l) / (cb + ca * std::cosh(0.5 * l)));
  g.half_length = std::asinh(ca / std::sinh(g.foot_offset));
  return g;
}

}  // namespace hyperfn

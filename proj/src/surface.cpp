#include "hyperfn/surface.hpp"

#include <cmath>
#include <cstdlib>
#include <set>
#include <sstream>

#include "hyperfn/error.hpp"
#include "hyperfn/pants_trig.hpp"

namespace hyperfn {
namespace {

std::string slot_text(SlotRef s) {
  return "[" + std::to_string(s.pants) + "," + std::to_string(s.slot) + "]";
}

const char* kind_name(CurveKind k) {
  switch (k) {
    case CurveKind::Interior: return "interior";
    case CurveKind::Boundary: return "boundary";
    case CurveKind::Puncture: return "puncture";
  }
  return "?";
}

int parse_int(const std::string& text, const std::string& whole) {
  if (text.empty()) throw Error(ErrorCode::ParseError, "bad curve word: " + whole);
  char* end = nullptr;
  const long v = std::strtol(text.c_str(), &end, 10);
  if (*end != '\0' || v < -1000000000L || v > 1000000000L) {
    throw Error(ErrorCode::ParseError, "bad curve word: " + whole);
  }
  return static_cast<int>(v);
}

}  // namespace

void PantsGraph::index(const PantsCurveInfo& c) {
  if (by_id_.count(c.id) != 0) {
    build_defects_.push_back("duplicate curve id " + std::to_string(c.id));
  } else {
    by_id_[c.id] = curves_.size();
  }
  auto claim = [&](SlotRef s) {
    if (s.pants < 0 || s.pants >= pants_count_ || s.slot < 0 || s.slot > 2) {
      build_defects_.push_back("slot " + slot_text(s) + " of curve " + std::to_string(c.id) + " out of range");
      return;
    }
    if (!by_slot_.emplace(s, c.id).second) {
      build_defects_.push_back("slot " + slot_text(s) + " assigned twice");
    }
  };
  claim(c.first);
  if (c.kind == CurveKind::Interior) {
    if (c.first == c.second) {
      build_defects_.push_back("curve " + std::to_string(c.id) + " pairs a slot with itself");
    } else {
      claim(c.second);
    }
  }
  curves_.push_back(c);
}

void PantsGraph::add_pairing(int id, SlotRef a, SlotRef b) { index({id, CurveKind::Interior, a, b}); }
void PantsGraph::add_boundary(int id, SlotRef s) { index({id, CurveKind::Boundary, s, s}); }
void PantsGraph::add_puncture(int id, SlotRef s) { index({id, CurveKind::Puncture, s, s}); }

const PantsCurveInfo* PantsGraph::find(int id) const {
  auto it = by_id_.find(id);
  return it == by_id_.end() ? nullptr : &curves_[it->second];
}

const PantsCurveInfo& PantsGraph::curve(int id) const {
  const PantsCurveInfo* c = find(id);
  if (c == nullptr) throw Error(ErrorCode::BadParameter, "no curve " + std::to_string(id));
  return *c;
}

std::optional<int> PantsGraph::curve_at(SlotRef s) const {
  auto it = by_slot_.find(s);
  if (it == by_slot_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> PantsGraph::ids(CurveKind kind) const {
  std::vector<int> out;
  for (const auto& c : curves_) {
    if (c.kind == kind) out.push_back(c.id);
  }
  return out;
}

std::vector<std::string> PantsGraph::defects() const {
  std::vector<std::string> out = build_defects_;
  if (pants_count_ <= 0) out.push_back("no pants");
  for (int p = 0; p < pants_count_; ++p) {
    for (int k = 0; k < 3; ++k) {
      if (by_slot_.count({p, k}) == 0) out.push_back("slot " + slot_text({p, k}) + " unassigned");
    }
  }
  return out;
}

bool operator==(const PantsGraph& a, const PantsGraph& b) {
  if (a.pants_count_ != b.pants_count_ || a.curves_.size() != b.curves_.size() || a.by_id_.size() != b.by_id_.size() ||
      a.build_defects_ != b.build_defects_) {
    return false;
  }
  for (const auto& [id, index] : a.by_id_) {
    const PantsCurveInfo* other = b.find(id);
    if (other == nullptr || !(*other == a.curves_[index])) return false;
  }
  return true;
}

double MarkedSurface::length(int id) const {
  const PantsCurveInfo& c = graph.curve(id);
  if (c.kind == CurveKind::Puncture) return 0.0;
  auto it = coords.lengths.find(id);
  if (it == coords.lengths.end()) throw Error(ErrorCode::BadParameter, "no length for curve " + std::to_string(id));
  return it->second;
}

double MarkedSurface::twist(int id) const {
  auto it = coords.twists.find(id);
  if (it == coords.twists.end()) throw Error(ErrorCode::BadParameter, "no twist for curve " + std::to_string(id));
  return it->second;
}

std::vector<std::string> validate(const MarkedSurface& s) {
  std::vector<std::string> out = s.graph.defects();
  for (const auto& [id, l] : s.coords.lengths) {
    const PantsCurveInfo* c = s.graph.find(id);
    if (c == nullptr) {
      out.push_back("length given for unknown curve " + std::to_string(id));
    } else if (c->kind == CurveKind::Puncture) {
      out.push_back("length given for puncture curve " + std::to_string(id));
    }
  }
  for (const auto& [id, t] : s.coords.twists) {
    const PantsCurveInfo* c = s.graph.find(id);
    if (c == nullptr) {
      out.push_back("twist given for unknown curve " + std::to_string(id));
    } else if (c->kind != CurveKind::Interior) {
      out.push_back(std::string("twist given for ") + kind_name(c->kind) + " curve " + std::to_string(id));
    } else if (!std::isfinite(t)) {
      out.push_back("non-finite twist at curve " + std::to_string(id));
    }
  }
  if (s.upper_bound && !(*s.upper_bound > 0.0 && std::isfinite(*s.upper_bound))) {
    out.push_back("upper bound must be positive");
  }
  for (const auto& c : s.graph.curves()) {
    const std::string id = std::to_string(c.id);
    if (c.kind == CurveKind::Puncture) continue;
    auto it = s.coords.lengths.find(c.id);
    if (it == s.coords.lengths.end()) {
      out.push_back("missing length at curve " + id);
      continue;
    }
    const double l = it->second;
    if (!(l > 0.0) || !std::isfinite(l)) {
      out.push_back("nonpositive length at curve " + id);
    } else if (s.upper_bound && l > *s.upper_bound) {
      out.push_back("upper bound exceeded at curve " + id);
    }
    if (c.kind == CurveKind::Interior && s.coords.twists.count(c.id) == 0) {
      out.push_back("missing twist at curve " + id);
    }
  }
  return out;
}

MarkedSurface flute_family(int N, const Generator& lengths, const Generator& twists, const FamilyOptions& options) {
  if (N < 2) throw Error(ErrorCode::BadParameter, "family needs N >= 2, got " + std::to_string(N));
  const bool ladder = options.mode == FamilyMode::Ladder;
  MarkedSurface s;
  s.upper_bound = options.upper_bound;
  s.graph = PantsGraph(ladder ? 2 * N : N);

  auto put_length = [&](int id, int level) {
    const double l = lengths(level);
    if (!(l > 0.0) || !std::isfinite(l)) {
      throw Error(ErrorCode::BadParameter, "nonpositive generated length at curve " + std::to_string(id));
    }
    s.coords.lengths[id] = l;
  };
  auto put_twist = [&](int id, int level) {
    const double t = twists(level);
    if (!std::isfinite(t)) throw Error(ErrorCode::BadParameter, "non-finite generated twist at curve " + std::to_string(id));
    s.coords.twists[id] = t;
  };

  for (int n = 1; n < N; ++n) {
    s.graph.add_pairing(n, {n - 1, 1}, {n, 0});
    put_length(n, n);
    put_twist(n, n);
  }
  // End caps take the length of their nearest interior level.
  const std::pair<int, SlotRef> ends[2] = {{0, {0, 0}}, {N, {N - 1, 1}}};
  for (const auto& [id, slot] : ends) {
    if (options.ends == EndMode::Puncture) {
      s.graph.add_puncture(id, slot);
    } else {
      s.graph.add_boundary(id, slot);
      put_length(id, id == 0 ? 1 : N);
    }
  }
  for (int i = 0; i < N; ++i) {
    if (!ladder) {
      s.graph.add_puncture(N + 1 + i, {i, 2});
      continue;
    }
    const int attach = N + 1 + i;
    const int handle = 2 * N + 1 + i;
    s.graph.add_pairing(attach, {i, 2}, {N + i, 0});
    put_length(attach, i + 1);
    put_twist(attach, i + 1);
    s.graph.add_pairing(handle, {N + i, 1}, {N + i, 2});
    put_length(handle, i + 1);
    put_twist(handle, i + 1);
  }
  return s;
}

MarkedSurface scale_lengths(const MarkedSurface& s, double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw Error(ErrorCode::BadParameter, "scale factor must be positive");
  MarkedSurface out = s;
  for (auto& [id, l] : out.coords.lengths) l *= c;
  return out;
}

MarkedSurface shift_twists(const MarkedSurface& s, double c) {
  if (!std::isfinite(c)) throw Error(ErrorCode::BadParameter, "twist shift must be finite");
  MarkedSurface out = s;
  for (auto& [id, t] : out.coords.twists) t += c;
  return out;
}

CurveWord CurveWord::inverse() const {
  CurveWord w = *this;
  w.power = -power;
  return w;
}

CurveWord CurveWord::trivial() const {
  CurveWord w = *this;
  w.power = 0;
  return w;
}

std::string CurveWord::to_string() const {
  std::ostringstream os;
  if (kind == Kind::PantsCurve) {
    os << "alpha:" << curve;
  } else {
    os << "gamma:" << curve << ":" << arc_type << ":" << wrap;
  }
  if (power != 1) os << "^" << power;
  return os.str();
}

CurveWord CurveWord::parse(const std::string& text) {
  std::string body = text;
  CurveWord w;
  if (auto caret = body.find('^'); caret != std::string::npos) {
    w.power = parse_int(body.substr(caret + 1), text);
    body = body.substr(0, caret);
  }
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t colon = body.find(':', start);
    parts.push_back(body.substr(start, colon - start));
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  if (parts[0] == "alpha" && parts.size() == 2) {
    w.kind = Kind::PantsCurve;
    w.curve = parse_int(parts[1], text);
  } else if (parts[0] == "gamma" && (parts.size() == 2 || parts.size() == 4)) {
    w.kind = Kind::Crossing;
    w.curve = parse_int(parts[1], text);
    if (parts.size() == 4) {
      w.arc_type = parse_int(parts[2], text);
      w.wrap = parse_int(parts[3], text);
    }
  } else {
    throw Error(ErrorCode::ParseError, "bad curve word: " + text);
  }
  return w;
}

bool is_handle_curve(const MarkedSurface& s, int n) {
  const PantsCurveInfo& c = s.graph.curve(n);
  return c.kind == CurveKind::Interior && c.first.pants == c.second.pants;
}

int arc_type_count(const MarkedSurface& s, int n) { return is_handle_curve(s, n) ? 1 : 2; }

namespace {

double cuff_at(const MarkedSurface& s, SlotRef slot) {
  const auto id = s.graph.curve_at(slot);
  if (!id) throw Error(ErrorCode::BadParameter, "slot " + slot_text(slot) + " unassigned");
  return s.length(*id);
}

Isometry crossing_holonomy(const MarkedSurface& s, const CurveWord& w) {
  const PantsCurveInfo& c = s.graph.curve(w.curve);
  const std::string id = std::to_string(w.curve);
  if (c.kind == CurveKind::Puncture) throw Error(ErrorCode::PunctureCrossing, "curve " + id + " is a puncture");
  if (c.kind == CurveKind::Boundary) throw Error(ErrorCode::UnsupportedWord, "curve " + id + " is a boundary curve");
  const double l = s.length(w.curve);
  if (!(l > 0.0)) throw Error(ErrorCode::NonpositiveCuff, "curve " + id + " has nonpositive length");
  const double tau = s.twist(w.curve) + static_cast<double>(w.wrap) * l;

  if (c.first.pants == c.second.pants) {
    if (w.arc_type != 0) throw Error(ErrorCode::UnsupportedWord, "handle curve " + id + " has a single arc type");
    const int third = 3 - c.first.slot - c.second.slot;
    const double d = seam_length({l, l, cuff_at(s, {c.first.pants, third})}, 0, 1);
    return compose(Isometry::axis_translation(tau), Isometry::perpendicular_translation(d));
  }
  if (w.arc_type != 0 && w.arc_type != 1) {
    throw Error(ErrorCode::UnsupportedWord, "arc type " + std::to_string(w.arc_type) + " at curve " + id);
  }
  const SlotRef p1 = std::min(c.first, c.second);
  const SlotRef p2 = std::max(c.first, c.second);
  auto orth = [&](SlotRef p) {
    const double ref = cuff_at(s, {p.pants, (p.slot + 1) % 3});
    const double other = cuff_at(s, {p.pants, (p.slot + 2) % 3});
    return self_orthogeodesic(l, ref, other);
  };
  const SelfOrthogeodesic g1 = orth(p1);
  const SelfOrthogeodesic g2 = orth(p2);
  double d1 = 0.0, d2 = 0.0;
  if (w.arc_type == 0) {
    d1 = tau + g2.foot_offset - g1.foot_offset;
    d2 = -tau + g2.foot_offset - g1.foot_offset;
  } else {
    d1 = tau - g1.foot_offset - g2.foot_offset;
    d2 = -tau + l - g1.foot_offset - g2.foot_offset;
  }
  Isometry h = Isometry::perpendicular_translation(-2.0 * g1.half_length);
  h = compose(h, Isometry::axis_translation(-d1));
  h = compose(h, Isometry::perpendicular_translation(-2.0 * g2.half_length));
  return compose(h, Isometry::axis_translation(d2));
}

}  // namespace

Isometry curve_holonomy(const MarkedSurface& s, const CurveWord& w) {
  if (w.kind == CurveWord::Kind::PantsCurve) {
    return Isometry::axis_translation(static_cast<double>(w.power) * s.length(w.curve));
  }
  if (w.kind != CurveWord::Kind::Crossing) throw Error(ErrorCode::UnsupportedWord, "unknown word kind");
  return crossing_holonomy(s, w).power(w.power);
}

}  // namespace hyperfn

#pragma once

// Pants decompositions with Fenchel-Nielsen coordinates, the truncated flute
// and ladder families, and holonomy of the supported curve words.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperfn/isometry.hpp"

namespace hyperfn {

struct SlotRef {
  int pants = 0;
  int slot = 0;

  friend auto operator<=>(const SlotRef&, const SlotRef&) = default;
};

enum class CurveKind { Interior, Boundary, Puncture };

/// A pants curve: an interior curve owns the two slots it glues, a boundary
/// curve or puncture owns one.
struct PantsCurveInfo {
  int id = 0;
  CurveKind kind = CurveKind::Interior;
  SlotRef first;
  SlotRef second;  // meaningful for Interior only

  friend bool operator==(const PantsCurveInfo&, const PantsCurveInfo&) = default;
};

class PantsGraph {
 public:
  PantsGraph() = default;
  explicit PantsGraph(int pants_count) : pants_count_(pants_count) {}

  int pants_count() const noexcept { return pants_count_; }
  void set_pants_count(int n) { pants_count_ = n; }

  void add_pairing(int id, SlotRef a, SlotRef b);
  void add_boundary(int id, SlotRef s);
  void add_puncture(int id, SlotRef s);

  const std::vector<PantsCurveInfo>& curves() const noexcept { return curves_; }
  const PantsCurveInfo* find(int id) const;
  const PantsCurveInfo& curve(int id) const;  // throws BadParameter
  /// Curve occupying a slot, or nullopt if the slot is unassigned.
  std::optional<int> curve_at(SlotRef s) const;

  std::vector<int> ids(CurveKind kind) const;

  /// Pairing defects; empty when the graph is well formed.
  std::vector<std::string> defects() const;

  /// Same pants count and the same curves, regardless of insertion order.
  friend bool operator==(const PantsGraph& a, const PantsGraph& b);

 private:
  void index(const PantsCurveInfo& c);

  int pants_count_ = 0;
  std::vector<PantsCurveInfo> curves_;
  std::map<int, std::size_t> by_id_;
  std::map<SlotRef, int> by_slot_;
  std::vector<std::string> build_defects_;
};

struct FNCoordinates {
  std::map<int, double> lengths;
  std::map<int, double> twists;

  friend bool operator==(const FNCoordinates&, const FNCoordinates&) = default;
};

struct MarkedSurface {
  PantsGraph graph;
  FNCoordinates coords;
  std::optional<double> upper_bound;

  /// Length of a curve; 0 for punctures. Throws BadParameter if missing.
  double length(int id) const;
  /// Twist of an interior curve. Throws BadParameter if missing.
  double twist(int id) const;

  friend bool operator==(const MarkedSurface&, const MarkedSurface&) = default;
};

/// Human-readable violations, empty when the surface is valid.
std::vector<std::string> validate(const MarkedSurface& s);

using Generator = std::function<double(int)>;

enum class FamilyMode { Flute, Ladder };
enum class EndMode { Boundary, Puncture };

struct FamilyOptions {
  FamilyMode mode = FamilyMode::Flute;
  EndMode ends = EndMode::Boundary;
  std::optional<double> upper_bound;
};

/// A chain of N pants. Pants i has slot 0 on the left, slot 1 on the right
/// and slot 2 free. Curve n (1 <= n < N) glues (n-1, 1) to (n, 0); curves 0
/// and N close the two ends. Curve n takes lengths(n) and twists(n).
///
/// Flute: slot 2 of pants i is a puncture with id N+1+i.
/// Ladder: slot 2 of spine pants i is glued along curve N+1+i to slot 0 of
/// pants N+i, whose slots 1 and 2 are glued to each other along curve
/// 2N+1+i (a handle). Both use generator level i+1.
MarkedSurface flute_family(int N, const Generator& lengths, const Generator& twists,
                           const FamilyOptions& options = {});

/// Multiply every positive length by c.
MarkedSurface scale_lengths(const MarkedSurface& s, double c);
/// Add c to every twist.
MarkedSurface shift_twists(const MarkedSurface& s, double c);

/// PantsCurve(n)^power or Crossing(n, arc_type, wrap)^power.
struct CurveWord {
  enum class Kind { PantsCurve, Crossing };

  Kind kind = Kind::PantsCurve;
  int curve = 0;
  int arc_type = 0;
  int wrap = 0;
  int power = 1;

  static CurveWord pants_curve(int n) { return {Kind::PantsCurve, n, 0, 0, 1}; }
  static CurveWord crossing(int n, int arc_type, int wrap) { return {Kind::Crossing, n, arc_type, wrap, 1}; }

  CurveWord inverse() const;
  CurveWord trivial() const;

  /// "alpha:5" or "gamma:5:1:-2", with an optional "^p" suffix.
  std::string to_string() const;
  static CurveWord parse(const std::string& text);

  friend bool operator==(const CurveWord&, const CurveWord&) = default;
};

/// True when both slots of curve n lie in the same pants.
bool is_handle_curve(const MarkedSurface& s, int n);

/// Arc types available for a crossing of curve n: 2 for distinct pants,
/// 1 for a handle.
int arc_type_count(const MarkedSurface& s, int n);

/// Holonomy in a frame where the curve being crossed lifts to the imaginary
/// axis. Crossing curves go out along the simple orthogeodesic of one pants,
/// back along the other's, with the twist plus wrap*l_n in between; the
/// handle case uses the seam between the two copies of the cut curve.
///
/// Positive twist slides the second pants towards +infinity along the axis.
Isometry curve_holonomy(const MarkedSurface& s, const CurveWord& w);

}  // namespace hyperfn

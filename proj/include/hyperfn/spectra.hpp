#pragma once

// Geodesic lengths of supported curve words and the reports built on them.

#include <vector>

#include "hyperfn/surface.hpp"

namespace hyperfn {

/// Length of the closed geodesic in the class of w. Pants curves return
/// |power| l_n directly; crossing curves use the trace of their holonomy.
/// Throws NotHyperbolic for the trivial word and for punctures.
double curve_length(const MarkedSurface& s, const CurveWord& w);

struct CrossingResult {
  CurveWord word;
  double length = 0.0;
};

/// Shortest crossing of curve n over arc types and wraps |k| <= k_range.
/// Ties (within 1e-12 relative) go to the smallest |k|, then the smallest
/// arc type, then the smaller k. Crossing lengths are unimodal in k, so the
/// search throws WrapRangeExhausted when some arc type still shortens just
/// past either end of the range.
CrossingResult shortest_crossing_curve(const MarkedSurface& s, int n, int k_range);

/// Throws GraphMismatch unless X and Y share the same pants graph.
void require_same_graph(const MarkedSurface& x, const MarkedSurface& y);

struct Prop1Row {
  int n = 0;
  double l_alpha_x = 0.0;
  double l_alpha_y = 0.0;
  double l_gamma_x = 0.0;
  double l_gamma_y = 0.0;
  double deviation_x = 0.0;  // l_gamma_x - c |log l_alpha_x|, c = 4 or 2 for a handle
  double diff = 0.0;         // l_gamma_y - l_gamma_x
  CurveWord word;            // shortest crossing on X, evaluated on both
};

struct Prop1Report {
  std::vector<Prop1Row> rows;
  double sup_abs_diff = 0.0;
  double deviation_min = 0.0;
  double deviation_max = 0.0;
};

/// Rows in the order of `curves`. Work is split over `threads` workers;
/// the result does not depend on the split.
Prop1Report prop1_report(const MarkedSurface& x, const MarkedSurface& y, const std::vector<int>& curves,
                         int k_range, int threads = 1);

struct WolpertEntry {
  CurveWord word;
  double length_x = 0.0;
  double length_y = 0.0;
  double ratio = 0.0;  // length_y / length_x
  bool violation = false;
};

struct WolpertReport {
  double K = 1.0;
  std::vector<WolpertEntry> entries;
  int violations = 0;
  double max_ratio = 1.0;  // max over words of max(ratio, 1/ratio)
};

/// Flags words whose ratio leaves [1/K, K].
WolpertReport wolpert_check(const MarkedSurface& x, const MarkedSurface& y, const std::vector<CurveWord>& words,
                            double K);

/// All pants curves of positive length plus the shortest crossing of every
/// interior curve on `s` (wraps up to k_range).
std::vector<CurveWord> default_word_family(const MarkedSurface& s, int k_range = 3);

/// (1/2) log of the largest length ratio in either direction over `words`.
/// Only a lower bound for the length-spectrum distance, which takes the sup
/// over every simple closed curve.
double dls_lower_bound(const MarkedSurface& x, const MarkedSurface& y, const std::vector<CurveWord>& words);

}  // namespace hyperfn

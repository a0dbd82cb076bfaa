#include "hyperfn/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <thread>
#include <tuple>

#include "hyperfn/error.hpp"

namespace hyperfn {
namespace {

constexpr double kTieTolerance = 1e-12;

bool shorter(double a, double b) { return a < b - kTieTolerance * std::max(1.0, std::abs(b)); }

}  // namespace

double curve_length(const MarkedSurface& s, const CurveWord& w) {
  if (w.power == 0) throw Error(ErrorCode::NotHyperbolic, "trivial word at curve " + std::to_string(w.curve));
  const double p = std::abs(static_cast<double>(w.power));
  if (w.kind == CurveWord::Kind::PantsCurve) {
    const double l = s.length(w.curve);
    if (!(l > 0.0)) throw Error(ErrorCode::NotHyperbolic, "curve " + std::to_string(w.curve) + " is a puncture");
    return p * l;
  }
  CurveWord base = w;
  base.power = 1;
  return p * translation_length(curve_holonomy(s, base));
}

CrossingResult shortest_crossing_curve(const MarkedSurface& s, int n, int k_range) {
  if (k_range < 0) throw Error(ErrorCode::BadParameter, "k_range must be >= 0");
  const int types = arc_type_count(s, n);
  CrossingResult best;
  bool have = false;
  for (int type = 0; type < types; ++type) {
    auto f = [&](int k) { return curve_length(s, CurveWord::crossing(n, type, k)); };
    if (shorter(f(k_range + 1), f(k_range)) || shorter(f(-k_range - 1), f(-k_range))) {
      throw Error(ErrorCode::WrapRangeExhausted,
                  "crossing of curve " + std::to_string(n) + " still shortens beyond wrap " + std::to_string(k_range));
    }
    for (int k = -k_range; k <= k_range; ++k) {
      const double len = f(k);
      bool take = !have || shorter(len, best.length);
      if (!take && !shorter(best.length, len)) {
        const CurveWord& b = best.word;
        const auto key = [](int kk, int tt) { return std::tuple(std::abs(kk), tt, kk); };
        take = key(k, type) < key(b.wrap, b.arc_type);
      }
      if (take) {
        best = {CurveWord::crossing(n, type, k), len};
        have = true;
      }
    }
  }
  return best;
}

void require_same_graph(const MarkedSurface& x, const MarkedSurface& y) {
  if (!(x.graph == y.graph)) throw Error(ErrorCode::GraphMismatch, "surfaces have different pants graphs");
}

Prop1Report prop1_report(const MarkedSurface& x, const MarkedSurface& y, const std::vector<int>& curves, int k_range,
                         int threads) {
  require_same_graph(x, y);
  Prop1Report report;
  report.rows.resize(curves.size());
  std::vector<std::exception_ptr> errors(curves.size());

  auto work = [&](std::size_t i) {
    try {
      const int n = curves[i];
      Prop1Row& r = report.rows[i];
      const CrossingResult c = shortest_crossing_curve(x, n, k_range);
      r.n = n;
      r.word = c.word;
      r.l_alpha_x = x.length(n);
      r.l_alpha_y = y.length(n);
      r.l_gamma_x = c.length;
      r.l_gamma_y = curve_length(y, c.word);
      const double coefficient = is_handle_curve(x, n) ? 2.0 : 4.0;
      r.deviation_x = r.l_gamma_x - coefficient * std::abs(std::log(r.l_alpha_x));
      r.diff = r.l_gamma_y - r.l_gamma_x;
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };

  const std::size_t workers = std::clamp<std::size_t>(threads < 1 ? 1 : static_cast<std::size_t>(threads), 1,
                                                      std::max<std::size_t>(1, curves.size()));
  if (workers == 1) {
    for (std::size_t i = 0; i < curves.size(); ++i) work(i);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < curves.size(); i += workers) work(i);
      });
    }
    for (auto& t : pool) t.join();
  }
  // Report the first failing row, independent of scheduling.
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const Prop1Row& r = report.rows[i];
    report.sup_abs_diff = std::max(report.sup_abs_diff, std::abs(r.diff));
    report.deviation_min = i == 0 ? r.deviation_x : std::min(report.deviation_min, r.deviation_x);
    report.deviation_max = i == 0 ? r.deviation_x : std::max(report.deviation_max, r.deviation_x);
  }
  return report;
}

WolpertReport wolpert_check(const MarkedSurface& x, const MarkedSurface& y, const std::vector<CurveWord>& words,
                            double K) {
  require_same_graph(x, y);
  if (!(K >= 1.0) || !std::isfinite(K)) throw Error(ErrorCode::BadParameter, "K must be >= 1");
  WolpertReport report;
  report.K = K;
  for (const CurveWord& w : words) {
    WolpertEntry e;
    e.word = w;
    e.length_x = curve_length(x, w);
    e.length_y = curve_length(y, w);
    e.ratio = e.length_y / e.length_x;
    e.violation = e.ratio > K || e.ratio < 1.0 / K;
    report.violations += e.violation ? 1 : 0;
    report.max_ratio = std::max(report.max_ratio, std::max(e.ratio, 1.0 / e.ratio));
    report.entries.push_back(e);
  }
  return report;
}

std::vector<CurveWord> default_word_family(const MarkedSurface& s, int k_range) {
  std::vector<CurveWord> words;
  for (const auto& c : s.graph.curves()) {
    if (c.kind != CurveKind::Puncture) words.push_back(CurveWord::pants_curve(c.id));
  }
  for (const auto& c : s.graph.curves()) {
    if (c.kind == CurveKind::Interior) words.push_back(shortest_crossing_curve(s, c.id, k_range).word);
  }
  return words;
}

double dls_lower_bound(const MarkedSurface& x, const MarkedSurface& y, const std::vector<CurveWord>& words) {
  require_same_graph(x, y);
  if (words.empty()) throw Error(ErrorCode::EmptyFamily, "word family is empty");
  double worst = 1.0;
  for (const CurveWord& w : words) {
    const double lx = curve_length(x, w);
    const double ly = curve_length(y, w);
    worst = std::max({worst, lx / ly, ly / lx});
  }
  return 0.5 * std::log(worst);
}

}  // namespace hyperfn

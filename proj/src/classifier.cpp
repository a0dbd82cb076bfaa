#include "hyperfn/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hyperfn/error.hpp"

namespace hyperfn {
namespace {

struct Stats {
  double max = 0.0;
  int argmax = 1;
  double tail = 0.0;
  double decay = 0.0;
};

// d[i] is the deviation at n = i + 1.
Stats scan(const std::vector<double>& d, int tail_start) {
  Stats s;
  const int N = static_cast<int>(d.size());
  for (int n = 1; n <= N; ++n) {
    const double v = d[n - 1];
    if (v > s.max) {
      s.max = v;
      s.argmax = n;
    }
    if (n >= tail_start) s.tail = std::max(s.tail, v);
  }
  const int mid = (tail_start + N) / 2;
  double early = 0.0, late = 0.0;
  for (int n = tail_start; n <= N; ++n) {
    double& half = n < mid ? early : late;
    half = std::max(half, d[n - 1]);
  }
  if (late == 0.0) {
    s.decay = early == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  } else if (early > 0.0 && mid > tail_start) {
    s.decay = std::log(early / late) / std::log(static_cast<double>(mid) / std::max(tail_start, 1));
  }
  return s;
}

bool vanishes(const Stats& s, double eps) { return s.tail < eps || s.decay >= kMinDecayExponent; }

std::vector<double> pointwise_max(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

void check_sequence(const FnSequence& s, const char* which) {
  if (s.log_lengths.size() != s.twists.size()) {
    throw Error(ErrorCode::BadParameter, std::string(which) + ": lengths and twists differ in size");
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!std::isfinite(s.log_lengths[i]) || !std::isfinite(s.twists[i])) {
      throw Error(ErrorCode::BadParameter,
                  std::string(which) + ": non-finite or nonpositive entry at n = " + std::to_string(i + 1));
    }
  }
}

void check_pair(const SequencePair& p) {
  check_sequence(p.base, "base");
  check_sequence(p.candidate, "candidate");
  if (p.base.size() != p.candidate.size()) throw Error(ErrorCode::BadParameter, "base and candidate differ in size");
  if (p.base.size() == 0) throw Error(ErrorCode::BadParameter, "empty window");
}

struct Deviations {
  std::vector<double> log_ratio;   // |log(l_n / l_n(X))|
  std::vector<double> twist;       // |t_n - t_n(X)|
  std::vector<double> normalized;  // twist / max(1, |log l_n(X)|)
  std::vector<double> weight;      // max(1, |log l_n(X)|)
};

Deviations deviations(const SequencePair& p) {
  const std::size_t N = p.window();
  Deviations d;
  d.log_ratio.resize(N);
  d.twist.resize(N);
  d.normalized.resize(N);
  d.weight.resize(N);
  for (std::size_t i = 0; i < N; ++i) {
    d.log_ratio[i] = std::abs(p.candidate.log_lengths[i] - p.base.log_lengths[i]);
    d.twist[i] = std::abs(p.candidate.twists[i] - p.base.twists[i]);
    d.weight[i] = std::max(1.0, std::abs(p.base.log_lengths[i]));
    d.normalized[i] = d.twist[i] / d.weight[i];
  }
  return d;
}

Witness witness(const Stats& s, const char* criterion) {
  return {s.max, s.argmax, s.tail, s.decay, criterion};
}

}  // namespace

FnSequence FnSequence::from_lengths(const std::vector<double>& lengths, std::vector<double> twists) {
  FnSequence s;
  s.log_lengths.reserve(lengths.size());
  for (double l : lengths) s.log_lengths.push_back(l > 0.0 ? std::log(l) : std::numeric_limits<double>::quiet_NaN());
  s.twists = std::move(twists);
  return s;
}

const char* to_string(Space s) noexcept {
  switch (s) {
    case Space::Tqc: return "T_qc";
    case Space::T0: return "T_0";
    case Space::Tls: return "T_ls";
    case Space::ClosureTqc: return "closure_T_qc";
    case Space::ClosureT0: return "closure_T_0";
  }
  return "?";
}

std::array<Verdict, 5> classify(const SequencePair& p, double M, double eps) {
  check_pair(p);
  const int N = static_cast<int>(p.window());
  if (p.tail_start < 1 || p.tail_start >= N) {
    throw Error(ErrorCode::BadWindow, "tail_start must satisfy 1 <= tail_start < N = " + std::to_string(N));
  }
  if (!(M > 0.0) || !std::isfinite(M)) throw Error(ErrorCode::BadParameter, "M must be positive");
  if (!(eps > 0.0) || !std::isfinite(eps)) throw Error(ErrorCode::BadParameter, "eps must be positive");

  const Deviations d = deviations(p);
  const int ts = p.tail_start;
  const Stats lr = scan(d.log_ratio, ts);
  const Stats tw = scan(d.twist, ts);
  const Stats nt = scan(d.normalized, ts);

  std::vector<double> excess(d.twist.size());
  for (std::size_t i = 0; i < excess.size(); ++i) excess[i] = std::max(0.0, d.twist[i] - M) / d.weight[i];
  const Stats ex = scan(excess, ts);

  const Stats raw = scan(pointwise_max(d.log_ratio, d.twist), ts);
  const Stats norm = scan(pointwise_max(d.log_ratio, d.normalized), ts);

  std::array<Verdict, 5> v;
  v[0] = {Space::Tqc, lr.max <= M && tw.max <= M,
          witness(raw, "sup_n max(|log(l_n/l_n(X))|, |t_n-t_n(X)|) <= M")};
  v[1] = {Space::T0, vanishes(lr, eps) && vanishes(tw, eps),
          witness(raw, "|log(l_n/l_n(X))| -> 0 and |t_n-t_n(X)| -> 0 on n >= tail_start")};
  v[2] = {Space::Tls, lr.max <= M && nt.max <= M,
          witness(norm, "sup_n max(|log(l_n/l_n(X))|, |t_n-t_n(X)|/max(1,|log l_n(X)|)) <= M")};
  v[3] = {Space::ClosureTqc, lr.max <= M && nt.max <= M && vanishes(ex, eps),
          witness(ex, "T_ls bounds and max(0, |t_n-t_n(X)|-M)/max(1,|log l_n(X)|) -> 0 on n >= tail_start")};
  v[4] = {Space::ClosureT0, vanishes(lr, eps) && vanishes(nt, eps),
          witness(norm, "|log(l_n/l_n(X))| -> 0 and |t_n-t_n(X)|/max(1,|log l_n(X)|) -> 0 on n >= tail_start")};
  return v;
}

double normalized_fn_distance(const SequencePair& p) {
  check_pair(p);
  const Deviations d = deviations(p);
  double sup = 0.0;
  for (std::size_t i = 0; i < d.log_ratio.size(); ++i) sup = std::max({sup, d.log_ratio[i], d.normalized[i]});
  return sup;
}

FnSequence approximating_sequence(const SequencePair& p, int k) {
  check_pair(p);
  const int N = static_cast<int>(p.window());
  if (k < 0 || k > N) throw Error(ErrorCode::BadCutoff, "cutoff must satisfy 0 <= k <= N = " + std::to_string(N));
  FnSequence out = p.base;
  for (int i = 0; i < k; ++i) {
    out.log_lengths[i] = p.candidate.log_lengths[i];
    out.twists[i] = p.candidate.twists[i];
  }
  return out;
}

double quotient_seminorm(const std::vector<double>& deviations, int tail_start) {
  const int N = static_cast<int>(deviations.size());
  if (tail_start < 1 || tail_start >= N) {
    throw Error(ErrorCode::BadWindow, "tail_start must satisfy 1 <= tail_start < N = " + std::to_string(N));
  }
  double sup = 0.0;
  for (int n = tail_start; n <= N; ++n) sup = std::max(sup, std::abs(deviations[n - 1]));
  return sup;
}

}  // namespace hyperfn

#pragma once

// Window tests of Fenchel-Nielsen coordinate sequences against the
// deformation-space criteria. Finite data cannot decide a limit, so every
// decision is reported as consistent or inconsistent with membership and
// carries the statistic it was based on.

#include <array>
#include <string>
#include <vector>

namespace hyperfn {

/// Coordinates indexed by n = 1..N. Lengths are stored as logs so that
/// sequences like e^{-n} survive large windows.
struct FnSequence {
  std::vector<double> log_lengths;
  std::vector<double> twists;

  static FnSequence from_lengths(const std::vector<double>& lengths, std::vector<double> twists);
  std::size_t size() const noexcept { return log_lengths.size(); }

  friend bool operator==(const FnSequence&, const FnSequence&) = default;
};

struct SequencePair {
  FnSequence base;       // X
  FnSequence candidate;  // Y
  int tail_start = 1;    // asymptotic checks use n >= tail_start

  std::size_t window() const noexcept { return base.size(); }
};

enum class Space { Tqc, T0, Tls, ClosureTqc, ClosureT0 };
inline constexpr std::array<Space, 5> kAllSpaces = {Space::Tqc, Space::T0, Space::Tls, Space::ClosureTqc,
                                                    Space::ClosureT0};
const char* to_string(Space s) noexcept;

struct Witness {
  double max_deviation = 0.0;   // sup over the window
  int argmax_index = 1;         // smallest n attaining it
  double tail_statistic = 0.0;  // sup over n >= tail_start
  /// log(early/late) / log(mid/tail_start) for the tail split at its
  /// midpoint; +inf when the late half is identically zero, 0 when both are.
  double decay_exponent = 0.0;
  std::string criterion;
};

struct Verdict {
  Space space = Space::Tqc;
  bool consistent = false;
  Witness witness;
};

/// A tail deviation counts as vanishing when its sup is below eps or it
/// decays across the tail at least like n^{-kMinDecayExponent}.
inline constexpr double kMinDecayExponent = 0.25;

/// Throws BadWindow unless 1 <= tail_start < N, BadParameter on mismatched
/// sizes, non-finite entries or non-positive M, eps.
std::array<Verdict, 5> classify(const SequencePair& p, double M, double eps);

/// sup_n max(|log(l_n/l_n(X))|, |t_n - t_n(X)| / max(1, |log l_n(X)|)).
double normalized_fn_distance(const SequencePair& p);

/// Candidate coordinates for n <= k, base coordinates after. Throws
/// BadCutoff unless 0 <= k <= N.
FnSequence approximating_sequence(const SequencePair& p, int k);

/// max |d_n| over n >= tail_start: the window estimate of the limsup, i.e.
/// of the distance to sequences vanishing at infinity.
double quotient_seminorm(const std::vector<double>& deviations, int tail_start);

}  // namespace hyperfn

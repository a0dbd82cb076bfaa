#pragma once

#include <array>
#include <string>

#include "hyperfn/classifier.hpp"

namespace hyperfn {

struct ClassifierInput {
  SequencePair pair;
  double M = 1.0;
  double eps = 1e-3;
};

/// {"base": {"lengths": [...], "twists": [...]}, "candidate": {...},
///  "tail_start": int, "M": number, "eps": number}. "log_lengths" may be
/// given instead of "lengths". Throws ParseError.
ClassifierInput classifier_input_from_json(const std::string& text);
std::string classifier_input_to_json(const ClassifierInput& in);

/// One object per space plus the normalized distance. Numbers are written
/// with 12 significant digits; a non-finite decay exponent is written as a
/// string ("inf").
std::string verdicts_to_json(const ClassifierInput& in, const std::array<Verdict, 5>& verdicts);

}  // namespace hyperfn

#include "hyperfn/classifier_json.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "hyperfn/error.hpp"

namespace hyperfn {
namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

std::vector<double> numbers(const json& j, const std::string& key) {
  if (!j.contains(key) || !j.at(key).is_array()) throw Error(ErrorCode::ParseError, "\"" + key + "\" must be an array");
  std::vector<double> out;
  for (const json& v : j.at(key)) {
    if (!v.is_number()) throw Error(ErrorCode::ParseError, "\"" + key + "\" must hold numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

FnSequence sequence_from(const json& j, const char* which) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, std::string("\"") + which + "\" must be an object");
  FnSequence s;
  std::vector<double> twists = numbers(j, "twists");
  if (j.contains("log_lengths")) {
    s.log_lengths = numbers(j, "log_lengths");
    s.twists = std::move(twists);
  } else {
    const std::vector<double> lengths = numbers(j, "lengths");
    for (std::size_t i = 0; i < lengths.size(); ++i) {
      if (!(lengths[i] > 0.0)) {
        throw Error(ErrorCode::ParseError,
                    std::string(which) + ": nonpositive length at n = " + std::to_string(i + 1));
      }
    }
    s = FnSequence::from_lengths(lengths, std::move(twists));
  }
  return s;
}

json sequence_to(const FnSequence& s) { return {{"log_lengths", s.log_lengths}, {"twists", s.twists}}; }

// Round to 12 significant digits so reports are stable across platforms'
// last-digit differences.
ordered number12(double v) {
  if (!std::isfinite(v)) return v > 0 ? "inf" : (v < 0 ? "-inf" : "nan");
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

}  // namespace

ClassifierInput classifier_input_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("classifier JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "classifier JSON must be an object");
  try {
    ClassifierInput in;
    if (!j.contains("base") || !j.contains("candidate")) {
      throw Error(ErrorCode::ParseError, "classifier JSON needs \"base\" and \"candidate\"");
    }
    in.pair.base = sequence_from(j.at("base"), "base");
    in.pair.candidate = sequence_from(j.at("candidate"), "candidate");
    if (!j.contains("tail_start") || !j.at("tail_start").is_number_integer()) {
      throw Error(ErrorCode::ParseError, "\"tail_start\" must be an integer");
    }
    in.pair.tail_start = j.at("tail_start").get<int>();
    for (const char* key : {"M", "eps"}) {
      if (!j.contains(key) || !j.at(key).is_number()) {
        throw Error(ErrorCode::ParseError, std::string("\"") + key + "\" must be a number");
      }
    }
    in.M = j.at("M").get<double>();
    in.eps = j.at("eps").get<double>();
    return in;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("classifier JSON: ") + e.what());
  }
}

std::string classifier_input_to_json(const ClassifierInput& in) {
  json j = {{"base", sequence_to(in.pair.base)},
            {"candidate", sequence_to(in.pair.candidate)},
            {"tail_start", in.pair.tail_start},
            {"M", in.M},
            {"eps", in.eps}};
  return j.dump() + "\n";
}

std::string verdicts_to_json(const ClassifierInput& in, const std::array<Verdict, 5>& verdicts) {
  ordered out;
  out["window"] = in.pair.window();
  out["tail_start"] = in.pair.tail_start;
  out["M"] = number12(in.M);
  out["eps"] = number12(in.eps);
  out["normalized_fn_distance"] = number12(normalized_fn_distance(in.pair));
  ordered list = ordered::array();
  for (const Verdict& v : verdicts) {
    ordered o;
    o["space"] = to_string(v.space);
    o["decision"] = v.consistent ? "consistent" : "inconsistent";
    o["max_deviation"] = number12(v.witness.max_deviation);
    o["argmax_index"] = v.witness.argmax_index;
    o["tail_statistic"] = number12(v.witness.tail_statistic);
    o["decay_exponent"] = number12(v.witness.decay_exponent);
    o["criterion"] = v.witness.criterion;
    list.push_back(o);
  }
  out["verdicts"] = list;
  return out.dump(2) + "\n";
}

}  // namespace hyperfn

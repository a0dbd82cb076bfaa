#include "hyperfn/surface_json.hpp"

#include <json.hpp>

#include "hyperfn/error.hpp"

namespace hyperfn {
namespace {

using nlohmann::json;

SlotRef slot_from(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    throw Error(ErrorCode::ParseError, "slotRef must be [pants, slot], got " + j.dump());
  }
  return {j[0].get<int>(), j[1].get<int>()};
}

json slot_to(SlotRef s) { return json::array({s.pants, s.slot}); }

const json& array_member(const json& j, const char* key) {
  static const json empty = json::array();
  if (!j.contains(key)) return empty;
  const json& v = j.at(key);
  if (!v.is_array()) throw Error(ErrorCode::ParseError, std::string("\"") + key + "\" must be an array");
  return v;
}

std::map<int, double> number_map(const json& j, const char* key) {
  std::map<int, double> out;
  if (!j.contains(key)) return out;
  const json& v = j.at(key);
  if (!v.is_object()) throw Error(ErrorCode::ParseError, std::string("\"") + key + "\" must be an object");
  for (const auto& [k, x] : v.items()) {
    std::size_t used = 0;
    int id = 0;
    try {
      id = std::stoi(k, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != k.size() || k.empty()) throw Error(ErrorCode::ParseError, std::string("bad curve index \"") + k + "\"");
    if (!x.is_number()) throw Error(ErrorCode::ParseError, std::string("value at curve ") + k + " is not a number");
    out[id] = x.get<double>();
  }
  return out;
}

}  // namespace

MarkedSurface surface_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("surface JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "surface JSON must be an object");
  try {
    const json& pants = array_member(j, "pants");
    for (std::size_t i = 0; i < pants.size(); ++i) {
      const json& p = pants[i];
      if (!p.is_array() || p.size() != 3) throw Error(ErrorCode::ParseError, "pants entries must hold 3 slotRefs");
      for (int k = 0; k < 3; ++k) {
        const SlotRef s = slot_from(p[k]);
        if (s.pants != static_cast<int>(i) || s.slot != k) {
          throw Error(ErrorCode::ParseError, "pants " + std::to_string(i) + " must list its own slots in order");
        }
      }
    }
    const json& pairings = array_member(j, "pairings");
    const json& boundary = array_member(j, "boundary");
    const json& punctures = array_member(j, "punctures");

    std::vector<int> ids[3];
    const std::size_t sizes[3] = {pairings.size(), boundary.size(), punctures.size()};
    if (j.contains("curve_index")) {
      const json& ci = j.at("curve_index");
      if (!ci.is_object()) throw Error(ErrorCode::ParseError, "\"curve_index\" must be an object");
      const char* keys[3] = {"pairings", "boundary", "punctures"};
      for (int g = 0; g < 3; ++g) {
        for (const json& v : array_member(ci, keys[g])) {
          if (!v.is_number_integer()) throw Error(ErrorCode::ParseError, "curve ids must be integers");
          ids[g].push_back(v.get<int>());
        }
        if (ids[g].size() != sizes[g]) {
          throw Error(ErrorCode::ParseError, std::string("\"curve_index.") + keys[g] + "\" has the wrong length");
        }
      }
    } else {
      int next = 1;
      for (int g = 0; g < 3; ++g) {
        for (std::size_t i = 0; i < sizes[g]; ++i) ids[g].push_back(next++);
      }
    }

    MarkedSurface s;
    s.graph = PantsGraph(static_cast<int>(pants.size()));
    for (std::size_t i = 0; i < pairings.size(); ++i) {
      const json& pr = pairings[i];
      if (!pr.is_array() || pr.size() != 2) throw Error(ErrorCode::ParseError, "pairings must hold two slotRefs");
      s.graph.add_pairing(ids[0][i], slot_from(pr[0]), slot_from(pr[1]));
    }
    for (std::size_t i = 0; i < boundary.size(); ++i) s.graph.add_boundary(ids[1][i], slot_from(boundary[i]));
    for (std::size_t i = 0; i < punctures.size(); ++i) s.graph.add_puncture(ids[2][i], slot_from(punctures[i]));
    s.coords.lengths = number_map(j, "lengths");
    s.coords.twists = number_map(j, "twists");
    if (j.contains("upper_bound") && !j.at("upper_bound").is_null()) {
      if (!j.at("upper_bound").is_number()) throw Error(ErrorCode::ParseError, "\"upper_bound\" must be a number or null");
      s.upper_bound = j.at("upper_bound").get<double>();
    }
    return s;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("surface JSON: ") + e.what());
  }
}

std::string surface_to_json(const MarkedSurface& s) {
  json j;
  j["pants"] = json::array();
  for (int i = 0; i < s.graph.pants_count(); ++i) {
    j["pants"].push_back(json::array({slot_to({i, 0}), slot_to({i, 1}), slot_to({i, 2})}));
  }
  json pairings = json::array(), boundary = json::array(), punctures = json::array();
  json ci = {{"pairings", json::array()}, {"boundary", json::array()}, {"punctures", json::array()}};
  for (const auto& c : s.graph.curves()) {
    switch (c.kind) {
      case CurveKind::Interior:
        pairings.push_back(json::array({slot_to(c.first), slot_to(c.second)}));
        ci["pairings"].push_back(c.id);
        break;
      case CurveKind::Boundary:
        boundary.push_back(slot_to(c.first));
        ci["boundary"].push_back(c.id);
        break;
      case CurveKind::Puncture:
        punctures.push_back(slot_to(c.first));
        ci["punctures"].push_back(c.id);
        break;
    }
  }
  j["pairings"] = pairings;
  j["boundary"] = boundary;
  j["punctures"] = punctures;
  j["curve_index"] = ci;
  json lengths = json::object(), twists = json::object();
  for (const auto& [id, l] : s.coords.lengths) lengths[std::to_string(id)] = l;
  for (const auto& [id, t] : s.coords.twists) twists[std::to_string(id)] = t;
  j["lengths"] = lengths;
  j["twists"] = twists;
  j["upper_bound"] = s.upper_bound ? json(*s.upper_bound) : json(nullptr);
  return j.dump(1) + "\n";
}

}  // namespace hyperfn

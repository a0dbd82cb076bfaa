#include "hyperfn/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "hyperfn/classifier.hpp"
#include "hyperfn/classifier_json.hpp"
#include "hyperfn/error.hpp"
#include "hyperfn/sequence_expr.hpp"
#include "hyperfn/spectra.hpp"
#include "hyperfn/surface.hpp"
#include "hyperfn/surface_json.hpp"

namespace hyperfn::cli {
namespace {

using ordered = nlohmann::ordered_json;

// Input problems the caller can fix; everything else is a failed computation.
class ValidationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

[[noreturn]] void invalid(const std::string& message) { throw ValidationFailure(message); }

std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

ordered num12(double v) {
  if (!std::isfinite(v)) return fmt12(v);
  return std::strtod(fmt12(v).c_str(), nullptr);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) invalid("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

MarkedSurface load_surface(const std::string& path) {
  MarkedSurface s = surface_from_json(read_file(path));
  const auto problems = validate(s);
  if (!problems.empty()) {
    std::string msg = path + " is not a valid surface:";
    for (const auto& p : problems) msg += "\n  " + p;
    invalid(msg);
  }
  return s;
}

MarkedSurface family_surface(const CommandConfig& c) {
  if (c.family != "flute" && c.family != "ladder") invalid("--family must be flute or ladder");
  if (c.N < 2) invalid("--N must be at least 2");
  if (c.ends != "boundary" && c.ends != "puncture") invalid("--ends must be boundary or puncture");
  const SequenceExpr lengths = SequenceExpr::parse(c.lengths);
  const SequenceExpr twists = SequenceExpr::parse(c.twists);
  FamilyOptions opt;
  opt.mode = c.family == "ladder" ? FamilyMode::Ladder : FamilyMode::Flute;
  opt.ends = c.ends == "puncture" ? EndMode::Puncture : EndMode::Boundary;
  opt.upper_bound = c.upper_bound;
  return flute_family(
      c.N, [&](int n) { return lengths.value(n); }, [&](int n) { return twists.value(n); }, opt);
}

MarkedSurface surface_x(const CommandConfig& c) {
  const int sources = (!c.surface_path.empty()) + (!c.x_path.empty()) + (!c.family.empty());
  if (sources != 1) invalid("give exactly one of --surface, --x or --family");
  if (!c.surface_path.empty()) return load_surface(c.surface_path);
  if (!c.x_path.empty()) return load_surface(c.x_path);
  MarkedSurface s = family_surface(c);
  const auto problems = validate(s);
  if (!problems.empty()) invalid("generated surface is invalid: " + problems.front());
  return s;
}

std::pair<std::string, double> parse_deform(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) invalid("bad --deform \"" + text + "\", expected scale:c or shift:c");
  const std::string kind = text.substr(0, colon);
  const std::string value = text.substr(colon + 1);
  char* end = nullptr;
  const double c = std::strtod(value.c_str(), &end);
  if (value.empty() || *end != '\0' || !std::isfinite(c)) invalid("bad --deform value in \"" + text + "\"");
  if (kind != "scale" && kind != "shift") invalid("bad --deform \"" + text + "\", expected scale:c or shift:c");
  return {kind, c};
}

MarkedSurface apply_deform(MarkedSurface s, const std::vector<std::string>& steps) {
  for (const auto& step : steps) {
    const auto [kind, c] = parse_deform(step);
    s = kind == "scale" ? scale_lengths(s, c) : shift_twists(s, c);
  }
  return s;
}

MarkedSurface surface_y(const CommandConfig& c, const MarkedSurface& x) {
  if (!c.y_path.empty()) {
    if (!c.deform.empty()) invalid("give --y or --deform, not both");
    return load_surface(c.y_path);
  }
  return apply_deform(x, c.deform);
}

std::vector<int> select_curves(const CommandConfig& c, const MarkedSurface& s) {
  std::vector<int> ids = s.graph.ids(CurveKind::Interior);
  std::sort(ids.begin(), ids.end());
  if (c.range.empty()) return ids;
  int lo = 0, hi = 0;
  char tail = 0;
  if (std::sscanf(c.range.c_str(), "%d:%d%c", &lo, &hi, &tail) != 2 || lo > hi) {
    invalid("bad --range \"" + c.range + "\", expected lo:hi");
  }
  std::vector<int> out;
  for (int id : ids) {
    if (id >= lo && id <= hi) out.push_back(id);
  }
  if (out.empty()) invalid("--range " + c.range + " selects no interior curve");
  return out;
}

std::vector<CurveWord> select_words(const CommandConfig& c, const MarkedSurface& x) {
  if (c.curves.empty()) return default_word_family(x, c.k_range);
  std::vector<CurveWord> words;
  for (const auto& text : c.curves) words.push_back(CurveWord::parse(text));
  return words;
}

void require_format(const CommandConfig& c) {
  if (c.format != "json" && c.format != "csv") invalid("--format must be json or csv");
}

std::string cmd_make_surface(const CommandConfig& c) {
  if (c.format != "json") invalid("make-surface writes json only");
  return surface_to_json(surface_x(c));
}

std::string cmd_deform(const CommandConfig& c) {
  if (c.format != "json") invalid("deform writes json only");
  if (c.deform.empty()) invalid("deform needs at least one --deform step");
  return surface_to_json(apply_deform(surface_x(c), c.deform));
}

std::string cmd_lengths(const CommandConfig& c) {
  const MarkedSurface s = surface_x(c);
  std::vector<CurveWord> words;
  if (c.curves.empty()) {
    for (const auto& cv : s.graph.curves()) {
      if (cv.kind != CurveKind::Puncture) words.push_back(CurveWord::pants_curve(cv.id));
    }
  } else {
    for (const auto& text : c.curves) words.push_back(CurveWord::parse(text));
  }
  std::ostringstream os;
  if (c.format == "csv") {
    os << "word,length\n";
    for (const auto& w : words) os << w.to_string() << "," << fmt12(curve_length(s, w)) << "\n";
    return os.str();
  }
  ordered rows = ordered::array();
  for (const auto& w : words) rows.push_back({{"word", w.to_string()}, {"length", num12(curve_length(s, w))}});
  return rows.dump(2) + "\n";
}

std::string cmd_gamma_table(const CommandConfig& c) {
  const MarkedSurface s = surface_x(c);
  const std::vector<int> ids = select_curves(c, s);
  const Prop1Report r = prop1_report(s, s, ids, c.k_range, c.threads);
  std::ostringstream os;
  if (c.format == "csv") {
    os << "n,l_alpha,word,l_gamma,deviation\n";
    for (const auto& row : r.rows) {
      os << row.n << "," << fmt12(row.l_alpha_x) << "," << row.word.to_string() << "," << fmt12(row.l_gamma_x) << ","
         << fmt12(row.deviation_x) << "\n";
    }
    return os.str();
  }
  ordered rows = ordered::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"n", row.n},
                    {"l_alpha", num12(row.l_alpha_x)},
                    {"word", row.word.to_string()},
                    {"l_gamma", num12(row.l_gamma_x)},
                    {"deviation", num12(row.deviation_x)}});
  }
  return rows.dump(2) + "\n";
}

FnSequence sequence_of(const MarkedSurface& s) {
  FnSequence q;
  std::vector<int> ids = s.graph.ids(CurveKind::Interior);
  std::sort(ids.begin(), ids.end());
  for (int id : ids) {
    q.log_lengths.push_back(std::log(s.length(id)));
    q.twists.push_back(s.twist(id));
  }
  return q;
}

ClassifierInput classifier_input(const CommandConfig& c) {
  ClassifierInput in;
  if (!c.input_path.empty()) {
    if (!c.x_path.empty() || !c.family.empty()) invalid("give --input or surfaces, not both");
    return classifier_input_from_json(read_file(c.input_path));
  }
  if (!c.family.empty()) {
    // Sequences straight from the expressions, in log space, so long
    // windows of rapidly shrinking lengths stay finite.
    if (c.N < 2) invalid("--N must be at least 2");
    const SequenceExpr bl = SequenceExpr::parse(c.lengths);
    const SequenceExpr bt = SequenceExpr::parse(c.twists);
    const SequenceExpr cl = SequenceExpr::parse(c.candidate_lengths.empty() ? c.lengths : c.candidate_lengths);
    const SequenceExpr ct = SequenceExpr::parse(c.candidate_twists.empty() ? c.twists : c.candidate_twists);
    for (int n = 1; n <= c.N; ++n) {
      in.pair.base.log_lengths.push_back(bl.log_value(n));
      in.pair.base.twists.push_back(bt.value(n));
      in.pair.candidate.log_lengths.push_back(cl.log_value(n));
      in.pair.candidate.twists.push_back(ct.value(n));
    }
    for (const auto& step : c.deform) {
      const auto [kind, v] = parse_deform(step);
      if (kind == "scale" && !(v > 0.0)) invalid("scale factor must be positive");
      for (int i = 0; i < c.N; ++i) {
        if (kind == "scale") {
          in.pair.candidate.log_lengths[i] += std::log(v);
        } else {
          in.pair.candidate.twists[i] += v;
        }
      }
    }
  } else {
    const MarkedSurface x = surface_x(c);
    const MarkedSurface y = surface_y(c, x);
    require_same_graph(x, y);
    in.pair.base = sequence_of(x);
    in.pair.candidate = sequence_of(y);
  }
  in.pair.tail_start = c.tail_start > 0 ? c.tail_start : static_cast<int>(in.pair.window() / 2);
  in.M = c.M;
  in.eps = c.eps;
  return in;
}

std::string cmd_classify(const CommandConfig& c) {
  const ClassifierInput in = classifier_input(c);
  const auto verdicts = classify(in.pair, in.M, in.eps);
  if (c.format == "json") return verdicts_to_json(in, verdicts);
  std::ostringstream os;
  os << "space,decision,max_deviation,argmax_index,tail_statistic,decay_exponent\n";
  for (const auto& v : verdicts) {
    os << to_string(v.space) << "," << (v.consistent ? "consistent" : "inconsistent") << ","
       << fmt12(v.witness.max_deviation) << "," << v.witness.argmax_index << "," << fmt12(v.witness.tail_statistic)
       << "," << fmt12(v.witness.decay_exponent) << "\n";
  }
  return os.str();
}

std::string cmd_dls(const CommandConfig& c) {
  const MarkedSurface x = surface_x(c);
  const MarkedSurface y = surface_y(c, x);
  require_same_graph(x, y);
  const std::vector<CurveWord> words = select_words(c, x);
  const double bound = dls_lower_bound(x, y, words);
  if (c.format == "csv") return "dls_lower_bound,family_size\n" + fmt12(bound) + "," + std::to_string(words.size()) + "\n";
  ordered j;
  j["dls_lower_bound"] = num12(bound);
  j["family_size"] = words.size();
  j["note"] = "lower bound: maximum taken over the listed curve family only";
  return j.dump(2) + "\n";
}

std::string cmd_prop1(const CommandConfig& c) {
  const MarkedSurface x = surface_x(c);
  const MarkedSurface y = surface_y(c, x);
  const Prop1Report r = prop1_report(x, y, select_curves(c, x), c.k_range, c.threads);
  std::ostringstream os;
  if (c.format == "csv") {
    os << "n,l_alpha_X,l_alpha_Y,l_gamma_X,l_gamma_Y,deviation_X,diff\n";
    for (const auto& row : r.rows) {
      os << row.n << "," << fmt12(row.l_alpha_x) << "," << fmt12(row.l_alpha_y) << "," << fmt12(row.l_gamma_x) << ","
         << fmt12(row.l_gamma_y) << "," << fmt12(row.deviation_x) << "," << fmt12(row.diff) << "\n";
    }
    return os.str();
  }
  ordered rows = ordered::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"n", row.n},
                    {"word", row.word.to_string()},
                    {"l_alpha_X", num12(row.l_alpha_x)},
                    {"l_alpha_Y", num12(row.l_alpha_y)},
                    {"l_gamma_X", num12(row.l_gamma_x)},
                    {"l_gamma_Y", num12(row.l_gamma_y)},
                    {"deviation_X", num12(row.deviation_x)},
                    {"diff", num12(row.diff)}});
  }
  ordered j;
  j["rows"] = rows;
  j["summary"] = {{"sup_abs_diff", num12(r.sup_abs_diff)},
                  {"deviation_min", num12(r.deviation_min)},
                  {"deviation_max", num12(r.deviation_max)}};
  return j.dump(2) + "\n";
}

std::string cmd_wolpert(const CommandConfig& c) {
  const MarkedSurface x = surface_x(c);
  const MarkedSurface y = surface_y(c, x);
  require_same_graph(x, y);
  const WolpertReport r = wolpert_check(x, y, select_words(c, x), c.K);
  std::ostringstream os;
  if (c.format == "csv") {
    os << "word,length_X,length_Y,ratio,violation\n";
    for (const auto& e : r.entries) {
      os << e.word.to_string() << "," << fmt12(e.length_x) << "," << fmt12(e.length_y) << "," << fmt12(e.ratio) << ","
         << (e.violation ? 1 : 0) << "\n";
    }
    return os.str();
  }
  ordered entries = ordered::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"word", e.word.to_string()},
                       {"length_X", num12(e.length_x)},
                       {"length_Y", num12(e.length_y)},
                       {"ratio", num12(e.ratio)},
                       {"violation", e.violation}});
  }
  ordered j;
  j["K"] = num12(r.K);
  j["violations"] = r.violations;
  j["max_ratio"] = num12(r.max_ratio);
  j["entries"] = entries;
  return j.dump(2) + "\n";
}

bool is_validation(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::BadParameter:
    case ErrorCode::BadWindow:
    case ErrorCode::BadCutoff:
    case ErrorCode::GraphMismatch:
    case ErrorCode::EmptyFamily:
    case ErrorCode::UnsupportedWord:
    case ErrorCode::PunctureCrossing:
      return true;
    default:
      return false;
  }
}

}  // namespace

int run(const CommandConfig& c, std::ostream& out, std::ostream& err) {
  try {
    require_format(c);
    if (c.k_range < 0) invalid("--k-range must be >= 0");
    if (c.threads < 1) invalid("thread count must be >= 1");
    std::string text;
    if (c.subcommand == "make-surface") {
      text = cmd_make_surface(c);
    } else if (c.subcommand == "deform") {
      text = cmd_deform(c);
    } else if (c.subcommand == "lengths") {
      text = cmd_lengths(c);
    } else if (c.subcommand == "gamma-table") {
      text = cmd_gamma_table(c);
    } else if (c.subcommand == "classify") {
      text = cmd_classify(c);
    } else if (c.subcommand == "dls") {
      text = cmd_dls(c);
    } else if (c.subcommand == "prop1") {
      text = cmd_prop1(c);
    } else if (c.subcommand == "wolpert") {
      text = cmd_wolpert(c);
    } else {
      invalid("unknown subcommand \"" + c.subcommand + "\"");
    }
    if (c.out_path.empty()) {
      out << text;
    } else {
      std::ofstream f(c.out_path, std::ios::binary);
      if (!f) invalid("cannot write " + c.out_path);
      f << text;
    }
    return kOk;
  } catch (const ValidationFailure& e) {
    err << "error: " << e.what() << "\n";
    return kValidationError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_validation(e.code()) ? kValidationError : kComputationError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kComputationError;
  }
}

int run_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CommandConfig c;
  CLI::App app{"Fenchel-Nielsen coordinates, curve lengths and deformation-space tests for hyperbolic surfaces"};
  app.require_subcommand(1);

  double upper_bound = 0.0;
  auto common = [&](CLI::App* s) {
    s->add_option("--surface", c.surface_path, "surface JSON file");
    s->add_option("--x", c.x_path, "base surface JSON file");
    s->add_option("--family", c.family, "generate a flute or ladder surface")->check(CLI::IsMember({"flute", "ladder"}));
    s->add_option("--N", c.N, "number of pants in the chain");
    s->add_option("--lengths", c.lengths, "length expression, e.g. exp:-1");
    s->add_option("--twists", c.twists, "twist expression, e.g. const:0");
    s->add_option("--ends", c.ends, "end caps: boundary or puncture");
    s->add_option("--upper-bound", upper_bound, "length bound P recorded on the surface");
    s->add_option("--out", c.out_path, "output file (default stdout)");
    s->add_option("--format", c.format, "json or csv");
  };
  auto pair = [&](CLI::App* s) {
    s->add_option("--y", c.y_path, "deformed surface JSON file");
    s->add_option("--deform", c.deform, "scale:c or shift:c, applied to X in order");
  };

  auto* make = app.add_subcommand("make-surface", "write a surface JSON file");
  common(make);
  auto* deform = app.add_subcommand("deform", "write a deformed copy of a surface");
  common(deform);
  deform->add_option("--deform", c.deform, "scale:c or shift:c")->required();
  auto* lengths = app.add_subcommand("lengths", "geodesic lengths of curve words");
  common(lengths);
  lengths->add_option("--curve", c.curves, "word such as alpha:5 or gamma:5:0:1");
  auto* gamma = app.add_subcommand("gamma-table", "shortest crossing curve of each interior curve");
  common(gamma);
  gamma->add_option("--k-range", c.k_range, "wrap search bound");
  gamma->add_option("--range", c.range, "inclusive curve id range lo:hi");
  auto* classify_cmd = app.add_subcommand("classify", "deformation-space verdicts for a sequence pair");
  common(classify_cmd);
  pair(classify_cmd);
  classify_cmd->add_option("--input", c.input_path, "classifier pair JSON file");
  classify_cmd->add_option("--cand-lengths", c.candidate_lengths, "candidate length expression");
  classify_cmd->add_option("--cand-twists", c.candidate_twists, "candidate twist expression");
  classify_cmd->add_option("--tail-start", c.tail_start, "first index of the tail (default N/2)");
  classify_cmd->add_option("--M", c.M, "boundedness constant");
  classify_cmd->add_option("--eps", c.eps, "tail tolerance");
  auto* dls = app.add_subcommand("dls", "lower bound for the length-spectrum distance");
  common(dls);
  pair(dls);
  dls->add_option("--curve", c.curves, "curve words (default: pants curves and shortest crossings)");
  dls->add_option("--k-range", c.k_range, "wrap search bound for the default family");
  auto* prop1 = app.add_subcommand("prop1", "crossing-curve lengths on X and Y");
  common(prop1);
  pair(prop1);
  prop1->add_option("--k-range", c.k_range, "wrap search bound");
  prop1->add_option("--range", c.range, "inclusive curve id range lo:hi");
  auto* wolpert = app.add_subcommand("wolpert", "length ratios against the bound [1/K, K]");
  common(wolpert);
  pair(wolpert);
  wolpert->add_option("--curve", c.curves, "curve words (default: pants curves and shortest crossings)");
  wolpert->add_option("--k-range", c.k_range, "wrap search bound for the default family");
  wolpert->add_option("--K", c.K, "quasiconformal constant");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kValidationError;
  }
  for (auto* s : app.get_subcommands()) c.subcommand = s->get_name();
  for (auto* s : app.get_subcommands()) {
    if (s->count("--upper-bound") > 0) c.upper_bound = upper_bound;
  }
  if (const char* env = std::getenv("HYPERFN_THREADS")) {
    const int t = std::atoi(env);
    if (t >= 1) c.threads = t;
  }
  return run(c, out, err);
}

}  // namespace hyperfn::cli

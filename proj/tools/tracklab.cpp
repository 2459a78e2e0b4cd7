// tracklab: classify tracks on T, enumerate them, verify the library's
// claims, render nets and chain spattern operations.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "tracklab/fixtures.hpp"
#include "tracklab/svg.hpp"
#include "tracklab/verify.hpp"

using namespace tracklab;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Parse, "cannot write " + path);
  out << text;
}

json load_input(const std::string& path, const std::string& fixture_name) {
  if (!fixture_name.empty()) return fixture(fixture_name);
  if (path.empty()) throw Error(ErrorKind::Parse, "no input given");
  return load_json_file(path);
}

json classify_doc(const Pattern& p) {
  json out{{"version", kSchemaVersion}, {"kind", "classification"}};
  out["weights"] = weights_to_json(p.complex(), p.weights());
  json comps = json::array();
  for (const auto& t : components(p)) {
    auto tp = track_pattern(p, t);
    json c{{"weights", weights_to_json(tp.complex(), tp.weights())}};
    c["class"] = to_json(classify(tp));
    c["separation"] = to_json(tp.complex(), separation(tp));
    c["is_octagon"] = is_octagon(tp);
    comps.push_back(c);
  }
  out["components"] = comps;
  out["normal"] = is_normal(p);
  return out;
}

int cmd_classify(const std::string& weights, const std::string& report) {
  auto T = tetrahedron();
  Pattern p = pattern_from_weights(T, parse_weight_list(*T, weights));
  auto doc = classify_doc(p);
  emit(report, doc.dump(2) + "\n");
  if (!report.empty()) {
    for (const auto& c : doc["components"]) std::cout << c["class"].dump() << "\n";
  }
  return kOk;
}

int cmd_enumerate(std::int64_t max_weight, const std::string& report, bool symmetry, int threads) {
  auto r = enumerate_and_verify(max_weight, {symmetry, threads});
  if (!report.empty()) save_json_file(report, to_json(r));
  std::cout << "tracks: " << r.track_count << "\n";
  for (auto [w, n] : r.weight_counts) std::cout << "  weight " << w << ": " << n << "\n";
  std::cout << "violations: " << r.violations.size() << "\n";
  for (const auto& v : r.violations) std::cout << "  " << v << "\n";
  return r.violations.empty() ? kOk : kFailed;
}

int cmd_verify(const std::string& suite, const VerifyOptions& o, const std::string& report) {
  SuiteReport r;
  if (suite == "classification") r = verify_classification(o);
  else if (suite == "spattern") r = verify_spattern(o);
  else if (suite == "sweep") r = verify_sweep(o);
  else throw Error(ErrorKind::Parse, "unknown suite '" + suite + "'");
  for (const auto& c : r.checks) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty() && !c.passed) std::cout << ": " << c.detail;
    std::cout << "\n";
  }
  if (!report.empty()) save_json_file(report, r.to_json());
  return r.passed() ? kOk : kFailed;
}

int cmd_render(const json& doc, const std::string& format, const std::string& out) {
  if (doc.value("kind", "") == "trace") {
    auto t = trace_from_json(doc);
    auto rep = replay(t);
    std::vector<std::pair<std::string, SingularState>> panels;
    for (std::size_t i = 0; i < rep.states.size(); ++i) {
      panels.push_back({"f" + std::to_string(i) + "  weight " + std::to_string(rep.weights[i]), rep.states[i]});
    }
    emit(out, format == "json" ? trace_to_json(t).dump(2) + "\n" : render_svg(panels));
    return kOk;
  }
  auto s = state_from_json(doc);
  if (format == "json") {
    emit(out, state_to_json(s).dump(2) + "\n");
    return kOk;
  }
  std::vector<std::pair<std::string, SingularState>> panels{{doc.value("kind", "spattern"), s}};
  if (doc.value("kind", "") != "pattern" && !s.has_returning_arcs() && validate_state(s, false).empty()) {
    panels.push_back({"underlying pattern", underlying_pattern(s).state()});
  }
  emit(out, render_svg(panels));
  return kOk;
}

// Pipeline value types.
enum class Kind { Pattern, Spattern, Trace, Classification, Uncross, Analysis };

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Pattern: return "pattern";
    case Kind::Spattern: return "spattern";
    case Kind::Trace: return "trace";
    case Kind::Classification: return "classification";
    case Kind::Uncross: return "uncross";
    default: return "analysis";
  }
}

struct OpType {
  std::vector<Kind> accepts;
  Kind produces;
};

std::optional<OpType> op_type(const std::string& op) {
  if (op == "classify") return OpType{{Kind::Pattern}, Kind::Classification};
  if (op == "underlying") return OpType{{Kind::Pattern, Kind::Spattern}, Kind::Pattern};
  if (op == "uncross") return OpType{{Kind::Pattern, Kind::Spattern}, Kind::Pattern};
  if (op == "remove-pair") return OpType{{Kind::Pattern, Kind::Spattern}, Kind::Spattern};
  if (op == "analyze") return OpType{{Kind::Trace}, Kind::Analysis};
  return std::nullopt;
}

json state_doc(const SingularState& s) {
  if (!s.has_returning_arcs() && count_crossings(s) == 0 && validate_state(s, false).empty()) {
    return pattern_to_json(pattern_on_points(s));
  }
  return state_to_json(s);
}

int cmd_pipeline(const std::vector<std::string>& ops, const json& input, const std::string& output,
                 bool trace, const std::string& pair_names) {
  const std::string doc_kind = input.value("kind", "spattern");
  Kind cur = doc_kind == "trace" ? Kind::Trace : doc_kind == "pattern" ? Kind::Pattern : Kind::Spattern;
  // Type check before doing any work.
  {
    Kind k = cur;
    for (std::size_t i = 0; i < ops.size(); ++i) {
      auto t = op_type(ops[i]);
      if (!t) {
        std::cerr << "op " << i + 1 << " '" << ops[i] << "': unknown operation\n";
        return kBadInput;
      }
      if (std::find(t->accepts.begin(), t->accepts.end(), k) == t->accepts.end()) {
        std::cerr << "op " << i + 1 << " '" << ops[i] << "': expects " << kind_name(t->accepts.front())
                  << ", got " << kind_name(k) << "\n";
        return kBadInput;
      }
      k = t->produces;
    }
  }
  SingularState state;
  SweepTrace tr;
  if (cur == Kind::Trace) {
    tr = trace_from_json(input);
  } else {
    state = state_from_json(input);
  }
  json steps = json::array();
  json value = cur == Kind::Trace ? trace_to_json(tr) : state_doc(state);
  int status = kOk;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const auto& op = ops[i];
    if (op == "classify") {
      value = classify_doc(pattern_on_points(state));
    } else if (op == "underlying") {
      state = underlying_pattern(state).state();
      value = pattern_to_json(pattern_on_points(state));
    } else if (op == "uncross") {
      auto u = uncross(state);
      if (!u.ok()) {
        value = to_json(state, u);
        status = kFailed;
        if (trace) steps.push_back({{"op", op}, {"value", value}});
        break;
      }
      state = u.uncrossed->result;
      value = state_doc(state);
      value["mu"] = to_json(state, u)["mu"];
    } else if (op == "remove-pair") {
      PointPair pp;
      if (pair_names.empty()) {
        auto pairs = find_removable_pairs(state);
        if (pairs.empty()) throw Error(ErrorKind::NotRemovable, "no removable pair");
        pp = pairs.front().pair;
      } else {
        auto comma = pair_names.find(',');
        if (comma == std::string::npos) throw Error(ErrorKind::Parse, "--pair takes a,b");
        int a = state.point_id(pair_names.substr(0, comma));
        int b = state.point_id(pair_names.substr(comma + 1));
        if (state.position(a) > state.position(b)) std::swap(a, b);
        pp = {state.point(a).edge, a, b};
      }
      state = remove_pair(state, pp);
      value = state_doc(state);
    } else if (op == "analyze") {
      value = to_json(analyze_first_thick(swap_reduce(tr).trace));
    }
    if (trace) steps.push_back({{"op", op}, {"value", value}});
  }
  json out = value;
  if (trace) out = json{{"version", kSchemaVersion}, {"kind", "pipeline"}, {"steps", steps}, {"final", value}};
  emit(output, out.dump(2) + "\n");
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tracklab: tracks, spatterns and sweeps on triangulated surfaces"};
  app.require_subcommand(1);

  std::string weights, report, out, format = "svg", input, fixture_name, suite, pair_names;
  std::int64_t max_weight = 24;
  bool symmetry = false, trace = false;
  int threads = 1;
  VerifyOptions vo;
  std::vector<std::string> ops;

  auto* classify_cmd = app.add_subcommand("classify", "classify the pattern of a weight vector on T");
  classify_cmd->add_option("--weights", weights, "e.g. uv=2,wz=2,uz=1,vw=1,uw=1,vz=1")->required();
  classify_cmd->add_option("--report", report, "write the JSON here instead of stdout");

  auto* enum_cmd = app.add_subcommand("enumerate", "enumerate and check every track up to a weight");
  enum_cmd->add_option("--max-weight", max_weight)->check(CLI::Range(3, 200));
  enum_cmd->add_option("--report", report);
  enum_cmd->add_flag("--symmetry", symmetry, "visit one weight vector per symmetry orbit");
  enum_cmd->add_option("--threads", threads)->check(CLI::Range(1, 256));

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", suite, "classification | spattern | sweep")->required();
  verify_cmd->add_option("--max-weight", vo.max_weight)->check(CLI::Range(3, 200));
  verify_cmd->add_option("--report", report);
  verify_cmd->add_option("--seed", vo.seed);
  verify_cmd->add_option("--cases", vo.cases)->check(CLI::Range(1, 1000000));
  verify_cmd->add_option("--threads", vo.threads)->check(CLI::Range(1, 256));

  auto* render_cmd = app.add_subcommand("render", "draw a pattern, spattern or trace on the net of T");
  render_cmd->add_option("input", input, "JSON document");
  render_cmd->add_option("--fixture", fixture_name, "use a bundled document instead");
  render_cmd->add_option("--format", format)->check(CLI::IsMember({"svg", "json"}));
  render_cmd->add_option("-o,--output", out);

  auto* pipe_cmd = app.add_subcommand("pipeline", "apply operations in sequence");
  pipe_cmd->add_option("ops", ops, "classify | underlying | uncross | remove-pair | analyze")->required();
  pipe_cmd->add_option("--input", input);
  pipe_cmd->add_option("--fixture", fixture_name);
  pipe_cmd->add_option("--output", out);
  pipe_cmd->add_option("--pair", pair_names, "points for remove-pair, e.g. uv.0,uv.1");
  pipe_cmd->add_flag("--trace", trace, "keep every intermediate value");

  app.add_subcommand("fixtures", "list bundled documents")->callback([] {
    for (const auto& n : fixture_names()) std::cout << n << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*classify_cmd) return cmd_classify(weights, report);
    if (*enum_cmd) return cmd_enumerate(max_weight, report, symmetry, threads);
    if (*verify_cmd) return cmd_verify(suite, vo, report);
    if (*render_cmd) return cmd_render(load_input(input, fixture_name), format, out);
    if (*pipe_cmd) return cmd_pipeline(ops, load_input(input, fixture_name), out, trace, pair_names);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::Parse:
      case ErrorKind::ParityViolation:
      case ErrorKind::TriangleInequalityViolation:
      case ErrorKind::ComplexMismatch:
      case ErrorKind::InvalidState:
      case ErrorKind::InvalidEvent:
      case ErrorKind::ArityMismatch:
        return kBadInput;
      default:
        return kFailed;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kOk;
}

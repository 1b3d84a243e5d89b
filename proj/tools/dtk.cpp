// Command-line front end. Exit codes: 0 success / equivalent / true,
// 1 distinguished / false / inconsistent, 2 usage or input error.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <sstream>
#include <type_traits>

#include "dtk/compose.hpp"
#include "dtk/equivalences.hpp"
#include "dtk/linear.hpp"
#include "dtk/logic.hpp"
#include "dtk/text_format.hpp"
#include "dtk/transforms.hpp"

using json = nlohmann::json;
using namespace dtk;

namespace {

constexpr int kVersion = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  bool as_json = false;
  std::string command;

  int emit(const std::string& text, const json& result, int code) const {
    if (as_json) {
      std::cout << nlohmann::json{{"version", kVersion}, {"command", command}, {"result", result}}
                       .dump(2)
                << '\n';
    } else {
      std::cout << text;
    }
    return code;
  }
};

std::string kind_of(const std::string& file, const std::string& given) {
  if (!given.empty()) return given;
  auto dot = file.rfind('.');
  auto ext = dot == std::string::npos ? "" : file.substr(dot + 1);
  if (ext == "ks" || ext == "lts" || ext == "l2ts") return ext;
  throw UsageError("cannot infer --kind from '" + file + "'");
}

EquivVariant variant_of(const std::string& v) {
  if (v == "db") return EquivVariant::DivergenceBlind;
  if (v == "ds") return EquivVariant::DivergenceSensitive;
  if (v == "ed") return EquivVariant::ExplicitDivergence;
  throw UsageError("unknown variant '" + v + "'");
}

std::size_t trace_bound(std::size_t flag) {
  if (flag) return flag;
  if (const char* env = std::getenv("DTK_TRACE_BOUND")) {
    try {
      auto n = std::stoul(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
    throw UsageError("DTK_TRACE_BOUND must be a positive integer");
  }
  return 12;
}

template <class G>
std::vector<std::vector<std::string>> named_blocks(const G& g, const Partition& p) {
  std::vector<std::vector<std::string>> out;
  for (const auto& b : p.blocks()) {
    out.emplace_back();
    for (auto s : b) out.back().push_back(g.name(s));
  }
  return out;
}

std::string join(const std::vector<std::string>& v, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

void write_out(const std::string& file, const std::string& text) {
  if (file.empty() || file == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(file);
  if (!out) throw std::runtime_error("cannot write '" + file + "'");
  out << text;
}

std::string path_text(const KripkeStructure& k, const Path& p) {
  std::vector<std::string> names;
  for (auto s : p.stem) names.push_back(k.name(s));
  if (p.kind == Path::Kind::Lasso) {
    std::vector<std::string> cyc;
    for (auto s : p.cycle) cyc.push_back(k.name(s));
    names.push_back("@cycle(" + join(cyc) + ")");
  }
  return join(names);
}

// ---------------------------------------------------------------------------

struct CheckEquiv {
  std::string model, kind, variant = "ds";
  std::vector<std::string> states;
  bool oracle = false;

  template <class G>
  int run(const Output& out, const G& g) const {
    const auto v = variant_of(variant);
    const auto p = coarsest_partition(g, v);
    json result{{"variant", variant}};
    std::string text;
    int code = 0;
    if (oracle) {
      bool agree = oracle_coarsest_partition(g, v) == p;
      result["oracle_agrees"] = agree;
      if (!agree) code = 1;
      text += agree ? "oracle: agree\n" : "oracle: MISMATCH\n";
    }
    if (states.size() == 2) {
      bool same = p.same_block(g.index_of(states[0]), g.index_of(states[1]));
      result["equivalent"] = same;
      text += same ? "equivalent\n" : "distinguished\n";
      if (!same) code = 1;
    } else {
      auto blocks = named_blocks(g, p);
      result["blocks"] = blocks;
      for (const auto& b : blocks) text += join(b) + '\n';
    }
    return out.emit(text, result, code);
  }

  int operator()(const Output& out) const {
    if (!states.empty() && states.size() != 2) throw UsageError("give --state twice or not at all");
    auto k = kind_of(model, kind);
    auto text = read_file(model);
    if (k == "lts") return run(out, parse_lts(text));
    if (k == "ks") return run(out, parse_ks(text));
    throw UsageError("check-equiv needs --kind lts or ks");
  }
};

struct ModelCheck {
  std::string model, formula, semantics = "max", state;

  int operator()(const Output& out) const {
    auto k = parse_ks(read_file(model));
    Semantics sem;
    if (semantics == "db")
      sem = Semantics::DivergenceBlind;
    else if (semantics == "max")
      sem = Semantics::MaximalPath;
    else
      throw UsageError("unknown semantics '" + semantics + "'");
    auto f = parse_formula(formula);
    if (!state.empty()) {
      bool holds = check(k, state, f, sem);
      return out.emit(holds ? "true\n" : "false\n", json{{"state", state}, {"holds", holds}},
                      holds ? 0 : 1);
    }
    std::vector<std::string> names;
    for (auto s : sat(k, f, sem)) names.push_back(k.name(s));
    std::string text;
    for (const auto& n : names) text += n + '\n';
    return out.emit(text, json{{"sat", names}}, 0);
  }
};

struct Distinguish {
  std::string model, variant = "ds";
  std::vector<std::string> states;
  bool ltl = false, infinity = false;
  std::size_t bound = 0;

  int operator()(const Output& out) const {
    if (states.size() != 2) throw UsageError("distinguish needs --state twice");
    auto k = parse_ks(read_file(model));
    auto s = k.index_of(states[0]), t = k.index_of(states[1]);
    if (!ltl) {
      auto f = distinguish(k, s, t, variant_of(variant));
      if (!f) return out.emit("equivalent\n", json{{"formula", nullptr}}, 1);
      return out.emit(f->to_string() + '\n', json{{"formula", f->to_string()}}, 0);
    }
    auto d = distinguish_ltl(k, s, t, infinity, trace_bound(bound));
    if (!d) return out.emit("equivalent\n", json{{"formula", nullptr}}, 1);
    const auto& holder = d->holds_at_s ? states[0] : states[1];
    auto path = path_text(k, d->counterexample);
    std::string text = d->formula.to_string() + "\nholds-at " + holder + "\ncounterexample " +
                       path + '\n';
    return out.emit(text,
                    json{{"formula", d->formula.to_string()},
                         {"holds_at", holder},
                         {"counterexample", path}},
                    0);
  }
};

struct Transform {
  std::string op, model, output;

  int operator()(const Output& out) const {
    auto text = read_file(model);
    std::string result;
    json extra = json::object();
    if (op == "eta") {
      auto r = eta_midpoint(parse_lts(text));
      result = render_l2ts(r.l2ts);
      extra["dummy"] = r.dummy;
    } else if (op == "ks2l2ts") {
      result = render_l2ts(ks_to_l2ts(parse_ks(text)));
    } else if (op == "dext") {
      auto d = deadlock_extension(parse_ks(text));
      result = render_ks(d.ks);
      extra["sdelta"] = d.ks.name(d.sdelta);
    } else if (op == "total-dl") {
      result = render_ks(totalize_deadlock_selfloops(parse_ks(text)));
    } else if (op == "total-all") {
      result = render_ks(totalize_all_selfloops(parse_ks(text)));
    } else {
      throw UsageError("unknown transform '" + op + "'");
    }
    if (out.as_json) {
      extra["op"] = op;
      if (output.empty() || output == "-")
        extra["model"] = result;
      else
        write_out(output, result);
      return out.emit("", extra, 0);
    }
    write_out(output, result);
    return 0;
  }
};

struct Compose {
  std::string left, right, output;

  static std::pair<Lts, StateId> operand(const std::string& spec) {
    auto colon = spec.rfind(':');
    if (colon == std::string::npos) throw UsageError("expected FILE:STATE, got '" + spec + "'");
    auto l = parse_lts(read_file(spec.substr(0, colon)));
    auto s = l.index_of(spec.substr(colon + 1));
    return {std::move(l), s};
  }

  int operator()(const Output& out) const {
    auto [l, s] = operand(left);
    auto [r, t] = operand(right);
    auto p = merge(l, s, r, t);
    auto root = p.lts.name(p.roots[0]);
    auto text = render_lts(p.lts);
    if (output.empty() || output == "-") {
      if (out.as_json) return out.emit("", json{{"root", root}, {"model", text}}, 0);
      std::cout << text;
      std::cerr << "root " << root << '\n';
      return 0;
    }
    write_out(output, text);
    return out.emit("root " + root + '\n', json{{"root", root}, {"file", output}}, 0);
  }
};

struct Consistency {
  std::string model;

  int operator()(const Output& out) const {
    auto d = parse_l2ts(read_file(model));
    auto r = check_consistency(d);
    const auto& l = d.lts();
    std::string text = r.consistent ? "consistent\n" : "inconsistent\n";
    json violations = json::array();
    for (const auto& v : r.violations) {
      const char* cond = v.condition == ConsistencyViolation::Condition::I    ? "i"
                         : v.condition == ConsistencyViolation::Condition::II ? "ii"
                                                                              : "iii";
      std::vector<std::string> ts;
      for (const auto& t : v.witnesses)
        ts.push_back(l.name(t.src) + " -" + l.action_name(t.action) + "-> " + l.name(t.dst));
      text += std::string("violation (") + cond + "): " + join(ts, ", ") + '\n';
      violations.push_back({{"condition", cond}, {"transitions", ts}});
    }
    return out.emit(text, json{{"consistent", r.consistent}, {"violations", violations}},
                    r.consistent ? 0 : 1);
  }
};

struct Traces {
  std::string model, kind, state, colouring, compare, variant = "lambda";
  std::size_t bound = 0;

  template <class G>
  Colouring colouring_for(const G& g, std::string& name) const {
    if (name.empty()) name = std::is_same_v<G, KripkeStructure> ? "labelling" : "trivial";
    if (name == "trivial") return Colouring::trivial();
    if (name == "labelling") {
      if (!std::is_same_v<G, KripkeStructure>) throw UsageError("an LTS has no labelling");
      return Colouring::labelling();
    }
    return Colouring::of(coarsest_partition(g, variant_of(name)));
  }

  // Names for colours: label sets under the labelling, block numbers otherwise.
  template <class G>
  std::vector<std::string> colour_names(const G& g, const std::string& name) const {
    if (name == "trivial") return {};
    std::vector<std::string> out;
    if constexpr (std::is_same_v<G, KripkeStructure>) {
      if (name == "labelling") {
        std::map<Label, std::size_t> seen;
        for (StateId s = 0; s < g.size(); ++s)
          if (seen.emplace(g.label(s), seen.size()).second)
            out.push_back("{" + join(g.label(s), ",") + "}");
        return out;
      }
    }
    auto p = coarsest_partition(g, variant_of(name));
    for (std::size_t b = 0; b < p.num_blocks(); ++b) out.push_back("B" + std::to_string(b));
    return out;
  }

  template <class G>
  int run(const Output& out, const G& g) const {
    auto cname = colouring;
    auto c = colouring_for(g, cname);
    auto names = colour_names(g, cname);
    const bool actions = !std::is_same_v<G, KripkeStructure>;
    const auto n = trace_bound(bound);
    auto s = g.index_of(state);
    if (!compare.empty()) {
      TraceVariant v;
      if (variant == "lambda")
        v = TraceVariant::Lambda;
      else if (variant == "delta-lambda")
        v = TraceVariant::DeltaLambda;
      else if (variant == "delta-delta")
        v = TraceVariant::DeltaDelta;
      else
        throw UsageError("unknown trace variant '" + variant + "'");
      auto r = trace_equiv(g, s, g.index_of(compare), v, n, c);
      switch (r.kind) {
        case TraceVerdict::Kind::EqualExact:
          return out.emit("equal\n", json{{"verdict", "equal"}, {"exact", true}}, 0);
        case TraceVerdict::Kind::EqualUpToBound:
          return out.emit("equal up to bound " + std::to_string(n) + "\n",
                          json{{"verdict", "equal"}, {"exact", false}, {"bound", n}}, 0);
        case TraceVerdict::Kind::Distinguished: {
          auto w = render_trace(*r.witness, names, actions);
          const auto& from = r.witness_from_s ? state : compare;
          return out.emit("distinguished\nwitness " + from + ": " + w + "\n",
                          json{{"verdict", "distinguished"}, {"witness", w}, {"from", from}}, 1);
        }
      }
    }
    auto set = complete_traces(g, s, c, n);
    std::vector<std::string> lines;
    for (const auto& t : set.traces) lines.push_back(render_trace(t, names, actions));
    std::string text;
    for (const auto& l : lines) text += l + '\n';
    return out.emit(text, json{{"traces", lines}, {"exhausted", set.exhausted}, {"bound", n}}, 0);
  }

  int operator()(const Output& out) const {
    auto k = kind_of(model, kind);
    auto text = read_file(model);
    if (k == "lts") return run(out, parse_lts(text));
    if (k == "ks") return run(out, parse_ks(text));
    throw UsageError("traces needs --kind lts or ks");
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivalence checking, model checking and transformations for small transition systems"};
  app.require_subcommand(1);
  bool json_out = false;
  app.add_flag("--json", json_out, "Print a JSON envelope instead of text");

  std::function<int(const Output&)> action;

  CheckEquiv ce;
  auto* c1 = app.add_subcommand("check-equiv", "Coarsest partition, or compare two states");
  c1->add_option("--model", ce.model, "Model file")->required();
  c1->add_option("--kind", ce.kind, "lts or ks (default: from the extension)")
      ->check(CLI::IsMember({"lts", "ks"}));
  c1->add_option("--variant", ce.variant, "db, ds or ed")->check(CLI::IsMember({"db", "ds", "ed"}));
  c1->add_option("--state", ce.states, "State to compare (give twice)");
  c1->add_flag("--oracle", ce.oracle, "Cross-check against brute force");
  c1->callback([&] { action = ce; });

  ModelCheck mc;
  auto* c2 = app.add_subcommand("model-check", "Satisfaction set or truth at a state");
  c2->add_option("--model", mc.model, "Kripke structure file")->required();
  c2->add_option("--formula", mc.formula, "State formula")->required();
  c2->add_option("--semantics", mc.semantics, "db or max")->check(CLI::IsMember({"db", "max"}));
  c2->add_option("--state", mc.state, "Only report this state (exit 0 if true, 1 if false)");
  c2->callback([&] { action = mc; });

  Distinguish di;
  auto* c3 = app.add_subcommand("distinguish", "Formula separating two states");
  c3->add_option("--model", di.model, "Kripke structure file")->required();
  c3->add_option("--state", di.states, "The two states")->required();
  c3->add_option("--variant", di.variant, "db, ds or ed")->check(CLI::IsMember({"db", "ds", "ed"}));
  c3->add_flag("--ltl", di.ltl, "Separate by a path formula over complete traces");
  c3->add_flag("--infinity", di.infinity, "With --ltl: also tell deadlock from divergence");
  c3->add_option("--bound", di.bound, "Trace bound (default DTK_TRACE_BOUND or 12)");
  c3->callback([&] { action = di; });

  Transform tr;
  auto* c4 = app.add_subcommand("transform", "Structure transformations");
  c4->add_option("--op", tr.op, "eta, ks2l2ts, dext, total-dl or total-all")
      ->required()
      ->check(CLI::IsMember({"eta", "ks2l2ts", "dext", "total-dl", "total-all"}));
  c4->add_option("--model", tr.model, "Input file")->required();
  c4->add_option("-o,--output", tr.output, "Output file (default stdout)");
  c4->callback([&] { action = tr; });

  Compose co;
  auto* c5 = app.add_subcommand("compose", "Interleaving product of two LTS states");
  c5->add_option("--left", co.left, "FILE:STATE")->required();
  c5->add_option("--right", co.right, "FILE:STATE")->required();
  c5->add_option("-o,--output", co.output, "Output file (default stdout)");
  c5->callback([&] { action = co; });

  Consistency cs;
  auto* c6 = app.add_subcommand("consistency", "Check an L2TS for consistency");
  c6->add_option("--model", cs.model, "L2TS file")->required();
  c6->callback([&] { action = cs; });

  Traces ts;
  auto* c7 = app.add_subcommand("traces", "Complete coloured traces, or compare two states");
  c7->add_option("--model", ts.model, "Model file")->required();
  c7->add_option("--kind", ts.kind, "lts or ks (default: from the extension)")
      ->check(CLI::IsMember({"lts", "ks"}));
  c7->add_option("--state", ts.state, "Start state")->required();
  c7->add_option("--colouring", ts.colouring, "trivial, labelling, db, ds or ed")
      ->check(CLI::IsMember({"trivial", "labelling", "db", "ds", "ed"}));
  c7->add_option("--compare", ts.compare, "Second state: decide trace equivalence");
  c7->add_option("--variant", ts.variant, "lambda, delta-lambda or delta-delta")
      ->check(CLI::IsMember({"lambda", "delta-lambda", "delta-delta"}));
  c7->add_option("--bound", ts.bound, "Trace bound (default DTK_TRACE_BOUND or 12)");
  c7->callback([&] { action = ts; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Output out{json_out, app.get_subcommands().front()->get_name()};
  try {
    return action(out);
  } catch (const ParseError& e) {
    std::cerr << "error: parse: " << e.what() << '\n';
  } catch (const FormulaError& e) {
    std::cerr << "error: formula: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return 2;
}

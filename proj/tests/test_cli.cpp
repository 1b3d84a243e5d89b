#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "dtk/equivalences.hpp"
#include "dtk/logic.hpp"
#include "dtk/random.hpp"
#include "dtk/text_format.hpp"
#include "dtk/transforms.hpp"
#include "support/fixtures.hpp"
#include "support/run.hpp"

using namespace dtk;
using cli::quote;
using cli::run;

namespace {
std::string data(const char* f) { return quote(fixtures::path(f)); }

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }
}  // namespace

TEST_CASE("check-equiv prints blocks") {
  auto r = run("check-equiv --model " + data("branching.lts") + " --variant ed");
  CHECK(r.code == 0);
  CHECK(lines(r.out) == std::vector<std::string>{"s", "t", "u", "v", "x y", "z"});
  auto two = run("check-equiv --model " + data("branching.lts") +
                 " --variant ds --state u --state v");
  CHECK(two.code == 0);
  CHECK(two.out == "equivalent\n");
  auto split = run("check-equiv --model " + data("branching.lts") +
                   " --variant ds --state t --state u");
  CHECK(split.code == 1);
  CHECK(split.out == "distinguished\n");
}

TEST_CASE("check-equiv on a one-state model") {
  cli::TempDir tmp;
  write(tmp.file("one.lts"), "state only\n");
  auto r = run("check-equiv --model " + quote(tmp.file("one.lts")) + " --variant db");
  CHECK(r.code == 0);
  CHECK(r.out == "only\n");
}

TEST_CASE("check-equiv oracle on generated files") {
  cli::TempDir tmp;
  Rng rng(71);
  const char* variants[] = {"db", "ds", "ed"};
  for (int i = 0; i < 50; ++i) {
    std::string file;
    if (i % 2) {
      file = tmp.file("m" + std::to_string(i) + ".lts");
      write(file, render_lts(random_lts(rng, 6, 2)));
    } else {
      file = tmp.file("m" + std::to_string(i) + ".ks");
      write(file, render_ks(random_ks(rng, 6, 2)));
    }
    auto r = run("check-equiv --oracle --model " + quote(file) + " --variant " + variants[i % 3]);
    CHECK(r.code == 0);
    CHECK(r.out.rfind("oracle: agree\n", 0) == 0);
  }
}

TEST_CASE("model-check") {
  auto yes = run("model-check --model " + data("stutter.ks") +
                 " --formula 'EG p' --state t --semantics max");
  CHECK(yes.code == 0);
  auto no = run("model-check --model " + data("stutter.ks") +
                " --formula 'EG p' --state u --semantics max");
  CHECK(no.code == 1);
  auto all = run("model-check --model " + data("stutter.ks") + " --formula true");
  CHECK(lines(all.out) == std::vector<std::string>{"s", "t", "u", "x", "y"});
  CHECK(run("model-check --model " + data("stutter.ks") + " --formula 'E (p U'").code == 2);
  CHECK(run("model-check --model " + data("stutter.ks") + " --formula delta").code == 2);
  CHECK(run("model-check --model /nonexistent.ks --formula true").code == 2);
}

TEST_CASE("model-check agrees with the library") {
  cli::TempDir tmp;
  Rng rng(72);
  auto props = prop_names(2);
  for (int i = 0; i < 20; ++i) {
    auto k = random_ks(rng, 5, 2);
    auto f = random_formula(rng, props, 3);
    auto file = tmp.file("k.ks");
    write(file, render_ks(k));
    for (auto sem : {Semantics::DivergenceBlind, Semantics::MaximalPath}) {
      std::vector<std::string> want;
      for (auto s : sat(k, f, sem)) want.push_back(k.name(s));
      auto r = run("model-check --model " + quote(file) + " --formula " + quote(f.to_string()) +
                   " --semantics " + (sem == Semantics::MaximalPath ? "max" : "db"));
      CHECK(r.code == 0);
      CHECK(lines(r.out) == want);
    }
  }
}

TEST_CASE("distinguish output feeds model-check") {
  auto d = run("distinguish --model " + data("stutter.ks") + " --state t --state u --variant ds");
  REQUIRE(d.code == 0);
  auto f = lines(d.out).at(0);
  CHECK(run("model-check --model " + data("stutter.ks") + " --formula " + quote(f) +
            " --state t").code == 0);
  CHECK(run("model-check --model " + data("stutter.ks") + " --formula " + quote(f) +
            " --state u").code == 1);
  auto same = run("distinguish --model " + data("stutter.ks") + " --state t --state u --variant db");
  CHECK(same.code == 1);
  CHECK(same.out == "equivalent\n");
  auto ltl = run("distinguish --ltl --model " + data("stutter.ks") + " --state t --state u");
  CHECK(ltl.code == 0);
  CHECK(lines(ltl.out).size() == 3);
  CHECK_NOTHROW(parse_path_formula(lines(ltl.out).at(0)));
}

TEST_CASE("transform outputs parse") {
  cli::TempDir tmp;
  auto dext = run("transform --op dext --model " + data("dext_input.ks"));
  CHECK(dext.code == 0);
  CHECK(parse_ks(dext.out) == fixtures::ks("dext_expected.ks"));
  auto eta = run("transform --op eta --model " + data("deadlock_livelock.lts"));
  CHECK(eta.code == 0);
  CHECK(parse_l2ts(eta.out) == eta_midpoint(fixtures::lts("deadlock_livelock.lts")).l2ts);
  auto l2 = run("transform --op ks2l2ts --model " + data("stutter.ks"));
  CHECK(associated_ks(parse_l2ts(l2.out)) == fixtures::ks("stutter.ks"));
  auto out = tmp.file("t.ks");
  CHECK(run("transform --op total-dl --model " + data("stutter.ks") + " -o " + quote(out)).code == 0);
  CHECK(parse_ks(read_file(out)) == totalize_deadlock_selfloops(fixtures::ks("stutter.ks")));
  auto all = run("transform --op total-all --model " + data("stutter.ks"));
  CHECK(parse_ks(all.out) == totalize_all_selfloops(fixtures::ks("stutter.ks")));
  CHECK(run("transform --op nope --model " + data("stutter.ks")).code == 2);
  CHECK(run("transform --op dext --model " + data("dext_expected.ks")).code == 2);
}

TEST_CASE("compose writes the product") {
  cli::TempDir tmp;
  auto out = tmp.file("p.lts");
  auto f = fixtures::path("deadlock_livelock.lts");
  auto r = run("compose --left " + quote(f + ":D0") + " --right " + quote(f + ":a") + " -o " +
               quote(out));
  CHECK(r.code == 0);
  CHECK(r.out == "root D0|a\n");
  auto p = parse_lts(read_file(out));
  CHECK(p.size() == 2);
  CHECK(run("compose --left " + quote(f + ":nope") + " --right " + quote(f + ":a")).code == 2);
  CHECK(run("compose --left " + quote(f) + " --right " + quote(f + ":a")).code == 2);
}

TEST_CASE("consistency verdicts") {
  CHECK(run("consistency --model " + data("consistent.l2ts")).out == "consistent\n");
  CHECK(run("consistency --model " + data("consistent.l2ts")).code == 0);
  auto bad = run("consistency --model " + data("inconsistent_selfloop.l2ts"));
  CHECK(bad.code == 1);
  CHECK(lines(bad.out).at(0) == "inconsistent");
  CHECK(lines(bad.out).at(1).rfind("violation (i):", 0) == 0);
}

TEST_CASE("traces") {
  cli::TempDir tmp;
  auto out = tmp.file("p.lts");
  auto f = fixtures::path("deadlock_livelock.lts");
  run("compose --left " + quote(f + ":D0") + " --right " + quote(f + ":a") + " -o " + quote(out));
  auto r = run("traces --model " + quote(out) + " --state 'D0|a'");
  CHECK(r.code == 0);
  CHECK(lines(r.out) == std::vector<std::string>{"~", "a ~"});
  auto eq = run("traces --model " + data("deadlock_livelock.lts") + " --state 0 --compare D0");
  CHECK(eq.code == 0);
  CHECK(eq.out == "equal\n");
  auto dd = run("traces --model " + data("deadlock_livelock.lts") +
                " --state 0 --compare D0 --variant delta-delta");
  CHECK(dd.code == 1);
  auto ks = run("traces --model " + data("stutter.ks") + " --state u");
  CHECK(lines(ks.out) == std::vector<std::string>{"{p} {q} ~"});
  auto cut = run("traces --model " + data("stutter.ks") + " --state s", "DTK_TRACE_BOUND=0");
  CHECK(cut.code == 2);
}

TEST_CASE("json envelope") {
  auto r = run("--json check-equiv --model " + data("stutter.ks") + " --variant db");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["version"] == 1);
  CHECK(j["command"] == "check-equiv");
  CHECK(j["result"]["blocks"].size() == 2);
}

TEST_CASE("usage errors") {
  CHECK(run("").code == 2);
  CHECK(run("check-equiv").code == 2);
  CHECK(run("check-equiv --model " + data("stutter.ks") + " --variant xx").code == 2);
  CHECK(run("check-equiv --model " + data("stutter.ks") + " --state s").code == 2);
}

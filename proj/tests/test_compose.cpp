#include <doctest.h>

#include <map>

#include "dtk/compose.hpp"
#include "dtk/linear.hpp"
#include "dtk/random.hpp"
#include "support/fixtures.hpp"

using namespace dtk;

namespace {
std::set<std::tuple<std::string, std::string, std::string>> named(const Lts& l) {
  std::set<std::tuple<std::string, std::string, std::string>> out;
  for (const auto& t : l.transitions())
    out.emplace(l.name(t.src), l.action_name(t.action), l.name(t.dst));
  return out;
}

std::size_t reach(const Lts& l, StateId s) {
  std::vector<bool> seen(l.size(), false);
  std::vector<StateId> todo{s};
  seen[s] = true;
  std::size_t n = 0;
  while (!todo.empty()) {
    auto x = todo.back();
    todo.pop_back();
    ++n;
    for (const auto& t : l.out(x))
      if (!seen[t.dst]) {
        seen[t.dst] = true;
        todo.push_back(t.dst);
      }
  }
  return n;
}

// Rebuilds the product from its state names and checks both directions of
// the interleaving definition.
void check_interleaving(const Lts& left, const Lts& right, const Product& p) {
  std::map<std::string, std::pair<StateId, StateId>> pair_of;
  std::map<std::pair<StateId, StateId>, StateId> id_of;
  for (StateId x = 0; x < p.lts.size(); ++x) {
    auto name = p.lts.name(x);
    // Suffixes only appear on clashes, which random systems do not produce.
    auto bar = name.find('|');
    REQUIRE(bar != std::string::npos);
    auto pr = std::make_pair(left.index_of(name.substr(0, bar)),
                             right.index_of(name.substr(bar + 1)));
    pair_of[name] = pr;
    id_of[pr] = x;
  }
  std::set<std::tuple<StateId, std::string, StateId>> want;
  for (const auto& [pr, x] : id_of) {
    for (const auto& t : left.out(pr.first)) {
      REQUIRE(id_of.count({t.dst, pr.second}));
      want.emplace(x, left.action_name(t.action), id_of[{t.dst, pr.second}]);
    }
    for (const auto& t : right.out(pr.second)) {
      REQUIRE(id_of.count({pr.first, t.dst}));
      want.emplace(x, right.action_name(t.action), id_of[{pr.first, t.dst}]);
    }
  }
  std::set<std::tuple<StateId, std::string, StateId>> got;
  for (const auto& t : p.lts.transitions()) got.emplace(t.src, p.lts.action_name(t.action), t.dst);
  CHECK(got == want);
}
}  // namespace

TEST_CASE("merging the deadlock/livelock fixture") {
  auto l = fixtures::lts("deadlock_livelock.lts");
  auto zero = merge(l, "0", l, "a");
  CHECK(zero.lts.size() == 2);
  CHECK(named(zero.lts) ==
        std::set<std::tuple<std::string, std::string, std::string>>{{"0|a", "a", "0|x"}});
  CHECK(zero.lts.name(zero.roots[0]) == "0|a");
  auto live = merge(l, "D0", l, "a");
  CHECK(named(live.lts) == std::set<std::tuple<std::string, std::string, std::string>>{
                               {"D0|a", "tau", "D0|a"}, {"D0|a", "a", "D0|x"}, {"D0|x", "tau", "D0|x"}});
  CHECK_THROWS(merge(l, "nope", l, "a"));
}

TEST_CASE("a transitionless partner changes nothing") {
  Rng rng(51);
  Lts idle({"d"}, {});
  for (int i = 0; i < 50; ++i) {
    auto l = random_lts(rng, 6, 2);
    auto p = merge(l, 0, idle, 0);
    CHECK(p.lts.size() == reach(l, 0));
    std::size_t from_root = 0;
    for (const auto& t : l.transitions())
      from_root += p.lts.states().find(l.name(t.src) + "|d").has_value();
    CHECK(p.lts.transitions().size() == from_root);
  }
}

TEST_CASE("name clashes get suffixes") {
  Lts left({"a|b", "a"}, {{0, "x", 1}});
  Lts right({"c", "b|c"}, {{0, "y", 1}});
  auto p = merge_many(left, right, {{0, 0}, {1, 1}});
  std::set<std::string> names(p.lts.states().names().begin(), p.lts.states().names().end());
  CHECK(names.count("a|b|c"));
  CHECK(names.count("a|b|c.1"));
}

TEST_CASE("merge respects its definition and size bound") {
  Rng rng(52);
  for (int i = 0; i < 100; ++i) {
    auto l = random_lts(rng, 5, 2);
    auto r = random_lts(rng, 5, 2);
    auto p = merge(l, 0, r, 0);
    CHECK(p.lts.size() <= reach(l, 0) * reach(r, 0));
    check_interleaving(l, r, p);
  }
}

TEST_CASE("the divergence-sensitive counterexample") {
  auto r = congruence_counterexample();
  CHECK(r.deadlock_ds_livelock);
  CHECK_FALSE(r.merged_ds);
  CHECK(r.merged_db);
  CHECK_FALSE(r.deadlock_ed_livelock);
  CHECK(r.as_expected());
  auto l = deadlock_livelock_lts();
  CHECK(l == fixtures::lts("deadlock_livelock.lts"));
  auto p = merge_many(l, l, {{l.index_of("D0"), l.index_of("a")}, {l.index_of("0"), l.index_of("a")}});
  auto ds = coarsest_partition(p.lts, EquivVariant::DivergenceSensitive);
  CHECK_FALSE(ds.same_block(p.roots[0], p.roots[1]));
  CHECK(equivalent(l, "D0", "0", EquivVariant::DivergenceSensitive));
  // The livelocked product can stay silent forever in its first state.
  auto traces = complete_traces(p.lts, p.roots[0], Colouring::trivial(), 3);
  CHECK(traces.traces.count({0, {}, ColouredTrace::End::Divergence, {}}));
  auto other = complete_traces(p.lts, p.roots[1], Colouring::trivial(), 3);
  CHECK_FALSE(other.traces.count({0, {}, ColouredTrace::End::Divergence, {}}));
}

TEST_CASE("congruence sampling") {
  for (auto v : {EquivVariant::ExplicitDivergence, EquivVariant::DivergenceBlind}) {
    auto r = congruence_sample(v, 200, 5, 1000);
    CHECK(r.trials == 200);
    CHECK(r.failures == 0);
    CHECK(r.nontrivial > 50);
  }
}

TEST_CASE("fresh actions") {
  Lts l({"a"}, {{0, "fresh_0", 0}});
  CHECK(fresh_action({&l}) == "fresh_1");
  auto ctx = fresh_context("fresh_1");
  CHECK(ctx.size() == 2);
  CHECK(ctx.transitions().size() == 1);
}

TEST_CASE("coarsest congruence probe") {
  auto l = deadlock_livelock_lts();
  auto r = coarsest_congruence_probe(l, l.index_of("0"), l.index_of("D0"), {{l, l.index_of("a")}});
  CHECK_FALSE(r.explicit_divergence);
  CHECK_FALSE(r.fresh_context_ds);
  CHECK_FALSE(r.contexts_ds[0]);
  CHECK(r.consistent());
  auto same = coarsest_congruence_probe(l, 2, 2, {{l, 0}, {l, 1}});
  CHECK(same.explicit_divergence);
  CHECK(same.fresh_context_ds);
  CHECK(same.contexts_ds == std::vector<bool>{true, true});

  Rng rng(53);
  for (int i = 0; i < 100; ++i) {
    auto g = random_lts(rng, 5, 2);
    std::uniform_int_distribution<StateId> pick(0, static_cast<StateId>(g.size() - 1));
    auto s = pick(rng), t = pick(rng);
    auto ctx = random_lts(rng, 3, 2);
    auto p = coarsest_congruence_probe(g, s, t, {{ctx, 0}});
    CHECK(p.explicit_divergence == p.fresh_context_ds);
    CHECK(p.consistent());
  }
}

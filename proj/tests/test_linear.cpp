#include <doctest.h>

#include "dtk/compose.hpp"
#include "dtk/linear.hpp"
#include "dtk/logic.hpp"
#include "dtk/random.hpp"
#include "dtk/transforms.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace dtk;
using End = ColouredTrace::End;
using Kind = TraceVerdict::Kind;
using namespace gen;

TEST_CASE("complete traces of the livelocked product") {
  auto l = deadlock_livelock_lts();
  auto live = merge(l, "D0", l, "a");
  auto t = complete_traces(live.lts, live.roots[0], Colouring::trivial(), 3);
  CHECK(t.exhausted);
  CHECK(t.traces == std::set<ColouredTrace>{word({}, End::Divergence), word({"a"}, End::Divergence)});
  auto dead = merge(l, "0", l, "a");
  auto u = complete_traces(dead.lts, dead.roots[0], Colouring::trivial(), 3);
  CHECK(u.exhausted);
  CHECK(u.traces == std::set<ColouredTrace>{word({"a"}, End::Deadlock)});
  CHECK(t.traces != u.traces);
  CHECK(complete_traces(l, l.index_of("0"), Colouring::trivial(), 3).traces ==
        std::set<ColouredTrace>{word({}, End::Deadlock)});
}

TEST_CASE("complete traces of the deadlocked product interleave") {
  auto l = deadlock_livelock_lts();
  auto p = merge(l, "0", l, "a");
  auto lhs = complete_traces(p.lts, p.roots[0], Colouring::trivial(), 4).traces;
  auto rhs = interleave_trace_sets(complete_traces(l, l.index_of("0"), Colouring::trivial(), 4).traces,
                                   complete_traces(l, l.index_of("a"), Colouring::trivial(), 4).traces);
  CHECK(lhs == rhs);
}

TEST_CASE("lassos are canonical") {
  Lts l({"x", "y"}, {{0, "a", 1}, {1, "a", 0}});
  auto t = complete_traces(l, 0, Colouring::trivial(), 10);
  CHECK(t.exhausted);
  REQUIRE(t.traces.size() == 1);
  const auto& tr = *t.traces.begin();
  CHECK(tr.end == End::InfiniteLasso);
  CHECK(tr.steps.empty());
  CHECK(tr.cycle.size() == 1);
  CHECK(render_trace(tr, {}, true) == "@cycle(a)");
}

TEST_CASE("cycles with exits are not cut short") {
  Lts l({"x", "y", "d"}, {{0, "a", 1}, {1, "b", 0}, {0, "c", 2}});
  auto t = complete_traces(l, 0, Colouring::trivial(), 4);
  CHECK_FALSE(t.exhausted);
  CHECK(t.traces.count(word({"a", "b", "c"}, End::Deadlock)));
}

TEST_CASE("trace equivalence on the deadlock/livelock fixture") {
  auto l = fixtures::lts("deadlock_livelock.lts");
  auto zero = l.index_of("0"), live = l.index_of("D0");
  CHECK(trace_equiv(l, zero, live, TraceVariant::Lambda, 12).kind == Kind::EqualExact);
  auto dd = trace_equiv(l, zero, live, TraceVariant::DeltaDelta, 12);
  REQUIRE(dd.kind == Kind::Distinguished);
  REQUIRE(dd.witness);
  CHECK(dd.witness->steps.empty());
  CHECK((dd.witness->end == End::Deadlock) == dd.witness_from_s);
  CHECK(trace_equiv(l, zero, live, TraceVariant::DeltaLambda, 12).kind == Kind::Distinguished);
  for (auto v : {TraceVariant::Lambda, TraceVariant::DeltaLambda, TraceVariant::DeltaDelta})
    for (StateId s = 0; s < l.size(); ++s) CHECK(trace_equiv(l, s, s, v, 12).kind != Kind::Distinguished);
}

TEST_CASE("deadlocked state") {
  Lts l({"d"}, {});
  auto t = complete_traces(l, 0, Colouring::trivial(), 1);
  CHECK(t.exhausted);
  CHECK(t.traces == std::set<ColouredTrace>{word({}, End::Deadlock)});
  CHECK(render_trace(*t.traces.begin(), {}, true) == ".");
}

TEST_CASE("interleaving examples") {
  auto ab = interleave_trace_sets({word({"a"}, End::Finite)}, {word({"b"}, End::Finite)});
  CHECK(ab == std::set<ColouredTrace>{word({"a", "b"}, End::Finite), word({"b", "a"}, End::Finite)});
  auto div = interleave_trace_sets({word({}, End::Divergence)}, {word({"a"}, End::Finite)});
  CHECK(div == std::set<ColouredTrace>{word({"a"}, End::Divergence)});
  auto dd = interleave_trace_sets({word({}, End::Deadlock)}, {word({"a"}, End::Deadlock)});
  CHECK(dd == std::set<ColouredTrace>{word({"a"}, End::Deadlock)});
}

TEST_CASE("trace equations for interleaving") {
  Rng rng(61);
  const std::size_t bound = 16;
  for (int i = 0; i < 80; ++i) {
    auto l1 = visible_acyclic_lts(rng, 5);
    auto l2 = visible_acyclic_lts(rng, 5);
    StateId s = 0, t = 0;
    auto p = merge(l1, s, l2, t);
    auto a = finite_trace_set(l1, s, bound);
    auto b = finite_trace_set(l2, t, bound);
    auto c = finite_trace_set(p.lts, p.roots[0], bound);
    REQUIRE(a.exhausted);
    REQUIRE(b.exhausted);
    REQUIRE(c.exhausted);
    auto star = [](const TraceSet& x) { return only(x.traces, End::Finite); };
    auto delta = [](const TraceSet& x) { return only(x.traces, End::Divergence); };
    auto dead = [](const TraceSet& x) { return only(x.traces, End::Deadlock); };

    CHECK(star(c) == interleave_trace_sets(star(a), star(b)));
    auto div = interleave_trace_sets(delta(a), star(b));
    auto div2 = interleave_trace_sets(star(a), delta(b));
    div.insert(div2.begin(), div2.end());
    CHECK(delta(c) == div);
    CHECK(dead(c) == interleave_trace_sets(dead(a), dead(b)));
    auto lambda = words(delta(c));
    auto both = words(interleave_trace_sets(complete(a.traces), complete(b.traces)));
    lambda.insert(both.begin(), both.end());
    CHECK(words(complete(c.traces)) == lambda);
    CHECK_FALSE(has_infinite_trace(p.lts, p.roots[0]));
  }
}

TEST_CASE("infinite traces of a merge") {
  Rng rng(62);
  for (int i = 0; i < 100; ++i) {
    auto l1 = random_lts(rng, 4, 2);
    auto l2 = random_lts(rng, 4, 2);
    auto p = merge(l1, 0, l2, 0);
    CHECK(has_infinite_trace(p.lts, p.roots[0]) ==
          (has_infinite_trace(l1, 0) || has_infinite_trace(l2, 0)));
  }
}

TEST_CASE("bisimilar states are trace equivalent") {
  Rng rng(63);
  for (int i = 0; i < 100; ++i) {
    auto l = random_lts(rng, 6, 2);
    auto ed = coarsest_partition(l, EquivVariant::ExplicitDivergence);
    auto ds = coarsest_partition(l, EquivVariant::DivergenceSensitive);
    for (StateId s = 0; s < l.size(); ++s)
      for (StateId t = s + 1; t < l.size(); ++t) {
        if (ed.same_block(s, t)) {
          CHECK(trace_equiv(l, s, t, TraceVariant::DeltaDelta, 8).kind != Kind::Distinguished);
          CHECK(trace_equiv(l, s, t, TraceVariant::DeltaLambda, 8).kind != Kind::Distinguished);
        }
        if (ds.same_block(s, t))
          CHECK(trace_equiv(l, s, t, TraceVariant::Lambda, 8).kind != Kind::Distinguished);
      }
  }
}

TEST_CASE("explicit-divergence trace equivalence survives merging") {
  Rng rng(64);
  std::size_t tried = 0;
  for (int i = 0; i < 150; ++i) {
    auto l1 = random_lts(rng, 5, 2);
    auto l2 = random_lts(rng, 3, 2);
    for (StateId s = 0; s < l1.size(); ++s)
      for (StateId s2 = s + 1; s2 < l1.size(); ++s2) {
        if (trace_equiv(l1, s, s2, TraceVariant::DeltaLambda, 8).kind != Kind::EqualExact) continue;
        ++tried;
        auto p = merge_many(l1, l2, {{s, 0}, {s2, 0}});
        CHECK(trace_equiv(p.lts, p.roots[0], p.roots[1], TraceVariant::DeltaLambda, 8).kind !=
              Kind::Distinguished);
      }
  }
  CHECK(tried > 20);
}

TEST_CASE("label traces agree across a consistent l2ts") {
  Rng rng(65);
  for (int i = 0; i < 100; ++i) {
    auto k = random_ks(rng, 5, 2);
    auto l = associated_lts(ks_to_l2ts(k));
    for (StateId s = 0; s < k.size(); ++s)
      for (StateId t = s + 1; t < k.size(); ++t) {
        if (k.label(s) != k.label(t)) continue;
        auto a = trace_equiv(k, s, t, TraceVariant::Lambda, 10);
        auto b = trace_equiv(l, s, t, TraceVariant::Lambda, 10);
        if (a.kind == Kind::EqualUpToBound || b.kind == Kind::EqualUpToBound) continue;
        CHECK(a.kind == b.kind);
      }
  }
}

TEST_CASE("path formula evaluation basics") {
  auto c = chain({{"p"}, {"p"}, {"q"}}, {});
  CHECK(eval_path_formula(parse_path_formula("p U q"), c.k, c.path));
  CHECK_FALSE(eval_path_formula(PathFormula::infinity(), c.k, c.path));
  auto lasso = chain({{"p"}}, {{"q"}});
  CHECK(eval_path_formula(PathFormula::infinity(), lasso.k, lasso.path));
  Path partial{Path::Kind::Finite, {0, 1}, {}};
  CHECK_THROWS_AS(eval_path_formula(PathFormula::top(), c.k, partial), ModelError);
}

TEST_CASE("path formulas are stuttering invariant") {
  Rng rng(66);
  auto props = prop_names(2);
  std::uniform_int_distribution<int> len(1, 4), cyc(0, 3);
  std::bernoulli_distribution coin(0.5);
  auto random_label = [&] {
    Label l;
    for (const auto& p : props)
      if (coin(rng)) l.push_back(p);
    return l;
  };
  for (int i = 0; i < 500; ++i) {
    std::vector<Label> stem, cycle;
    for (int j = len(rng); j > 0; --j) stem.push_back(random_label());
    for (int j = cyc(rng); j > 0; --j) cycle.push_back(random_label());
    auto f = random_path_formula(rng, props, 4);
    auto at = std::uniform_int_distribution<std::size_t>(0, stem.size() - 1)(rng);
    auto longer = stem;
    longer.insert(longer.begin() + static_cast<long>(at), stem[at]);
    auto a = chain(stem, cycle), b = chain(longer, cycle);
    CHECK(eval_path_formula(f, a.k, a.path) == eval_path_formula(f, b.k, b.path));
  }
}

TEST_CASE("linear distinguishing formulas on fixtures") {
  KripkeStructure dl({"d", "l"}, {{}, {}}, {{1, 1}});
  auto f = distinguish_ltl(dl, 0, 1, true, 12);
  REQUIRE(f);
  CHECK(f->formula.uses_infinity());
  CHECK_FALSE(distinguish_ltl(dl, 0, 1, false, 12));
  CHECK_FALSE(distinguish_ltl(dl, 0, 0, true, 12));

  auto k = fixtures::ks("stutter.ks");
  auto g = distinguish_ltl(k, k.index_of("t"), k.index_of("u"), false, 4);
  REQUIRE(g);
  CHECK_FALSE(eval_path_formula(g->formula, k, g->counterexample));
  auto holder = g->holds_at_s ? k.index_of("t") : k.index_of("u");
  for (const auto& p : maximal_path_representatives(k, holder, 100))
    CHECK(eval_path_formula(g->formula, k, p));
}

TEST_CASE("linear distinguishing formulas are validated on paths") {
  Rng rng(67);
  std::size_t found = 0;
  for (int i = 0; i < 150; ++i) {
    auto k = random_ks(rng, 5, 2);
    for (StateId s = 0; s < k.size(); ++s)
      for (StateId t = 0; t < k.size(); ++t)
        for (bool inf : {false, true}) {
          auto d = distinguish_ltl(k, s, t, inf, 10);
          if (!d) continue;
          ++found;
          auto holder = d->holds_at_s ? s : t;
          auto other = d->holds_at_s ? t : s;
          REQUIRE(!d->counterexample.stem.empty());
          CHECK(d->counterexample.stem.front() == other);
          CHECK_FALSE(eval_path_formula(d->formula, k, d->counterexample));
          for (const auto& p : maximal_path_representatives(k, holder, 200))
            CHECK(eval_path_formula(d->formula, k, p));
          if (!inf) CHECK_FALSE(d->formula.uses_infinity());
        }
  }
  CHECK(found > 100);
}

TEST_CASE("rendering") {
  ColouredTrace t{0, {{"a", 1}, {"b", 0}}, End::Divergence, {}};
  CHECK(render_trace(t, {}, true) == "a b ~");
  CHECK(render_trace(t, {"{p}", "{q}"}, false) == "{p} {q} {p} ~");
  ColouredTrace open{0, {{"a", 0}}, End::Open, {}};
  CHECK(render_trace(open, {}, true) == "a ?");
}

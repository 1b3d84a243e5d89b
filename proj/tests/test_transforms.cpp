#include <doctest.h>

#include "dtk/equivalences.hpp"
#include "dtk/logic.hpp"
#include "dtk/random.hpp"
#include "dtk/transforms.hpp"
#include "support/fixtures.hpp"

using namespace dtk;
using F = StateFormula;

namespace {
constexpr EquivVariant kAll[] = {EquivVariant::DivergenceBlind, EquivVariant::DivergenceSensitive,
                                 EquivVariant::ExplicitDivergence};

std::size_t visible(const Lts& l) {
  std::size_t n = 0;
  for (const auto& t : l.transitions()) n += t.action != Lts::tau();
  return n;
}

// The partition induced by p on the first n states.
Partition first(const Partition& p, std::size_t n) {
  std::vector<StateId> states(n);
  for (StateId s = 0; s < n; ++s) states[s] = s;
  return p.restrict_to(states);
}

// Label classes intersected with a partition.
Partition with_labels(const Partition& p, const std::vector<Label>& labels) {
  std::map<std::pair<BlockId, Label>, std::uint32_t> ids;
  std::vector<std::uint32_t> c;
  for (StateId s = 0; s < labels.size(); ++s)
    c.push_back(ids.emplace(std::make_pair(p.block_of(s), labels[s]),
                            static_cast<std::uint32_t>(ids.size()))
                    .first->second);
  return Partition(c);
}
}  // namespace

TEST_CASE("midpoints on the deadlock/livelock fixture") {
  auto l = fixtures::lts("deadlock_livelock.lts");
  auto r = eta_midpoint(l);
  CHECK(r.l2ts.size() == 5);
  CHECK(r.dummy == "st");
  CHECK(check_consistency(r.l2ts).consistent);
  auto m = r.l2ts.lts().index_of("m.a.a.x");
  CHECK(r.l2ts.label(m) == Label{"a"});
  for (StateId s = 0; s < l.size(); ++s) {
    CHECK(r.injection[s] == s);
    CHECK(r.l2ts.label(s) == Label{"st"});
  }
}

TEST_CASE("midpoints leave silent systems alone") {
  Lts l({"a", "b"}, {{0, "tau", 1}, {1, "tau", 1}});
  auto r = eta_midpoint(l);
  CHECK(r.l2ts.lts() == l);
}

TEST_CASE("dummy label avoids action names") {
  Lts l({"a", "b"}, {{0, "st", 1}});
  CHECK(eta_midpoint(l).dummy == "st_0");
  CHECK_THROWS_AS(eta_midpoint(Lts({"a"}, {{0, "delta", 0}})), ModelError);
}

TEST_CASE("midpoint count, consistency and equivalence on random systems") {
  Rng rng(41);
  for (int i = 0; i < 100; ++i) {
    auto l = random_lts(rng, 6, 2);
    auto r = eta_midpoint(l);
    CHECK(r.l2ts.size() == l.size() + visible(l));
    CHECK(check_consistency(r.l2ts).consistent);
    auto big = associated_lts(r.l2ts);
    for (auto v : kAll)
      CHECK(first(coarsest_partition(big, v), l.size()) == coarsest_partition(l, v));
  }
}

TEST_CASE("ks to l2ts") {
  auto k = fixtures::ks("stutter.ks");
  auto d = ks_to_l2ts(k);
  CHECK(check_consistency(d).consistent);
  CHECK(associated_ks(d) == k);
  KripkeStructure flat({"a", "b"}, {{"p"}, {"p"}}, {{0, 1}, {1, 0}});
  auto silent = ks_to_l2ts(flat);
  for (const auto& t : silent.lts().transitions()) CHECK(t.action == Lts::tau());
  KripkeStructure odd({"a", "b"}, {{}, {"x_y.z"}}, {{0, 1}});
  auto e = ks_to_l2ts(odd);
  CHECK(e.lts().action_name(e.lts().transitions()[0].action) == "to.x__y_dz");
  Rng rng(42);
  for (int i = 0; i < 100; ++i) {
    auto r = random_ks(rng, 6, 2);
    auto l2 = ks_to_l2ts(r);
    CHECK(check_consistency(l2).consistent);
    CHECK(associated_ks(l2) == r);
  }
}

TEST_CASE("deadlock extension of the fixture") {
  auto d = deadlock_extension(fixtures::ks("dext_input.ks"));
  CHECK(d.ks == fixtures::ks("dext_expected.ks"));
  CHECK(d.ks.name(d.sdelta) == "s_delta");
  CHECK_THROWS_AS(deadlock_extension(d.ks), ModelError);
}

TEST_CASE("deadlock extension of a total structure adds an isolated sink") {
  KripkeStructure k({"a"}, {{"p"}}, {{0, 0}});
  auto d = deadlock_extension(k);
  CHECK(d.ks.size() == 2);
  CHECK(d.ks.predecessors(d.sdelta).size() == 1);
  CHECK(d.ks.edges().size() == 2);
}

TEST_CASE("deadlock extension on random structures") {
  Rng rng(43);
  for (int i = 0; i < 100; ++i) {
    auto k = random_ks(rng, 7, 2);
    auto d = deadlock_extension(k);
    CHECK(deadlock_states(d.ks).empty());
    auto pk = coarsest_partition(k, EquivVariant::ExplicitDivergence);
    auto pd = coarsest_partition(d.ks, EquivVariant::ExplicitDivergence);
    CHECK(first(pd, k.size()) == pk);
    auto blk = pd.blocks()[pd.block_of(d.sdelta)];
    CHECK(blk.size() == 1);
    CHECK(coarsest_partition(d.ks, EquivVariant::DivergenceSensitive) == pd);
  }
}

TEST_CASE("deadlock and livelock part ways in the extension") {
  KripkeStructure k({"d", "l"}, {{}, {}}, {{1, 1}});
  CHECK(equivalent(k, "d", "l", EquivVariant::DivergenceSensitive));
  auto d = deadlock_extension(k);
  CHECK_FALSE(equivalent(d.ks, "d", "l", EquivVariant::DivergenceBlind));
  CHECK_FALSE(equivalent(d.ks, "d", "l", EquivVariant::DivergenceSensitive));
}

TEST_CASE("self-loop totalisations") {
  auto k = fixtures::ks("stutter.ks");
  auto t = totalize_deadlock_selfloops(k);
  CHECK(t.edges().size() == k.edges().size() + 1);
  auto x = t.index_of("x");
  CHECK(std::vector<StateId>(t.successors(x).begin(), t.successors(x).end()) ==
        std::vector<StateId>{x});
  CHECK(totalize_deadlock_selfloops(t) == t);
  CHECK(coarsest_partition(k, EquivVariant::DivergenceBlind) ==
        coarsest_partition(totalize_all_selfloops(k), EquivVariant::DivergenceSensitive));
  auto one = totalize_all_selfloops(KripkeStructure({"a"}, {{}}, {}));
  CHECK(one.edges() == std::vector<std::pair<StateId, StateId>>{{0, 0}});
}

TEST_CASE("totalisations preserve validity") {
  Rng rng(44);
  auto props = prop_names(2);
  for (int i = 0; i < 100; ++i) {
    auto k = random_ks(rng, 6, 2);
    auto phi = random_formula(rng, props, 3, false);
    // Self-loops at deadlocks are invisible to maximal-path semantics only
    // for formulas that cannot ask whether a path is infinite.
    CHECK(sat(k, phi, Semantics::MaximalPath) ==
          sat(totalize_deadlock_selfloops(k), phi, Semantics::MaximalPath));
    CHECK(sat(k, phi, Semantics::DivergenceBlind) ==
          sat(totalize_all_selfloops(k), phi, Semantics::MaximalPath));
  }
}

TEST_CASE("encode_D") {
  CHECK(encode_D(F::exists_g_inf(F::prop("p"))) ==
        F::exists_g(F::conj(F::neg(F::prop("delta")), F::prop("p"))));
  CHECK(encode_D(F::prop("p")) == F::prop("p"));
  CHECK_THROWS_AS(encode_D(F::prop("delta")), std::invalid_argument);
  Rng rng(45);
  auto props = prop_names(2);
  int triples = 0;
  for (int i = 0; i < 60; ++i) {
    auto k = random_ks(rng, 6, 2);
    auto d = deadlock_extension(k);
    for (int j = 0; j < 4; ++j) {
      auto phi = random_formula(rng, props, 3);
      auto in_k = sat(k, phi, Semantics::MaximalPath);
      auto in_d = sat(d.ks, encode_D(phi), Semantics::MaximalPath);
      std::erase(in_d, d.sdelta);
      CHECK(in_k == in_d);
      triples += static_cast<int>(k.size());
    }
  }
  CHECK(triples >= 200);
}

TEST_CASE("encode_E") {
  CHECK(encode_E(F::prop("delta")) == F::bottom());
  CHECK(encode_E(F::prop("p")) == F::prop("p"));
  Rng rng(46);
  std::vector<std::string> props{"p", "q", "delta"};
  int triples = 0;
  for (int i = 0; i < 60; ++i) {
    auto k = random_ks(rng, 6, 2);
    auto d = deadlock_extension(k);
    for (int j = 0; j < 4; ++j) {
      auto phi = random_formula(rng, props, 3);
      ModelChecker in_d(d.ks, Semantics::MaximalPath), in_k(k, Semantics::MaximalPath);
      auto e = encode_E(phi);
      CHECK_FALSE(e.mentions("delta"));
      for (StateId s = 0; s < k.size(); ++s) {
        CHECK(in_d.holds(s, phi) == in_k.holds(s, e));
        ++triples;
      }
    }
  }
  CHECK(triples >= 200);
}

#include "dtk/compose.hpp"

#include <deque>
#include <map>
#include <set>

#include "dtk/random.hpp"
#include "dtk/text_format.hpp"

namespace dtk {

Product merge_many(const Lts& left, const Lts& right,
                   const std::vector<std::pair<StateId, StateId>>& roots) {
  for (auto [s, t] : roots)
    if (s >= left.size() || t >= right.size()) throw ModelError("unknown root state");
  std::map<std::pair<StateId, StateId>, StateId> index;
  std::vector<std::pair<StateId, StateId>> pairs;
  std::vector<std::string> names;
  std::set<std::string> taken;
  std::deque<StateId> queue;

  auto visit = [&](std::pair<StateId, StateId> p) {
    auto [it, fresh] = index.emplace(p, static_cast<StateId>(pairs.size()));
    if (!fresh) return it->second;
    pairs.push_back(p);
    auto base = left.name(p.first) + "|" + right.name(p.second);
    auto name = base;
    for (std::size_t i = 1; taken.count(name); ++i) name = base + "." + std::to_string(i);
    taken.insert(name);
    names.push_back(name);
    queue.push_back(it->second);
    return it->second;
  };

  Product out;
  for (auto r : roots) out.roots.push_back(visit(r));
  std::vector<std::tuple<StateId, std::string, StateId>> trans;
  while (!queue.empty()) {
    auto id = queue.front();
    queue.pop_front();
    auto [s, t] = pairs[id];
    for (const auto& tr : left.out(s))
      trans.emplace_back(id, left.action_name(tr.action), visit({tr.dst, t}));
    for (const auto& tr : right.out(t))
      trans.emplace_back(id, right.action_name(tr.action), visit({s, tr.dst}));
  }
  out.lts = Lts(std::move(names), trans);
  return out;
}

Product merge(const Lts& left, StateId s, const Lts& right, StateId t) {
  return merge_many(left, right, {{s, t}});
}

Product merge(const Lts& left, std::string_view s, const Lts& right, std::string_view t) {
  return merge(left, left.index_of(s), right, right.index_of(t));
}

std::string fresh_action(const std::vector<const Lts*>& systems) {
  std::set<std::string> used;
  for (const auto* l : systems) used.insert(l->actions().begin(), l->actions().end());
  for (std::size_t i = 0;; ++i) {
    auto name = "fresh_" + std::to_string(i);
    if (!used.count(name)) return name;
  }
}

Lts fresh_context(const std::string& action) { return Lts({"a", "z"}, {{0, action, 1}}); }

Lts deadlock_livelock_lts() {
  return parse_lts(
      "state 0\n"
      "state D0\n"
      "state a\n"
      "state x\n"
      "trans D0 tau D0\n"
      "trans a a x\n");
}

CounterexampleReport congruence_counterexample() {
  const auto l = deadlock_livelock_lts();
  const auto zero = l.index_of("0"), livelock = l.index_of("D0"), a = l.index_of("a");
  CounterexampleReport r;
  auto same = [](const Lts& g, StateId s, StateId t, EquivVariant v) {
    return coarsest_partition_lts(g, v).same_block(s, t);
  };
  r.deadlock_ds_livelock = same(l, zero, livelock, EquivVariant::DivergenceSensitive);
  r.deadlock_ed_livelock = same(l, zero, livelock, EquivVariant::ExplicitDivergence);
  auto p = merge_many(l, l, {{zero, a}, {livelock, a}});
  r.merged_ds = same(p.lts, p.roots[0], p.roots[1], EquivVariant::DivergenceSensitive);
  r.merged_db = same(p.lts, p.roots[0], p.roots[1], EquivVariant::DivergenceBlind);
  return r;
}

namespace {
// A pair of equivalent states, distinct when the partition allows it.
std::pair<StateId, StateId> equivalent_pair(Rng& rng, const Partition& p) {
  std::vector<std::vector<StateId>> shared;
  for (auto& b : p.blocks())
    if (b.size() > 1) shared.push_back(b);
  std::uniform_int_distribution<std::size_t> any(0, p.num_states() - 1);
  if (shared.empty()) {
    auto s = static_cast<StateId>(any(rng));
    return {s, s};
  }
  const auto& b = shared[std::uniform_int_distribution<std::size_t>(0, shared.size() - 1)(rng)];
  std::uniform_int_distribution<std::size_t> member(0, b.size() - 1);
  auto i = member(rng);
  auto j = member(rng);
  if (i == j) j = (i + 1) % b.size();
  return {b[i], b[j]};
}
}  // namespace

CongruenceSample congruence_sample(EquivVariant v, std::size_t trials, std::size_t max_states,
                                   std::uint64_t seed) {
  CongruenceSample report;
  for (std::size_t i = 0; i < trials; ++i) {
    Rng rng(seed + i);
    auto l1 = random_lts(rng, max_states, 2);
    auto l2 = random_lts(rng, max_states, 2);
    auto [s, s2] = equivalent_pair(rng, coarsest_partition_lts(l1, v));
    auto [t, t2] = equivalent_pair(rng, coarsest_partition_lts(l2, v));
    auto p = merge_many(l1, l2, {{s, t}, {s2, t2}});
    ++report.trials;
    if (s != s2 || t != t2) ++report.nontrivial;
    if (!coarsest_partition_lts(p.lts, v).same_block(p.roots[0], p.roots[1])) {
      ++report.failures;
      report.failing_seeds.push_back(seed + i);
    }
  }
  return report;
}

bool ProbeReport::consistent() const {
  if (explicit_divergence) {
    for (bool b : contexts_ds)
      if (!b) return false;
    return fresh_context_ds;
  }
  return !fresh_context_ds;
}

ProbeReport coarsest_congruence_probe(const Lts& l, StateId s, StateId t,
                                      const std::vector<std::pair<Lts, StateId>>& contexts) {
  ProbeReport r;
  r.explicit_divergence =
      coarsest_partition_lts(l, EquivVariant::ExplicitDivergence).same_block(s, t);
  auto ds_after = [&](const Lts& ctx, StateId u) {
    auto p = merge_many(l, ctx, {{s, u}, {t, u}});
    return coarsest_partition_lts(p.lts, EquivVariant::DivergenceSensitive)
        .same_block(p.roots[0], p.roots[1]);
  };
  for (const auto& [ctx, u] : contexts) r.contexts_ds.push_back(ds_after(ctx, u));
  auto ctx = fresh_context(fresh_action({&l}));
  r.fresh_context_ds = ds_after(ctx, 0);
  return r;
}

}  // namespace dtk

#include "dtk/equivalences.hpp"

#include <map>
#include <set>

#include "graph.hpp"

namespace dtk {

const char* to_string(EquivVariant v) {
  switch (v) {
    case EquivVariant::DivergenceBlind: return "db";
    case EquivVariant::DivergenceSensitive: return "ds";
    case EquivVariant::ExplicitDivergence: return "ed";
  }
  return "?";
}

namespace {

std::vector<Signature> run_kernel(const detail::Graph& g, const Partition& p, EquivVariant v,
                                  Kernel k) {
  if (p.num_states() != g.size()) throw ModelError("partition does not match state count");
  return k == Kernel::Serial ? detail::signatures_serial(g, p.colouring(), v)
                             : detail::signatures_parallel(g, p.colouring(), v);
}

// One round: split every block by signature. Returns the refined partition.
Partition split(const Partition& p, const std::vector<Signature>& sigs) {
  std::map<std::pair<BlockId, const Signature*>, std::uint32_t,
           bool (*)(const std::pair<BlockId, const Signature*>&,
                    const std::pair<BlockId, const Signature*>&)>
      ids([](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return *a.second < *b.second;
      });
  std::vector<std::uint32_t> colour(p.num_states());
  for (StateId s = 0; s < p.num_states(); ++s) {
    auto [it, fresh] = ids.emplace(std::make_pair(p.block_of(s), &sigs[s]),
                                   static_cast<std::uint32_t>(ids.size()));
    colour[s] = it->second;
  }
  return Partition(colour);
}

std::vector<Partition> refine(const detail::Graph& g, Partition p, EquivVariant v, Kernel k) {
  std::vector<Partition> history{p};
  for (;;) {
    auto next = split(p, run_kernel(g, p, v, k));
    if (next.num_blocks() == p.num_blocks()) break;
    p = std::move(next);
    history.push_back(p);
  }
  return history;
}

Partition label_partition(const KripkeStructure& k) {
  std::map<Label, std::uint32_t> ids;
  std::vector<std::uint32_t> colour(k.size());
  for (StateId s = 0; s < k.size(); ++s)
    colour[s] = ids.emplace(k.label(s), static_cast<std::uint32_t>(ids.size())).first->second;
  return Partition(colour);
}

}  // namespace

std::vector<Signature> signatures(const Lts& l, const Partition& p, EquivVariant v, Kernel k) {
  return run_kernel(detail::graph_of(l), p, v, k);
}

std::vector<Signature> signatures(const KripkeStructure& k, const Partition& p, EquivVariant v,
                                  Kernel kernel) {
  return run_kernel(detail::graph_of(k), p, v, kernel);
}

Partition coarsest_partition_lts(const Lts& l, EquivVariant v, Kernel k) {
  return refine(detail::graph_of(l), Partition::universal(l.size()), v, k).back();
}

Partition coarsest_partition_ks(const KripkeStructure& k, EquivVariant v, Kernel kernel) {
  return refine(detail::graph_of(k), label_partition(k), v, kernel).back();
}

std::vector<Partition> refinement_history(const KripkeStructure& k, EquivVariant v) {
  return refine(detail::graph_of(k), label_partition(k), v, Kernel::Serial);
}

namespace {

// Greatest set of states each having a silent in-block successor in the set.
std::vector<bool> in_block_divergence(const detail::Graph& g, const Partition& p) {
  const auto n = g.size();
  std::vector<bool> alive(n, true);
  for (bool changed = true; changed;) {
    changed = false;
    for (StateId s = 0; s < n; ++s) {
      if (!alive[s]) continue;
      bool keep = false;
      for (const auto& e : g.out(s))
        if (e.action == Lts::tau() && p.same_block(s, e.dst) && alive[e.dst]) keep = true;
      if (!keep) {
        alive[s] = false;
        changed = true;
      }
    }
  }
  return alive;
}

bool check_graph(const detail::Graph& g, const Partition& p, EquivVariant v) {
  const auto n = g.size();
  if (p.num_states() != n) return false;
  const auto diverge = in_block_divergence(g, p);
  using Trace3 = std::vector<std::pair<ActionId, BlockId>>;
  std::vector<Trace3> traces(n);
  std::vector<bool> completes(n, false);
  for (StateId s = 0; s < n; ++s) {
    // Every state reachable by silent steps inside the colour of s.
    std::vector<bool> seen(n, false);
    std::vector<StateId> todo{s};
    seen[s] = true;
    std::set<std::pair<ActionId, BlockId>> found;
    while (!todo.empty()) {
      auto x = todo.back();
      todo.pop_back();
      if (g.is_deadlock(x) || diverge[x]) completes[s] = true;
      for (const auto& e : g.out(x)) {
        bool stays = e.action == Lts::tau() && p.same_block(s, e.dst);
        if (!stays) {
          found.emplace(e.action, p.block_of(e.dst));
        } else if (!seen[e.dst]) {
          seen[e.dst] = true;
          todo.push_back(e.dst);
        }
      }
    }
    traces[s].assign(found.begin(), found.end());
  }
  for (const auto& members : p.blocks()) {
    for (auto t : members) {
      auto s = members.front();
      if (traces[s] != traces[t]) return false;
      if (v == EquivVariant::ExplicitDivergence && diverge[s] != diverge[t]) return false;
      if (v == EquivVariant::DivergenceSensitive && completes[s] != completes[t]) return false;
    }
  }
  return true;
}

}  // namespace

bool check_colouring_lts(const Lts& l, const Partition& p, EquivVariant v) {
  return check_graph(detail::graph_of(l), p, v);
}

bool check_colouring_ks(const KripkeStructure& k, const Partition& p, EquivVariant v) {
  if (p.num_states() != k.size()) return false;
  for (StateId s = 0; s < k.size(); ++s)
    for (StateId t = s + 1; t < k.size(); ++t)
      if (p.same_block(s, t) && k.label(s) != k.label(t)) return false;
  return check_graph(detail::graph_of(k), p, v);
}

std::vector<StateId> divergent_states(const Lts& l, const Partition& p) {
  auto alive = in_block_divergence(detail::graph_of(l), p);
  std::vector<StateId> out;
  for (StateId s = 0; s < l.size(); ++s)
    if (alive[s]) out.push_back(s);
  return out;
}

std::vector<StateId> divergent_states(const KripkeStructure& k, const Partition& p) {
  auto alive = in_block_divergence(detail::graph_of(k), p);
  std::vector<StateId> out;
  for (StateId s = 0; s < k.size(); ++s)
    if (alive[s]) out.push_back(s);
  return out;
}

bool equivalent(const Lts& l, std::string_view s, std::string_view t, EquivVariant v) {
  auto a = l.index_of(s), b = l.index_of(t);
  return coarsest_partition_lts(l, v).same_block(a, b);
}

bool equivalent(const KripkeStructure& k, std::string_view s, std::string_view t,
                EquivVariant v) {
  auto a = k.index_of(s), b = k.index_of(t);
  return coarsest_partition_ks(k, v).same_block(a, b);
}

}  // namespace dtk

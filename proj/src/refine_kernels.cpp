#include <algorithm>

#include "graph.hpp"

namespace dtk::detail {

Graph graph_of(const Lts& l) {
  Graph g;
  g.offsets.assign(l.size() + 1, 0);
  g.edges.reserve(l.transitions().size());
  for (StateId s = 0; s < l.size(); ++s) {
    for (const auto& t : l.out(s)) g.edges.push_back({t.action, t.dst});
    g.offsets[s + 1] = g.edges.size();
  }
  return g;
}

Graph graph_of(const KripkeStructure& k) {
  Graph g;
  g.offsets.assign(k.size() + 1, 0);
  g.edges.reserve(k.edges().size());
  for (StateId s = 0; s < k.size(); ++s) {
    for (auto t : k.successors(s)) g.edges.push_back({Lts::tau(), t});
    g.offsets[s + 1] = g.edges.size();
  }
  return g;
}

namespace {

inline bool inert(const std::vector<BlockId>& block, StateId s, const Edge& e) {
  return e.action == Lts::tau() && block[s] == block[e.dst];
}

void sort_unique(std::vector<std::pair<ActionId, BlockId>>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Iterative Tarjan on the inert subgraph. Components come out sinks first.
struct Components {
  std::vector<std::uint32_t> comp;
  std::vector<std::vector<StateId>> members;
};

Components inert_components(const Graph& g, const std::vector<BlockId>& block) {
  const auto n = g.size();
  constexpr std::uint32_t unset = ~0u;
  Components c;
  c.comp.assign(n, unset);
  std::vector<std::uint32_t> index(n, unset), low(n, 0);
  std::vector<StateId> stack;
  std::vector<bool> on_stack(n, false);
  std::vector<std::pair<StateId, std::size_t>> frames;
  std::uint32_t counter = 0;

  for (StateId root = 0; root < n; ++root) {
    if (index[root] != unset) continue;
    frames.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [s, i] = frames.back();
      auto out = g.out(s);
      if (i < out.size()) {
        const auto& e = out[i++];
        if (!inert(block, s, e)) continue;
        auto t = e.dst;
        if (index[t] == unset) {
          index[t] = low[t] = counter++;
          stack.push_back(t);
          on_stack[t] = true;
          frames.emplace_back(t, 0);
        } else if (on_stack[t]) {
          low[s] = std::min(low[s], index[t]);
        }
        continue;
      }
      auto done = s;
      frames.pop_back();
      if (!frames.empty()) {
        auto parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        auto id = static_cast<std::uint32_t>(c.members.size());
        c.members.emplace_back();
        StateId x;
        do {
          x = stack.back();
          stack.pop_back();
          on_stack[x] = false;
          c.comp[x] = id;
          c.members.back().push_back(x);
        } while (x != done);
      }
    }
  }
  return c;
}

}  // namespace

std::vector<Signature> signatures_serial(const Graph& g, const std::vector<BlockId>& block,
                                         EquivVariant v) {
  const auto cs = inert_components(g, block);
  const auto m = cs.members.size();
  std::vector<Signature> per_comp(m);
  std::vector<bool> diverges(m, false), completes(m, false);

  for (std::uint32_t c = 0; c < m; ++c) {
    auto& sig = per_comp[c];
    bool cyclic = cs.members[c].size() > 1;
    bool deadlock = false;
    for (auto s : cs.members[c]) {
      if (g.is_deadlock(s)) deadlock = true;
      for (const auto& e : g.out(s)) {
        if (!inert(block, s, e)) {
          sig.obs.emplace_back(e.action, block[e.dst]);
          continue;
        }
        auto d = cs.comp[e.dst];
        if (d == c) {
          cyclic = true;
          continue;
        }
        // Successor components were finished earlier.
        sig.obs.insert(sig.obs.end(), per_comp[d].obs.begin(), per_comp[d].obs.end());
        diverges[c] = diverges[c] || diverges[d];
        completes[c] = completes[c] || completes[d];
      }
    }
    sort_unique(sig.obs);
    diverges[c] = diverges[c] || cyclic;
    completes[c] = completes[c] || cyclic || deadlock;
  }

  std::vector<Signature> out(g.size());
  for (StateId s = 0; s < g.size(); ++s) {
    auto c = cs.comp[s];
    out[s].obs = per_comp[c].obs;
    out[s].divergent = v == EquivVariant::ExplicitDivergence && diverges[c];
    out[s].can_complete = v == EquivVariant::DivergenceSensitive && completes[c];
  }
  return out;
}

std::vector<Signature> signatures_parallel(const Graph& g, const std::vector<BlockId>& block,
                                           EquivVariant v) {
  const auto n = static_cast<std::int64_t>(g.size());
  std::vector<Signature> out(g.size());

#pragma omp parallel
  {
    // Per-thread scratch, reset lazily through generation stamps.
    std::vector<std::uint32_t> seen(g.size(), 0);
    std::vector<std::uint32_t> indeg(g.size(), 0);
    std::vector<StateId> reach, ready;
    std::uint32_t gen = 0;

#pragma omp for schedule(dynamic, 64)
    for (std::int64_t si = 0; si < n; ++si) {
      const auto s = static_cast<StateId>(si);
      ++gen;
      reach.clear();
      reach.push_back(s);
      seen[s] = gen;
      bool deadlock = false;
      auto& sig = out[s];
      for (std::size_t i = 0; i < reach.size(); ++i) {
        auto x = reach[i];
        if (g.is_deadlock(x)) deadlock = true;
        for (const auto& e : g.out(x)) {
          if (!inert(block, x, e)) {
            sig.obs.emplace_back(e.action, block[e.dst]);
          } else if (seen[e.dst] != gen) {
            seen[e.dst] = gen;
            reach.push_back(e.dst);
          }
        }
      }
      sort_unique(sig.obs);

      bool cyclic = false;
      if (v != EquivVariant::DivergenceBlind) {
        // The reachable set is closed under inert steps; it contains a cycle
        // iff Kahn's algorithm cannot consume all of it.
        for (auto x : reach) indeg[x] = 0;
        for (auto x : reach)
          for (const auto& e : g.out(x))
            if (inert(block, x, e)) ++indeg[e.dst];
        ready.clear();
        for (auto x : reach)
          if (indeg[x] == 0) ready.push_back(x);
        std::size_t consumed = 0;
        while (!ready.empty()) {
          auto x = ready.back();
          ready.pop_back();
          ++consumed;
          for (const auto& e : g.out(x))
            if (inert(block, x, e) && --indeg[e.dst] == 0) ready.push_back(e.dst);
        }
        cyclic = consumed < reach.size();
      }
      sig.divergent = v == EquivVariant::ExplicitDivergence && cyclic;
      sig.can_complete = v == EquivVariant::DivergenceSensitive && (cyclic || deadlock);
    }
  }
  return out;
}

}  // namespace dtk::detail

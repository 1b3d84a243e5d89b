#pragma once

#include <span>
#include <vector>

#include "dtk/equivalences.hpp"
#include "dtk/structures.hpp"

namespace dtk::detail {

struct Edge {
  ActionId action;
  StateId dst;
};

// Compressed adjacency shared by the LTS and Kripke readings. Kripke edges
// carry the silent action.
struct Graph {
  std::vector<std::size_t> offsets;
  std::vector<Edge> edges;

  std::size_t size() const { return offsets.size() - 1; }
  std::span<const Edge> out(StateId s) const {
    return {edges.data() + offsets[s], edges.data() + offsets[s + 1]};
  }
  bool is_deadlock(StateId s) const { return offsets[s] == offsets[s + 1]; }
};

Graph graph_of(const Lts& l);
Graph graph_of(const KripkeStructure& k);

std::vector<Signature> signatures_serial(const Graph& g, const std::vector<BlockId>& block,
                                         EquivVariant v);
std::vector<Signature> signatures_parallel(const Graph& g, const std::vector<BlockId>& block,
                                           EquivVariant v);

}  // namespace dtk::detail

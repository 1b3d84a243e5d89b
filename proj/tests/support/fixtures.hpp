#pragma once

#include <set>
#include <string>
#include <vector>

#include "dtk/partition.hpp"
#include "dtk/structures.hpp"
#include "dtk/text_format.hpp"

namespace fixtures {

inline std::string path(const std::string& file) { return std::string(DTK_TEST_DATA) + "/" + file; }
inline std::string text(const std::string& file) { return dtk::read_file(path(file)); }

inline dtk::KripkeStructure ks(const std::string& file) { return dtk::parse_ks(text(file)); }
inline dtk::Lts lts(const std::string& file) { return dtk::parse_lts(text(file)); }
inline dtk::DoublyLabelledTS l2ts(const std::string& file) { return dtk::parse_l2ts(text(file)); }

using Blocks = std::set<std::set<std::string>>;

// A partition as a set of named blocks, so tests need not care about ids.
template <class G>
Blocks named_blocks(const G& g, const dtk::Partition& p) {
  Blocks out;
  for (const auto& b : p.blocks()) {
    std::set<std::string> names;
    for (auto s : b) names.insert(g.name(s));
    out.insert(names);
  }
  return out;
}

template <class G>
std::set<std::string> named_states(const G& g, const std::vector<dtk::StateId>& states) {
  std::set<std::string> out;
  for (auto s : states) out.insert(g.name(s));
  return out;
}

}  // namespace fixtures

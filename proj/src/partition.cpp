#include "dtk/partition.hpp"

#include <unordered_map>

namespace dtk {

Partition::Partition(const std::vector<std::uint32_t>& colouring) {
  std::unordered_map<std::uint32_t, BlockId> rename;
  block_.reserve(colouring.size());
  for (auto c : colouring) {
    auto [it, fresh] = rename.emplace(c, static_cast<BlockId>(rename.size()));
    block_.push_back(it->second);
  }
  num_blocks_ = rename.size();
}

Partition Partition::universal(std::size_t n) { return Partition(std::vector<std::uint32_t>(n, 0)); }

Partition Partition::discrete(std::size_t n) {
  std::vector<std::uint32_t> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<std::uint32_t>(i);
  return Partition(c);
}

std::vector<std::vector<StateId>> Partition::blocks() const {
  std::vector<std::vector<StateId>> out(num_blocks_);
  for (StateId s = 0; s < block_.size(); ++s) out[block_[s]].push_back(s);
  return out;
}

bool Partition::refines(const Partition& coarser) const {
  if (coarser.num_states() != num_states()) return false;
  std::vector<std::int64_t> image(num_blocks_, -1);
  for (StateId s = 0; s < block_.size(); ++s) {
    auto& img = image[block_[s]];
    if (img < 0)
      img = coarser.block_of(s);
    else if (img != coarser.block_of(s))
      return false;
  }
  return true;
}

Partition Partition::restrict_to(const std::vector<StateId>& states) const {
  std::vector<std::uint32_t> c;
  c.reserve(states.size());
  for (auto s : states) c.push_back(block_of(s));
  return Partition(c);
}

}  // namespace dtk

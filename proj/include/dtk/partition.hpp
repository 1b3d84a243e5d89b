#pragma once

#include <cstdint>
#include <vector>

#include "dtk/structures.hpp"

namespace dtk {

using BlockId = std::uint32_t;

/// A colouring of states up to renaming of colours. Block ids are dense and
/// numbered by the first state (in index order) that falls into each block.
class Partition {
 public:
  Partition() = default;
  /// Any colour values are accepted; they are renumbered.
  explicit Partition(const std::vector<std::uint32_t>& colouring);

  static Partition universal(std::size_t n);
  static Partition discrete(std::size_t n);

  std::size_t num_states() const { return block_.size(); }
  std::size_t num_blocks() const { return num_blocks_; }
  BlockId block_of(StateId s) const { return block_.at(s); }
  bool same_block(StateId s, StateId t) const { return block_.at(s) == block_.at(t); }
  const std::vector<BlockId>& colouring() const { return block_; }
  /// Members of each block in ascending state order, indexed by block id.
  std::vector<std::vector<StateId>> blocks() const;

  /// True if every block of *this lies inside a block of `coarser`.
  bool refines(const Partition& coarser) const;
  /// The partition induced on `states` (taken in the given order).
  Partition restrict_to(const std::vector<StateId>& states) const;

  bool operator==(const Partition& other) const = default;

 private:
  std::vector<BlockId> block_;
  std::size_t num_blocks_ = 0;
};

}  // namespace dtk

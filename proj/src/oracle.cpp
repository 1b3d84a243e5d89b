#include <algorithm>
#include <functional>
#include <stdexcept>

#include "dtk/equivalences.hpp"

namespace dtk {

namespace {

// Walks all set partitions of {0..n-1} as restricted growth strings and
// keeps the valid one with fewest blocks. Every valid partition must refine
// it, otherwise the coarsest colouring would not be unique.
Partition brute_force(std::size_t n, const std::function<bool(const Partition&)>& valid) {
  if (n > kOracleMaxStates)
    throw std::invalid_argument("oracle supports at most " + std::to_string(kOracleMaxStates) +
                                " states");
  std::vector<Partition> accepted;
  std::vector<std::uint32_t> rgs(n, 0);
  auto visit = [&] {
    Partition p(rgs);
    if (valid(p)) accepted.push_back(std::move(p));
  };
  if (n == 0) return Partition{};
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t max) {
    if (i == n) {
      visit();
      return;
    }
    for (std::uint32_t c = 0; c <= max + 1; ++c) {
      rgs[i] = c;
      rec(i + 1, std::max(max, c));
    }
  };
  rgs[0] = 0;
  rec(1, 0);

  if (accepted.empty()) throw std::logic_error("no valid colouring found");
  const Partition* best = &accepted.front();
  for (const auto& p : accepted)
    if (p.num_blocks() < best->num_blocks()) best = &p;
  for (const auto& p : accepted)
    if (!p.refines(*best)) throw std::logic_error("valid colourings have no unique coarsest");
  return *best;
}

}  // namespace

Partition oracle_coarsest_partition(const Lts& l, EquivVariant v) {
  return brute_force(l.size(), [&](const Partition& p) { return check_colouring_lts(l, p, v); });
}

Partition oracle_coarsest_partition(const KripkeStructure& k, EquivVariant v) {
  return brute_force(k.size(), [&](const Partition& p) { return check_colouring_ks(k, p, v); });
}

}  // namespace dtk

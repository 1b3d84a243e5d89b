#pragma once

#include <compare>
#include <string_view>
#include <utility>
#include <vector>

#include "dtk/partition.hpp"
#include "dtk/structures.hpp"

namespace dtk {

/// DivergenceBlind: branching bisimilarity on LTSs, divergence-blind
/// stuttering equivalence on Kripke structures. DivergenceSensitive adds
/// agreement on complete one-colour traces, ExplicitDivergence on divergent
/// ones.
enum class EquivVariant { DivergenceBlind, DivergenceSensitive, ExplicitDivergence };

/// Signature computation strategy. Both produce identical results.
enum class Kernel { Serial, Parallel };

const char* to_string(EquivVariant v);

/// What a state can observe relative to a partition: the (action, block)
/// pairs reachable by inert steps followed by one non-inert step, plus the
/// variant's extra bit.
struct Signature {
  std::vector<std::pair<ActionId, BlockId>> obs;  // sorted, unique
  bool divergent = false;     // ExplicitDivergence only
  bool can_complete = false;  // DivergenceSensitive only

  auto operator<=>(const Signature&) const = default;
};

std::vector<Signature> signatures(const Lts& l, const Partition& p, EquivVariant v,
                                  Kernel k = Kernel::Serial);
/// Kripke structures are read as LTSs whose every edge is silent.
std::vector<Signature> signatures(const KripkeStructure& k, const Partition& p, EquivVariant v,
                                  Kernel kernel = Kernel::Serial);

Partition coarsest_partition_lts(const Lts& l, EquivVariant v, Kernel k = Kernel::Parallel);
/// Starts from the label classes, so blocks never mix labels.
Partition coarsest_partition_ks(const KripkeStructure& k, EquivVariant v,
                                Kernel kernel = Kernel::Parallel);
inline Partition coarsest_partition(const Lts& l, EquivVariant v) {
  return coarsest_partition_lts(l, v);
}
inline Partition coarsest_partition(const KripkeStructure& k, EquivVariant v) {
  return coarsest_partition_ks(k, v);
}

/// Partitions after each refinement round; front() is the initial
/// partition, back() the fixpoint.
std::vector<Partition> refinement_history(const KripkeStructure& k, EquivVariant v);

/// Decides whether `p` is a valid colouring for the variant, by comparing
/// length-three traces, in-block divergence, and one-colour completions.
bool check_colouring_lts(const Lts& l, const Partition& p, EquivVariant v);
bool check_colouring_ks(const KripkeStructure& k, const Partition& p, EquivVariant v);

inline constexpr std::size_t kOracleMaxStates = 8;

/// Brute force over all set partitions. Throws std::invalid_argument above
/// kOracleMaxStates states.
Partition oracle_coarsest_partition(const Lts& l, EquivVariant v);
Partition oracle_coarsest_partition(const KripkeStructure& k, EquivVariant v);

/// States with an infinite path that never leaves their block (silent steps
/// only, for LTSs).
std::vector<StateId> divergent_states(const Lts& l, const Partition& p);
std::vector<StateId> divergent_states(const KripkeStructure& k, const Partition& p);

bool equivalent(const Lts& l, std::string_view s, std::string_view t, EquivVariant v);
bool equivalent(const KripkeStructure& k, std::string_view s, std::string_view t,
                EquivVariant v);

}  // namespace dtk

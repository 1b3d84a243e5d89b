#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dtk/equivalences.hpp"
#include "dtk/structures.hpp"

namespace dtk {

/// Interleaving product restricted to what is reachable from its roots.
/// Product states are named "<left>|<right>"; a name that would clash gets
/// a ".<n>" suffix.
struct Product {
  Lts lts;
  std::vector<StateId> roots;  // one per requested pair, same order
};

Product merge(const Lts& left, StateId s, const Lts& right, StateId t);
Product merge(const Lts& left, std::string_view s, const Lts& right, std::string_view t);
/// One product holding every pair in `roots`, so that product states from
/// different roots can be compared.
Product merge_many(const Lts& left, const Lts& right,
                   const std::vector<std::pair<StateId, StateId>>& roots);

/// First of fresh_0, fresh_1, ... not among the actions of any argument.
std::string fresh_action(const std::vector<const Lts*>& systems);

/// The two-state context  a -fresh-> z  for a given fresh action.
Lts fresh_context(const std::string& action);

/// The deadlock versus silent-livelock example: states 0, D0, a, x with
/// D0 -tau-> D0 and a -a-> x.
Lts deadlock_livelock_lts();

struct CounterexampleReport {
  bool deadlock_ds_livelock = false;          // 0 and D0 under ds
  bool merged_ds = false;                     // 0|a and D0|a under ds
  bool merged_db = false;                     // 0|a and D0|a under db
  bool deadlock_ed_livelock = false;          // 0 and D0 under ed
  bool as_expected() const {
    return deadlock_ds_livelock && !merged_ds && merged_db && !deadlock_ed_livelock;
  }
};

/// Shows that divergence-sensitive branching bisimilarity is not preserved
/// by interleaving while the blind and explicit-divergence variants are.
CounterexampleReport congruence_counterexample();

struct CongruenceSample {
  std::size_t trials = 0;
  std::size_t nontrivial = 0;  // trials where some s != s' or t != t'
  std::size_t failures = 0;
  std::vector<std::uint64_t> failing_seeds;
};

/// Draws pairs s ~ s', t ~ t' from the quotients of random LTSs and checks
/// s|t ~ s'|t'. Trial i uses seed + i.
CongruenceSample congruence_sample(EquivVariant v, std::size_t trials, std::size_t max_states,
                                   std::uint64_t seed);

struct ProbeReport {
  bool explicit_divergence = false;     // s and t under ed
  std::vector<bool> contexts_ds;        // s|u and t|u under ds, per context
  bool fresh_context_ds = false;        // s|a and t|a under ds, a -fresh-> z
  /// ed implies every context agrees, and failure of ed implies the fresh
  /// context separates.
  bool consistent() const;
};

ProbeReport coarsest_congruence_probe(const Lts& l, StateId s, StateId t,
                                      const std::vector<std::pair<Lts, StateId>>& contexts);

}  // namespace dtk

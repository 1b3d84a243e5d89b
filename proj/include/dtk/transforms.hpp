#pragma once

#include <string>
#include <vector>

#include "dtk/formula.hpp"
#include "dtk/structures.hpp"

namespace dtk {

struct EtaResult {
  DoublyLabelledTS l2ts;
  /// injection[s] is the image of original state s.
  std::vector<StateId> injection;
  /// The proposition carried by every original state.
  std::string dummy;
};

/// Splits every visible transition s -a-> t into s -a-> m -a-> t, where the
/// fresh midpoint m is labelled {a}. Original states carry a dummy
/// proposition ("st", or the first unused "st_<n>" if an action is named
/// "st"). Throws ModelError if an action is named "delta".
EtaResult eta_midpoint(const Lts& l);

/// Labels s -> t silent when both ends agree on propositions, otherwise with
/// an action naming the target label: "to" followed by ".<prop>" for each
/// target proposition, with '_' written "__" and '.' written "_d".
DoublyLabelledTS ks_to_l2ts(const KripkeStructure& k);

struct DeadlockExtension {
  KripkeStructure ks;  // flagged: may be checked against `delta`
  StateId sdelta;
};

/// Adds a fresh sink labelled {delta} with a self-loop, and an edge to it from
/// every deadlock state. Throws ModelError if `delta` is already in use.
DeadlockExtension deadlock_extension(const KripkeStructure& k);

KripkeStructure totalize_deadlock_selfloops(const KripkeStructure& k);
KripkeStructure totalize_all_selfloops(const KripkeStructure& k);

/// Translation into the delta-based logic, to be checked on the deadlock
/// extension. Throws std::invalid_argument if the input mentions delta.
StateFormula encode_D(const StateFormula& f);
/// Translation back, to be checked on the original structure.
StateFormula encode_E(const StateFormula& f);

}  // namespace dtk

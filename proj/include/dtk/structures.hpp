#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dtk {

using StateId = std::uint32_t;
using ActionId = std::uint32_t;

/// The silent action. Always action index 0 of an Lts.
inline constexpr std::string_view kTau = "tau";
/// Proposition reserved for the fresh state of a deadlock extension.
inline constexpr std::string_view kDelta = "delta";

/// Sorted, duplicate-free set of atomic propositions.
using Label = std::vector<std::string>;

Label make_label(std::vector<std::string> props);

/// Raised for references to states that do not exist and for malformed
/// structures built programmatically.
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense name <-> index table. Indices follow insertion order.
class StateTable {
 public:
  StateTable() = default;
  explicit StateTable(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(StateId s) const { return names_.at(s); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<StateId> find(std::string_view name) const;
  StateId index_of(std::string_view name) const;

  bool operator==(const StateTable& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, StateId> index_;
};

class KripkeStructure {
 public:
  KripkeStructure() = default;
  /// Edges are deduplicated. `sdelta` marks a structure produced by
  /// deadlock_extension; only then may the δ proposition appear, and only on
  /// that state.
  KripkeStructure(std::vector<std::string> names, std::vector<Label> labels,
                  std::vector<std::pair<StateId, StateId>> edges,
                  std::optional<StateId> sdelta = std::nullopt);

  std::size_t size() const { return states_.size(); }
  const StateTable& states() const { return states_; }
  const std::string& name(StateId s) const { return states_.name(s); }
  StateId index_of(std::string_view name) const { return states_.index_of(name); }

  const Label& label(StateId s) const { return labels_.at(s); }
  std::span<const StateId> successors(StateId s) const { return succ_.at(s); }
  std::span<const StateId> predecessors(StateId s) const { return pred_.at(s); }
  const std::vector<std::pair<StateId, StateId>>& edges() const { return edges_; }
  bool is_deadlock(StateId s) const { return succ_.at(s).empty(); }

  /// Union of all labels, sorted.
  std::vector<std::string> propositions() const;

  bool is_deadlock_extension() const { return sdelta_.has_value(); }
  std::optional<StateId> sdelta() const { return sdelta_; }

  bool operator==(const KripkeStructure& other) const;

 private:
  StateTable states_;
  std::vector<Label> labels_;
  std::vector<std::pair<StateId, StateId>> edges_;
  std::vector<std::vector<StateId>> succ_;
  std::vector<std::vector<StateId>> pred_;
  std::optional<StateId> sdelta_;
};

struct Transition {
  StateId src;
  ActionId action;
  StateId dst;

  auto operator<=>(const Transition&) const = default;
};

class Lts {
 public:
  Lts();
  /// Transitions name their action; unknown actions are registered in
  /// first-use order after τ. Duplicates collapse.
  Lts(std::vector<std::string> names,
      const std::vector<std::tuple<StateId, std::string, StateId>>& transitions,
      std::vector<std::string> extra_actions = {});

  std::size_t size() const { return states_.size(); }
  const StateTable& states() const { return states_; }
  const std::string& name(StateId s) const { return states_.name(s); }
  StateId index_of(std::string_view name) const { return states_.index_of(name); }

  const std::vector<std::string>& actions() const { return actions_; }
  const std::string& action_name(ActionId a) const { return actions_.at(a); }
  std::optional<ActionId> find_action(std::string_view name) const;
  static constexpr ActionId tau() { return 0; }

  const std::vector<Transition>& transitions() const { return transitions_; }
  /// Outgoing transitions of `s`, sorted by (action, dst).
  std::span<const Transition> out(StateId s) const;
  bool is_deadlock(StateId s) const { return out(s).empty(); }

  bool operator==(const Lts& other) const;

 private:
  StateTable states_;
  std::vector<std::string> actions_;
  std::vector<Transition> transitions_;
  std::vector<std::size_t> offsets_;
};

/// A state graph carrying both a state labelling and action labels.
class DoublyLabelledTS {
 public:
  DoublyLabelledTS() = default;
  DoublyLabelledTS(Lts transitions, std::vector<Label> labels);

  std::size_t size() const { return lts_.size(); }
  const Lts& lts() const { return lts_; }
  const Label& label(StateId s) const { return labels_.at(s); }
  const std::vector<Label>& labels() const { return labels_; }
  const std::string& name(StateId s) const { return lts_.name(s); }

  bool operator==(const DoublyLabelledTS& other) const = default;

 private:
  Lts lts_;
  std::vector<Label> labels_;
};

KripkeStructure associated_ks(const DoublyLabelledTS& d);
Lts associated_lts(const DoublyLabelledTS& d);

struct ConsistencyViolation {
  enum class Condition { I, II, III };
  Condition condition;
  /// One transition for condition (i), two for (ii) and (iii).
  std::vector<Transition> witnesses;
};

struct ConsistencyReport {
  bool consistent = true;
  std::vector<ConsistencyViolation> violations;
};

ConsistencyReport check_consistency(const DoublyLabelledTS& d);

std::vector<StateId> deadlock_states(const KripkeStructure& k);
std::vector<StateId> deadlock_states(const Lts& l);

/// A finite or ultimately periodic path through a Kripke structure.
struct Path {
  enum class Kind { Finite, Lasso };
  Kind kind = Kind::Finite;
  std::vector<StateId> stem;
  std::vector<StateId> cycle;  // empty iff kind == Finite; the cycle closes onto its first state
};

/// Throws ModelError if consecutive states are not connected, or the cycle
/// does not close.
void validate_path(const KripkeStructure& k, const Path& p);
/// A finite path is maximal iff it ends in a deadlock; a lasso always is.
bool is_maximal(const KripkeStructure& k, const Path& p);

}  // namespace dtk

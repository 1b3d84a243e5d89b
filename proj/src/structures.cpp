#include "dtk/structures.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dtk {

Label make_label(std::vector<std::string> props) {
  std::sort(props.begin(), props.end());
  props.erase(std::unique(props.begin(), props.end()), props.end());
  return props;
}

StateTable::StateTable(std::vector<std::string> names) : names_(std::move(names)) {
  index_.reserve(names_.size());
  for (StateId i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], i).second)
      throw ModelError("duplicate state id '" + names_[i] + "'");
  }
}

std::optional<StateId> StateTable::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

StateId StateTable::index_of(std::string_view name) const {
  if (auto s = find(name)) return *s;
  throw ModelError("unknown state '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------

KripkeStructure::KripkeStructure(std::vector<std::string> names, std::vector<Label> labels,
                                 std::vector<std::pair<StateId, StateId>> edges,
                                 std::optional<StateId> sdelta)
    : states_(std::move(names)), labels_(std::move(labels)), edges_(std::move(edges)),
      sdelta_(sdelta) {
  const auto n = states_.size();
  if (labels_.size() != n) throw ModelError("label count does not match state count");
  for (auto& l : labels_) l = make_label(std::move(l));
  if (sdelta_ && *sdelta_ >= n) throw ModelError("s_delta index out of range");
  for (StateId s = 0; s < n; ++s) {
    for (const auto& p : labels_[s]) {
      if (p.empty()) throw ModelError("empty proposition name");
      if (p == kDelta && sdelta_ != s)
        throw ModelError("proposition 'delta' is reserved for deadlock extensions");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  succ_.assign(n, {});
  pred_.assign(n, {});
  for (auto [a, b] : edges_) {
    if (a >= n || b >= n) throw ModelError("edge endpoint out of range");
    succ_[a].push_back(b);
    pred_[b].push_back(a);
  }
}

std::vector<std::string> KripkeStructure::propositions() const {
  std::set<std::string> all;
  for (const auto& l : labels_) all.insert(l.begin(), l.end());
  return {all.begin(), all.end()};
}

bool KripkeStructure::operator==(const KripkeStructure& other) const {
  return states_ == other.states_ && labels_ == other.labels_ && edges_ == other.edges_ &&
         sdelta_ == other.sdelta_;
}

// ---------------------------------------------------------------------------

Lts::Lts() : actions_{std::string(kTau)}, offsets_{0} {}

Lts::Lts(std::vector<std::string> names,
         const std::vector<std::tuple<StateId, std::string, StateId>>& transitions,
         std::vector<std::string> extra_actions)
    : states_(std::move(names)), actions_{std::string(kTau)} {
  std::map<std::string, ActionId, std::less<>> ids{{std::string(kTau), 0}};
  auto intern = [&](const std::string& a) {
    if (a.empty()) throw ModelError("empty action name");
    auto [it, fresh] = ids.emplace(a, static_cast<ActionId>(actions_.size()));
    if (fresh) actions_.push_back(a);
    return it->second;
  };
  const auto n = states_.size();
  transitions_.reserve(transitions.size());
  for (const auto& [s, a, t] : transitions) {
    if (s >= n || t >= n) throw ModelError("transition endpoint out of range");
    transitions_.push_back({s, intern(a), t});
  }
  for (const auto& a : extra_actions) intern(a);
  std::sort(transitions_.begin(), transitions_.end());
  transitions_.erase(std::unique(transitions_.begin(), transitions_.end()), transitions_.end());
  offsets_.assign(n + 1, 0);
  for (const auto& tr : transitions_) ++offsets_[tr.src + 1];
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
}

std::optional<ActionId> Lts::find_action(std::string_view name) const {
  for (ActionId a = 0; a < actions_.size(); ++a)
    if (actions_[a] == name) return a;
  return std::nullopt;
}

std::span<const Transition> Lts::out(StateId s) const {
  if (s >= size()) throw ModelError("state index out of range");
  return {transitions_.data() + offsets_[s], transitions_.data() + offsets_[s + 1]};
}

bool Lts::operator==(const Lts& other) const {
  if (!(states_ == other.states_) || transitions_.size() != other.transitions_.size())
    return false;
  // Action numbering is an artefact of construction order; compare by name.
  auto named = [](const Lts& l) {
    std::vector<std::tuple<StateId, std::string, StateId>> v;
    for (const auto& t : l.transitions_) v.emplace_back(t.src, l.actions_[t.action], t.dst);
    std::sort(v.begin(), v.end());
    return v;
  };
  auto acts = [](const Lts& l) {
    auto v = l.actions_;
    std::sort(v.begin(), v.end());
    return v;
  };
  return named(*this) == named(other) && acts(*this) == acts(other);
}

// ---------------------------------------------------------------------------

DoublyLabelledTS::DoublyLabelledTS(Lts transitions, std::vector<Label> labels)
    : lts_(std::move(transitions)), labels_(std::move(labels)) {
  if (labels_.size() != lts_.size()) throw ModelError("label count does not match state count");
  for (auto& l : labels_) l = make_label(std::move(l));
}

KripkeStructure associated_ks(const DoublyLabelledTS& d) {
  std::vector<std::pair<StateId, StateId>> edges;
  for (const auto& t : d.lts().transitions()) edges.emplace_back(t.src, t.dst);
  return KripkeStructure(d.lts().states().names(), d.labels(), std::move(edges));
}

Lts associated_lts(const DoublyLabelledTS& d) { return d.lts(); }

ConsistencyReport check_consistency(const DoublyLabelledTS& d) {
  ConsistencyReport report;
  const auto& trans = d.lts().transitions();
  using C = ConsistencyViolation::Condition;
  for (const auto& t : trans) {
    bool same = d.label(t.src) == d.label(t.dst);
    if (same != (t.action == Lts::tau())) report.violations.push_back({C::I, {t}});
  }
  for (std::size_t i = 0; i < trans.size(); ++i) {
    for (std::size_t j = i + 1; j < trans.size(); ++j) {
      const auto& x = trans[i];
      const auto& y = trans[j];
      if (d.label(x.src) != d.label(y.src)) continue;
      bool same_target = d.label(x.dst) == d.label(y.dst);
      if (x.action == y.action && !same_target) report.violations.push_back({C::II, {x, y}});
      if (same_target && x.action != y.action) report.violations.push_back({C::III, {x, y}});
    }
  }
  report.consistent = report.violations.empty();
  return report;
}

std::vector<StateId> deadlock_states(const KripkeStructure& k) {
  std::vector<StateId> out;
  for (StateId s = 0; s < k.size(); ++s)
    if (k.is_deadlock(s)) out.push_back(s);
  return out;
}

std::vector<StateId> deadlock_states(const Lts& l) {
  std::vector<StateId> out;
  for (StateId s = 0; s < l.size(); ++s)
    if (l.is_deadlock(s)) out.push_back(s);
  return out;
}

// ---------------------------------------------------------------------------

namespace {
bool has_edge(const KripkeStructure& k, StateId a, StateId b) {
  auto succ = k.successors(a);
  return std::binary_search(succ.begin(), succ.end(), b);
}
}  // namespace

void validate_path(const KripkeStructure& k, const Path& p) {
  if (p.stem.empty()) throw ModelError("path stem must be nonempty");
  if ((p.kind == Path::Kind::Lasso) == p.cycle.empty())
    throw ModelError("a lasso needs a nonempty cycle and a finite path none");
  auto check = [&](StateId s) {
    if (s >= k.size()) throw ModelError("path state out of range");
  };
  for (auto s : p.stem) check(s);
  for (auto s : p.cycle) check(s);
  for (std::size_t i = 0; i + 1 < p.stem.size(); ++i)
    if (!has_edge(k, p.stem[i], p.stem[i + 1])) throw ModelError("path uses a missing edge");
  if (p.kind == Path::Kind::Lasso) {
    if (!has_edge(k, p.stem.back(), p.cycle.front()))
      throw ModelError("path uses a missing edge");
    for (std::size_t i = 0; i < p.cycle.size(); ++i)
      if (!has_edge(k, p.cycle[i], p.cycle[(i + 1) % p.cycle.size()]))
        throw ModelError("lasso cycle does not close");
  }
}

bool is_maximal(const KripkeStructure& k, const Path& p) {
  return p.kind == Path::Kind::Lasso || k.is_deadlock(p.stem.back());
}

}  // namespace dtk

#include <algorithm>

#include "dtk/logic.hpp"

namespace dtk {

ModelChecker::ModelChecker(const KripkeStructure& k, Semantics sem) : k_(k), sem_(sem) {}

const std::vector<bool>& ModelChecker::sat(const StateFormula& f) {
  if (auto it = memo_.find(f.node()); it != memo_.end()) return it->second.second;
  auto bits = compute(f);
  // Keep the formula alive so its node address cannot be reused.
  return memo_.emplace(f.node(), std::make_pair(f, std::move(bits))).first->second.second;
}

std::vector<bool> ModelChecker::compute(const StateFormula& f) {
  using K = StateFormula::Kind;
  const auto n = k_.size();
  switch (f.kind()) {
    case K::Prop: {
      if (f.name() == kDelta && !k_.is_deadlock_extension())
        throw ModelError("'delta' may only be checked on a deadlock extension");
      std::vector<bool> out(n);
      for (StateId s = 0; s < n; ++s) {
        const auto& l = k_.label(s);
        out[s] = std::binary_search(l.begin(), l.end(), f.name());
      }
      return out;
    }
    case K::Not: {
      auto out = sat(f.arg(0));
      out.flip();
      return out;
    }
    case K::And: {
      std::vector<bool> out(n, true);
      for (const auto& a : f.args()) {
        const auto& b = sat(a);
        for (StateId s = 0; s < n; ++s) out[s] = out[s] && b[s];
      }
      return out;
    }
    case K::ExistsUntil: {
      auto lhs = sat(f.arg(0));
      return until(lhs, sat(f.arg(1)));
    }
    case K::ExistsGInf: return g_inf(sat(f.arg(0)));
    case K::ExistsG:
      if (sem_ == Semantics::DivergenceBlind) return sat(f.arg(0));
      return g_max(sat(f.arg(0)));
  }
  return {};
}

std::vector<bool> ModelChecker::until(const std::vector<bool>& f, const std::vector<bool>& g) const {
  auto x = g;
  std::vector<StateId> work;
  for (StateId s = 0; s < k_.size(); ++s)
    if (x[s]) work.push_back(s);
  while (!work.empty()) {
    auto s = work.back();
    work.pop_back();
    for (auto p : k_.predecessors(s)) {
      if (!x[p] && f[p]) {
        x[p] = true;
        work.push_back(p);
      }
    }
  }
  return x;
}

namespace {
// Greatest X within `f` where each member has a successor in X, or is a
// deadlock when `deadlocks_stay` is set.
std::vector<bool> greatest(const KripkeStructure& k, const std::vector<bool>& f,
                           bool deadlocks_stay) {
  const auto n = k.size();
  auto x = f;
  std::vector<std::size_t> count(n, 0);
  std::vector<StateId> work;
  for (StateId s = 0; s < n; ++s)
    if (x[s])
      for (auto t : k.successors(s))
        if (x[t]) ++count[s];
  for (StateId s = 0; s < n; ++s)
    if (x[s] && count[s] == 0 && !(deadlocks_stay && k.is_deadlock(s))) {
      x[s] = false;
      work.push_back(s);
    }
  while (!work.empty()) {
    auto s = work.back();
    work.pop_back();
    for (auto p : k.predecessors(s)) {
      if (x[p] && --count[p] == 0) {
        x[p] = false;
        work.push_back(p);
      }
    }
  }
  return x;
}
}  // namespace

std::vector<bool> ModelChecker::g_inf(const std::vector<bool>& f) const {
  return greatest(k_, f, false);
}

std::vector<bool> ModelChecker::g_max(const std::vector<bool>& f) const {
  return greatest(k_, f, true);
}

std::vector<StateId> sat(const KripkeStructure& k, const StateFormula& f, Semantics sem) {
  ModelChecker mc(k, sem);
  const auto& bits = mc.sat(f);
  std::vector<StateId> out;
  for (StateId s = 0; s < k.size(); ++s)
    if (bits[s]) out.push_back(s);
  return out;
}

bool check(const KripkeStructure& k, StateId s, const StateFormula& f, Semantics sem) {
  if (s >= k.size()) throw ModelError("state index out of range");
  ModelChecker mc(k, sem);
  return mc.holds(s, f);
}

bool check(const KripkeStructure& k, std::string_view s, const StateFormula& f, Semantics sem) {
  return check(k, k.index_of(s), f, sem);
}

bool sdelta_eval(const StateFormula& f) {
  using K = StateFormula::Kind;
  switch (f.kind()) {
    case K::Prop: return f.name() == kDelta;
    case K::Not: return !sdelta_eval(f.arg(0));
    case K::And:
      for (const auto& a : f.args())
        if (!sdelta_eval(a)) return false;
      return true;
    case K::ExistsUntil: return sdelta_eval(f.arg(1));
    case K::ExistsG:
    case K::ExistsGInf: return sdelta_eval(f.arg(0));
  }
  return false;
}

}  // namespace dtk

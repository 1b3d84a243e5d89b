#include "dtk/transforms.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "dtk/logic.hpp"

namespace dtk {

namespace {
std::string unused_name(const std::string& base, const std::set<std::string>& taken) {
  if (!taken.count(base)) return base;
  for (std::size_t i = 0;; ++i) {
    auto candidate = base + "_" + std::to_string(i);
    if (!taken.count(candidate)) return candidate;
  }
}
}  // namespace

EtaResult eta_midpoint(const Lts& l) {
  std::set<std::string> actions(l.actions().begin(), l.actions().end());
  if (actions.count(std::string(kDelta)))
    throw ModelError("action 'delta' cannot become a state label");
  EtaResult r;
  r.dummy = unused_name("st", actions);

  std::vector<std::string> names = l.states().names();
  std::set<std::string> taken(names.begin(), names.end());
  std::vector<Label> labels(names.size(), Label{r.dummy});
  std::vector<std::tuple<StateId, std::string, StateId>> trans;
  for (const auto& t : l.transitions()) {
    const auto& a = l.action_name(t.action);
    if (t.action == Lts::tau()) {
      trans.emplace_back(t.src, a, t.dst);
      continue;
    }
    auto mid = unused_name("m." + l.name(t.src) + "." + a + "." + l.name(t.dst), taken);
    taken.insert(mid);
    auto m = static_cast<StateId>(names.size());
    names.push_back(mid);
    labels.push_back(Label{a});
    trans.emplace_back(t.src, a, m);
    trans.emplace_back(m, a, t.dst);
  }
  for (StateId s = 0; s < l.size(); ++s) r.injection.push_back(s);
  r.l2ts = DoublyLabelledTS(Lts(std::move(names), trans, l.actions()), std::move(labels));
  return r;
}

DoublyLabelledTS ks_to_l2ts(const KripkeStructure& k) {
  auto action_for = [](const Label& target) {
    std::string name = "to";
    for (const auto& p : target) {
      name += '.';
      for (char c : p) {
        if (c == '_')
          name += "__";
        else if (c == '.')
          name += "_d";
        else
          name += c;
      }
    }
    return name;
  };
  std::vector<std::tuple<StateId, std::string, StateId>> trans;
  for (auto [s, t] : k.edges()) {
    if (k.label(s) == k.label(t))
      trans.emplace_back(s, std::string(kTau), t);
    else
      trans.emplace_back(s, action_for(k.label(t)), t);
  }
  std::vector<Label> labels;
  for (StateId s = 0; s < k.size(); ++s) labels.push_back(k.label(s));
  return DoublyLabelledTS(Lts(k.states().names(), trans), std::move(labels));
}

DeadlockExtension deadlock_extension(const KripkeStructure& k) {
  if (k.is_deadlock_extension()) throw ModelError("structure is already a deadlock extension");
  for (StateId s = 0; s < k.size(); ++s)
    for (const auto& p : k.label(s))
      if (p == kDelta) throw ModelError("proposition 'delta' already in use");
  auto names = k.states().names();
  std::set<std::string> taken(names.begin(), names.end());
  const auto sd = static_cast<StateId>(names.size());
  names.push_back(unused_name("s_delta", taken));
  std::vector<Label> labels;
  for (StateId s = 0; s < k.size(); ++s) labels.push_back(k.label(s));
  labels.push_back(Label{std::string(kDelta)});
  auto edges = k.edges();
  for (auto d : deadlock_states(k)) edges.emplace_back(d, sd);
  edges.emplace_back(sd, sd);
  return {KripkeStructure(std::move(names), std::move(labels), std::move(edges), sd), sd};
}

namespace {
KripkeStructure with_selfloops(const KripkeStructure& k, bool everywhere) {
  auto edges = k.edges();
  for (StateId s = 0; s < k.size(); ++s)
    if (everywhere || k.is_deadlock(s)) edges.emplace_back(s, s);
  std::vector<Label> labels;
  for (StateId s = 0; s < k.size(); ++s) labels.push_back(k.label(s));
  return KripkeStructure(k.states().names(), std::move(labels), std::move(edges), k.sdelta());
}
}  // namespace

KripkeStructure totalize_deadlock_selfloops(const KripkeStructure& k) {
  return with_selfloops(k, false);
}

KripkeStructure totalize_all_selfloops(const KripkeStructure& k) { return with_selfloops(k, true); }

namespace {

using F = StateFormula;
using Kind = StateFormula::Kind;

// Holds the source formula too, so node addresses stay unique.
using Memo = std::map<const void*, std::pair<F, F>>;

F delta() { return F::prop(std::string(kDelta)); }

F encode_d(const F& f, Memo& memo) {
  if (auto it = memo.find(f.node()); it != memo.end()) return it->second.second;
  auto rec = [&](const F& g) { return encode_d(g, memo); };
  F out = F::top();
  switch (f.kind()) {
    case Kind::Prop:
      if (f.name() == kDelta) throw std::invalid_argument("input formula mentions delta");
      out = f;
      break;
    case Kind::Not: out = F::conj(F::neg(delta()), F::neg(rec(f.arg(0)))); break;
    case Kind::And: {
      std::vector<F> parts;
      for (const auto& a : f.args()) parts.push_back(rec(a));
      out = F::conj(std::move(parts));
      break;
    }
    case Kind::ExistsUntil: out = F::exists_until(rec(f.arg(0)), rec(f.arg(1))); break;
    case Kind::ExistsGInf: out = F::exists_g(F::conj(F::neg(delta()), rec(f.arg(0)))); break;
    case Kind::ExistsG: {
      // EG phi = EGinf phi | E(phi U AG phi)
      const auto& phi = f.arg(0);
      out = rec(F::disj(F::exists_g_inf(phi), F::exists_until(phi, F::ag(phi))));
      break;
    }
  }
  memo.emplace(f.node(), std::make_pair(f, out));
  return out;
}

F encode_e(const F& f, Memo& memo) {
  if (auto it = memo.find(f.node()); it != memo.end()) return it->second.second;
  auto rec = [&](const F& g) { return encode_e(g, memo); };
  F out = F::top();
  switch (f.kind()) {
    case Kind::Prop: out = f.name() == kDelta ? F::bottom() : f; break;
    case Kind::Not: out = F::neg(rec(f.arg(0))); break;
    case Kind::And: {
      std::vector<F> parts;
      for (const auto& a : f.args()) parts.push_back(rec(a));
      out = F::conj(std::move(parts));
      break;
    }
    case Kind::ExistsUntil: {
      auto lhs = rec(f.arg(0));
      auto direct = F::exists_until(lhs, rec(f.arg(1)));
      if (sdelta_eval(f.arg(1))) {
        // The path may also run into a deadlock and on into the delta sink.
        auto stuck = F::conj(F::neg(F::exists_g_inf(F::top())), F::exists_g(lhs));
        out = F::disj(direct, F::exists_until(lhs, stuck));
      } else {
        out = direct;
      }
      break;
    }
    case Kind::ExistsG:
    case Kind::ExistsGInf: {
      // The extension is total, so both operators mean the same there.
      auto inner = rec(f.arg(0));
      out = sdelta_eval(f.arg(0)) ? F::exists_g(inner) : F::exists_g_inf(inner);
      break;
    }
  }
  memo.emplace(f.node(), std::make_pair(f, out));
  return out;
}

}  // namespace

StateFormula encode_D(const StateFormula& f) {
  Memo memo;
  return encode_d(f, memo);
}

StateFormula encode_E(const StateFormula& f) {
  Memo memo;
  return encode_e(f, memo);
}

}  // namespace dtk

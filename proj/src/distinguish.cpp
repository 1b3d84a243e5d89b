#include <algorithm>
#include <map>

#include "dtk/logic.hpp"

namespace dtk {

namespace {

// A literal true on label `a` and false on label `b` (a != b).
StateFormula separating_literal(const Label& a, const Label& b) {
  for (const auto& p : a)
    if (!std::binary_search(b.begin(), b.end(), p)) return StateFormula::prop(p);
  for (const auto& p : b)
    if (!std::binary_search(a.begin(), a.end(), p))
      return StateFormula::neg(StateFormula::prop(p));
  throw std::logic_error("labels are equal");
}

// Builds, for every round of the refinement, a formula characterising each
// block exactly. A block split in round i is told apart from its siblings by
// the first signature difference, expressed through the round-i formulas.
class Characteriser {
 public:
  Characteriser(const KripkeStructure& k, EquivVariant v)
      : k_(k), v_(v), history_(refinement_history(k, v)) {}

  const std::vector<Partition>& history() const { return history_; }

  // True on every state sharing s's round-(i+1) block, false on t's, where s
  // and t share a round-i block. For i+1 == 0 the states differ in label.
  StateFormula separate(std::size_t next_round, StateId s, StateId t) {
    if (next_round == 0) return separating_literal(k_.label(s), k_.label(t));
    const auto i = next_round - 1;
    const auto& sig = sigs(i);
    const auto& a = sig[s];
    const auto& b = sig[t];
    const auto inside = chi(i, history_[i].block_of(s));
    auto reach = [&](BlockId target) {
      return StateFormula::exists_until(inside, chi(i, target));
    };
    for (const auto& o : a.obs)
      if (!std::binary_search(b.obs.begin(), b.obs.end(), o)) return reach(o.second);
    for (const auto& o : b.obs)
      if (!std::binary_search(a.obs.begin(), a.obs.end(), o))
        return StateFormula::neg(reach(o.second));
    if (a.divergent != b.divergent) {
      auto f = StateFormula::exists_g_inf(inside);
      return a.divergent ? f : StateFormula::neg(f);
    }
    if (a.can_complete != b.can_complete) {
      auto f = StateFormula::exists_g(inside);
      return a.can_complete ? f : StateFormula::neg(f);
    }
    throw std::logic_error("states split without a signature difference");
  }

  StateFormula chi(std::size_t round, BlockId block) {
    auto key = std::make_pair(round, block);
    if (auto it = chi_.find(key); it != chi_.end()) return it->second;
    const auto& p = history_[round];
    const auto rep = p.blocks()[block].front();
    std::vector<StateFormula> parts;
    if (round == 0) {
      for (const auto& members : p.blocks())
        if (members.front() != rep) parts.push_back(separate(0, rep, members.front()));
    } else {
      const auto& prev = history_[round - 1];
      parts.push_back(chi(round - 1, prev.block_of(rep)));
      for (const auto& members : p.blocks()) {
        auto other = members.front();
        if (other != rep && prev.same_block(rep, other))
          parts.push_back(separate(round, rep, other));
      }
    }
    auto f = StateFormula::conj(std::move(parts));
    chi_.emplace(key, f);
    return f;
  }

 private:
  const std::vector<Signature>& sigs(std::size_t round) {
    auto it = sigs_.find(round);
    if (it == sigs_.end()) it = sigs_.emplace(round, signatures(k_, history_[round], v_)).first;
    return it->second;
  }

  const KripkeStructure& k_;
  EquivVariant v_;
  std::vector<Partition> history_;
  std::map<std::size_t, std::vector<Signature>> sigs_;
  std::map<std::pair<std::size_t, BlockId>, StateFormula> chi_;
};

}  // namespace

std::optional<StateFormula> distinguish(const KripkeStructure& k, StateId s, StateId t,
                                        EquivVariant v) {
  if (s >= k.size() || t >= k.size()) throw ModelError("state index out of range");
  Characteriser c(k, v);
  const auto& h = c.history();
  for (std::size_t r = 0; r < h.size(); ++r) {
    if (h[r].same_block(s, t)) continue;
    // Rounds only refine, so r is the round in which they were first split.
    // Separating representatives is enough: the formula is uniform on blocks.
    return c.separate(r, s, t);
  }
  return std::nullopt;
}

std::optional<StateFormula> distinguish(const KripkeStructure& k, std::string_view s,
                                        std::string_view t, EquivVariant v) {
  return distinguish(k, k.index_of(s), k.index_of(t), v);
}

std::vector<StateFormula> enumerate_formulas(const std::vector<std::string>& props,
                                             unsigned depth, std::size_t budget) {
  using F = StateFormula;
  std::vector<F> all;
  auto full = [&] { return all.size() >= budget; };
  auto add = [&](F f) {
    if (!full()) all.push_back(std::move(f));
  };

  add(F::top());
  for (const auto& p : props) add(F::prop(p));
  add(F::bottom());
  for (const auto& p : props) add(F::neg(F::prop(p)));

  std::size_t prev_begin = 0;  // formulas of exactly the previous depth start here
  for (unsigned d = 1; d <= depth && !full(); ++d) {
    const auto prev_end = all.size();
    const std::vector<F> below(all.begin(), all.end());
    auto exact = [&](std::size_t i) { return i >= prev_begin; };
    for (std::size_t i = prev_begin; i < prev_end && !full(); ++i) {
      if (d >= 2) add(F::neg(below[i]));
      add(F::exists_g(below[i]));
      add(F::exists_g_inf(below[i]));
    }
    for (std::size_t i = 0; i < prev_end && !full(); ++i)
      for (std::size_t j = 0; j < prev_end && !full(); ++j)
        if (exact(i) || exact(j)) add(F::exists_until(below[i], below[j]));
    for (std::size_t i = 0; i < prev_end && !full(); ++i)
      for (std::size_t j = i + 1; j < prev_end && !full(); ++j)
        if (exact(i) || exact(j)) add(F::conj(below[i], below[j]));
    prev_begin = prev_end;
  }
  return all;
}

}  // namespace dtk

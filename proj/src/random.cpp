#include "dtk/random.hpp"

namespace dtk {

namespace {
std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}
bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::vector<std::string> state_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("s" + std::to_string(i));
  return out;
}

std::vector<std::string> letters(const char* base, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(1, static_cast<char>(base[0] + i));
  return out;
}
}  // namespace

std::vector<std::string> action_names(std::size_t n) { return letters("a", n); }
std::vector<std::string> prop_names(std::size_t n) { return letters("p", n); }

Lts random_lts(Rng& rng, std::size_t max_states, std::size_t num_actions) {
  const auto n = pick(rng, 1, max_states);
  const auto acts = action_names(num_actions);
  std::vector<std::tuple<StateId, std::string, StateId>> trans;
  const auto m = pick(rng, 0, 2 * n);
  for (std::size_t i = 0; i < m; ++i) {
    auto s = static_cast<StateId>(pick(rng, 0, n - 1));
    auto t = static_cast<StateId>(pick(rng, 0, n - 1));
    std::string a = acts.empty() || coin(rng, 0.4) ? std::string(kTau) : acts[pick(rng, 0, acts.size() - 1)];
    trans.emplace_back(s, a, t);
  }
  return Lts(state_names(n), trans);
}

KripkeStructure random_ks(Rng& rng, std::size_t max_states, std::size_t num_props) {
  const auto n = pick(rng, 1, max_states);
  const auto props = prop_names(num_props);
  std::vector<Label> labels(n);
  for (auto& l : labels)
    for (const auto& p : props)
      if (coin(rng, 0.5)) l.push_back(p);
  std::vector<std::pair<StateId, StateId>> edges;
  const auto m = pick(rng, 0, 2 * n);
  for (std::size_t i = 0; i < m; ++i)
    edges.emplace_back(static_cast<StateId>(pick(rng, 0, n - 1)),
                       static_cast<StateId>(pick(rng, 0, n - 1)));
  return KripkeStructure(state_names(n), std::move(labels), std::move(edges));
}

StateFormula random_formula(Rng& rng, const std::vector<std::string>& props, unsigned depth,
                            bool allow_ginf) {
  using F = StateFormula;
  auto leaf = [&]() -> F {
    auto i = pick(rng, 0, props.size() + 1);
    if (i == props.size()) return F::top();
    if (i == props.size() + 1) return F::bottom();
    return F::prop(props[i]);
  };
  if (depth == 0 || coin(rng, 0.2)) return leaf();
  auto sub = [&] { return random_formula(rng, props, depth - 1, allow_ginf); };
  switch (pick(rng, 0, allow_ginf ? 5 : 4)) {
    case 0: return F::neg(sub());
    case 1: {
      auto a = sub();
      return F::conj(a, sub());
    }
    case 2: {
      auto a = sub();
      return F::exists_until(a, sub());
    }
    case 3: return F::exists_g(sub());
    case 4: {
      auto a = sub();
      return F::disj(a, sub());
    }
    default: return F::exists_g_inf(sub());
  }
}

PathFormula random_path_formula(Rng& rng, const std::vector<std::string>& props, unsigned depth,
                                bool allow_infinity) {
  using P = PathFormula;
  auto leaf = [&]() -> P {
    auto i = pick(rng, 0, props.size() + (allow_infinity ? 1 : 0));
    if (i == props.size()) return P::top();
    if (i == props.size() + 1) return P::infinity();
    return P::prop(props[i]);
  };
  if (depth == 0 || coin(rng, 0.2)) return leaf();
  auto sub = [&] { return random_path_formula(rng, props, depth - 1, allow_infinity); };
  switch (pick(rng, 0, 3)) {
    case 0: return P::neg(sub());
    case 1: {
      auto a = sub();
      return P::conj(a, sub());
    }
    case 2: {
      auto a = sub();
      return P::disj({a, sub()});
    }
    default: {
      auto a = sub();
      return P::until(a, sub());
    }
  }
}

}  // namespace dtk

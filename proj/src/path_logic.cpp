#include <algorithm>
#include <optional>

#include "dtk/linear.hpp"

namespace dtk {

namespace {

// Positions 0..m-1 of the path; a lasso's last position steps back to the
// first cycle position, a finite path's last position has no successor.
struct Positions {
  std::vector<StateId> state;
  std::vector<std::optional<std::size_t>> next;
};

Positions positions(const Path& p) {
  Positions out;
  out.state = p.stem;
  out.state.insert(out.state.end(), p.cycle.begin(), p.cycle.end());
  const auto m = out.state.size();
  for (std::size_t i = 0; i + 1 < m; ++i) out.next.emplace_back(i + 1);
  if (p.kind == Path::Kind::Lasso)
    out.next.emplace_back(p.stem.size());
  else
    out.next.emplace_back(std::nullopt);
  return out;
}

std::vector<bool> eval(const PathFormula& f, const KripkeStructure& k, const Positions& pos,
                       bool infinite) {
  using K = PathFormula::Kind;
  const auto m = pos.state.size();
  switch (f.kind()) {
    case K::Prop: {
      std::vector<bool> out(m);
      for (std::size_t i = 0; i < m; ++i) {
        const auto& l = k.label(pos.state[i]);
        out[i] = std::binary_search(l.begin(), l.end(), f.name());
      }
      return out;
    }
    case K::Infinity: return std::vector<bool>(m, infinite);
    case K::Not: {
      auto out = eval(f.arg(0), k, pos, infinite);
      out.flip();
      return out;
    }
    case K::And: {
      std::vector<bool> out(m, true);
      for (const auto& a : f.args()) {
        auto b = eval(a, k, pos, infinite);
        for (std::size_t i = 0; i < m; ++i) out[i] = out[i] && b[i];
      }
      return out;
    }
    case K::Until: {
      // Least fixpoint of X = g | (f & next X) over the position graph.
      auto lhs = eval(f.arg(0), k, pos, infinite);
      auto out = eval(f.arg(1), k, pos, infinite);
      for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = m; i-- > 0;) {
          if (out[i] || !lhs[i] || !pos.next[i] || !out[*pos.next[i]]) continue;
          out[i] = true;
          changed = true;
        }
      }
      return out;
    }
  }
  return {};
}

}  // namespace

bool eval_path_formula(const PathFormula& f, const KripkeStructure& k, const Path& p) {
  validate_path(k, p);
  if (!is_maximal(k, p)) throw ModelError("path is not maximal");
  auto pos = positions(p);
  return eval(f, k, pos, p.kind == Path::Kind::Lasso).front();
}

}  // namespace dtk

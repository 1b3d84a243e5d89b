#include "dtk/formula.hpp"

#include <functional>
#include <unordered_set>

namespace dtk {

StateFormula StateFormula::prop(std::string name) {
  return StateFormula(std::make_shared<const Node>(Node{Kind::Prop, std::move(name), {}}));
}

StateFormula StateFormula::neg(StateFormula f) {
  return StateFormula(std::make_shared<const Node>(Node{Kind::Not, {}, {std::move(f)}}));
}

StateFormula StateFormula::conj(std::vector<StateFormula> fs) {
  if (fs.size() == 1) return fs.front();
  return StateFormula(std::make_shared<const Node>(Node{Kind::And, {}, std::move(fs)}));
}

StateFormula StateFormula::exists_until(StateFormula f, StateFormula g) {
  return StateFormula(
      std::make_shared<const Node>(Node{Kind::ExistsUntil, {}, {std::move(f), std::move(g)}}));
}

StateFormula StateFormula::exists_g(StateFormula f) {
  return StateFormula(std::make_shared<const Node>(Node{Kind::ExistsG, {}, {std::move(f)}}));
}

StateFormula StateFormula::exists_g_inf(StateFormula f) {
  return StateFormula(std::make_shared<const Node>(Node{Kind::ExistsGInf, {}, {std::move(f)}}));
}

StateFormula StateFormula::disj(std::vector<StateFormula> fs) {
  if (fs.size() == 1) return fs.front();
  for (auto& f : fs) f = neg(std::move(f));
  return neg(conj(std::move(fs)));
}

StateFormula StateFormula::ef(StateFormula f) { return exists_until(top(), std::move(f)); }
StateFormula StateFormula::ag(StateFormula f) { return neg(ef(neg(std::move(f)))); }
StateFormula StateFormula::af(StateFormula f) { return neg(exists_g(neg(std::move(f)))); }

namespace {
template <class F, class Visit>
void walk(const F& root, Visit visit) {
  std::unordered_set<const void*> seen;
  std::function<void(const F&)> rec = [&](const F& f) {
    if (!seen.insert(f.node()).second) return;
    visit(f);
    for (const auto& a : f.args()) rec(a);
  };
  rec(root);
}
}  // namespace

std::set<std::string> StateFormula::propositions() const {
  std::set<std::string> out;
  walk(*this, [&](const StateFormula& f) {
    if (f.kind() == Kind::Prop) out.insert(f.name());
  });
  return out;
}

bool StateFormula::mentions(const std::string& p) const { return propositions().count(p) > 0; }

bool StateFormula::uses_ginf() const {
  bool found = false;
  walk(*this, [&](const StateFormula& f) { found = found || f.kind() == Kind::ExistsGInf; });
  return found;
}

std::size_t StateFormula::size() const {
  std::size_t n = 0;
  walk(*this, [&](const StateFormula&) { ++n; });
  return n;
}

std::string StateFormula::to_string() const {
  switch (kind()) {
    case Kind::Prop: return name();
    case Kind::Not:
      if (arg(0).is_top()) return "false";
      return "~" + arg(0).to_string();
    case Kind::And: {
      if (args().empty()) return "true";
      std::string out = "(";
      for (std::size_t i = 0; i < args().size(); ++i) {
        if (i) out += " & ";
        out += args()[i].to_string();
      }
      return out + ")";
    }
    case Kind::ExistsUntil:
      return "E (" + arg(0).to_string() + " U " + arg(1).to_string() + ")";
    case Kind::ExistsG: return "EG " + arg(0).to_string();
    case Kind::ExistsGInf: return "EGinf " + arg(0).to_string();
  }
  return {};
}

bool StateFormula::operator==(const StateFormula& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind() || name() != other.name() || args().size() != other.args().size())
    return false;
  for (std::size_t i = 0; i < args().size(); ++i)
    if (!(args()[i] == other.args()[i])) return false;
  return true;
}

// ---------------------------------------------------------------------------

PathFormula PathFormula::prop(std::string name) {
  return PathFormula(std::make_shared<const Node>(Node{Kind::Prop, std::move(name), {}}));
}

PathFormula PathFormula::neg(PathFormula f) {
  return PathFormula(std::make_shared<const Node>(Node{Kind::Not, {}, {std::move(f)}}));
}

PathFormula PathFormula::conj(std::vector<PathFormula> fs) {
  if (fs.size() == 1) return fs.front();
  return PathFormula(std::make_shared<const Node>(Node{Kind::And, {}, std::move(fs)}));
}

PathFormula PathFormula::until(PathFormula f, PathFormula g) {
  return PathFormula(
      std::make_shared<const Node>(Node{Kind::Until, {}, {std::move(f), std::move(g)}}));
}

PathFormula PathFormula::infinity() {
  return PathFormula(std::make_shared<const Node>(Node{Kind::Infinity, {}, {}}));
}

PathFormula PathFormula::disj(std::vector<PathFormula> fs) {
  if (fs.size() == 1) return fs.front();
  for (auto& f : fs) f = neg(std::move(f));
  return neg(conj(std::move(fs)));
}

bool PathFormula::uses_infinity() const {
  bool found = false;
  walk(*this, [&](const PathFormula& f) { found = found || f.kind() == Kind::Infinity; });
  return found;
}

std::string PathFormula::to_string() const {
  switch (kind()) {
    case Kind::Prop: return name();
    case Kind::Infinity: return "inf";
    case Kind::Not:
      if (arg(0).is_top()) return "false";
      return "~" + arg(0).to_string();
    case Kind::And: {
      if (args().empty()) return "true";
      std::string out = "(";
      for (std::size_t i = 0; i < args().size(); ++i) {
        if (i) out += " & ";
        out += args()[i].to_string();
      }
      return out + ")";
    }
    case Kind::Until: return "(" + arg(0).to_string() + " U " + arg(1).to_string() + ")";
  }
  return {};
}

bool PathFormula::operator==(const PathFormula& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind() || name() != other.name() || args().size() != other.args().size())
    return false;
  for (std::size_t i = 0; i < args().size(); ++i)
    if (!(args()[i] == other.args()[i])) return false;
  return true;
}

}  // namespace dtk

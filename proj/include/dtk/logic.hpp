#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dtk/equivalences.hpp"
#include "dtk/formula.hpp"
#include "dtk/structures.hpp"

namespace dtk {

class FormulaError : public std::runtime_error {
 public:
  FormulaError(std::size_t position, const std::string& what)
      : std::runtime_error("at " + std::to_string(position) + ": " + what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// phi ::= true | false | IDENT | ~phi | phi & phi | phi '|' phi
///       | E(phi U phi) | EG phi | EGinf phi | EF phi | AG phi | AF phi | (phi)
/// Precedence ~ (and the prefix operators) > & > |.
StateFormula parse_formula(std::string_view text);
/// psi ::= true | false | inf | IDENT | ~psi | psi & psi | psi '|' psi
///       | psi U psi | (psi)
/// U is right associative and binds weakest.
PathFormula parse_path_formula(std::string_view text);

/// DivergenceBlind drops the requirement that witnessing paths be maximal;
/// MaximalPath quantifies over maximal paths only.
enum class Semantics { DivergenceBlind, MaximalPath };

inline Semantics semantics_for(EquivVariant v) {
  return v == EquivVariant::DivergenceBlind ? Semantics::DivergenceBlind : Semantics::MaximalPath;
}

/// Bitset model checker that memoises satisfaction sets per subformula
/// node, so checking many formulas with shared parts stays cheap.
class ModelChecker {
 public:
  ModelChecker(const KripkeStructure& k, Semantics sem);

  const std::vector<bool>& sat(const StateFormula& f);
  bool holds(StateId s, const StateFormula& f) { return sat(f).at(s); }

 private:
  std::vector<bool> compute(const StateFormula& f);
  std::vector<bool> until(const std::vector<bool>& f, const std::vector<bool>& g) const;
  std::vector<bool> g_inf(const std::vector<bool>& f) const;
  std::vector<bool> g_max(const std::vector<bool>& f) const;

  const KripkeStructure& k_;
  Semantics sem_;
  std::map<const void*, std::pair<StateFormula, std::vector<bool>>> memo_;
};

/// Throws ModelError when `delta` is used on a structure that is not a
/// deadlock extension.
std::vector<StateId> sat(const KripkeStructure& k, const StateFormula& f, Semantics sem);
bool check(const KripkeStructure& k, StateId s, const StateFormula& f, Semantics sem);
bool check(const KripkeStructure& k, std::string_view s, const StateFormula& f, Semantics sem);

/// A formula true at s and false at t under semantics_for(v), or nothing if
/// the states are equivalent.
std::optional<StateFormula> distinguish(const KripkeStructure& k, StateId s, StateId t,
                                        EquivVariant v);
std::optional<StateFormula> distinguish(const KripkeStructure& k, std::string_view s,
                                        std::string_view t, EquivVariant v);

/// Formulas of generation depth <= depth over `props`, in a fixed order,
/// truncated at `budget`. Depth 0 holds the literals over true and props.
std::vector<StateFormula> enumerate_formulas(const std::vector<std::string>& props,
                                             unsigned depth, std::size_t budget);

/// Truth value at the fresh deadlock state of any deadlock extension.
bool sdelta_eval(const StateFormula& f);

}  // namespace dtk

#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace dtk {

/// Immutable CTL-level state formula over the basis p, ~, finite &, E(_ U _),
/// EG and EGinf. Subterms are shared, so a formula is a DAG.
class StateFormula {
 public:
  enum class Kind { Prop, Not, And, ExistsUntil, ExistsG, ExistsGInf };

  struct Node {
    Kind kind;
    std::string name;                 // Prop only
    std::vector<StateFormula> args;   // operands in order
  };

  static StateFormula prop(std::string name);
  static StateFormula neg(StateFormula f);
  static StateFormula conj(std::vector<StateFormula> fs);
  static StateFormula exists_until(StateFormula f, StateFormula g);
  static StateFormula exists_g(StateFormula f);
  static StateFormula exists_g_inf(StateFormula f);

  // Derived forms, expanded on construction.
  static StateFormula top() { return conj({}); }
  static StateFormula bottom() { return neg(top()); }
  static StateFormula conj(StateFormula f, StateFormula g) { return conj({std::move(f), std::move(g)}); }
  static StateFormula disj(std::vector<StateFormula> fs);
  static StateFormula disj(StateFormula f, StateFormula g) { return disj({std::move(f), std::move(g)}); }
  static StateFormula ef(StateFormula f);  // E(true U f)
  static StateFormula ag(StateFormula f);  // ~E(true U ~f)
  static StateFormula af(StateFormula f);  // ~EG ~f

  Kind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  const std::vector<StateFormula>& args() const { return node_->args; }
  const StateFormula& arg(std::size_t i) const { return node_->args.at(i); }
  const Node* node() const { return node_.get(); }

  bool is_top() const { return kind() == Kind::And && args().empty(); }
  bool is_bottom() const { return kind() == Kind::Not && arg(0).is_top(); }

  std::set<std::string> propositions() const;
  bool mentions(const std::string& prop) const;
  bool uses_ginf() const;
  /// Number of distinct nodes.
  std::size_t size() const;

  /// Rendering accepted by parse_formula.
  std::string to_string() const;

  bool operator==(const StateFormula& other) const;

 private:
  explicit StateFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Next-free linear-time formula with the Infinity modality.
class PathFormula {
 public:
  enum class Kind { Prop, Not, And, Until, Infinity };

  struct Node {
    Kind kind;
    std::string name;
    std::vector<PathFormula> args;
  };

  static PathFormula prop(std::string name);
  static PathFormula neg(PathFormula f);
  static PathFormula conj(std::vector<PathFormula> fs);
  static PathFormula until(PathFormula f, PathFormula g);
  static PathFormula infinity();

  static PathFormula top() { return conj({}); }
  static PathFormula bottom() { return neg(top()); }
  static PathFormula conj(PathFormula f, PathFormula g) { return conj({std::move(f), std::move(g)}); }
  static PathFormula disj(std::vector<PathFormula> fs);

  Kind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  const std::vector<PathFormula>& args() const { return node_->args; }
  const PathFormula& arg(std::size_t i) const { return node_->args.at(i); }
  const Node* node() const { return node_.get(); }

  bool is_top() const { return kind() == Kind::And && args().empty(); }
  bool uses_infinity() const;

  /// Rendering accepted by parse_path_formula.
  std::string to_string() const;

  bool operator==(const PathFormula& other) const;

 private:
  explicit PathFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace dtk

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace luk {

/// A term: variable, constant symbol, domain element constant (written
/// `#i`), or function application. Function applications only arise inside
/// the Skolem/Herbrand pipeline; the core signatures are relational.
struct Term {
  enum class Kind : std::uint8_t { Variable, Constant, Element, Apply };

  Kind kind = Kind::Variable;
  std::string name;
  int element = -1;
  std::vector<Term> args;

  static Term variable(std::string name);
  static Term constant(std::string name);
  static Term element_of(int element);
  static Term apply(std::string function, std::vector<Term> args);

  bool is_ground() const;
  int depth() const;

  friend bool operator==(const Term&, const Term&) = default;
};

std::size_t hash_value(const Term& term);

enum class Connective : std::uint8_t { Not, Implies, And, Or, StrictAnd, StrictOr };
enum class Quantifier : std::uint8_t { Forall, Exists };

int arity(Connective c);

/// Immutable formula AST with structural equality. Nodes are shared, so
/// copies are cheap and formulas can be used from several threads.
class Formula {
 public:
  enum class Kind : std::uint8_t { Atom, True, False, Not, Binary, Quantified };

  /// The constant `true`.
  Formula();

  Kind kind() const;
  bool is_atom() const { return kind() == Kind::Atom; }
  bool is_quantified() const { return kind() == Kind::Quantified; }

  // Atom
  const std::string& relation() const;
  const std::vector<Term>& args() const;
  // Not
  const Formula& operand() const;
  // Binary
  Connective connective() const;
  const Formula& lhs() const;
  const Formula& rhs() const;
  // Quantified
  Quantifier quantifier() const;
  const std::string& variable() const;
  const Formula& body() const;

  /// Free variables, sorted by name.
  const std::vector<std::string>& free_set() const;
  bool is_closed() const { return free_set().empty(); }

  std::size_t hash() const;
  /// Number of nodes.
  std::size_t size() const;
  /// Height of the tree; an atom has height 1.
  int height() const;
  const void* identity() const { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;

  friend Formula make_atom(std::string relation, std::vector<Term> args);
  friend Formula make_true();
  friend Formula make_false();
  friend Formula make_not(Formula f);
  friend Formula make_binary(Connective c, Formula lhs, Formula rhs);
  friend Formula make_quantified(Quantifier q, std::string variable, Formula body);
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

// Builders.
Formula make_atom(std::string relation, std::vector<Term> args = {});
Formula make_true();
Formula make_false();
Formula make_not(Formula f);
Formula make_binary(Connective c, Formula lhs, Formula rhs);
Formula make_quantified(Quantifier q, std::string variable, Formula body);

inline Formula make_implies(Formula a, Formula b) { return make_binary(Connective::Implies, std::move(a), std::move(b)); }
inline Formula make_and(Formula a, Formula b) { return make_binary(Connective::And, std::move(a), std::move(b)); }
inline Formula make_or(Formula a, Formula b) { return make_binary(Connective::Or, std::move(a), std::move(b)); }
inline Formula make_strict_and(Formula a, Formula b) { return make_binary(Connective::StrictAnd, std::move(a), std::move(b)); }
inline Formula make_strict_or(Formula a, Formula b) { return make_binary(Connective::StrictOr, std::move(a), std::move(b)); }
inline Formula make_forall(std::string v, Formula body) { return make_quantified(Quantifier::Forall, std::move(v), std::move(body)); }
inline Formula make_exists(std::string v, Formula body) { return make_quantified(Quantifier::Exists, std::move(v), std::move(body)); }

/// a <-> b, expanded to (a -> b) /\ (b -> a). There is no biconditional node.
Formula make_iff(const Formula& a, const Formula& b);

/// Left fold of a binary connective over a nonempty list.
Formula fold(Connective c, std::span<const Formula> parts);

/// n.f as the left fold f |+| f |+| ... |+| f (n >= 1 copies).
Formula multiple(const Formula& f, int n);

// Analysis.

/// Free variables in order of first occurrence, left to right.
std::vector<std::string> free_variables(const Formula& f);

/// Prefixes a universal quantifier for each free variable; the first free
/// variable becomes the outermost quantifier. Closed input is returned as is.
Formula universal_closure(const Formula& f);
Formula existential_closure(const Formula& f);

/// All subtrees, structurally deduplicated, in post-order left to right.
std::vector<Formula> subformulas(const Formula& f);

/// Replaces free occurrences of variables. Throws std::logic_error if a
/// replacement term would be captured by a quantifier.
Formula substitute(const Formula& f, const std::map<std::string, Term>& replacement);

/// No quantifiers and only 0-ary atoms.
bool is_propositional(const Formula& f);
/// Only negation, weak conjunction/disjunction and quantifiers.
bool is_classical(const Formula& f);
bool is_quantifier_free(const Formula& f);
bool mentions_relation(const Formula& f, const std::set<std::string>& relations);

/// Names of 0-ary atoms, sorted.
std::vector<std::string> propositional_variables(const Formula& f);
/// Connective occurrences (quantifiers not counted).
int connective_count(const Formula& f);

class SignatureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Relation, constant and (for Skolem expansions only) function symbols.
/// Names are unique across the three sets.
class Signature {
 public:
  void add_relation(const std::string& name, int arity);
  void add_constant(const std::string& name);
  void add_function(const std::string& name, int arity);

  std::optional<int> relation_arity(const std::string& name) const;
  std::optional<int> function_arity(const std::string& name) const;
  bool has_constant(const std::string& name) const { return constants_.count(name) > 0; }
  bool has_symbol(const std::string& name) const;

  const std::map<std::string, int>& relations() const { return relations_; }
  const std::set<std::string>& constants() const { return constants_; }
  const std::map<std::string, int>& functions() const { return functions_; }

  void merge(const Signature& other);

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::map<std::string, int> relations_;
  std::set<std::string> constants_;
  std::map<std::string, int> functions_;
};

/// Collects the symbols used by a formula. Throws SignatureError on
/// inconsistent arities.
Signature infer_signature(const Formula& f);

/// Throws SignatureError on an unknown symbol or an arity mismatch.
void check_signature(const Formula& f, const Signature& sig);

/// A formula without free variables, tagged with its signature.
class ClosedFormula {
 public:
  /// Throws SignatureError if `f` has free variables or does not conform.
  ClosedFormula(Formula f, Signature sig);

  const Formula& formula() const { return formula_; }
  const Signature& signature() const { return signature_; }

 private:
  Formula formula_;
  Signature signature_;
};

}  // namespace luk

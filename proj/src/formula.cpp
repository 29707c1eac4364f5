#include "luk/formula.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include <boost/container_hash/hash.hpp>

namespace luk {

// ---------------------------------------------------------------- terms

Term Term::variable(std::string name) { return Term{Kind::Variable, std::move(name), -1, {}}; }
Term Term::constant(std::string name) { return Term{Kind::Constant, std::move(name), -1, {}}; }
Term Term::element_of(int element) { return Term{Kind::Element, {}, element, {}}; }
Term Term::apply(std::string function, std::vector<Term> args) {
  return Term{Kind::Apply, std::move(function), -1, std::move(args)};
}

bool Term::is_ground() const {
  switch (kind) {
    case Kind::Variable: return false;
    case Kind::Constant:
    case Kind::Element: return true;
    case Kind::Apply:
      return std::all_of(args.begin(), args.end(), [](const Term& t) { return t.is_ground(); });
  }
  return false;
}

int Term::depth() const {
  if (kind != Kind::Apply) return 0;
  int d = 0;
  for (const auto& a : args) d = std::max(d, a.depth());
  return d + 1;
}

std::size_t hash_value(const Term& term) {
  std::size_t seed = static_cast<std::size_t>(term.kind);
  boost::hash_combine(seed, term.name);
  boost::hash_combine(seed, term.element);
  for (const auto& a : term.args) boost::hash_combine(seed, hash_value(a));
  return seed;
}

namespace {

void collect_term_variables(const Term& t, std::vector<std::string>& out) {
  if (t.kind == Term::Kind::Variable) {
    out.push_back(t.name);
  } else if (t.kind == Term::Kind::Apply) {
    for (const auto& a : t.args) collect_term_variables(a, out);
  }
}

void sort_unique(std::vector<std::string>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

int arity(Connective c) { return c == Connective::Not ? 1 : 2; }

// ---------------------------------------------------------------- nodes

struct Formula::Node {
  Kind kind = Kind::True;
  std::string name;
  std::vector<Term> args;
  Connective connective = Connective::Not;
  Quantifier quantifier = Quantifier::Forall;
  Formula a;
  Formula b;

  std::size_t hash = 0;
  std::size_t size = 1;
  int height = 1;
  std::vector<std::string> free;
};

Formula::Formula() : node_(nullptr) {}

Formula::Kind Formula::kind() const { return node_ ? node_->kind : Kind::True; }

const std::string& Formula::relation() const { return node_->name; }
const std::vector<Term>& Formula::args() const { return node_->args; }
const Formula& Formula::operand() const { return node_->a; }
Connective Formula::connective() const { return node_->connective; }
const Formula& Formula::lhs() const { return node_->a; }
const Formula& Formula::rhs() const { return node_->b; }
Quantifier Formula::quantifier() const { return node_->quantifier; }
const std::string& Formula::variable() const { return node_->name; }
const Formula& Formula::body() const { return node_->a; }

const std::vector<std::string>& Formula::free_set() const {
  static const std::vector<std::string> kEmpty;
  return node_ ? node_->free : kEmpty;
}

std::size_t Formula::hash() const { return node_ ? node_->hash : 0x9e3779b9u; }
std::size_t Formula::size() const { return node_ ? node_->size : 1; }
int Formula::height() const { return node_ ? node_->height : 1; }

bool operator==(const Formula& x, const Formula& y) {
  if (x.node_ == y.node_) return true;
  if (x.kind() != y.kind() || x.hash() != y.hash() || x.size() != y.size()) return false;
  switch (x.kind()) {
    case Formula::Kind::True:
    case Formula::Kind::False: return true;
    case Formula::Kind::Atom: return x.relation() == y.relation() && x.args() == y.args();
    case Formula::Kind::Not: return x.operand() == y.operand();
    case Formula::Kind::Binary:
      return x.connective() == y.connective() && x.lhs() == y.lhs() && x.rhs() == y.rhs();
    case Formula::Kind::Quantified:
      return x.quantifier() == y.quantifier() && x.variable() == y.variable() && x.body() == y.body();
  }
  return false;
}

Formula make_true() { return Formula(); }

Formula make_false() {
  static const std::shared_ptr<const Formula::Node> node = [] {
    auto n = std::make_shared<Formula::Node>();
    n->kind = Formula::Kind::False;
    n->hash = 0x7f4a7c15u;
    return n;
  }();
  return Formula(node);
}

Formula make_atom(std::string relation, std::vector<Term> args) {
  auto n = std::make_shared<Formula::Node>();
  n->kind = Formula::Kind::Atom;
  n->name = std::move(relation);
  n->args = std::move(args);
  std::size_t seed = 1;
  boost::hash_combine(seed, n->name);
  for (const auto& t : n->args) {
    boost::hash_combine(seed, hash_value(t));
    collect_term_variables(t, n->free);
  }
  sort_unique(n->free);
  n->hash = seed;
  return Formula(std::move(n));
}

Formula make_not(Formula f) {
  auto n = std::make_shared<Formula::Node>();
  n->kind = Formula::Kind::Not;
  std::size_t seed = 2;
  boost::hash_combine(seed, f.hash());
  n->hash = seed;
  n->size = f.size() + 1;
  n->height = f.height() + 1;
  n->free = f.free_set();
  n->a = std::move(f);
  return Formula(std::move(n));
}

Formula make_binary(Connective c, Formula lhs, Formula rhs) {
  if (c == Connective::Not) throw std::invalid_argument("make_binary: negation is unary");
  auto n = std::make_shared<Formula::Node>();
  n->kind = Formula::Kind::Binary;
  n->connective = c;
  std::size_t seed = 3 + static_cast<std::size_t>(c);
  boost::hash_combine(seed, lhs.hash());
  boost::hash_combine(seed, rhs.hash());
  n->hash = seed;
  n->size = lhs.size() + rhs.size() + 1;
  n->height = std::max(lhs.height(), rhs.height()) + 1;
  std::set_union(lhs.free_set().begin(), lhs.free_set().end(), rhs.free_set().begin(),
                 rhs.free_set().end(), std::back_inserter(n->free));
  n->a = std::move(lhs);
  n->b = std::move(rhs);
  return Formula(std::move(n));
}

Formula make_quantified(Quantifier q, std::string variable, Formula body) {
  auto n = std::make_shared<Formula::Node>();
  n->kind = Formula::Kind::Quantified;
  n->quantifier = q;
  n->name = std::move(variable);
  std::size_t seed = 11 + static_cast<std::size_t>(q);
  boost::hash_combine(seed, n->name);
  boost::hash_combine(seed, body.hash());
  n->hash = seed;
  n->size = body.size() + 1;
  n->height = body.height() + 1;
  for (const auto& v : body.free_set()) {
    if (v != n->name) n->free.push_back(v);
  }
  n->a = std::move(body);
  return Formula(std::move(n));
}

Formula make_iff(const Formula& a, const Formula& b) {
  return make_and(make_implies(a, b), make_implies(b, a));
}

Formula fold(Connective c, std::span<const Formula> parts) {
  if (parts.empty()) throw std::invalid_argument("fold: empty list");
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = make_binary(c, acc, parts[i]);
  return acc;
}

Formula multiple(const Formula& f, int n) {
  if (n < 1) throw std::invalid_argument("multiple: n must be positive");
  Formula acc = f;
  for (int i = 1; i < n; ++i) acc = make_strict_or(acc, f);
  return acc;
}

// ---------------------------------------------------------------- analysis

namespace {

void first_occurrence(const Formula& f, std::vector<std::string>& bound, std::vector<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::True:
    case Formula::Kind::False: return;
    case Formula::Kind::Atom: {
      std::vector<std::string> vars;
      for (const auto& t : f.args()) collect_term_variables(t, vars);
      for (auto& v : vars) {
        if (std::find(bound.begin(), bound.end(), v) != bound.end()) continue;
        if (std::find(out.begin(), out.end(), v) != out.end()) continue;
        out.push_back(std::move(v));
      }
      return;
    }
    case Formula::Kind::Not: first_occurrence(f.operand(), bound, out); return;
    case Formula::Kind::Binary:
      first_occurrence(f.lhs(), bound, out);
      first_occurrence(f.rhs(), bound, out);
      return;
    case Formula::Kind::Quantified:
      bound.push_back(f.variable());
      first_occurrence(f.body(), bound, out);
      bound.pop_back();
      return;
  }
}

Formula close_with(const Formula& f, Quantifier q) {
  const auto vars = free_variables(f);
  Formula acc = f;
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) acc = make_quantified(q, *it, acc);
  return acc;
}

}  // namespace

std::vector<std::string> free_variables(const Formula& f) {
  std::vector<std::string> bound;
  std::vector<std::string> out;
  first_occurrence(f, bound, out);
  return out;
}

Formula universal_closure(const Formula& f) { return close_with(f, Quantifier::Forall); }
Formula existential_closure(const Formula& f) { return close_with(f, Quantifier::Exists); }

std::vector<Formula> subformulas(const Formula& f) {
  std::vector<Formula> out;
  std::unordered_set<Formula, FormulaHash> seen;
  std::function<void(const Formula&)> visit = [&](const Formula& g) {
    switch (g.kind()) {
      case Formula::Kind::Not: visit(g.operand()); break;
      case Formula::Kind::Binary:
        visit(g.lhs());
        visit(g.rhs());
        break;
      case Formula::Kind::Quantified: visit(g.body()); break;
      default: break;
    }
    if (seen.insert(g).second) out.push_back(g);
  };
  visit(f);
  return out;
}

namespace {

Term substitute_term(const Term& t, const std::map<std::string, Term>& r) {
  if (t.kind == Term::Kind::Variable) {
    auto it = r.find(t.name);
    return it == r.end() ? t : it->second;
  }
  if (t.kind == Term::Kind::Apply) {
    std::vector<Term> args;
    args.reserve(t.args.size());
    for (const auto& a : t.args) args.push_back(substitute_term(a, r));
    return Term::apply(t.name, std::move(args));
  }
  return t;
}

bool term_mentions(const Term& t, const std::string& var) {
  if (t.kind == Term::Kind::Variable) return t.name == var;
  if (t.kind == Term::Kind::Apply) {
    return std::any_of(t.args.begin(), t.args.end(), [&](const Term& a) { return term_mentions(a, var); });
  }
  return false;
}

Formula substitute_rec(const Formula& f, const std::map<std::string, Term>& r) {
  // Nothing to do below this node if none of its free variables is replaced.
  const auto& fv = f.free_set();
  if (std::none_of(fv.begin(), fv.end(), [&](const std::string& v) { return r.count(v) > 0; })) return f;
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      std::vector<Term> args;
      args.reserve(f.args().size());
      for (const auto& t : f.args()) args.push_back(substitute_term(t, r));
      return make_atom(f.relation(), std::move(args));
    }
    case Formula::Kind::Not: return make_not(substitute_rec(f.operand(), r));
    case Formula::Kind::Binary:
      return make_binary(f.connective(), substitute_rec(f.lhs(), r), substitute_rec(f.rhs(), r));
    case Formula::Kind::Quantified: {
      std::map<std::string, Term> inner = r;
      inner.erase(f.variable());
      for (const auto& v : f.body().free_set()) {
        auto it = inner.find(v);
        if (it != inner.end() && term_mentions(it->second, f.variable())) {
          throw std::logic_error("substitution for '" + v + "' would be captured by '" + f.variable() + "'");
        }
      }
      return make_quantified(f.quantifier(), f.variable(), substitute_rec(f.body(), inner));
    }
    default: return f;
  }
}

template <class Pred>
bool all_nodes(const Formula& f, Pred pred) {
  if (!pred(f)) return false;
  switch (f.kind()) {
    case Formula::Kind::Not: return all_nodes(f.operand(), pred);
    case Formula::Kind::Binary: return all_nodes(f.lhs(), pred) && all_nodes(f.rhs(), pred);
    case Formula::Kind::Quantified: return all_nodes(f.body(), pred);
    default: return true;
  }
}

}  // namespace

Formula substitute(const Formula& f, const std::map<std::string, Term>& replacement) {
  if (replacement.empty()) return f;
  return substitute_rec(f, replacement);
}

bool is_propositional(const Formula& f) {
  return all_nodes(f, [](const Formula& g) {
    if (g.kind() == Formula::Kind::Quantified) return false;
    if (g.kind() == Formula::Kind::Atom) return g.args().empty();
    return true;
  });
}

bool is_classical(const Formula& f) {
  return all_nodes(f, [](const Formula& g) {
    if (g.kind() == Formula::Kind::True || g.kind() == Formula::Kind::False) return false;
    if (g.kind() != Formula::Kind::Binary) return true;
    return g.connective() == Connective::And || g.connective() == Connective::Or;
  });
}

bool is_quantifier_free(const Formula& f) {
  return all_nodes(f, [](const Formula& g) { return g.kind() != Formula::Kind::Quantified; });
}

bool mentions_relation(const Formula& f, const std::set<std::string>& relations) {
  return !all_nodes(f, [&](const Formula& g) {
    return g.kind() != Formula::Kind::Atom || relations.count(g.relation()) == 0;
  });
}

std::vector<std::string> propositional_variables(const Formula& f) {
  std::vector<std::string> out;
  all_nodes(f, [&](const Formula& g) {
    if (g.kind() == Formula::Kind::Atom && g.args().empty()) out.push_back(g.relation());
    return true;
  });
  sort_unique(out);
  return out;
}

int connective_count(const Formula& f) {
  int count = 0;
  all_nodes(f, [&](const Formula& g) {
    if (g.kind() == Formula::Kind::Not || g.kind() == Formula::Kind::Binary) ++count;
    return true;
  });
  return count;
}

// ---------------------------------------------------------------- signatures

bool Signature::has_symbol(const std::string& name) const {
  return relations_.count(name) || constants_.count(name) || functions_.count(name);
}

void Signature::add_relation(const std::string& name, int arity) {
  if (arity < 0) throw SignatureError("negative arity for relation '" + name + "'");
  auto it = relations_.find(name);
  if (it != relations_.end()) {
    if (it->second != arity) {
      throw SignatureError("relation '" + name + "' used with arities " + std::to_string(it->second) +
                           " and " + std::to_string(arity));
    }
    return;
  }
  if (has_symbol(name)) throw SignatureError("symbol '" + name + "' declared twice with different roles");
  relations_.emplace(name, arity);
}

void Signature::add_constant(const std::string& name) {
  if (constants_.count(name)) return;
  if (has_symbol(name)) throw SignatureError("symbol '" + name + "' declared twice with different roles");
  constants_.insert(name);
}

void Signature::add_function(const std::string& name, int arity) {
  if (arity < 1) throw SignatureError("function '" + name + "' needs positive arity");
  auto it = functions_.find(name);
  if (it != functions_.end()) {
    if (it->second != arity) throw SignatureError("function '" + name + "' used with two arities");
    return;
  }
  if (has_symbol(name)) throw SignatureError("symbol '" + name + "' declared twice with different roles");
  functions_.emplace(name, arity);
}

std::optional<int> Signature::relation_arity(const std::string& name) const {
  auto it = relations_.find(name);
  if (it == relations_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Signature::function_arity(const std::string& name) const {
  auto it = functions_.find(name);
  if (it == functions_.end()) return std::nullopt;
  return it->second;
}

void Signature::merge(const Signature& other) {
  for (const auto& [name, k] : other.relations_) add_relation(name, k);
  for (const auto& c : other.constants_) add_constant(c);
  for (const auto& [name, k] : other.functions_) add_function(name, k);
}

namespace {

void infer_term(const Term& t, Signature& sig) {
  if (t.kind == Term::Kind::Constant) sig.add_constant(t.name);
  if (t.kind == Term::Kind::Apply) {
    sig.add_function(t.name, static_cast<int>(t.args.size()));
    for (const auto& a : t.args) infer_term(a, sig);
  }
}

void check_term(const Term& t, const Signature& sig) {
  if (t.kind == Term::Kind::Constant && !sig.has_constant(t.name)) {
    throw SignatureError("unknown constant '" + t.name + "'");
  }
  if (t.kind == Term::Kind::Apply) {
    auto k = sig.function_arity(t.name);
    if (!k) throw SignatureError("unknown function '" + t.name + "'");
    if (*k != static_cast<int>(t.args.size())) {
      throw SignatureError("function '" + t.name + "' expects " + std::to_string(*k) + " arguments");
    }
    for (const auto& a : t.args) check_term(a, sig);
  }
}

}  // namespace

Signature infer_signature(const Formula& f) {
  Signature sig;
  all_nodes(f, [&](const Formula& g) {
    if (g.kind() == Formula::Kind::Atom) {
      sig.add_relation(g.relation(), static_cast<int>(g.args().size()));
      for (const auto& t : g.args()) infer_term(t, sig);
    }
    return true;
  });
  return sig;
}

void check_signature(const Formula& f, const Signature& sig) {
  all_nodes(f, [&](const Formula& g) {
    if (g.kind() != Formula::Kind::Atom) return true;
    auto k = sig.relation_arity(g.relation());
    if (!k) throw SignatureError("unknown relation '" + g.relation() + "'");
    if (*k != static_cast<int>(g.args().size())) {
      throw SignatureError("relation '" + g.relation() + "' expects " + std::to_string(*k) + " arguments, got " +
                           std::to_string(g.args().size()));
    }
    for (const auto& t : g.args()) check_term(t, sig);
    return true;
  });
}

ClosedFormula::ClosedFormula(Formula f, Signature sig) : formula_(std::move(f)), signature_(std::move(sig)) {
  if (!formula_.is_closed()) {
    throw SignatureError("formula has free variable '" + formula_.free_set().front() + "'");
  }
  check_signature(formula_, signature_);
}

}  // namespace luk

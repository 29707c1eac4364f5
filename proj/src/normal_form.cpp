#include "luk/normal_form.hpp"

#include <stdexcept>

namespace luk {

namespace {

void require_classical_prop(const Formula& f) {
  if (!is_propositional(f) || !is_classical(f)) {
    throw std::invalid_argument("normal form needs a propositional formula over ~, /\\, \\/");
  }
}

std::set<Clause> cnf(const Formula& f, bool negated) {
  switch (f.kind()) {
    case Formula::Kind::Atom: return {Clause{Literal{f.relation(), negated}}};
    case Formula::Kind::Not: return cnf(f.operand(), !negated);
    case Formula::Kind::Binary: {
      auto l = cnf(f.lhs(), negated);
      auto r = cnf(f.rhs(), negated);
      const bool conjunction = (f.connective() == Connective::And) != negated;
      if (conjunction) {
        l.insert(r.begin(), r.end());
        return l;
      }
      std::set<Clause> out;
      for (const auto& a : l) {
        for (const auto& b : r) {
          Clause c = a;
          c.insert(b.begin(), b.end());
          out.insert(std::move(c));
        }
      }
      return out;
    }
    default: throw std::invalid_argument("normal form: unexpected node");
  }
}

}  // namespace

NormalForm to_normal_form(const Formula& f) {
  require_classical_prop(f);
  return NormalForm{cnf(f, false)};
}

Formula to_formula(const NormalForm& nf) {
  std::vector<Formula> conj;
  for (const auto& clause : nf.clauses) {
    std::vector<Formula> disj;
    for (const auto& lit : clause) {
      Formula a = make_atom(lit.variable);
      disj.push_back(lit.negated ? make_not(a) : a);
    }
    conj.push_back(fold(Connective::Or, disj));
  }
  return fold(Connective::And, conj);
}

TruthValue eval_normal_form(const NormalForm& nf, const Assignment& s) {
  TruthValue result = TruthValue::one();
  for (const auto& clause : nf.clauses) {
    TruthValue best = TruthValue::zero();
    for (const auto& lit : clause) {
      auto it = s.find(lit.variable);
      if (it == s.end()) throw EvalError("unbound variable '" + lit.variable + "'");
      best = join(best, lit.negated ? negation(it->second) : it->second);
    }
    result = meet(result, best);
  }
  return result;
}

bool has_complementary_pair(const Clause& c) {
  for (const auto& lit : c) {
    if (!lit.negated && c.count(Literal{lit.variable, true})) return true;
  }
  return false;
}

bool is_classical_tautology(const Formula& f) {
  const auto nf = to_normal_form(f);
  for (const auto& c : nf.clauses) {
    if (!has_complementary_pair(c)) return false;
  }
  return true;
}

}  // namespace luk

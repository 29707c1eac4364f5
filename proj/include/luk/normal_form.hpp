#pragma once

#include <compare>
#include <set>
#include <string>
#include <vector>

#include "luk/formula.hpp"
#include "luk/mv.hpp"

namespace luk {

struct Literal {
  std::string variable;
  bool negated = false;

  friend auto operator<=>(const Literal&, const Literal&) = default;
};

/// A disjunction of literals.
using Clause = std::set<Literal>;

/// Conjunctive normal form: a conjunction of disjunctive clauses. Both
/// levels are nonempty.
struct NormalForm {
  std::set<Clause> clauses;
};

/// Throws std::invalid_argument unless f is propositional over ~, /\, \/.
/// The result has the same value as f under every fuzzy assignment, since
/// min, max and 1-x obey distributivity, De Morgan and involution.
NormalForm to_normal_form(const Formula& f);

Formula to_formula(const NormalForm& nf);
TruthValue eval_normal_form(const NormalForm& nf, const Assignment& s);

bool has_complementary_pair(const Clause& c);

/// Every clause of the normal form contains some p and ~p.
bool is_classical_tautology(const Formula& f);

}  // namespace luk

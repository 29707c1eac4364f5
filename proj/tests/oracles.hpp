#pragma once

// Brute-force reference implementations and random generators for tests.
// Nothing here calls the evaluators under test.

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "luk/formula.hpp"
#include "luk/model.hpp"
#include "luk/rational.hpp"

namespace oracle {

using luk::Formula;
using luk::Rational;
using RationalAssignment = std::map<std::string, Rational>;

/// MV semantics straight from the definitions, on unbounded rationals.
Rational eval(const Formula& f, const RationalAssignment& s);

/// All p/q in [0,1] with 1 <= q <= d, ascending, no duplicates.
std::vector<Rational> farey(int d);

struct GridMin {
  Rational value;
  RationalAssignment argmin;
  std::size_t points = 0;
};
/// Minimum over every assignment drawn from farey(d).
GridMin grid_min(const Formula& f, int d);

/// Classical evaluation with every variable in {0,1}.
bool truth_table_tautology(const Formula& f);

/// Ground atoms as propositional variables; true iff no 0/1 assignment
/// satisfies every conjunct.
bool ground_contradiction(const std::vector<Formula>& conjuncts);

/// Every formula over `vars` of height <= h (atom height 1) built from ~
/// and the five binary connectives.
std::vector<Formula> all_formulas(const std::vector<std::string>& vars, int h);

/// Random propositional formula; `classical` restricts to ~, /\, \/.
Formula random_formula(std::mt19937_64& rng, int vars, int depth, bool classical = false);

/// Random closed formula over ~, /\, \/, forall, exists with unary P, R,
/// binary S and constant c.
Formula random_predicate(std::mt19937_64& rng, int depth);

/// Random model with values k/q for q <= max_den.
luk::FuzzyModel random_model(std::mt19937_64& rng, const luk::Signature& sig, int domain, int max_den);

/// Classical truth in a crisp model (relation value 1 is true).
bool crisp_eval(const Formula& f, const luk::FuzzyModel& m, std::map<std::string, int>& env);

/// Fuzzy value by direct recursion on unbounded rationals.
Rational model_eval(const Formula& f, const luk::FuzzyModel& m, std::map<std::string, int>& env);

/// Searches all crisp models over domain sizes 1..max_domain for one where
/// f is false.
std::optional<luk::FuzzyModel> crisp_countermodel(const Formula& f, int max_domain);

/// Minimum of c.x subject to rows (a.x <= b) and x >= 0 by enumerating
/// every basic solution. Assumes the feasible set is bounded; nullopt if
/// empty.
std::optional<Rational> vertex_min(const std::vector<Rational>& c, const std::vector<std::vector<Rational>>& a,
                                   const std::vector<Rational>& b);

/// Uniform-ish rational in [0,1] with denominator <= max_den.
Rational random_unit(std::mt19937_64& rng, int max_den);

}  // namespace oracle

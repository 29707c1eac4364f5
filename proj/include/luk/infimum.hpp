#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "luk/formula.hpp"
#include "luk/mv.hpp"
#include "luk/truth_value.hpp"

namespace luk {

struct InfimumResult {
  TruthValue value;
  /// Lexicographically least assignment attaining `value`, variables taken
  /// in name order.
  Assignment witness;
  /// Full-dimensional regions of the case split that were minimized.
  std::size_t branches = 0;
};

/// Exact inf of s(f) over all assignments s. The value function is split
/// into linear pieces by branching on every min/max/truncation; each piece
/// is minimized over its polyhedral region by exact simplex. Throws
/// EvalError unless f is propositional.
InfimumResult infimum(const Formula& f);

struct TautologyVerdict {
  bool tautology = false;
  /// The infimum and its witness; value < 1 refutes.
  TruthValue value;
  Assignment witness;
};

TautologyVerdict is_tautology_prop(const Formula& f);

/// Propositional skeleton: each maximal subformula headed by an atom or a
/// quantifier becomes a fresh variable s1, s2, ...; equal subformulas share
/// one variable.
struct Skeleton {
  Formula formula;
  std::vector<std::pair<std::string, Formula>> mapping;
};

Skeleton skeleton(const Formula& f);

struct PredicateTautologyVerdict {
  bool tautology = false;
  Skeleton skeleton;
  TautologyVerdict verdict;
};

/// Substitution instance of a propositional tautology, decided on the
/// skeleton. Sound for validity but incomplete.
PredicateTautologyVerdict is_tautology_pred(const Formula& f);

}  // namespace luk

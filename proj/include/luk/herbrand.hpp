#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "luk/formula.hpp"
#include "luk/prenex.hpp"

namespace luk {

struct HerbrandLimits {
  std::size_t max_instances = 4096;
  std::size_t max_atoms = 64;
};

struct HerbrandResult {
  bool refuted = false;
  /// Term nesting depth of the level that produced the certificate, or the
  /// deepest level examined.
  int depth = 0;
  /// Closed instances of the matrix whose conjunction is a classical
  /// contradiction; greedily minimized.
  std::vector<Formula> certificate;
  /// True if a limit cut the search short.
  bool truncated = false;
};

/// Closed terms over the constants and Skolem functions of `sig`, of
/// nesting depth at most `depth`, breadth-first with constants first. A
/// constant c0 is used when the signature has none.
std::vector<Term> herbrand_universe(const Signature& sig, int depth);

/// Searches levels 0..depth: at level d every universal ranges over terms of
/// depth <= d and the conjunction of all instances is tested for
/// unsatisfiability by a pruned truth table over its ground atoms.
HerbrandResult herbrand_refute(const SkolemForm& sk, int depth, const HerbrandLimits& limits = {});

/// True iff the conjunction has no satisfying classical assignment of its
/// ground atoms. Throws std::length_error past `max_atoms` atoms.
bool is_propositional_contradiction(const std::vector<Formula>& conjuncts, std::size_t max_atoms = 64);

}  // namespace luk

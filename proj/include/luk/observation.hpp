#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "luk/formula.hpp"
#include "luk/mv.hpp"

namespace luk {

/// Checks of the classical-fragment observation on one formula f over
/// ~, /\, \/:
///  (a) inf f <= 1/2, witnessed by the all-1/2 assignment;
///  (b) a classical tautology has every assignment at least 1/2 and
///      inf f = 1/2;
///  (c) a non-tautology has inf f = 0;
///  (d) ||~f -> f|| = 1 iff tautology iff ||p /\ ~p -> f|| = 1, p fresh.
struct ObservationReport {
  Formula formula;
  bool tautology = false;
  TruthValue infimum;
  Assignment witness;
  TruthValue at_half;
  TruthValue negation_implies;
  TruthValue contradiction_implies;
  std::string fresh_variable;
  /// Smallest value over the sampled assignments.
  TruthValue sampled_min;
  std::size_t samples = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

ObservationReport check_observation(const Formula& f, std::size_t samples = 100, std::uint64_t seed = 1);

/// A name of the form p, p1, p2, ... not among `taken`.
std::string fresh_name(const std::vector<std::string>& taken, const std::string& stem = "p");

}  // namespace luk

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "luk/model.hpp"
#include "luk/rational.hpp"
#include "luk/reduction.hpp"
#include "luk/truth_value.hpp"

namespace luk {

/// One inequality of the part-2 argument. `premises` records whether the
/// hypotheses it is derived from hold in the model; `holds` whether the
/// inequality itself holds. Only an inequality with premises can fail.
struct InequalityCheck {
  std::string name;
  bool premises = false;
  bool holds = false;
  std::string detail;

  bool ok() const { return !premises || holds; }
  /// "holds", "FAILS" or "vacuous".
  std::string status() const;
};

struct Part2Report {
  int m = 0;
  int n = 0;
  TruthValue delta;
  TruthValue e;
  /// q[k-1] = Q(a_k, a_n), with a_1 the element named by the constant 1.
  std::vector<TruthValue> q;
  /// Some hypothesis of psi' is at most e, or e >= 1/10.
  bool trivial = false;
  /// 1: e = 0; 2: e > 0 and q_1 <= 3e; 3: e > 0 and q_1 > 3e.
  int case_number = 0;
  TruthValue psi_value;
  std::vector<InequalityCheck> checks;

  bool ok() const;
  /// One line per check.
  std::string summary() const;
};

/// Checks the inequality chain behind the bound psi' >= 1 - delta on the
/// chain a_2..a_n (`chain`, n-1 elements). Throws std::invalid_argument if
/// n <= 1/delta, if e > 0 and n <= 1/e, if m is outside (3, min(n, m_max)],
/// or if the chain has the wrong length.
Part2Report verify_part2_inequalities(const Reduction& red, const FuzzyModel& M, int m, int n,
                                      const std::vector<int>& chain, const TruthValue& delta);

struct FamilyMember {
  std::string label;
  FuzzyModel model;
  int m = 0;
  int n = 0;
  std::vector<int> chain;
  TruthValue amplitude;
  /// Q(x, a_n) = 1 for every x >= 1, which breaks phi2 and gives case 3.
  bool saturated = false;
};

/// Truncations with noise of the given amplitude on the true crisp facts
/// (one of them lowered by exactly the amplitude) and Q moved by at most a
/// third of it. Amplitudes 0, 1/20 and 1/100 with n = 11..15, 21..28 and
/// 101; 21 models.
std::vector<FamilyMember> perturbation_family(const ReductionConfig& cfg, std::uint64_t seed);

/// A single noisy truncation of size `domain` as used by the family.
FuzzyModel perturbed_truncation(const ReductionConfig& cfg, int domain, const TruthValue& amplitude, int n,
                                bool saturated, std::uint64_t seed);

}  // namespace luk

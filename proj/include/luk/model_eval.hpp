#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "luk/formula.hpp"
#include "luk/model.hpp"
#include "luk/truth_value.hpp"

namespace luk {

namespace detail {
class EvalContext;
}

/// Evaluates formulas against one model, reusing tables and the values of
/// closed subformulas across calls. The model must outlive it.
class Evaluator {
 public:
  explicit Evaluator(const FuzzyModel& m);
  ~Evaluator();
  Evaluator(const Evaluator&) = delete;
  Evaluator& operator=(const Evaluator&) = delete;

  const FuzzyModel& model() const;
  /// Throws SignatureError if f has free variables.
  TruthValue closed(const Formula& f);
  TruthValue with(const Formula& f, const std::map<std::string, int>& env);

 private:
  std::unique_ptr<detail::EvalContext> ctx_;
};

/// Value of a formula whose free variables are bound by `env` (variable
/// name to element). Quantifiers range over the whole domain: forall is the
/// minimum, exists the maximum. Throws ModelError for symbols the model
/// lacks or unbound variables.
TruthValue eval_with(const Formula& f, const FuzzyModel& m, const std::map<std::string, int>& env);

/// Throws SignatureError if f has free variables.
TruthValue eval_closed(const Formula& f, const FuzzyModel& m);
TruthValue eval_closed(const ClosedFormula& f, const FuzzyModel& m);

struct TraceStep {
  Quantifier quantifier;
  std::string variable;
  /// First element attaining the min (forall) or max (exists).
  int element;
  /// Value of the remaining formula at that element.
  TruthValue value;
};

struct EvalReport {
  Formula formula;
  TruthValue value;
  /// One step per quantifier of the leading prefix, outermost first.
  std::vector<TraceStep> trace;
};

EvalReport eval_report(const Formula& f, const FuzzyModel& m);

/// Calls `visit` for every assignment of the free variables of f (in
/// free_variables order, elements enumerated lexicographically) until it
/// returns false.
void for_each_instance(const Formula& f, const FuzzyModel& m,
                       const std::function<bool(std::span<const int>, const TruthValue&)>& visit);

class RoundingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rounds every relation outside `keep` to 0 or 1. Throws RoundingError on
/// a value of exactly 1/2.
FuzzyModel crisp_round(const FuzzyModel& m, const std::set<std::string>& keep);

/// Subformulas (deduplicated, post-order) of the roots whose values the
/// epsilon formula measures: everything except quantifier-free subformulas
/// that mention one of `fuzzy`.
std::vector<Formula> epsilon_sources(std::span<const Formula> roots, const std::set<std::string>& fuzzy);

/// max over sources phi and instances a of min(phi(a), 1 - phi(a)),
/// computed by sweeping instances.
TruthValue epsilon_value(const FuzzyModel& m, std::span<const Formula> sources);

/// The same quantity as a closed formula: the weak disjunction of the
/// existential closures of phi /\ ~phi.
Formula epsilon_formula(std::span<const Formula> sources);

/// The instance where `sources` reach the epsilon value.
struct EpsilonWitness {
  TruthValue value;
  Formula source;
  std::vector<int> elements;
};
EpsilonWitness epsilon_witness(const FuzzyModel& m, std::span<const Formula> sources);

struct RoundingReport {
  bool ok = true;
  std::size_t instances = 0;
  /// Tracked formulas mentioning only kept relations; they agree trivially.
  std::size_t skipped = 0;
  Rational max_difference = 0;
  Formula worst;
  std::vector<int> worst_elements;
};

/// For every instance of every tracked formula, checks
/// |value in m - value in crisp_round(m, keep)| < threshold. Throws
/// RoundingError unless e < threshold.
RoundingReport check_rounding_claim(const FuzzyModel& m, std::span<const Formula> tracked,
                                    const std::set<std::string>& keep, const TruthValue& e,
                                    const TruthValue& threshold = TruthValue(1, 10));

}  // namespace luk

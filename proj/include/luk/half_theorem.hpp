#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "luk/formula.hpp"
#include "luk/herbrand.hpp"
#include "luk/model.hpp"

namespace luk {

struct ModelSampleOptions {
  std::size_t count = 200;
  int max_domain = 4;
  /// Every `crisp_every`-th model is crisp (0 disables).
  std::size_t crisp_every = 4;
  /// Fuzzy values are drawn with denominators up to this bound.
  int max_denominator = 6;
  std::uint64_t seed = 1;
};

/// Random finite models over `sig`, deterministic in the seed.
std::vector<FuzzyModel> sample_models(const Signature& sig, const ModelSampleOptions& options);

struct HalfTheoremReport {
  Formula formula;
  /// (a) value in the all-1/2 model; must be exactly 1/2.
  TruthValue all_half_value;
  /// Herbrand search on the Skolemized prenex form of ~f. A refutation
  /// confirms f classically valid at that depth.
  HerbrandResult negation_refutation;
  /// (b) smallest and largest sampled value.
  TruthValue sampled_min;
  TruthValue sampled_max;
  /// (c) index of a crisp sampled model giving 0, if any.
  std::optional<std::size_t> crisp_countermodel;
  std::vector<std::string> failures;

  bool valid_at_depth() const { return negation_refutation.refuted; }
  bool ok() const { return failures.empty(); }
};

/// f must be closed and use only ~, /\, \/, forall, exists. Checks
///  (a) the all-1/2 model gives exactly 1/2;
///  (b) if ~f is Herbrand-refuted, no sampled model gives f less than 1/2;
///  (c) if a crisp sampled model falsifies f, it gives exactly 0.
HalfTheoremReport check_half_theorem(const Formula& f, const std::vector<FuzzyModel>& models, int depth,
                                     const HerbrandLimits& limits = {});

}  // namespace luk

#include "luk/half_theorem.hpp"

#include <random>
#include <stdexcept>

#include "luk/model_eval.hpp"
#include "luk/prenex.hpp"

namespace luk {

std::vector<FuzzyModel> sample_models(const Signature& sig, const ModelSampleOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> domain_dist(1, options.max_domain);
  std::uniform_int_distribution<int> den_dist(1, options.max_denominator);
  std::vector<FuzzyModel> out;
  for (std::size_t i = 0; i < options.count; ++i) {
    const bool crisp = options.crisp_every > 0 && i % options.crisp_every == 0;
    FuzzyModel m(domain_dist(rng));
    std::uniform_int_distribution<int> elem(0, m.domain_size() - 1);
    for (const auto& c : sig.constants()) m.set_constant(c, elem(rng));
    for (const auto& [name, k] : sig.relations()) {
      auto& table = m.add_relation(name, k);
      for (std::size_t j = 0; j < table.size(); ++j) {
        const int den = crisp ? 1 : den_dist(rng);
        std::uniform_int_distribution<int> num(0, den);
        table.set_flat(j, TruthValue(num(rng), den));
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

HalfTheoremReport check_half_theorem(const Formula& f, const std::vector<FuzzyModel>& models, int depth,
                                     const HerbrandLimits& limits) {
  if (!f.is_closed()) throw std::invalid_argument("value-1/2 check needs a closed formula");
  HalfTheoremReport r;
  r.formula = f;
  const Signature sig = infer_signature(f);
  r.all_half_value = eval_closed(f, all_half_model(sig, 1));
  if (r.all_half_value != TruthValue::half()) r.failures.push_back("(a) all-1/2 model gives " + r.all_half_value.str());

  const Formula negated = to_prenex(make_not(f));
  r.negation_refutation = herbrand_refute(skolemize(negated, sig), depth, limits);

  r.sampled_min = TruthValue::one();
  r.sampled_max = TruthValue::zero();
  for (std::size_t i = 0; i < models.size(); ++i) {
    const TruthValue v = eval_closed(f, models[i]);
    r.sampled_min = meet(r.sampled_min, v);
    r.sampled_max = join(r.sampled_max, v);
    if (models[i].is_crisp() && !v.is_one() && !r.crisp_countermodel) {
      r.crisp_countermodel = i;
      if (!v.is_zero()) r.failures.push_back("(c) crisp model gives " + v.str());
    }
  }
  if (r.valid_at_depth() && r.sampled_min < TruthValue::half()) {
    r.failures.push_back("(b) valid formula sampled at " + r.sampled_min.str());
  }
  if (r.valid_at_depth() && r.crisp_countermodel) r.failures.push_back("(b) valid formula has a crisp countermodel");
  return r;
}

}  // namespace luk

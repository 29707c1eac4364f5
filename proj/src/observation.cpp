#include "luk/observation.hpp"

#include <algorithm>
#include <random>

#include "luk/infimum.hpp"
#include "luk/normal_form.hpp"

namespace luk {

std::string fresh_name(const std::vector<std::string>& taken, const std::string& stem) {
  std::string name = stem;
  for (int i = 1; std::find(taken.begin(), taken.end(), name) != taken.end(); ++i) name = stem + std::to_string(i);
  return name;
}

ObservationReport check_observation(const Formula& f, std::size_t samples, std::uint64_t seed) {
  ObservationReport r;
  r.formula = f;
  r.tautology = is_classical_tautology(f);
  const auto vars = propositional_variables(f);

  auto inf = infimum(f);
  r.infimum = inf.value;
  r.witness = inf.witness;

  Assignment half;
  for (const auto& v : vars) half.emplace(v, TruthValue::half());
  r.at_half = eval_prop(f, half);

  r.negation_implies = infimum(make_implies(make_not(f), f)).value;
  r.fresh_variable = fresh_name(vars);
  const Formula p = make_atom(r.fresh_variable);
  r.contradiction_implies = infimum(make_implies(make_and(p, make_not(p)), f)).value;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> den_dist(1, 12);
  r.sampled_min = TruthValue::one();
  for (std::size_t i = 0; i < samples; ++i) {
    Assignment s;
    for (const auto& v : vars) {
      const int den = den_dist(rng);
      std::uniform_int_distribution<int> num_dist(0, den);
      s.emplace(v, TruthValue(num_dist(rng), den));
    }
    r.sampled_min = meet(r.sampled_min, eval_prop(f, s));
  }
  r.samples = samples;

  const TruthValue half_value = TruthValue::half();
  if (half_value < r.infimum) r.failures.push_back("(a) infimum exceeds 1/2");
  if (half_value < r.at_half) r.failures.push_back("(a) all-1/2 assignment exceeds 1/2");
  if (r.tautology) {
    if (r.infimum != half_value) r.failures.push_back("(b) tautology with infimum " + r.infimum.str());
    if (samples > 0 && r.sampled_min < half_value) r.failures.push_back("(b) sampled value below 1/2");
  } else if (!r.infimum.is_zero()) {
    r.failures.push_back("(c) non-tautology with infimum " + r.infimum.str());
  }
  if (r.negation_implies.is_one() != r.tautology) r.failures.push_back("(d) ~f -> f disagrees with tautology");
  if (r.contradiction_implies.is_one() != r.tautology) {
    r.failures.push_back("(d) p /\\ ~p -> f disagrees with tautology");
  }
  return r;
}

}  // namespace luk

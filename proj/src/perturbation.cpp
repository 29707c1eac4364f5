#include <random>

#include "luk/part2.hpp"

namespace luk {

FuzzyModel perturbed_truncation(const ReductionConfig& cfg, int domain, const TruthValue& amplitude, int n,
                                bool saturated, std::uint64_t seed) {
  FuzzyModel M = build_truncation(cfg, domain);
  if (n < 1 || n >= domain) throw std::invalid_argument("column n outside the domain");
  std::mt19937_64 rng(seed);
  const SmallRational amp = amplitude.value();

  if (!amplitude.is_zero()) {
    // Lower a quarter of the true crisp facts by amp/2 or amp.
    std::uniform_int_distribution<int> pick(0, 7);
    for (const auto& [name, table] : M.relations()) {
      if (name == sym::kQ || name == sym::kP) continue;
      auto& t = M.relation(name);
      for (std::size_t i = 0; i < table.size(); ++i) {
        if (!t.flat(i).is_one()) continue;
        const int roll = pick(rng);
        if (roll == 0) t.set_flat(i, TruthValue(SmallRational(1) - amp / SmallRational(2)));
        else if (roll == 1) t.set_flat(i, TruthValue(SmallRational(1) - amp));
      }
    }
    M.set(sym::kLt, {0, domain - 1}, TruthValue(SmallRational(1) - amp));

    // Q moves by at most amp/3, which keeps phi2 and phi3 within amp.
    const SmallRational step = amp / SmallRational(3);
    std::uniform_int_distribution<int> dir(-1, 1);
    auto& qt = M.relation(sym::kQ);
    for (std::size_t i = 0; i < qt.size(); ++i) {
      SmallRational v = qt.flat(i).value() + SmallRational(dir(rng)) * step;
      if (v < SmallRational(0)) v = 0;
      if (SmallRational(1) < v) v = 1;
      qt.set_flat(i, TruthValue(v));
    }
  }
  if (saturated) {
    for (int x = 1; x < domain; ++x) M.set(sym::kQ, {x, n}, TruthValue::one());
  }
  return M;
}

std::vector<FamilyMember> perturbation_family(const ReductionConfig& cfg, std::uint64_t seed) {
  struct Plan {
    TruthValue amplitude;
    int n;
    bool saturated;
  };
  std::vector<Plan> plans;
  for (int n = 11; n <= 15; ++n) plans.push_back({TruthValue::zero(), n, false});
  for (int n = 21; n <= 28; ++n) plans.push_back({TruthValue(1, 20), n, n % 2 == 0});
  for (int i = 0; i < 8; ++i) plans.push_back({TruthValue(1, 100), 101, i % 2 == 1});

  std::vector<FamilyMember> out;
  int index = 0;
  for (const auto& p : plans) {
    const int domain = std::max(p.n + 1, cfg.N + 2);
    int m = 4 + 2 * (index % 4);
    while (m > cfg.m_max || cfg.in_A(m) == false) --m;
    if (m <= 3) throw ConfigError("configuration has no m in A within (3, m_max]");
    std::vector<int> chain;
    for (int i = 2; i <= p.n; ++i) chain.push_back(i);
    FamilyMember member{
        "amp=" + p.amplitude.str() + " n=" + std::to_string(p.n) + " m=" + std::to_string(m) +
            (p.saturated ? " saturated" : ""),
        perturbed_truncation(cfg, domain, p.amplitude, p.n, p.saturated, seed + static_cast<std::uint64_t>(index)),
        m,
        p.n,
        std::move(chain),
        p.amplitude,
        p.saturated};
    out.push_back(std::move(member));
    ++index;
  }
  return out;
}

}  // namespace luk

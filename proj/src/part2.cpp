#include "luk/part2.hpp"

#include <algorithm>
#include <sstream>

namespace luk {

std::string InequalityCheck::status() const {
  if (!premises) return "vacuous";
  return holds ? "holds" : "FAILS";
}

bool Part2Report::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const InequalityCheck& c) { return c.ok(); });
}

std::string Part2Report::summary() const {
  std::ostringstream out;
  out << "m=" << m << " n=" << n << " e=" << e.str() << " delta=" << delta.str() << " case=" << case_number
      << (trivial ? " trivial" : "") << " psi'=" << psi_value.str() << '\n';
  for (const auto& c : checks) {
    out << c.name << ' ' << c.status();
    if (!c.detail.empty()) out << ' ' << c.detail;
    out << '\n';
  }
  return out.str();
}

namespace {

Rational rmin(const Rational& a, const Rational& b) { return b < a ? b : a; }

std::string ge_detail(const Rational& lhs, const Rational& rhs) {
  return format_rational(lhs) + " >= " + format_rational(rhs);
}

}  // namespace

Part2Report verify_part2_inequalities(const Reduction& red, const FuzzyModel& M, int m, int n,
                                      const std::vector<int>& chain, const TruthValue& delta) {
  const ReductionConfig& cfg = red.config();
  if (m <= 3 || m > cfg.m_max || m > n) throw std::invalid_argument("m must lie in (3, min(n, m_max)]");
  if (chain.size() != static_cast<std::size_t>(n - 1)) throw std::invalid_argument("chain must list a_2..a_n");
  const Rational d = delta.to_rational();
  if (d <= 0 || !(Rational(n) * d > 1)) throw std::invalid_argument("n must exceed 1/delta");

  Evaluator ev(M);
  Part2Report r;
  r.m = m;
  r.n = n;
  r.delta = delta;
  r.e = ev.closed(red.epsilon());
  const Rational e = r.e.to_rational();
  if (e > 0 && !(Rational(n) * e > 1)) throw std::invalid_argument("n must exceed 1/e");

  // a[k] = a_k for k = 1..n, a[0] = element of 0
  std::vector<int> a(static_cast<std::size_t>(n) + 1);
  a[0] = M.constant(sym::kZero);
  a[1] = M.constant(sym::kOne);
  for (int k = 2; k <= n; ++k) a[static_cast<std::size_t>(k)] = chain[static_cast<std::size_t>(k - 2)];
  auto at = [&](int k) { return a[static_cast<std::size_t>(k)]; };

  const Rational one_minus_e = 1 - e;
  auto near_one = [&](const TruthValue& v) { return v.to_rational() >= one_minus_e; };

  std::vector<TruthValue> phi;
  for (const auto& f : red.phis()) phi.push_back(ev.closed(f));
  // links[k] = Succ(a_k, a_k+1), k = 0..n-1
  std::vector<TruthValue> links;
  for (int k = 0; k < n; ++k) links.push_back(M.value(sym::kSucc, {at(k), at(k + 1)}));

  r.trivial = !(e < Rational(1, 10));
  for (const auto& v : phi) r.trivial = r.trivial || v.to_rational() <= e;
  for (int k = 0; k < m; ++k) r.trivial = r.trivial || links[static_cast<std::size_t>(k)].to_rational() <= e;

  r.psi_value = ev.closed(red.psi_instance(m, std::vector<int>(chain.begin(), chain.begin() + (m - 1))));
  if (r.trivial) {
    r.checks.push_back({"trivial-one", true, r.psi_value.is_one(), "psi' = " + r.psi_value.str()});
  }

  for (int k = 1; k <= n; ++k) r.q.push_back(M.value(sym::kQ, {at(k), at(n)}));
  auto qv = [&](int k) { return r.q[static_cast<std::size_t>(k - 1)].to_rational(); };
  const Rational q1 = qv(1);
  const Rational qn = qv(n);

  // step_k needs phi3 and the link a_k < a_k+1, both >= 1 - e
  bool steps_premised = true;
  bool steps_before = true;
  for (int k = 1; k <= n; ++k) {
    const Rational bound = rmin(Rational(k) * (q1 - 2 * e), 1 - 2 * e);
    r.checks.push_back({"(*1)_" + std::to_string(k), steps_before, qv(k) >= bound, ge_detail(qv(k), bound)});
    if (k == n) break;
    const bool prem = near_one(phi[3]) && near_one(links[static_cast<std::size_t>(k)]);
    const Rational rhs = rmin(1, qv(k) + q1) - 2 * e;
    r.checks.push_back({"step_" + std::to_string(k), prem, qv(k + 1) >= rhs, ge_detail(qv(k + 1), rhs)});
    steps_premised = steps_premised && prem;
    steps_before = steps_premised;
  }

  const bool phi2_premised = near_one(phi[2]);
  {
    const Rational rhs = 1 - q1 - e;
    r.checks.push_back({"(*2)", phi2_premised, qn >= rhs, ge_detail(qn, rhs)});
  }

  if (e == 0) r.case_number = 1;
  else r.case_number = q1 <= 3 * e ? 2 : 3;

  bool star_premised = false;
  Rational case_bound;
  switch (r.case_number) {
    case 1:
      star_premised = steps_premised && phi2_premised;
      case_bound = Rational(n, n + 1);
      break;
    case 2:
      star_premised = phi2_premised;
      case_bound = 1 - 4 * e;
      break;
    default:
      star_premised = steps_premised;
      case_bound = 1 - 2 * e;
      break;
  }
  r.checks.push_back({"case" + std::to_string(r.case_number), star_premised, qn >= case_bound, ge_detail(qn, case_bound)});
  const Rational star = rmin(1 - 4 * e, 1 - d);
  r.checks.push_back({"(**)", star_premised, qn >= star, ge_detail(qn, star)});

  const TruthValue r_mn = M.value(sym::kR, {at(m), at(n)});
  const bool p_premised = star_premised && near_one(phi[1]) && near_one(r_mn);
  const Rational p = M.value(sym::kP, {at(m)}).to_rational();
  const Rational p_bound = rmin(1 - 6 * e, 1 - d - 2 * e);
  r.checks.push_back({"P(a_m)", p_premised, p >= p_bound, ge_detail(p, p_bound)});

  const Rational psi = r.psi_value.to_rational();
  r.checks.push_back({"psi'", r.trivial || p_premised, psi >= 1 - d, ge_detail(psi, 1 - d)});
  return r;
}

}  // namespace luk

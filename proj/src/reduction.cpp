#include "luk/reduction.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <unordered_map>

namespace luk {

std::string sym::numeral(int j) { return "Num" + std::to_string(j); }

std::string psi_variable(int i) { return "x" + std::to_string(i); }

namespace {

Term var(const std::string& v) { return Term::variable(v); }
Term zero() { return Term::constant(sym::kZero); }
Term one() { return Term::constant(sym::kOne); }

Formula lt(Term a, Term b) { return make_atom(sym::kLt, {std::move(a), std::move(b)}); }
Formula succ(Term a, Term b) { return make_atom(sym::kSucc, {std::move(a), std::move(b)}); }
Formula num(int j, Term a) { return make_atom(sym::numeral(j), {std::move(a)}); }
Formula q(Term a, Term b) { return make_atom(sym::kQ, {std::move(a), std::move(b)}); }

Formula forall(std::initializer_list<const char*> vars, Formula body) {
  std::vector<std::string> names(vars.begin(), vars.end());
  for (auto it = names.rbegin(); it != names.rend(); ++it) body = make_forall(*it, std::move(body));
  return body;
}

Formula any_numeral(const std::vector<int>& js, const Term& t) {
  std::vector<Formula> parts;
  for (int j : js) parts.push_back(num(j, t));
  return fold(Connective::Or, parts);
}

}  // namespace

Signature reduction_signature(const ReductionConfig& cfg) {
  Signature sig;
  sig.add_constant(sym::kZero);
  sig.add_constant(sym::kOne);
  sig.add_relation(sym::kLt, 2);
  sig.add_relation(sym::kSucc, 2);
  sig.add_relation(sym::kAdd, 3);
  sig.add_relation(sym::kMul, 3);
  sig.add_relation(sym::kR, 2);
  for (int j = 0; j <= cfg.N; ++j) sig.add_relation(sym::numeral(j), 1);
  sig.add_relation(sym::kQ, 2);
  sig.add_relation(sym::kP, 1);
  return sig;
}

ClosedFormula build_phi0(const ReductionConfig& cfg) {
  cfg.validate();
  const Term x = var("x"), y = var("y"), z = var("z");
  std::vector<Formula> ax;

  ax.push_back(num(0, zero()));
  ax.push_back(num(1, one()));
  ax.push_back(make_not(num(0, one())));
  ax.push_back(lt(zero(), one()));
  ax.push_back(succ(zero(), one()));

  // order and successor
  ax.push_back(forall({"x"}, make_not(lt(x, x))));
  ax.push_back(forall({"x", "y", "z"}, make_implies(make_and(lt(x, y), lt(y, z)), lt(x, z))));
  ax.push_back(forall({"x", "y"}, make_implies(succ(x, y), lt(x, y))));
  ax.push_back(forall({"x", "y", "z"}, make_implies(succ(x, y), make_not(make_and(lt(x, z), lt(z, y))))));
  ax.push_back(forall({"x", "y", "z"}, make_implies(make_and(succ(x, y), succ(x, z)), make_not(lt(y, z)))));
  ax.push_back(forall({"x", "y", "z"}, make_implies(make_and(succ(x, z), succ(y, z)), make_not(lt(x, y)))));
  ax.push_back(forall({"x"}, make_implies(make_exists("z", lt(x, z)), make_exists("y", succ(x, y)))));

  // arithmetic base cases
  ax.push_back(forall({"x"}, make_atom(sym::kAdd, {x, zero(), x})));
  ax.push_back(forall({"x", "y"}, make_implies(succ(x, y), make_atom(sym::kAdd, {x, one(), y}))));
  ax.push_back(forall({"x"}, make_atom(sym::kMul, {x, zero(), zero()})));
  ax.push_back(forall({"x"}, make_atom(sym::kMul, {x, one(), x})));

  // numerals are the successor chain from 0
  ax.push_back(forall({"x"}, make_iff(num(0, x), make_not(make_exists("z", lt(z, x))))));
  for (int j = 0; j < cfg.N; ++j) {
    ax.push_back(forall({"y"}, make_iff(num(j + 1, y), make_exists("x", make_and(num(j, x), succ(x, y))))));
  }

  // the R table up to N
  for (int m = 0; m <= cfg.N; ++m) {
    std::vector<int> pos, neg;
    for (int n = 0; n <= cfg.N; ++n) (cfg.R(m, n) ? pos : neg).push_back(n);
    if (!pos.empty()) {
      ax.push_back(forall({"x", "y"}, make_implies(make_and(num(m, x), any_numeral(pos, y)),
                                                   make_atom(sym::kR, {x, y}))));
    }
    if (!neg.empty()) {
      ax.push_back(forall({"x", "y"}, make_implies(make_and(num(m, x), any_numeral(neg, y)),
                                                   make_not(make_atom(sym::kR, {x, y})))));
    }
  }
  return ClosedFormula(fold(Connective::And, ax), reduction_signature(cfg));
}

Phi123 build_phi123() {
  const Term x = var("x"), y = var("y"), xp = var("x'");
  Formula phi1 = forall({"x", "y"}, make_implies(make_strict_and(make_atom(sym::kR, {x, y}), q(y, y)),
                                                 make_atom(sym::kP, {x})));
  Formula phi2 = forall({"y"}, make_iff(q(one(), y), make_not(q(y, y))));
  Formula phi3 = forall({"x", "x'", "y"},
                        make_implies(succ(x, xp), make_iff(make_strict_or(q(x, y), q(one(), y)), q(xp, y))));
  return Phi123{ClosedFormula(phi1, infer_signature(phi1)), ClosedFormula(phi2, infer_signature(phi2)),
                ClosedFormula(phi3, infer_signature(phi3))};
}

Reduction::Reduction(ReductionConfig cfg) : cfg_(std::move(cfg)), sig_(reduction_signature(cfg_)) {
  phi0_ = build_phi0(cfg_).formula();
  auto p = build_phi123();
  phi1_ = p.phi1.formula();
  phi2_ = p.phi2.formula();
  phi3_ = p.phi3.formula();
  const auto roots = phis();
  sources_ = luk::epsilon_sources(roots, {sym::kQ, sym::kP});
  epsilon_ = epsilon_formula(sources_);
}

std::vector<Formula> Reduction::rounding_tracked() const {
  std::vector<Formula> out;
  std::unordered_map<Formula, bool, FormulaHash> seen;
  for (const auto& r : phis()) {
    for (const auto& g : subformulas(r)) {
      if (!seen.emplace(g, true).second) continue;
      if (g.is_atom() && (g.relation() == sym::kQ || g.relation() == sym::kP)) continue;
      out.push_back(g);
    }
  }
  return out;
}

Formula Reduction::chain(int m) const {
  std::vector<Formula> links{succ(zero(), one())};
  Term prev = one();
  for (int i = 2; i <= m; ++i) {
    Term cur = var(psi_variable(i));
    links.push_back(succ(prev, cur));
    prev = cur;
  }
  return fold(Connective::And, links);
}

namespace {

Formula psi_body(const Reduction& red, int m) {
  if (m <= 3) throw std::invalid_argument("psi_m needs m > 3");
  if (m > red.config().m_max) throw std::invalid_argument("psi_m needs m <= m_max");
  const std::vector<Formula> parts{red.phi0(), red.phi1(), red.phi2(), red.phi3(), red.chain(m)};
  return make_implies(fold(Connective::StrictAnd, parts),
                      make_strict_or(make_atom(sym::kP, {var(psi_variable(m))}), multiple(red.epsilon(), 10)));
}

}  // namespace

ClosedFormula Reduction::psi(int m) const { return ClosedFormula(universal_closure(psi_body(*this, m)), sig_); }

Formula Reduction::psi_instance(int m, const std::vector<int>& elements) const {
  Formula body = psi_body(*this, m);
  if (elements.size() != static_cast<std::size_t>(m - 1)) {
    throw std::invalid_argument("psi_m instance needs m-1 elements");
  }
  std::map<std::string, Term> sub;
  for (int i = 2; i <= m; ++i) sub.emplace(psi_variable(i), Term::element_of(elements[static_cast<std::size_t>(i - 2)]));
  return substitute(body, sub);
}

Formula Reduction::canonical_instance(int m) const {
  std::vector<int> elements;
  for (int i = 2; i <= m; ++i) elements.push_back(i);
  return psi_instance(m, elements);
}

FuzzyModel build_truncation(const ReductionConfig& cfg, int k) {
  cfg.validate();
  if (k <= cfg.N) throw ConfigError("truncation must contain the numerals 0..N");
  const TruthValue one_v = TruthValue::one();
  FuzzyModel m(k);
  m.set_constant(sym::kZero, 0);
  m.set_constant(sym::kOne, 1);
  auto& lt_t = m.add_relation(sym::kLt, 2);
  auto& succ_t = m.add_relation(sym::kSucc, 2);
  auto& add_t = m.add_relation(sym::kAdd, 3);
  auto& mul_t = m.add_relation(sym::kMul, 3);
  auto& r_t = m.add_relation(sym::kR, 2);
  auto& q_t = m.add_relation(sym::kQ, 2);
  auto& p_t = m.add_relation(sym::kP, 1);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      const std::array<int, 2> ab{a, b};
      if (a < b) lt_t.set(ab, one_v);
      if (b == a + 1) succ_t.set(ab, one_v);
      bool r = false;
      if (cfg.table == ReductionConfig::Table::EvenOrLt) r = cfg.R(a, b);
      else r = a <= cfg.N && b <= cfg.N && cfg.R(a, b);
      if (r) r_t.set(ab, one_v);
      q_t.set(ab, a >= b + 1 ? one_v : TruthValue(a, b + 1));
      if (a + b < k) add_t.set(std::array<int, 3>{a, b, a + b}, one_v);
      if (a * b < k) mul_t.set(std::array<int, 3>{a, b, a * b}, one_v);
    }
    const std::array<int, 1> t{a};
    p_t.set(t, cfg.in_A(a) ? one_v : TruthValue(cfg.f(a) - 1, cfg.f(a)));
  }
  for (int j = 0; j <= cfg.N; ++j) {
    m.add_relation(sym::numeral(j), 1).set(std::array<int, 1>{j}, one_v);
  }
  return m;
}

FuzzyModel build_truncation(const ReductionConfig& cfg) { return build_truncation(cfg, cfg.k); }

std::string format_qp_tables(const FuzzyModel& m, int limit) {
  std::ostringstream out;
  const int rows = std::min(limit, m.domain_size());
  out << "Q(m,n), rows m, columns n < " << rows << '\n';
  for (int a = 0; a < rows; ++a) {
    for (int b = 0; b < rows; ++b) out << (b ? " " : "") << m.value(sym::kQ, {a, b}).str();
    out << '\n';
  }
  out << "P(m)\n";
  for (int a = 0; a < rows; ++a) out << a << ' ' << m.value(sym::kP, {a}).str() << '\n';
  return out.str();
}

bool FactReport::ok() const {
  if (!epsilon.is_zero() || !q_recurrence) return false;
  return std::all_of(components.begin(), components.end(), [](const FactComponent& c) { return c.value.is_one(); });
}

FactReport verify_fact(const Reduction& red, const FuzzyModel& model) {
  FactReport report;
  Evaluator ev(model);
  const std::vector<std::pair<std::string, Formula>> named{
      {"phi0", red.phi0()}, {"phi1", red.phi1()}, {"phi2", red.phi2()}, {"phi3", red.phi3()}};
  for (const auto& [name, f] : named) {
    FactComponent c{name, ev.closed(f), std::nullopt};
    if (!c.value.is_one()) {
      // Trace into the offending conjunct when the root is a conjunction.
      Formula target = f;
      while (target.kind() == Formula::Kind::Binary && target.connective() == Connective::And) {
        target = ev.closed(target.lhs()) == c.value ? target.lhs() : target.rhs();
      }
      c.trace = eval_report(target, model);
    }
    report.components.push_back(std::move(c));
  }
  report.epsilon = ev.closed(red.epsilon());

  const int k = model.domain_size();
  for (int a = 0; a + 1 < k && report.q_recurrence; ++a) {
    for (int b = 0; b < k; ++b) {
      const TruthValue lhs = model.value(sym::kQ, {a + 1, b});
      const TruthValue rhs = strong_disjunction(model.value(sym::kQ, {a, b}), model.value(sym::kQ, {1, b}));
      if (lhs != rhs) {
        report.q_recurrence = false;
        report.q_recurrence_failure = std::make_pair(a, b);
        break;
      }
    }
  }
  return report;
}

FactReport verify_fact(const Reduction& red) { return verify_fact(red, build_truncation(red.config())); }

MainClaimResult evaluate_main_claim(const Reduction& red, const FuzzyModel& truncation, int m) {
  MainClaimResult r;
  r.m = m;
  r.in_A = red.config().in_A(m);
  r.f_m = r.in_A ? 0 : red.config().f(m);
  r.value = eval_closed(red.canonical_instance(m), truncation);
  r.verdict = r.value.is_one() ? "INSTANCE-ONE" : "NOT-VALID";
  return r;
}

MainClaimResult verify_mainclaim_part1(const Reduction& red, const FuzzyModel& truncation, int m) {
  if (red.config().in_A(m)) {
    throw std::invalid_argument("m = " + std::to_string(m) + " is in A; use the dual check");
  }
  return evaluate_main_claim(red, truncation, m);
}

}  // namespace luk

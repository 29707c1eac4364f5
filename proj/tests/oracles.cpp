#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace oracle {

using luk::Connective;
using luk::Term;

Rational eval(const Formula& f, const RationalAssignment& s) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::True: return 1;
    case K::False: return 0;
    case K::Atom: return s.at(f.relation());
    case K::Not: return 1 - eval(f.operand(), s);
    case K::Binary: {
      const Rational a = eval(f.lhs(), s);
      const Rational b = eval(f.rhs(), s);
      switch (f.connective()) {
        case Connective::Implies: return std::min<Rational>(1, 1 - a + b);
        case Connective::And: return std::min(a, b);
        case Connective::Or: return std::max(a, b);
        case Connective::StrictAnd: return std::max<Rational>(0, a + b - 1);
        case Connective::StrictOr: return std::min<Rational>(1, a + b);
        case Connective::Not: break;
      }
      break;
    }
    case K::Quantified: break;
  }
  throw std::logic_error("oracle::eval: not propositional");
}

std::vector<Rational> farey(int d) {
  std::set<Rational> s;
  for (int q = 1; q <= d; ++q) {
    for (int p = 0; p <= q; ++p) s.insert(Rational(p, q));
  }
  return {s.begin(), s.end()};
}

namespace {

void collect_vars(const Formula& f, std::set<std::string>& out) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Atom: out.insert(f.relation()); return;
    case K::Not: collect_vars(f.operand(), out); return;
    case K::Binary:
      collect_vars(f.lhs(), out);
      collect_vars(f.rhs(), out);
      return;
    case K::Quantified: collect_vars(f.body(), out); return;
    default: return;
  }
}

}  // namespace

GridMin grid_min(const Formula& f, int d) {
  std::set<std::string> names;
  collect_vars(f, names);
  const std::vector<std::string> vars(names.begin(), names.end());
  const auto grid = farey(d);
  GridMin out;
  out.value = 2;
  std::vector<std::size_t> idx(vars.size(), 0);
  RationalAssignment s;
  for (;;) {
    for (std::size_t i = 0; i < vars.size(); ++i) s[vars[i]] = grid[idx[i]];
    const Rational v = eval(f, s);
    ++out.points;
    if (v < out.value) {
      out.value = v;
      out.argmin = s;
    }
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == grid.size()) idx[i++] = 0;
    if (i == idx.size()) break;
  }
  return out;
}

bool truth_table_tautology(const Formula& f) {
  std::set<std::string> names;
  collect_vars(f, names);
  const std::vector<std::string> vars(names.begin(), names.end());
  for (std::size_t mask = 0; mask < (std::size_t(1) << vars.size()); ++mask) {
    RationalAssignment s;
    for (std::size_t i = 0; i < vars.size(); ++i) s[vars[i]] = (mask >> i) & 1 ? 1 : 0;
    if (eval(f, s) != 1) return false;
  }
  return true;
}

namespace {

std::string term_key(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Element: return "#" + std::to_string(t.element);
    case Term::Kind::Apply: {
      std::string s = t.name + "(";
      for (std::size_t i = 0; i < t.args.size(); ++i) s += (i ? "," : "") + term_key(t.args[i]);
      return s + ")";
    }
    default: return t.name;
  }
}

std::string atom_key(const Formula& a) {
  std::string s = a.relation() + "(";
  for (std::size_t i = 0; i < a.args().size(); ++i) s += (i ? "," : "") + term_key(a.args()[i]);
  return s + ")";
}

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Atom: out.insert(atom_key(f)); return;
    case K::Not: collect_atoms(f.operand(), out); return;
    case K::Binary:
      collect_atoms(f.lhs(), out);
      collect_atoms(f.rhs(), out);
      return;
    default: throw std::logic_error("ground_contradiction: quantifier in instance");
  }
}

bool ground_true(const Formula& f, const std::map<std::string, bool>& v) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::True: return true;
    case K::False: return false;
    case K::Atom: return v.at(atom_key(f));
    case K::Not: return !ground_true(f.operand(), v);
    case K::Binary: {
      const bool a = ground_true(f.lhs(), v), b = ground_true(f.rhs(), v);
      switch (f.connective()) {
        case Connective::And:
        case Connective::StrictAnd: return a && b;
        case Connective::Or:
        case Connective::StrictOr: return a || b;
        case Connective::Implies: return !a || b;
        default: break;
      }
      break;
    }
    default: break;
  }
  throw std::logic_error("ground_true");
}

}  // namespace

bool ground_contradiction(const std::vector<Formula>& conjuncts) {
  std::set<std::string> atoms;
  for (const auto& c : conjuncts) collect_atoms(c, atoms);
  const std::vector<std::string> names(atoms.begin(), atoms.end());
  if (names.size() > 24) throw std::length_error("too many atoms for a truth table");
  for (std::size_t mask = 0; mask < (std::size_t(1) << names.size()); ++mask) {
    std::map<std::string, bool> v;
    for (std::size_t i = 0; i < names.size(); ++i) v[names[i]] = (mask >> i) & 1;
    if (std::all_of(conjuncts.begin(), conjuncts.end(), [&](const Formula& c) { return ground_true(c, v); })) {
      return false;
    }
  }
  return true;
}

std::vector<Formula> all_formulas(const std::vector<std::string>& vars, int h) {
  std::vector<Formula> out;
  if (h < 1) return out;
  for (const auto& v : vars) out.push_back(luk::make_atom(v));
  for (int level = 2; level <= h; ++level) {
    const std::vector<Formula> prev = out;
    std::vector<Formula> next;
    for (const auto& v : vars) next.push_back(luk::make_atom(v));
    for (const auto& a : prev) next.push_back(luk::make_not(a));
    for (auto c : {Connective::Implies, Connective::And, Connective::Or, Connective::StrictAnd, Connective::StrictOr}) {
      for (const auto& a : prev) {
        for (const auto& b : prev) next.push_back(luk::make_binary(c, a, b));
      }
    }
    out = std::move(next);
  }
  return out;
}

Formula random_formula(std::mt19937_64& rng, int vars, int depth, bool classical) {
  std::uniform_int_distribution<int> var_pick(0, vars - 1);
  auto atom = [&] { return luk::make_atom(std::string(1, static_cast<char>('p' + var_pick(rng)))); };
  if (depth <= 0) return atom();
  std::uniform_int_distribution<int> op(0, classical ? 3 : 7);
  switch (op(rng)) {
    case 0: return atom();
    case 1: return luk::make_not(random_formula(rng, vars, depth - 1, classical));
    case 2: return luk::make_and(random_formula(rng, vars, depth - 1, classical), random_formula(rng, vars, depth - 1, classical));
    case 3: return luk::make_or(random_formula(rng, vars, depth - 1, classical), random_formula(rng, vars, depth - 1, classical));
    case 4: return luk::make_implies(random_formula(rng, vars, depth - 1), random_formula(rng, vars, depth - 1));
    case 5: return luk::make_strict_and(random_formula(rng, vars, depth - 1), random_formula(rng, vars, depth - 1));
    case 6: return luk::make_strict_or(random_formula(rng, vars, depth - 1), random_formula(rng, vars, depth - 1));
    default: return luk::make_not(random_formula(rng, vars, depth - 1));
  }
}

namespace {

Formula random_predicate_in(std::mt19937_64& rng, int depth, std::vector<std::string>& scope) {
  auto term = [&] {
    std::uniform_int_distribution<std::size_t> pick(0, scope.size());
    const std::size_t i = pick(rng);
    return i == scope.size() ? Term::constant("c") : Term::variable(scope[i]);
  };
  std::uniform_int_distribution<int> op(depth <= 0 ? 0 : 0, depth <= 0 ? 2 : 8);
  const int choice = op(rng);
  switch (choice) {
    case 0: return luk::make_atom("P", {term()});
    case 1: return luk::make_atom("R", {term()});
    case 2: return luk::make_atom("S", {term(), term()});
    case 3:
    case 4: return luk::make_not(random_predicate_in(rng, depth - 1, scope));
    case 5: return luk::make_and(random_predicate_in(rng, depth - 1, scope), random_predicate_in(rng, depth - 1, scope));
    case 6: return luk::make_or(random_predicate_in(rng, depth - 1, scope), random_predicate_in(rng, depth - 1, scope));
    default: {
      const std::string v = "x" + std::to_string(scope.size());
      scope.push_back(v);
      Formula body = random_predicate_in(rng, depth - 1, scope);
      scope.pop_back();
      return choice == 7 ? luk::make_forall(v, body) : luk::make_exists(v, body);
    }
  }
}

}  // namespace

Formula random_predicate(std::mt19937_64& rng, int depth) {
  std::vector<std::string> scope;
  return random_predicate_in(rng, depth, scope);
}

Rational random_unit(std::mt19937_64& rng, int max_den) {
  std::uniform_int_distribution<int> den(1, max_den);
  const int q = den(rng);
  std::uniform_int_distribution<int> num(0, q);
  return Rational(num(rng), q);
}

luk::FuzzyModel random_model(std::mt19937_64& rng, const luk::Signature& sig, int domain, int max_den) {
  luk::FuzzyModel m(domain);
  std::uniform_int_distribution<int> elem(0, domain - 1);
  for (const auto& c : sig.constants()) m.set_constant(c, elem(rng));
  for (const auto& [name, k] : sig.relations()) {
    auto& t = m.add_relation(name, k);
    for (std::size_t i = 0; i < t.size(); ++i) t.set_flat(i, luk::TruthValue::from_rational(random_unit(rng, max_den)));
  }
  return m;
}

bool crisp_eval(const Formula& f, const luk::FuzzyModel& m, std::map<std::string, int>& env) {
  using K = Formula::Kind;
  auto element = [&](const Term& t) {
    switch (t.kind) {
      case Term::Kind::Variable: return env.at(t.name);
      case Term::Kind::Constant: return m.constant(t.name);
      case Term::Kind::Element: return t.element;
      default: throw std::logic_error("crisp_eval: function term");
    }
  };
  switch (f.kind()) {
    case K::True: return true;
    case K::False: return false;
    case K::Atom: {
      std::vector<int> tuple;
      for (const auto& t : f.args()) tuple.push_back(element(t));
      return m.relation(f.relation()).at(tuple).is_one();
    }
    case K::Not: return !crisp_eval(f.operand(), m, env);
    case K::Binary: {
      const bool a = crisp_eval(f.lhs(), m, env);
      switch (f.connective()) {
        case Connective::And:
        case Connective::StrictAnd: return a && crisp_eval(f.rhs(), m, env);
        case Connective::Or:
        case Connective::StrictOr: return a || crisp_eval(f.rhs(), m, env);
        case Connective::Implies: return !a || crisp_eval(f.rhs(), m, env);
        default: break;
      }
      break;
    }
    case K::Quantified: {
      const bool forall = f.quantifier() == luk::Quantifier::Forall;
      const auto saved = env.find(f.variable()) == env.end() ? std::optional<int>() : std::optional<int>(env[f.variable()]);
      bool result = forall;
      for (int e = 0; e < m.domain_size(); ++e) {
        env[f.variable()] = e;
        const bool v = crisp_eval(f.body(), m, env);
        if (forall && !v) { result = false; break; }
        if (!forall && v) { result = true; break; }
      }
      if (saved) env[f.variable()] = *saved;
      else env.erase(f.variable());
      return result;
    }
  }
  throw std::logic_error("crisp_eval");
}

Rational model_eval(const Formula& f, const luk::FuzzyModel& m, std::map<std::string, int>& env) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::True: return 1;
    case K::False: return 0;
    case K::Atom: {
      std::vector<int> tuple;
      for (const auto& t : f.args()) {
        switch (t.kind) {
          case Term::Kind::Variable: tuple.push_back(env.at(t.name)); break;
          case Term::Kind::Constant: tuple.push_back(m.constant(t.name)); break;
          case Term::Kind::Element: tuple.push_back(t.element); break;
          default: throw std::logic_error("model_eval: function term");
        }
      }
      return m.relation(f.relation()).at(tuple).to_rational();
    }
    case K::Not: return 1 - model_eval(f.operand(), m, env);
    case K::Binary: {
      const Rational a = model_eval(f.lhs(), m, env);
      const Rational b = model_eval(f.rhs(), m, env);
      switch (f.connective()) {
        case Connective::Implies: return std::min<Rational>(1, 1 - a + b);
        case Connective::And: return std::min(a, b);
        case Connective::Or: return std::max(a, b);
        case Connective::StrictAnd: return std::max<Rational>(0, a + b - 1);
        case Connective::StrictOr: return std::min<Rational>(1, a + b);
        case Connective::Not: break;
      }
      break;
    }
    case K::Quantified: {
      const bool forall = f.quantifier() == luk::Quantifier::Forall;
      const auto saved = env.count(f.variable()) ? std::optional<int>(env[f.variable()]) : std::optional<int>();
      Rational result = forall ? 1 : 0;
      for (int e = 0; e < m.domain_size(); ++e) {
        env[f.variable()] = e;
        const Rational v = model_eval(f.body(), m, env);
        result = forall ? std::min(result, v) : std::max(result, v);
      }
      if (saved) env[f.variable()] = *saved;
      else env.erase(f.variable());
      return result;
    }
  }
  throw std::logic_error("model_eval");
}

std::optional<luk::FuzzyModel> crisp_countermodel(const Formula& f, int max_domain) {
  const luk::Signature sig = luk::infer_signature(f);
  const std::vector<std::string> constants(sig.constants().begin(), sig.constants().end());
  for (int d = 1; d <= max_domain; ++d) {
    std::size_t bits = 0;
    for (const auto& [name, k] : sig.relations()) {
      std::size_t n = 1;
      for (int i = 0; i < k; ++i) n *= static_cast<std::size_t>(d);
      bits += n;
    }
    if (bits > 20) break;
    std::size_t placements = 1;
    for (std::size_t i = 0; i < constants.size(); ++i) placements *= static_cast<std::size_t>(d);
    for (std::size_t mask = 0; mask < (std::size_t(1) << bits); ++mask) {
      for (std::size_t place = 0; place < placements; ++place) {
        luk::FuzzyModel m(d);
        std::size_t p = place;
        for (const auto& c : constants) {
          m.set_constant(c, static_cast<int>(p % static_cast<std::size_t>(d)));
          p /= static_cast<std::size_t>(d);
        }
        std::size_t bit = 0;
        for (const auto& [name, k] : sig.relations()) {
          auto& t = m.add_relation(name, k);
          for (std::size_t i = 0; i < t.size(); ++i, ++bit) {
            if ((mask >> bit) & 1) t.set_flat(i, luk::TruthValue::one());
          }
        }
        std::map<std::string, int> env;
        if (!crisp_eval(f, m, env)) return m;
      }
    }
  }
  return std::nullopt;
}

std::optional<Rational> vertex_min(const std::vector<Rational>& c, const std::vector<std::vector<Rational>>& a,
                                   const std::vector<Rational>& b) {
  const std::size_t n = c.size();
  // All constraints as g.x <= h, nonnegativity included.
  std::vector<std::vector<Rational>> g = a;
  std::vector<Rational> h = b;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> row(n, 0);
    row[j] = -1;
    g.push_back(row);
    h.push_back(0);
  }
  const std::size_t m = g.size();
  std::optional<Rational> best;
  std::vector<std::size_t> pick(n);
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t start, std::size_t depth) {
    if (depth == n) {
      // Solve the square system by Gauss-Jordan.
      std::vector<std::vector<Rational>> mat(n, std::vector<Rational>(n + 1));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) mat[i][j] = g[pick[i]][j];
        mat[i][n] = h[pick[i]];
      }
      for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && mat[piv][col] == 0) ++piv;
        if (piv == n) return;
        std::swap(mat[piv], mat[col]);
        for (std::size_t i = 0; i < n; ++i) {
          if (i == col || mat[i][col] == 0) continue;
          const Rational factor = mat[i][col] / mat[col][col];
          for (std::size_t j = col; j <= n; ++j) mat[i][j] -= factor * mat[col][j];
        }
      }
      std::vector<Rational> x(n);
      for (std::size_t i = 0; i < n; ++i) x[i] = mat[i][n] / mat[i][i];
      for (std::size_t r = 0; r < m; ++r) {
        Rational lhs = 0;
        for (std::size_t j = 0; j < n; ++j) lhs += g[r][j] * x[j];
        if (lhs > h[r]) return;
      }
      Rational v = 0;
      for (std::size_t j = 0; j < n; ++j) v += c[j] * x[j];
      if (!best || v < *best) best = v;
      return;
    }
    for (std::size_t i = start; i < m; ++i) {
      pick[depth] = i;
      choose(i + 1, depth + 1);
    }
  };
  choose(0, 0);
  return best;
}

}  // namespace oracle

#include "luk/infimum.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <system_error>
#include <unordered_map>

#include "luk/constraint_system.hpp"

namespace luk {

namespace {

template <class T>
struct Affine {
  std::vector<T> coef;
  T constant{};

  T at(const std::vector<T>& x) const {
    T v = constant;
    for (std::size_t i = 0; i < coef.size(); ++i) {
      if (coef[i] != T(0)) v += coef[i] * x[i];
    }
    return v;
  }
  bool is_constant() const {
    return std::all_of(coef.begin(), coef.end(), [](const T& c) { return c == T(0); });
  }
  friend bool operator==(const Affine&, const Affine&) = default;
};

template <class T>
Affine<T> operator-(const Affine<T>& a, const Affine<T>& b) {
  Affine<T> r = a;
  for (std::size_t i = 0; i < r.coef.size(); ++i) r.coef[i] -= b.coef[i];
  r.constant -= b.constant;
  return r;
}

template <class T>
Affine<T> operator+(const Affine<T>& a, const Affine<T>& b) {
  Affine<T> r = a;
  for (std::size_t i = 0; i < r.coef.size(); ++i) r.coef[i] += b.coef[i];
  r.constant += b.constant;
  return r;
}

template <class T>
Affine<T> constant_form(std::size_t n, T value) {
  return Affine<T>{std::vector<T>(n, T(0)), std::move(value)};
}

template <class T>
struct Region {
  std::vector<LinearConstraint<T>> rows;
  std::vector<T> point;
  // Comparisons already settled on this region, as (direction, sign of the
  // original form): the form scaled so its first nonzero coefficient is +-1.
  std::vector<std::pair<Affine<T>, int>> decided;
};

template <class T>
class Solver {
 public:
  explicit Solver(std::vector<std::string> vars) : vars_(std::move(vars)), n_(vars_.size()) {}

  InfimumResult run(const Formula& f) {
    Region<T> root;
    root.point.assign(n_, T(1) / T(2));
    expand(f, root, [&](const Region<T>& r, const Affine<T>& a) { leaf(r, a); });

    InfimumResult out;
    out.branches = leaves_;
    out.value = TruthValue(to_small_value(best_));
    std::optional<std::vector<T>> best_point;
    for (const auto& [rows, form] : optimal_) {
      ConstraintSystem<T> sys(n_);
      for (const auto& row : rows) sys.add(row.coeffs, row.bound);
      sys.add(form.coef, best_ - form.constant);
      auto p = sys.lexmin();
      if (p && (!best_point || *p < *best_point)) best_point = std::move(p);
    }
    if (!best_point) throw std::logic_error("infimum: no witness for optimal value");
    for (std::size_t i = 0; i < n_; ++i) out.witness.emplace(vars_[i], TruthValue(to_small_value((*best_point)[i])));
    return out;
  }

 private:
  using Cont = std::function<void(const Region<T>&, const Affine<T>&)>;

  static SmallRational to_small_value(const SmallRational& v) { return v; }
  static SmallRational to_small_value(const Rational& v) { return to_small(v); }

  void expand(const Formula& f, const Region<T>& r, const Cont& k) {
    switch (f.kind()) {
      case Formula::Kind::True: k(r, constant_form<T>(n_, T(1))); return;
      case Formula::Kind::False: k(r, constant_form<T>(n_, T(0))); return;
      case Formula::Kind::Atom: {
        auto it = std::lower_bound(vars_.begin(), vars_.end(), f.relation());
        Affine<T> a = constant_form<T>(n_, T(0));
        a.coef[static_cast<std::size_t>(it - vars_.begin())] = T(1);
        k(r, a);
        return;
      }
      case Formula::Kind::Not:
        expand(f.operand(), r, [&](const Region<T>& r1, const Affine<T>& a) {
          k(r1, constant_form<T>(n_, T(1)) - a);
        });
        return;
      case Formula::Kind::Binary:
        expand(f.lhs(), r, [&](const Region<T>& r1, const Affine<T>& a) {
          expand(f.rhs(), r1, [&](const Region<T>& r2, const Affine<T>& b) { combine(f.connective(), r2, a, b, k); });
        });
        return;
      case Formula::Kind::Quantified: throw EvalError("quantifier in propositional formula");
    }
  }

  void combine(Connective c, const Region<T>& r, const Affine<T>& a, const Affine<T>& b, const Cont& k) {
    const Affine<T> one = constant_form<T>(n_, T(1));
    const Affine<T> zero = constant_form<T>(n_, T(0));
    switch (c) {
      case Connective::And: split(r, a - b, [&](const Region<T>& x) { k(x, a); }, [&](const Region<T>& x) { k(x, b); }); return;
      case Connective::Or: split(r, a - b, [&](const Region<T>& x) { k(x, b); }, [&](const Region<T>& x) { k(x, a); }); return;
      case Connective::StrictOr: {
        const Affine<T> sum = a + b;
        split(r, sum - one, [&](const Region<T>& x) { k(x, sum); }, [&](const Region<T>& x) { k(x, one); });
        return;
      }
      case Connective::StrictAnd: {
        const Affine<T> sum = a + b - one;
        split(r, sum, [&](const Region<T>& x) { k(x, zero); }, [&](const Region<T>& x) { k(x, sum); });
        return;
      }
      case Connective::Implies: {
        const Affine<T> val = one - a + b;
        split(r, a - b, [&](const Region<T>& x) { k(x, one); }, [&](const Region<T>& x) { k(x, val); });
        return;
      }
      case Connective::Not: break;
    }
    throw std::logic_error("combine: unexpected connective");
  }

  using Side = std::function<void(const Region<T>&)>;

  // Continues into the full-dimensional parts of r where d <= 0 (le) and
  // d >= 0 (ge).
  void split(const Region<T>& r, const Affine<T>& d, const Side& le, const Side& ge) {
    if (d.is_constant()) {
      (d.constant <= T(0) ? le : ge)(r);
      return;
    }
    T lo = d.constant;
    T hi = d.constant;
    for (const auto& c : d.coef) {
      if (c < T(0)) lo += c;
      else hi += c;
    }
    if (hi <= T(0)) return le(r);
    if (lo >= T(0)) return ge(r);

    // Scale so the first nonzero coefficient is 1; a negative scale swaps
    // the two sides.
    Affine<T> dir = d;
    T lead{};
    for (const auto& c : d.coef) {
      if (c != T(0)) {
        lead = c;
        break;
      }
    }
    for (auto& c : dir.coef) c /= lead;
    dir.constant /= lead;
    if (lead < T(0)) return split_normalized(r, dir, ge, le);
    return split_normalized(r, dir, le, ge);
  }

  void split_normalized(const Region<T>& r, const Affine<T>& dir, const Side& le, const Side& ge) {
    for (const auto& [form, sign] : r.decided) {
      if (form == dir) return (sign <= 0 ? le : ge)(r);
    }

    const T here = dir.at(r.point);
    std::optional<Region<T>> below;
    std::optional<Region<T>> above;
    if (here < T(0)) {
      below = r;
    } else {
      below = restrict(r, dir, -1);
    }
    if (here > T(0)) {
      above = r;
    } else {
      above = restrict(r, dir, +1);
    }
    if (below && above) {
      // Genuine split: both halves carry the new inequality.
      below->rows.push_back({dir.coef, T(-dir.constant)});
      below->decided.emplace_back(dir, -1);
      std::vector<T> neg(dir.coef);
      for (auto& c : neg) c = -c;
      above->rows.push_back({std::move(neg), dir.constant});
      above->decided.emplace_back(dir, +1);
      le(*below);
      ge(*above);
    } else if (below) {
      below->decided.emplace_back(dir, -1);
      le(*below);
    } else if (above) {
      above->decided.emplace_back(dir, +1);
      ge(*above);
    } else {
      throw std::logic_error("infimum: region lost its interior");
    }
  }

  // r with dir*sign <= 0 added, if that has nonempty interior; the copy
  // carries a fresh interior point but not yet the new row.
  std::optional<Region<T>> restrict(const Region<T>& r, const Affine<T>& dir, int sign) {
    ConstraintSystem<T> sys(n_);
    for (const auto& row : r.rows) sys.add(row.coeffs, row.bound);
    std::vector<T> coeffs = dir.coef;
    T bound = -dir.constant;
    if (sign > 0) {
      for (auto& c : coeffs) c = -c;
      bound = dir.constant;
    }
    sys.add(std::move(coeffs), std::move(bound));
    auto p = sys.interior_point();
    if (!p) return std::nullopt;
    Region<T> out = r;
    out.point = std::move(*p);
    return out;
  }

  void leaf(const Region<T>& r, const Affine<T>& a) {
    ++leaves_;
    ConstraintSystem<T> sys(n_);
    for (const auto& row : r.rows) sys.add(row.coeffs, row.bound);
    auto res = sys.minimize(a.coef, a.constant);
    if (!res.optimal()) throw std::logic_error("infimum: leaf LP not optimal");
    if (!have_best_ || res.value < best_) {
      best_ = res.value;
      have_best_ = true;
      optimal_.clear();
    }
    if (res.value == best_) optimal_.emplace_back(r.rows, a);
  }

  std::vector<std::string> vars_;
  std::size_t n_;
  std::size_t leaves_ = 0;
  bool have_best_ = false;
  T best_{};
  std::vector<std::pair<std::vector<LinearConstraint<T>>, Affine<T>>> optimal_;
};

}  // namespace

InfimumResult infimum(const Formula& f) {
  if (!is_propositional(f)) throw EvalError("infimum needs a propositional formula");
  auto vars = propositional_variables(f);
  try {
    return Solver<SmallRational>(vars).run(f);
  } catch (const std::system_error&) {
  } catch (const std::overflow_error&) {
  }
  return Solver<Rational>(vars).run(f);
}

TautologyVerdict is_tautology_prop(const Formula& f) {
  auto inf = infimum(f);
  TautologyVerdict v;
  v.tautology = inf.value.is_one();
  v.value = inf.value;
  v.witness = std::move(inf.witness);
  return v;
}

Skeleton skeleton(const Formula& f) {
  Skeleton out;
  std::unordered_map<Formula, std::string, FormulaHash> names;
  std::function<Formula(const Formula&)> rec = [&](const Formula& g) -> Formula {
    switch (g.kind()) {
      case Formula::Kind::Atom:
      case Formula::Kind::Quantified: {
        auto it = names.find(g);
        if (it == names.end()) {
          std::string name = "s" + std::to_string(names.size() + 1);
          it = names.emplace(g, name).first;
          out.mapping.emplace_back(name, g);
        }
        return make_atom(it->second);
      }
      case Formula::Kind::Not: return make_not(rec(g.operand()));
      case Formula::Kind::Binary: {
        Formula l = rec(g.lhs());
        return make_binary(g.connective(), l, rec(g.rhs()));
      }
      default: return g;
    }
  };
  out.formula = rec(f);
  return out;
}

PredicateTautologyVerdict is_tautology_pred(const Formula& f) {
  PredicateTautologyVerdict out;
  out.skeleton = skeleton(f);
  out.verdict = is_tautology_prop(out.skeleton.formula);
  out.tautology = out.verdict.tautology;
  return out;
}

}  // namespace luk

#include "luk/model_eval.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <unordered_map>

namespace luk {

namespace {

using i128 = __int128;

// A value num/den with den > 0, not necessarily in lowest terms.
struct Raw {
  std::int64_t num;
  std::int64_t den;
};

bool raw_less(const Raw& a, const Raw& b) { return i128(a.num) * b.den < i128(b.num) * a.den; }

TruthValue to_truth(const Raw& r) { return TruthValue(r.num, r.den); }

// Values as integers over a fixed scale L. The MV operations never leave
// the lattice (1/L)Z, so evaluation is exact.
struct ScaledOps {
  using V = std::int64_t;
  std::int64_t scale;

  V one() const { return scale; }
  V zero() const { return 0; }
  V from(const TruthValue& t) const { return t.numerator() * (scale / t.denominator()); }
  Raw raw(V v) const { return {v, scale}; }
  V neg(V a) const { return scale - a; }
  V sor(V a, V b) const { return std::min(scale, a + b); }
  V sand(V a, V b) const { return std::max<V>(0, a + b - scale); }
  V imp(V a, V b) const { return a <= b ? scale : scale - a + b; }
};

struct RationalOps {
  using V = SmallRational;

  V one() const { return V(1); }
  V zero() const { return V(0); }
  V from(const TruthValue& t) const { return t.value(); }
  Raw raw(const V& v) const { return {v.numerator(), v.denominator()}; }
  V neg(const V& a) const { return V(1) - a; }
  V sor(const V& a, const V& b) const {
    V s = a + b;
    return V(1) < s ? V(1) : s;
  }
  V sand(const V& a, const V& b) const {
    V s = a + b - V(1);
    return s < V(0) ? V(0) : s;
  }
  V imp(const V& a, const V& b) const { return a <= b ? V(1) : V(1) - a + b; }
};

constexpr std::int64_t kMaxScale = std::int64_t(1) << 40;

}  // namespace

// Per-model caches shared by the programs compiled against it.
class detail::EvalContext {
 public:
  explicit EvalContext(const FuzzyModel& m) : model_(m) {}

  const FuzzyModel& model() const { return model_; }

  // lcm of all denominators in the relation, or nullopt past kMaxScale.
  std::optional<std::int64_t> relation_scale(const std::string& name) {
    auto it = scales_.find(name);
    if (it != scales_.end()) return it->second;
    const auto& table = model_.relation(name);
    std::optional<std::int64_t> l = 1;
    for (std::size_t i = 0; i < table.size() && l; ++i) {
      const std::int64_t d = table.flat(i).denominator();
      const std::int64_t g = std::gcd(*l, d);
      if (*l / g > kMaxScale / d) l.reset();
      else *l = *l / g * d;
    }
    scales_.emplace(name, l);
    return l;
  }

  std::optional<std::int64_t> formula_scale(const Formula& f) {
    std::optional<std::int64_t> l = 1;
    collect_scale(f, l);
    return l;
  }

  const std::vector<std::int64_t>& scaled_table(const std::string& name, std::int64_t scale) {
    auto key = std::make_pair(name, scale);
    auto it = scaled_.find(key);
    if (it != scaled_.end()) return it->second;
    const auto& table = model_.relation(name);
    ScaledOps ops{scale};
    std::vector<std::int64_t> v(table.size());
    for (std::size_t i = 0; i < table.size(); ++i) v[i] = ops.from(table.flat(i));
    return scaled_.emplace(key, std::move(v)).first->second;
  }

  const std::vector<SmallRational>& rational_table(const std::string& name) {
    auto it = rational_.find(name);
    if (it != rational_.end()) return it->second;
    const auto& table = model_.relation(name);
    std::vector<SmallRational> v(table.size());
    for (std::size_t i = 0; i < table.size(); ++i) v[i] = table.flat(i).value();
    return rational_.emplace(name, std::move(v)).first->second;
  }

  std::optional<TruthValue> closed_value(const Formula& f) const {
    auto it = closed_.find(f);
    if (it == closed_.end()) return std::nullopt;
    return it->second;
  }
  void remember(const Formula& f, const TruthValue& v) { closed_.emplace(f, v); }

  const std::vector<std::int64_t>& table(const std::string& name, const ScaledOps& ops) {
    return scaled_table(name, ops.scale);
  }
  const std::vector<SmallRational>& table(const std::string& name, const RationalOps&) { return rational_table(name); }

 private:
  void collect_scale(const Formula& f, std::optional<std::int64_t>& l) {
    if (!l) return;
    switch (f.kind()) {
      case Formula::Kind::Atom: {
        auto r = relation_scale(f.relation());
        if (!r) {
          l.reset();
          return;
        }
        const std::int64_t g = std::gcd(*l, *r);
        if (*l / g > kMaxScale / *r) l.reset();
        else *l = *l / g * *r;
        return;
      }
      case Formula::Kind::Not: collect_scale(f.operand(), l); return;
      case Formula::Kind::Binary:
        collect_scale(f.lhs(), l);
        collect_scale(f.rhs(), l);
        return;
      case Formula::Kind::Quantified: collect_scale(f.body(), l); return;
      default: return;
    }
  }

  const FuzzyModel& model_;
  std::map<std::string, std::optional<std::int64_t>> scales_;
  std::map<std::pair<std::string, std::int64_t>, std::vector<std::int64_t>> scaled_;
  std::map<std::string, std::vector<SmallRational>> rational_;
  std::unordered_map<Formula, TruthValue, FormulaHash> closed_;
};

namespace {

using Context = detail::EvalContext;

TruthValue evaluate_closed(Context& ctx, const Formula& f);

// A formula compiled against a model: variables become slots, constants
// become elements, atoms point at their tables. Closed quantified
// subformulas are evaluated once, each in its own cheapest representation.
template <class Ops>
class Program {
 public:
  using V = typename Ops::V;

  Program(Context& ctx, const Formula& f, const std::vector<std::string>& free_order, Ops ops)
      : ops_(ops), domain_(ctx.model().domain_size()) {
    std::vector<std::pair<std::string, int>> scope;
    for (const auto& v : free_order) scope.emplace_back(v, static_cast<int>(scope.size()));
    slots_ = static_cast<int>(scope.size());
    root_ = compile(ctx, f, scope, true);
    env_.assign(static_cast<std::size_t>(slots_), 0);
    cache_.assign(nodes_.size(), std::nullopt);
  }

  V eval(std::span<const int> free_values) {
    std::copy(free_values.begin(), free_values.end(), env_.begin());
    return eval_node(root_);
  }

  const Ops& ops() const { return ops_; }

 private:
  struct Node {
    Formula::Kind kind = Formula::Kind::True;
    Connective connective = Connective::Not;
    Quantifier quantifier = Quantifier::Forall;
    int a = -1;
    int b = -1;
    int slot = -1;
    const std::vector<V>* table = nullptr;
    // >= 0: variable slot; < 0: element -(x + 1).
    std::vector<int> args;
    bool closed = false;
    std::optional<V> fixed;
  };

  int compile(Context& ctx, const Formula& f, std::vector<std::pair<std::string, int>>& scope, bool root = false) {
    Node n;
    n.kind = f.kind();
    n.closed = f.is_closed();
    if (!root && n.closed && f.kind() == Formula::Kind::Quantified) {
      // The value's denominator divides the lcm of the subformula's tables,
      // which divides this program's scale.
      n.kind = Formula::Kind::True;
      n.fixed = ops_.from(evaluate_closed(ctx, f));
      nodes_.push_back(std::move(n));
      return static_cast<int>(nodes_.size()) - 1;
    }
    switch (f.kind()) {
      case Formula::Kind::True:
      case Formula::Kind::False: break;
      case Formula::Kind::Atom: {
        const auto& rel = ctx.model().relation(f.relation());
        if (rel.arity() != static_cast<int>(f.args().size())) {
          throw ModelError("relation '" + f.relation() + "' has arity " + std::to_string(rel.arity()) +
                           " in the model");
        }
        n.table = &ctx.table(f.relation(), ops_);
        for (const auto& t : f.args()) n.args.push_back(resolve(ctx, t, scope));
        break;
      }
      case Formula::Kind::Not: n.a = compile(ctx, f.operand(), scope); break;
      case Formula::Kind::Binary:
        n.connective = f.connective();
        n.a = compile(ctx, f.lhs(), scope);
        n.b = compile(ctx, f.rhs(), scope);
        break;
      case Formula::Kind::Quantified: {
        n.quantifier = f.quantifier();
        n.slot = static_cast<int>(scope.size());
        slots_ = std::max(slots_, n.slot + 1);
        scope.emplace_back(f.variable(), n.slot);
        n.a = compile(ctx, f.body(), scope);
        scope.pop_back();
        break;
      }
    }
    nodes_.push_back(std::move(n));
    return static_cast<int>(nodes_.size()) - 1;
  }

  int resolve(Context& ctx, const Term& t, const std::vector<std::pair<std::string, int>>& scope) {
    switch (t.kind) {
      case Term::Kind::Variable:
        for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
          if (it->first == t.name) return it->second;
        }
        throw ModelError("unbound variable '" + t.name + "'");
      case Term::Kind::Constant: return -(ctx.model().constant(t.name) + 1);
      case Term::Kind::Element:
        if (t.element < 0 || t.element >= domain_) {
          throw ModelError("element #" + std::to_string(t.element) + " outside the domain");
        }
        return -(t.element + 1);
      case Term::Kind::Apply: throw ModelError("function symbol '" + t.name + "' in model evaluation");
    }
    throw ModelError("bad term");
  }

  V eval_node(int i) {
    const Node& n = nodes_[static_cast<std::size_t>(i)];
    if (n.closed && n.kind != Formula::Kind::Atom) {
      auto& c = cache_[static_cast<std::size_t>(i)];
      if (!c) c = compute(n);
      return *c;
    }
    return compute(n);
  }

  V compute(const Node& n) {
    switch (n.kind) {
      case Formula::Kind::True: return n.fixed ? *n.fixed : ops_.one();
      case Formula::Kind::False: return ops_.zero();
      case Formula::Kind::Atom: {
        std::size_t flat = 0;
        for (int a : n.args) {
          const int e = a >= 0 ? env_[static_cast<std::size_t>(a)] : -a - 1;
          flat = flat * static_cast<std::size_t>(domain_) + static_cast<std::size_t>(e);
        }
        return (*n.table)[flat];
      }
      case Formula::Kind::Not: return ops_.neg(eval_node(n.a));
      case Formula::Kind::Binary: {
        const V a = eval_node(n.a);
        switch (n.connective) {
          case Connective::And: {
            if (a == ops_.zero()) return a;
            const V b = eval_node(n.b);
            return b < a ? b : a;
          }
          case Connective::Or: {
            if (a == ops_.one()) return a;
            const V b = eval_node(n.b);
            return a < b ? b : a;
          }
          case Connective::StrictAnd:
            if (a == ops_.zero()) return a;
            return ops_.sand(a, eval_node(n.b));
          case Connective::StrictOr:
            if (a == ops_.one()) return a;
            return ops_.sor(a, eval_node(n.b));
          case Connective::Implies:
            if (a == ops_.zero()) return ops_.one();
            return ops_.imp(a, eval_node(n.b));
          case Connective::Not: break;
        }
        throw std::logic_error("bad connective");
      }
      case Formula::Kind::Quantified: {
        const bool forall = n.quantifier == Quantifier::Forall;
        const V stop = forall ? ops_.zero() : ops_.one();
        int& slot = env_[static_cast<std::size_t>(n.slot)];
        const int saved = slot;
        V best = forall ? ops_.one() : ops_.zero();
        for (int e = 0; e < domain_; ++e) {
          slot = e;
          const V v = eval_node(n.a);
          if (forall ? v < best : best < v) best = v;
          if (best == stop) break;
        }
        slot = saved;
        return best;
      }
    }
    throw std::logic_error("bad node");
  }

  Ops ops_;
  int domain_;
  int slots_ = 0;
  int root_ = -1;
  std::vector<Node> nodes_;
  std::vector<int> env_;
  std::vector<std::optional<V>> cache_;
};

// Runs `body` with a program for f over the cheapest exact representation.
template <class Body>
void with_program(Context& ctx, const Formula& f, const std::vector<std::string>& free_order, Body&& body) {
  if (auto scale = ctx.formula_scale(f)) {
    Program<ScaledOps> p(ctx, f, free_order, ScaledOps{*scale});
    body(p);
  } else {
    Program<RationalOps> p(ctx, f, free_order, RationalOps{});
    body(p);
  }
}

TruthValue evaluate_closed(Context& ctx, const Formula& f) {
  if (auto known = ctx.closed_value(f)) return *known;
  TruthValue out;
  with_program(ctx, f, {}, [&](auto& p) { out = to_truth(p.ops().raw(p.eval({}))); });
  ctx.remember(f, out);
  return out;
}

// Visits every tuple over {0..D-1}^k in lexicographic order; stops when
// `visit` returns false.
template <class Visit>
void sweep(int k, int domain, Visit&& visit) {
  std::vector<int> t(static_cast<std::size_t>(k), 0);
  for (;;) {
    if (!visit(std::span<const int>(t))) return;
    int i = k - 1;
    while (i >= 0 && ++t[static_cast<std::size_t>(i)] == domain) {
      t[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) return;
  }
}

std::set<std::string> relations_of(const Formula& f) {
  std::set<std::string> out;
  const Signature sig = infer_signature(f);
  for (const auto& [name, k] : sig.relations()) out.insert(name);
  return out;
}

}  // namespace

TruthValue eval_with(const Formula& f, const FuzzyModel& m, const std::map<std::string, int>& env) {
  std::vector<std::string> order;
  std::vector<int> values;
  for (const auto& v : f.free_set()) {
    auto it = env.find(v);
    if (it == env.end()) throw ModelError("unbound variable '" + v + "'");
    if (it->second < 0 || it->second >= m.domain_size()) throw ModelError("element outside the domain");
    order.push_back(v);
    values.push_back(it->second);
  }
  Context ctx(m);
  TruthValue out;
  with_program(ctx, f, order, [&](auto& p) { out = to_truth(p.ops().raw(p.eval(values))); });
  return out;
}

Evaluator::Evaluator(const FuzzyModel& m) : ctx_(std::make_unique<detail::EvalContext>(m)) {}
Evaluator::~Evaluator() = default;

const FuzzyModel& Evaluator::model() const { return ctx_->model(); }

TruthValue Evaluator::closed(const Formula& f) {
  if (!f.is_closed()) throw SignatureError("formula has free variable '" + f.free_set().front() + "'");
  return evaluate_closed(*ctx_, f);
}

TruthValue Evaluator::with(const Formula& f, const std::map<std::string, int>& env) {
  if (f.is_closed()) return evaluate_closed(*ctx_, f);
  std::vector<std::string> order;
  std::vector<int> values;
  for (const auto& v : f.free_set()) {
    auto it = env.find(v);
    if (it == env.end()) throw ModelError("unbound variable '" + v + "'");
    if (it->second < 0 || it->second >= model().domain_size()) throw ModelError("element outside the domain");
    order.push_back(v);
    values.push_back(it->second);
  }
  TruthValue out;
  with_program(*ctx_, f, order, [&](auto& p) { out = to_truth(p.ops().raw(p.eval(values))); });
  return out;
}

TruthValue eval_closed(const Formula& f, const FuzzyModel& m) {
  if (!f.is_closed()) throw SignatureError("formula has free variable '" + f.free_set().front() + "'");
  return eval_with(f, m, {});
}

TruthValue eval_closed(const ClosedFormula& f, const FuzzyModel& m) { return eval_closed(f.formula(), m); }

EvalReport eval_report(const Formula& f, const FuzzyModel& m) {
  EvalReport out;
  out.formula = f;
  out.value = eval_closed(f, m);
  std::map<std::string, int> env;
  Formula cur = f;
  while (cur.kind() == Formula::Kind::Quantified) {
    const bool forall = cur.quantifier() == Quantifier::Forall;
    int arg = 0;
    std::optional<TruthValue> best;
    for (int e = 0; e < m.domain_size(); ++e) {
      env[cur.variable()] = e;
      TruthValue v = eval_with(cur.body(), m, env);
      if (!best || (forall ? v < *best : *best < v)) {
        best = v;
        arg = e;
      }
    }
    env[cur.variable()] = arg;
    out.trace.push_back({cur.quantifier(), cur.variable(), arg, *best});
    cur = cur.body();
  }
  return out;
}

void for_each_instance(const Formula& f, const FuzzyModel& m,
                       const std::function<bool(std::span<const int>, const TruthValue&)>& visit) {
  const auto order = free_variables(f);
  Context ctx(m);
  with_program(ctx, f, order, [&](auto& p) {
    sweep(static_cast<int>(order.size()), m.domain_size(), [&](std::span<const int> t) {
      return visit(t, to_truth(p.ops().raw(p.eval(t))));
    });
  });
}

FuzzyModel crisp_round(const FuzzyModel& m, const std::set<std::string>& keep) {
  FuzzyModel out = m;
  const TruthValue half = TruthValue::half();
  for (const auto& [name, table] : m.relations()) {
    if (keep.count(name)) continue;
    auto& target = out.relation(name);
    for (std::size_t i = 0; i < table.size(); ++i) {
      const TruthValue& v = table.flat(i);
      if (v == half) throw RoundingError("relation '" + name + "' has value 1/2; rounding is ambiguous");
      target.set_flat(i, v < half ? TruthValue::zero() : TruthValue::one());
    }
  }
  return out;
}

std::vector<Formula> epsilon_sources(std::span<const Formula> roots, const std::set<std::string>& fuzzy) {
  std::vector<Formula> out;
  std::unordered_map<Formula, bool, FormulaHash> seen;
  for (const auto& r : roots) {
    for (const auto& g : subformulas(r)) {
      if (!seen.emplace(g, true).second) continue;
      if (is_quantifier_free(g) && mentions_relation(g, fuzzy)) continue;
      out.push_back(g);
    }
  }
  return out;
}

EpsilonWitness epsilon_witness(const FuzzyModel& m, std::span<const Formula> sources) {
  Context ctx(m);
  EpsilonWitness w;
  Raw best{0, 1};
  const Raw half{1, 2};
  for (const auto& phi : sources) {
    const auto order = free_variables(phi);
    bool stop = false;
    with_program(ctx, phi, order, [&](auto& p) {
      const auto& ops = p.ops();
      sweep(static_cast<int>(order.size()), m.domain_size(), [&](std::span<const int> t) {
        const auto v = p.eval(t);
        const auto nv = ops.neg(v);
        const Raw d = ops.raw(nv < v ? nv : v);
        if (raw_less(best, d)) {
          best = d;
          w.source = phi;
          w.elements.assign(t.begin(), t.end());
          if (!raw_less(best, half)) {
            stop = true;
            return false;
          }
        }
        return true;
      });
    });
    if (stop) break;
  }
  w.value = to_truth(best);
  return w;
}

TruthValue epsilon_value(const FuzzyModel& m, std::span<const Formula> sources) {
  return epsilon_witness(m, sources).value;
}

Formula epsilon_formula(std::span<const Formula> sources) {
  if (sources.empty()) return make_false();
  std::vector<Formula> parts;
  parts.reserve(sources.size());
  for (const auto& phi : sources) parts.push_back(existential_closure(make_and(phi, make_not(phi))));
  return fold(Connective::Or, parts);
}

RoundingReport check_rounding_claim(const FuzzyModel& m, std::span<const Formula> tracked,
                                    const std::set<std::string>& keep, const TruthValue& e,
                                    const TruthValue& threshold) {
  if (!(e < threshold)) {
    throw RoundingError("rounding claim needs epsilon " + e.str() + " below " + threshold.str());
  }
  const FuzzyModel rounded = crisp_round(m, keep);
  Context ctx(m);
  Context ctx_rounded(rounded);
  RoundingReport report;
  const Rational limit = threshold.to_rational();
  for (const auto& phi : tracked) {
    const auto rels = relations_of(phi);
    if (std::all_of(rels.begin(), rels.end(), [&](const std::string& r) { return keep.count(r) > 0; })) {
      ++report.skipped;
      continue;
    }
    const auto order = free_variables(phi);
    with_program(ctx, phi, order, [&](auto& p) {
      with_program(ctx_rounded, phi, order, [&](auto& q) {
        sweep(static_cast<int>(order.size()), m.domain_size(), [&](std::span<const int> t) {
          ++report.instances;
          const Raw a = p.ops().raw(p.eval(t));
          const Raw b = q.ops().raw(q.eval(t));
          if (i128(a.num) * b.den == i128(b.num) * a.den) return true;
          Rational diff = Rational(a.num, a.den) - Rational(b.num, b.den);
          if (diff < 0) diff = -diff;
          if (diff > report.max_difference) {
            report.max_difference = diff;
            report.worst = phi;
            report.worst_elements.assign(t.begin(), t.end());
          }
          if (!(diff < limit)) report.ok = false;
          return true;
        });
      });
    });
  }
  return report;
}

}  // namespace luk

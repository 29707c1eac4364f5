#include "luk/herbrand.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace luk {

std::vector<Term> herbrand_universe(const Signature& sig, int depth) {
  std::vector<Term> terms;
  std::vector<int> depth_of;
  for (const auto& c : sig.constants()) terms.push_back(Term::constant(c));
  if (terms.empty()) terms.push_back(Term::constant("c0"));
  depth_of.assign(terms.size(), 0);
  for (int d = 1; d <= depth; ++d) {
    const std::size_t before = terms.size();
    for (const auto& [g, k] : sig.functions()) {
      std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
      for (;;) {
        bool fresh = false;
        for (auto i : idx) fresh = fresh || depth_of[i] == d - 1;
        if (fresh) {
          std::vector<Term> args;
          for (auto i : idx) args.push_back(terms[i]);
          terms.push_back(Term::apply(g, std::move(args)));
          depth_of.push_back(d);
        }
        int j = k - 1;
        while (j >= 0 && ++idx[static_cast<std::size_t>(j)] == before) {
          idx[static_cast<std::size_t>(j)] = 0;
          --j;
        }
        if (j < 0) break;
      }
    }
  }
  return terms;
}

namespace {

// Three-valued evaluation under a partial assignment: 0, 1, or -1 unknown.
int eval3(const Formula& f, const std::unordered_map<Formula, int, FormulaHash>& index, const std::vector<int>& val) {
  switch (f.kind()) {
    case Formula::Kind::True: return 1;
    case Formula::Kind::False: return 0;
    case Formula::Kind::Atom: return val[static_cast<std::size_t>(index.at(f))];
    case Formula::Kind::Not: {
      const int v = eval3(f.operand(), index, val);
      return v < 0 ? v : 1 - v;
    }
    case Formula::Kind::Binary: {
      const int a = eval3(f.lhs(), index, val);
      const int b = eval3(f.rhs(), index, val);
      switch (f.connective()) {
        case Connective::And:
        case Connective::StrictAnd:
          if (a == 0 || b == 0) return 0;
          return a < 0 || b < 0 ? -1 : 1;
        case Connective::Or:
        case Connective::StrictOr:
          if (a == 1 || b == 1) return 1;
          return a < 0 || b < 0 ? -1 : 0;
        case Connective::Implies:
          if (a == 0 || b == 1) return 1;
          return a < 0 || b < 0 ? -1 : 0;
        case Connective::Not: break;
      }
      break;
    }
    default: break;
  }
  throw std::invalid_argument("contradiction check needs a quantifier-free formula");
}

}  // namespace

bool is_propositional_contradiction(const std::vector<Formula>& conjuncts, std::size_t max_atoms) {
  std::unordered_map<Formula, int, FormulaHash> index;
  for (const auto& c : conjuncts) {
    for (const auto& g : subformulas(c)) {
      if (g.kind() == Formula::Kind::Atom && !index.count(g)) index.emplace(g, static_cast<int>(index.size()));
    }
  }
  if (index.size() > max_atoms) throw std::length_error("too many ground atoms for a truth table");
  std::vector<int> val(index.size(), -1);
  std::function<bool(std::size_t)> satisfiable = [&](std::size_t next) {
    bool all_true = true;
    for (const auto& c : conjuncts) {
      const int v = eval3(c, index, val);
      if (v == 0) return false;
      all_true = all_true && v == 1;
    }
    if (all_true) return true;
    for (int b : {0, 1}) {
      val[next] = b;
      if (satisfiable(next + 1)) return true;
    }
    val[next] = -1;
    return false;
  };
  return !satisfiable(0);
}

HerbrandResult herbrand_refute(const SkolemForm& sk, int depth, const HerbrandLimits& limits) {
  HerbrandResult result;
  const auto universe = herbrand_universe(sk.signature, depth);
  std::vector<int> term_depth;
  for (const auto& t : universe) term_depth.push_back(t.depth());

  const std::size_t k = sk.universals.size();
  std::vector<Formula> instances;
  std::unordered_set<Formula, FormulaHash> seen;

  for (int d = 0; d <= depth; ++d) {
    result.depth = d;
    std::size_t level_size = 0;
    while (level_size < universe.size() && term_depth[level_size] <= d) ++level_size;
    // Instances whose deepest term is exactly d, lexicographic by term index.
    std::vector<std::size_t> idx(k, 0);
    bool overflow = false;
    for (;;) {
      int deepest = 0;
      for (auto i : idx) deepest = std::max(deepest, term_depth[i]);
      if (deepest == d || (k == 0 && d == 0)) {
        std::map<std::string, Term> r;
        for (std::size_t j = 0; j < k; ++j) r.emplace(sk.universals[j], universe[idx[j]]);
        Formula inst = substitute(sk.matrix, r);
        if (seen.insert(inst).second) {
          if (instances.size() >= limits.max_instances) {
            overflow = true;
            break;
          }
          instances.push_back(std::move(inst));
        }
      }
      std::size_t j = k;
      while (j > 0 && ++idx[j - 1] == level_size) {
        idx[j - 1] = 0;
        --j;
      }
      if (j == 0) break;
    }
    if (overflow) {
      result.truncated = true;
      return result;
    }
    bool unsat = false;
    try {
      unsat = is_propositional_contradiction(instances, limits.max_atoms);
    } catch (const std::length_error&) {
      result.truncated = true;
      return result;
    }
    if (unsat) {
      std::vector<Formula> cert = instances;
      for (std::size_t i = cert.size(); i-- > 0;) {
        std::vector<Formula> smaller = cert;
        smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
        if (is_propositional_contradiction(smaller, limits.max_atoms)) cert = std::move(smaller);
      }
      result.refuted = true;
      result.certificate = std::move(cert);
      return result;
    }
  }
  return result;
}

}  // namespace luk

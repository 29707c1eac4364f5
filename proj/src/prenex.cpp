#include "luk/prenex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace luk {

namespace {

Formula nnf(const Formula& f, bool negated) {
  switch (f.kind()) {
    case Formula::Kind::Atom: return negated ? make_not(f) : f;
    case Formula::Kind::Not: return nnf(f.operand(), !negated);
    case Formula::Kind::Binary: {
      if (f.connective() != Connective::And && f.connective() != Connective::Or) {
        throw std::invalid_argument("prenex form needs ~, /\\, \\/ and quantifiers only");
      }
      const bool conj = (f.connective() == Connective::And) != negated;
      Formula l = nnf(f.lhs(), negated);
      Formula r = nnf(f.rhs(), negated);
      return conj ? make_and(l, r) : make_or(l, r);
    }
    case Formula::Kind::Quantified: {
      const bool forall = (f.quantifier() == Quantifier::Forall) != negated;
      return make_quantified(forall ? Quantifier::Forall : Quantifier::Exists, f.variable(),
                             nnf(f.body(), negated));
    }
    default: throw std::invalid_argument("prenex form needs ~, /\\, \\/ and quantifiers only");
  }
}

void collect_names(const Formula& f, std::set<std::string>& out) {
  for (const auto& v : f.free_set()) out.insert(v);
  for (const auto& g : subformulas(f)) {
    if (g.kind() == Formula::Kind::Quantified) out.insert(g.variable());
  }
}

// Renames bound variables that were already bound elsewhere or occur free.
Formula rename_apart(const Formula& f, std::set<std::string>& used, const std::set<std::string>& all) {
  switch (f.kind()) {
    case Formula::Kind::Not: return make_not(rename_apart(f.operand(), used, all));
    case Formula::Kind::Binary: {
      Formula l = rename_apart(f.lhs(), used, all);
      return make_binary(f.connective(), l, rename_apart(f.rhs(), used, all));
    }
    case Formula::Kind::Quantified: {
      std::string v = f.variable();
      Formula body = f.body();
      if (used.count(v)) {
        std::string fresh;
        for (int i = 1;; ++i) {
          fresh = v + "_" + std::to_string(i);
          if (!used.count(fresh) && !all.count(fresh)) break;
        }
        body = substitute(body, {{v, Term::variable(fresh)}});
        v = fresh;
      }
      used.insert(v);
      return make_quantified(f.quantifier(), v, rename_apart(body, used, all));
    }
    default: return f;
  }
}

struct Prenex {
  std::vector<std::pair<Quantifier, std::string>> prefix;
  Formula matrix;
};

Prenex pull(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Quantified: {
      Prenex inner = pull(f.body());
      inner.prefix.insert(inner.prefix.begin(), {f.quantifier(), f.variable()});
      return inner;
    }
    case Formula::Kind::Binary: {
      Prenex l = pull(f.lhs());
      Prenex r = pull(f.rhs());
      l.prefix.insert(l.prefix.end(), r.prefix.begin(), r.prefix.end());
      l.matrix = make_binary(f.connective(), l.matrix, r.matrix);
      return l;
    }
    default: return Prenex{{}, f};
  }
}

}  // namespace

Formula to_prenex(const Formula& f) {
  Formula n = nnf(f, false);
  std::set<std::string> all;
  collect_names(n, all);
  std::set<std::string> used(n.free_set().begin(), n.free_set().end());
  n = rename_apart(n, used, all);
  Prenex p = pull(n);
  Formula out = p.matrix;
  for (auto it = p.prefix.rbegin(); it != p.prefix.rend(); ++it) out = make_quantified(it->first, it->second, out);
  return out;
}

std::pair<std::vector<std::pair<Quantifier, std::string>>, Formula> split_prefix(const Formula& f) {
  std::vector<std::pair<Quantifier, std::string>> prefix;
  Formula cur = f;
  while (cur.kind() == Formula::Kind::Quantified) {
    prefix.emplace_back(cur.quantifier(), cur.variable());
    cur = cur.body();
  }
  return {prefix, cur};
}

SkolemForm skolemize(const Formula& f, const Signature& sig) {
  auto [prefix, matrix] = split_prefix(f);
  if (!is_quantifier_free(matrix)) throw std::invalid_argument("skolemize needs a prenex formula");
  std::set<std::string> names;
  collect_names(f, names);

  SkolemForm out;
  out.signature = sig;
  std::vector<Term> universals;
  bool slot_used = true;  // whether g_k for the current k is taken
  auto fresh_symbol = [&](std::string base) {
    while (out.signature.has_symbol(base)) base += "_";
    return base;
  };
  auto fresh_variable = [&](const std::string& base) {
    std::string v = base;
    for (int i = 1; names.count(v); ++i) v = base + std::to_string(i);
    names.insert(v);
    return v;
  };

  std::map<std::string, Term> replacement;
  for (const auto& [q, v] : prefix) {
    if (q == Quantifier::Forall) {
      universals.push_back(Term::variable(v));
      out.universals.push_back(v);
      slot_used = false;
      continue;
    }
    if (slot_used) {
      const std::string d = fresh_variable("d");
      universals.push_back(Term::variable(d));
      out.universals.push_back(d);
    }
    const std::size_t k = universals.size();
    const std::string g = fresh_symbol("g" + std::to_string(k));
    out.signature.add_function(g, static_cast<int>(k));
    while (out.functions.size() + 1 < k) out.functions.push_back("");
    out.functions.push_back(g);
    replacement[v] = Term::apply(g, universals);
    slot_used = true;
  }
  out.matrix = substitute(matrix, replacement);
  return out;
}

SkolemForm skolemize(const Formula& f) { return skolemize(f, infer_signature(f)); }

}  // namespace luk

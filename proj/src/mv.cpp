#include "luk/mv.hpp"

namespace luk {

TruthValue apply_connective(Connective c, std::span<const TruthValue> args) {
  if (static_cast<int>(args.size()) != arity(c)) {
    throw std::invalid_argument("connective expects " + std::to_string(arity(c)) + " arguments, got " +
                                std::to_string(args.size()));
  }
  switch (c) {
    case Connective::Not: return negation(args[0]);
    case Connective::Implies: return implication(args[0], args[1]);
    case Connective::And: return meet(args[0], args[1]);
    case Connective::Or: return join(args[0], args[1]);
    case Connective::StrictAnd: return strong_conjunction(args[0], args[1]);
    case Connective::StrictOr: return strong_disjunction(args[0], args[1]);
  }
  throw std::invalid_argument("unknown connective");
}

TruthValue eval_prop(const Formula& f, const Assignment& s) {
  switch (f.kind()) {
    case Formula::Kind::True: return TruthValue::one();
    case Formula::Kind::False: return TruthValue::zero();
    case Formula::Kind::Atom: {
      if (!f.args().empty()) throw EvalError("atom '" + f.relation() + "' has arguments");
      auto it = s.find(f.relation());
      if (it == s.end()) throw EvalError("unbound variable '" + f.relation() + "'");
      return it->second;
    }
    case Formula::Kind::Not: return negation(eval_prop(f.operand(), s));
    case Formula::Kind::Binary: {
      const TruthValue args[2] = {eval_prop(f.lhs(), s), eval_prop(f.rhs(), s)};
      return apply_connective(f.connective(), args);
    }
    case Formula::Kind::Quantified: throw EvalError("quantifier in propositional formula");
  }
  throw EvalError("unknown formula kind");
}

std::string format_assignment(const Assignment& s) {
  std::string out;
  for (const auto& [name, value] : s) {
    if (!out.empty()) out += ' ';
    out += name + "=" + value.str();
  }
  return out;
}

}  // namespace luk

#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <string>

#include "luk/formula.hpp"
#include "luk/truth_value.hpp"

namespace luk {

/// Throws std::invalid_argument when args.size() != arity(c).
TruthValue apply_connective(Connective c, std::span<const TruthValue> args);

using Assignment = std::map<std::string, TruthValue>;

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Value of a propositional formula under `s`. Throws EvalError on a
/// variable missing from `s`, a quantifier, or an atom with arguments.
TruthValue eval_prop(const Formula& f, const Assignment& s);

/// "p=1/2 q=0" with variables in name order.
std::string format_assignment(const Assignment& s);

}  // namespace luk

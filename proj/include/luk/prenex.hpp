#pragma once

#include <string>
#include <utility>
#include <vector>

#include "luk/formula.hpp"

namespace luk {

/// Negation normal form followed by pulling quantifiers out left to right.
/// Bound variables are renamed only where they clash with another bound or
/// free variable. Throws std::invalid_argument outside ~, /\, \/, forall,
/// exists.
Formula to_prenex(const Formula& f);

/// Splits a prenex formula into its quantifier prefix and matrix.
std::pair<std::vector<std::pair<Quantifier, std::string>>, Formula> split_prefix(const Formula& f);

/// The i-th existential variable becomes g_i(x_1, ..., x_i) over the
/// universals before it; dummy universals are inserted so that the prefix
/// alternates and g_i has arity exactly i.
struct SkolemForm {
  Formula matrix;
  /// Universal variables in prefix order, dummies included.
  std::vector<std::string> universals;
  /// Skolem symbol of arity i + 1 at entry i; empty where the padded
  /// prefix has a dummy existential.
  std::vector<std::string> functions;
  /// The original signature plus the Skolem symbols.
  Signature signature;
};

/// Throws std::invalid_argument unless f is prenex with a quantifier-free
/// matrix.
SkolemForm skolemize(const Formula& f, const Signature& sig);
SkolemForm skolemize(const Formula& f);

}  // namespace luk

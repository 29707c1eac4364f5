#pragma once

#include <string>

#include "luk/formula.hpp"

namespace luk {

/// ASCII rendering in the parser's grammar with minimal parentheses, so
/// parse(print(f)) == f.
std::string print(const Formula& f);
std::string print(const Term& t);

}  // namespace luk

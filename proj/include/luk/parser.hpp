#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "luk/formula.hpp"

namespace luk {

class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, UnknownSymbol, ArityMismatch };

  ParseError(Kind kind, std::size_t position, const std::string& message);

  Kind kind() const noexcept { return kind_; }
  /// Byte offset into the input.
  std::size_t position() const noexcept { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

/// Parses against a fixed signature. An identifier in term position is a
/// bound variable if a quantifier binds it, else a constant if `sig` has
/// one of that name, else a free variable. `#i` denotes domain element i.
Formula parse(std::string_view text, const Signature& sig);

/// Parses without a signature; relations are inferred from use and every
/// unbound identifier in term position is a constant.
Formula parse(std::string_view text);

}  // namespace luk

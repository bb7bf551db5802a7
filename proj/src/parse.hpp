#pragma once

// Shared expression parser for field elements, moduli and polynomials.

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "syzgap/field.hpp"

namespace syzgap::detail {

/// Sparse polynomial in at most two variables over a field; keys are
/// exponent pairs.
using Sparse = std::map<std::array<int, 2>, Elem>;

struct ParseContext {
  const FieldSpec* field;
  /// Names bound to variables 0 and 1 (at most two).
  std::vector<std::string> variables;
  /// Name bound to the field generator as a constant; empty for none.
  std::string generator;
};

Sparse parse_sparse(std::string_view text, const ParseContext& ctx);

}  // namespace syzgap::detail

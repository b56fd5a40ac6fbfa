#pragma once

#include <span>
#include <string>
#include <string_view>

#include "secinv/polynomial.hpp"

namespace secinv {

/// Parses a polynomial expression over the named variables.
///
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := rational | var ('^' uint)? | '(' expr ')' | '-' factor
///
/// Whitespace is ignored; multiplication must be explicit. Errors are
/// reported as ParseError with the byte offset of the offending token.
Polynomial parse_polynomial(std::string_view text, std::span<const std::string> vars,
                            MonomialOrder order = MonomialOrder::kDegRevLex);

}  // namespace secinv

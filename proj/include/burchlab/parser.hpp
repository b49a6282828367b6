#pragma once

#include <string_view>

#include "burchlab/polynomial.hpp"

namespace burchlab {

/// Parses the polynomial grammar
///
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := coef | [coef '*'] factor ('*' factor)*
///   factor := var ['^' natural]
///   coef   := natural
///
/// Whitespace is ignored. The optional leading minus lets printed output
/// round-trip. Errors are ParseError with the byte offset of the problem.
Polynomial parse_polynomial(std::string_view text, const Ring& ring);

}  // namespace burchlab

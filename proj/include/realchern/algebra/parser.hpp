#pragma once

#include <string_view>

#include "realchern/algebra/poly.hpp"

namespace realchern {

struct ParseOptions {
    /// Silently drop parts above the truncation degree instead of failing.
    bool allow_truncation = false;
    /// Source position of the first character, for diagnostics inside a
    /// larger file. line == 0 means "standalone expression".
    int line = 0;
    int column = 1;
};

/// Parses
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' nat)?
///   atom   := nat | ident | '(' expr ')'
/// The optional leading sign lets printed negative polynomials parse back.
/// Whitespace is insignificant. Throws ParseError with a source position.
Poly parse_poly(std::string_view text, const RingPtr& ring, const ParseOptions& options = {});

}  // namespace realchern

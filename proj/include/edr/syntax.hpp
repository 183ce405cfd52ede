#pragma once

#include <string>
#include <string_view>

#include "edr/matrix.hpp"
#include "edr/ring.hpp"

namespace edr {

/// Parses the element grammar
///   elem     := term (('+'|'-') term)*
///   term     := rational ('*'? 'x' ('^' nat)?)? | 'x' ('^' nat)?
///   rational := int ('/' nat)?
/// with an optional sign on the first term, whitespace ignored and 'x'
/// case-insensitive. INT accepts a single integer literal only.
/// Throws ParseError, or NonIntegralConstantTerm for PULLBACK.
Element parse_element(Ring ring, std::string_view text);

/// Canonical text: descending degree, no spaces, "p/q" coefficients written
/// directly before x ("5x", "-1/2x^3+x-2"), "0" for zero.
std::string format_element(const Element& e);

/// Matrix literal: an array of rows, each an array of elements, e.g.
/// [[x,2],[0,5]] or [["x","2"],["0","5"]].
Matrix parse_matrix(Ring ring, std::string_view text);

/// JSON text of the row-major array of element strings.
std::string format_matrix(const Matrix& m);

}  // namespace edr

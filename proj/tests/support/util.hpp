#pragma once

#include <string_view>

#include "edr/ring.hpp"
#include "edr/syntax.hpp"

namespace testutil {

inline edr::Element I(std::string_view s) { return edr::parse_element(edr::Ring::Int, s); }
inline edr::Element Q(std::string_view s) { return edr::parse_element(edr::Ring::PolyQ, s); }
inline edr::Element P(std::string_view s) { return edr::parse_element(edr::Ring::Pullback, s); }

inline edr::Element E(edr::Ring r, std::string_view s) { return edr::parse_element(r, s); }

}  // namespace testutil

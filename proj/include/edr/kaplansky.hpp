#pragma once

#include "edr/euclidean.hpp"
#include "edr/ring.hpp"

namespace edr {

/// Whether a, b, c generate the unit ideal.
bool is_unimodular_triple(const Element& a, const Element& b, const Element& c);

/// Condition (K) solver for the element's ring.
KaplanskyPair kaplansky_solve(const Element& a, const Element& b,
                              const Element& c);

/// (p*a, p*b + q*c) == (1).
bool kaplansky_holds(const Element& a, const Element& b, const Element& c,
                     const Element& p, const Element& q);

}  // namespace edr

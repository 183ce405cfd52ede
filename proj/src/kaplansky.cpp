#include "edr/kaplansky.hpp"

#include <array>

#include "edr/pullback.hpp"

namespace edr {

bool is_unimodular_triple(const Element& a, const Element& b, const Element& c) {
  const std::array<Element, 3> xs{a, b, c};
  return is_unit(gcd_many(xs).d);
}

KaplanskyPair kaplansky_solve(const Element& a, const Element& b, const Element& c) {
  if (a.ring() == Ring::Pullback) return kaplansky_solve_pullback(a, b, c);
  return kaplansky_solve_euclidean(a, b, c);
}

bool kaplansky_holds(const Element& a, const Element& b, const Element& c,
                     const Element& p, const Element& q) {
  return are_comaximal(p * a, p * b + q * c);
}

}  // namespace edr

#pragma once

#include <gmpxx.h>

#include <optional>

#include "edr/ring.hpp"

namespace edr {

/// Extended Euclid over Z. d >= 0.
BezoutCertificate int_gcd_certificate(const Element& f, const Element& g);

/// Extended Euclid over Q[X]. d monic or zero.
BezoutCertificate polyq_gcd_certificate(const Element& f, const Element& g);

/// Integer extended Euclid on raw values: s*f + t*g == d, d >= 0.
struct IntBezout {
  mpz_class d;
  mpz_class s;
  mpz_class t;
};
IntBezout int_bezout(const mpz_class& f, const mpz_class& g);

/// Extended Euclid over Q[X] on raw polynomials; d monic (or zero).
struct PolyBezout {
  QPoly d;
  QPoly s;
  QPoly t;
};
PolyBezout poly_bezout(const QPoly& f, const QPoly& g);
/// Monic gcd in Q[X]; zero only if both inputs are zero.
QPoly poly_gcd(const QPoly& f, const QPoly& g);

struct KaplanskyPair {
  Element p;
  Element q;
};

/// Solves (p*a, p*b + q*c) == (1) over Z or Q[X].
/// Throws NotUnimodularTriple when (a, b, c) != (1).
KaplanskyPair kaplansky_solve_euclidean(const Element& a, const Element& b,
                                        const Element& c);

/// lambda with (x + lambda*y, z) == (1), smallest nonnegative in the search
/// window. Requires (x, y) == (1) and z != 0; INT or POLYQ only.
Element quotient_sr1_lambda(const Element& x, const Element& y,
                            const Element& z);

/// t with r1 + t*r2 in {1, -1}, if one exists.
std::optional<mpz_class> unit_shift_exists(const mpz_class& r1,
                                           const mpz_class& r2);

}  // namespace edr

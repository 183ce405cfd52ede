#pragma once

#include <gmpxx.h>

#include <string>
#include <variant>
#include <vector>

#include "edr/euclidean.hpp"
#include "edr/ring.hpp"

namespace edr {

/// Element of Z + X Q[X]; throws NonIntegralConstantTerm.
Element make_pullback(std::vector<mpq_class> coeffs);

/// Generator of Z*r1 + Z*r2 for rationals: gcd(p1 q2, p2 q1) / (q1 q2),
/// with gcd(r, 0) == |r|.
mpq_class rational_gcd(const mpq_class& r1, const mpq_class& r2);

/// Certified gcd in Z + X Q[X]. d = canonical(rho * gcd_Q[X](f, g)) where rho
/// generates the Z-module spanned by the constant terms of the Q[X]-cofactors.
BezoutCertificate pullback_gcd_certificate(const Element& f, const Element& g);

struct ComaximalityBreakdown {
  bool poly_level = false;  // gcd in Q[X] is 1
  mpz_class int_level;      // gcd over Z of the constant terms
  bool comaximal = false;
};

ComaximalityBreakdown comaximality_breakdown(const Element& u,
                                             const Element& v);

/// Two-level solver for (p*a, p*b + q*c) == (1) in Z + X Q[X].
KaplanskyPair kaplansky_solve_pullback(const Element& a, const Element& b,
                                       const Element& c);

/// An integer divisibility that fails: divisor does not divide dividend.
struct FailedDivisibility {
  mpz_class divisor;
  mpz_class dividend;
};

/// Proof that no lambda in Z + X Q[X] makes (x + lambda*y, z) == (1) when
/// z(0) == 0: the constant term x0 + k*y0 would have to be a unit of Z.
struct ObstructionCertificate {
  mpz_class x0;
  mpz_class y0;
  std::string statement;
  /// y0 != 0: y0 does not divide x0 - 1 and y0 does not divide x0 + 1.
  std::vector<FailedDivisibility> checked_divisibilities;
  /// y0 == 0: |x0| != 1.
  bool constant_not_unit = false;

  /// Re-checks the recorded failures and that they cover the statement.
  bool verify() const;
};

struct Asr1Found {
  Element lambda;
};
struct Asr1Refuted {
  ObstructionCertificate obstruction;
};
using Asr1Decision = std::variant<Asr1Found, Asr1Refuted>;

/// Decides whether some lambda gives (x + lambda*y, z) == (1).
/// Requires (x, y) == (1) and z != 0.
Asr1Decision asr1_decide(const Element& x, const Element& y, const Element& z);

}  // namespace edr

#pragma once

#include <functional>
#include <variant>

#include "edr/ring.hpp"

namespace edr {

/// (p*a, p*b + q*c) == (1).
struct KaplanskyWitness {
  Element a, b, c, p, q;
};

/// (p*b + q*c, a) == (1) and (p, c) == (1).
struct PQ3Witness {
  Element a, b, c, p, q;
};

/// b + lambda*c == u*v with (u, a) == (v, c) == (1).
struct FactorizationWitness {
  Element a, b, c, lambda, u, v;
};

/// (b + lambda*c) divides (1 - a1*a) * (1 - c1*c).
struct StarWitness {
  Element a, b, c, lambda, a1, c1;
};

/// x + lambda*y == u*v with (u, z) == (v, 1 - z) == (1).
struct CritWitness {
  Element x, y, z, lambda, u, v;
};

/// (x + lambda*y) divides y * (1 - a*z) * (1 - b*(1 - z)).
struct CritDomainWitness {
  Element x, y, z, lambda, a, b;
};

using AnyWitness = std::variant<KaplanskyWitness, PQ3Witness, FactorizationWitness,
                                StarWitness, CritWitness, CritDomainWitness>;

bool verify_witness(const KaplanskyWitness& w);
bool verify_witness(const PQ3Witness& w);
bool verify_witness(const FactorizationWitness& w);
bool verify_witness(const StarWitness& w);
bool verify_witness(const CritWitness& w);
bool verify_witness(const CritDomainWitness& w);
bool verify_witness(const AnyWitness& w);

/// The "moreover" clause: additionally (u, v) == (1).
bool is_strengthened(const FactorizationWitness& w);
bool is_strengthened(const CritWitness& w);

/// Every valid Kaplansky witness also satisfies (pb + qc, a) == (p, c) == (1).
bool kaplansky_remark_holds(const KaplanskyWitness& w);

/// u = pb + qc, v the coefficient of p in a combination p*v + (u*c)*s == 1,
/// lambda = (v*u - b) / c. The result satisfies (u, v) == (1).
FactorizationWitness kaplansky_to_factorization(const KaplanskyWitness& w);

/// p the coefficient of v in p*v + t*c == 1, q = (u - p*b) / c.
PQ3Witness factorization_to_pq3(const FactorizationWitness& w);

/// How pq3_to_kaplansky produced its answer.
enum class KaplanskyRoute {
  Coefficients,  // Bezout coefficients of gcd(p, q)
  Cofactors,     // p / gcd(p, q), q / gcd(p, q)
  Solver,        // the ring's condition (K) solver
  UnitA,         // p == q == 0 forces a to be a unit
};

struct KaplanskyConversion {
  KaplanskyWitness witness;
  KaplanskyRoute route;
  bool used_fallback() const noexcept {
    return route == KaplanskyRoute::Cofactors || route == KaplanskyRoute::Solver;
  }
};

/// Candidates in order: gcd(p, q) coefficients, gcd cofactors, solver; the
/// first one passing verification wins.
KaplanskyConversion pq3_to_kaplansky(const PQ3Witness& w);

/// u = gcd(b + lambda*c, 1 - a1*a), v = (b + lambda*c) / u.
FactorizationWitness star_to_factorization(const StarWitness& w);

/// Solves condition (K) on (z, x, y*(1 - z)) and converts the factorization.
CritWitness crit_witness(const Element& x, const Element& y, const Element& z);

using CritSolver = std::function<CritWitness(const Element&, const Element&, const Element&)>;

struct CritConversion {
  FactorizationWitness factorization;
  PQ3Witness pq3;
  KaplanskyConversion kaplansky;
};

/// Builds a Kaplansky witness for (a, b, c) from a criterion oracle.
CritConversion crit_to_kaplansky(const Element& a, const Element& b, const Element& c,
                                 const CritSolver& oracle);

CritDomainWitness critdomain_witness(const Element& x, const Element& y, const Element& z);

}  // namespace edr

#include "edr/witnesses.hpp"

#include <initializer_list>

#include "edr/kaplansky.hpp"

namespace edr {

namespace {

bool one_ring(std::initializer_list<const Element*> xs) {
  const Ring r = (*xs.begin())->ring();
  for (const Element* e : xs)
    if (e->ring() != r) return false;
  return true;
}

Element one_minus(const Element& z) { return one(z.ring()) - z; }

void require_valid(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::PreconditionViolated, what);
}

template <typename W>
W checked(W w, const char* what) {
  if (!verify_witness(w)) throw Error(ErrorCode::TransformFailed, what);
  return w;
}

}  // namespace

bool verify_witness(const KaplanskyWitness& w) {
  if (!one_ring({&w.a, &w.b, &w.c, &w.p, &w.q})) return false;
  return kaplansky_holds(w.a, w.b, w.c, w.p, w.q);
}

bool verify_witness(const PQ3Witness& w) {
  if (!one_ring({&w.a, &w.b, &w.c, &w.p, &w.q})) return false;
  return are_comaximal(w.p * w.b + w.q * w.c, w.a) && are_comaximal(w.p, w.c);
}

bool verify_witness(const FactorizationWitness& w) {
  if (!one_ring({&w.a, &w.b, &w.c, &w.lambda, &w.u, &w.v})) return false;
  return w.b + w.lambda * w.c == w.u * w.v && are_comaximal(w.u, w.a) &&
         are_comaximal(w.v, w.c);
}

bool verify_witness(const StarWitness& w) {
  if (!one_ring({&w.a, &w.b, &w.c, &w.lambda, &w.a1, &w.c1})) return false;
  return divides(w.b + w.lambda * w.c, one_minus(w.a1 * w.a) * one_minus(w.c1 * w.c));
}

bool verify_witness(const CritWitness& w) {
  if (!one_ring({&w.x, &w.y, &w.z, &w.lambda, &w.u, &w.v})) return false;
  return w.x + w.lambda * w.y == w.u * w.v && are_comaximal(w.u, w.z) &&
         are_comaximal(w.v, one_minus(w.z));
}

bool verify_witness(const CritDomainWitness& w) {
  if (!one_ring({&w.x, &w.y, &w.z, &w.lambda, &w.a, &w.b})) return false;
  return divides(w.x + w.lambda * w.y,
                 w.y * one_minus(w.a * w.z) * one_minus(w.b * one_minus(w.z)));
}

bool verify_witness(const AnyWitness& w) {
  return std::visit([](const auto& v) { return verify_witness(v); }, w);
}

bool is_strengthened(const FactorizationWitness& w) {
  return verify_witness(w) && are_comaximal(w.u, w.v);
}

bool is_strengthened(const CritWitness& w) {
  return verify_witness(w) && are_comaximal(w.u, w.v);
}

bool kaplansky_remark_holds(const KaplanskyWitness& w) {
  return are_comaximal(w.p * w.b + w.q * w.c, w.a) && are_comaximal(w.p, w.c);
}

FactorizationWitness kaplansky_to_factorization(const KaplanskyWitness& w) {
  require_valid(verify_witness(w), "input is not a valid Kaplansky witness");
  const Ring r = w.a.ring();
  FactorizationWitness out{w.a, w.b, w.c, zero(r), w.b, one(r)};
  if (!w.c.is_zero()) {
    out.u = w.p * w.b + w.q * w.c;
    // v*p == 1 mod u*c.
    out.v = comaximal_combination(w.p, out.u * w.c).alpha;
    auto lambda = try_exact_div(out.v * out.u - w.b, w.c);
    if (!lambda) throw Error(ErrorCode::TransformFailed, "v*u - b is not a multiple of c");
    out.lambda = *std::move(lambda);
  }
  if (!is_strengthened(out))
    throw Error(ErrorCode::TransformFailed, "factorization witness failed verification");
  return out;
}

PQ3Witness factorization_to_pq3(const FactorizationWitness& w) {
  require_valid(verify_witness(w), "input is not a valid factorization witness");
  const Ring r = w.a.ring();
  PQ3Witness out{w.a, w.b, w.c, zero(r), zero(r)};
  if (w.c.is_zero()) {
    // (v, 0) == (1) makes v a unit and b == u*v.
    out.p = unit_inverse(w.v);
  } else {
    out.p = comaximal_combination(w.v, w.c).alpha;
    auto q = try_exact_div(w.u - out.p * w.b, w.c);
    if (!q) throw Error(ErrorCode::TransformFailed, "u - p*b is not a multiple of c");
    out.q = *std::move(q);
  }
  return checked(std::move(out), "pq3 witness failed verification");
}

KaplanskyConversion pq3_to_kaplansky(const PQ3Witness& w) {
  require_valid(verify_witness(w), "input is not a valid pq3 witness");
  const Ring r = w.a.ring();
  auto attempt = [&](const Element& p, const Element& q) {
    return kaplansky_holds(w.a, w.b, w.c, p, q);
  };
  if (w.p.is_zero() && w.q.is_zero()) {
    KaplanskyWitness k{w.a, w.b, w.c, one(r), zero(r)};
    return {checked(std::move(k), "unit branch failed verification"), KaplanskyRoute::UnitA};
  }
  BezoutCertificate cert = gcd_certificate(w.p, w.q);
  if (attempt(cert.alpha, cert.beta))
    return {{w.a, w.b, w.c, cert.alpha, cert.beta}, KaplanskyRoute::Coefficients};
  if (attempt(cert.cf, cert.cg))
    return {{w.a, w.b, w.c, cert.cf, cert.cg}, KaplanskyRoute::Cofactors};
  KaplanskyPair pq = kaplansky_solve(w.a, w.b, w.c);
  KaplanskyWitness k{w.a, w.b, w.c, pq.p, pq.q};
  return {checked(std::move(k), "solver fallback failed verification"), KaplanskyRoute::Solver};
}

FactorizationWitness star_to_factorization(const StarWitness& w) {
  require_valid(verify_witness(w), "input is not a valid star witness");
  const Element shifted = w.b + w.lambda * w.c;
  require_valid(!shifted.is_zero(), "b + lambda*c must be nonzero");
  const Element u = gcd_certificate(shifted, one_minus(w.a1 * w.a)).d;
  FactorizationWitness out{w.a, w.b, w.c, w.lambda, u, exact_div(shifted, u)};
  return checked(std::move(out), "star conversion failed verification");
}

CritWitness crit_witness(const Element& x, const Element& y, const Element& z) {
  require_same_ring(x, y);
  require_same_ring(x, z);
  require_valid(are_comaximal(x, y), "(x, y) must be the unit ideal");
  const Element c = y * one_minus(z);
  KaplanskyPair pq = kaplansky_solve(z, x, c);
  FactorizationWitness f = kaplansky_to_factorization({z, x, c, pq.p, pq.q});
  CritWitness out{x, y, z, f.lambda * one_minus(z), f.u, f.v};
  if (!is_strengthened(out))
    throw Error(ErrorCode::TransformFailed, "criterion witness failed verification");
  return out;
}

CritConversion crit_to_kaplansky(const Element& a, const Element& b, const Element& c,
                                 const CritSolver& oracle) {
  require_same_ring(a, b);
  require_same_ring(a, c);
  require_valid(is_unimodular_triple(a, b, c), "(a, b, c) must be the unit ideal");
  require_valid(!(b.is_zero() && c.is_zero()), "b and c must not both vanish");

  const Element d = gcd_certificate(b, c).d;
  const Element dd = comaximal_combination(d, a).alpha * d;  // dd == 1 mod a
  const Element b1 = exact_div(b, d);
  const Element c1 = exact_div(c, d);
  const Element z = one_minus(dd);
  CritWitness cw = oracle(b1, c1, z);
  if (cw.x != b1 || cw.y != c1 || cw.z != z || !verify_witness(cw))
    throw Error(ErrorCode::TransformFailed, "criterion oracle returned an invalid witness");

  // b + lambda1*c == d*(b1 + lambda1*c1) == (d*u1)*v.
  FactorizationWitness f{a, b, c, cw.lambda, d * cw.u, cw.v};
  f = checked(std::move(f), "lifted factorization failed verification");
  PQ3Witness pq3 = factorization_to_pq3(f);
  KaplanskyConversion k = pq3_to_kaplansky(pq3);
  return {std::move(f), std::move(pq3), std::move(k)};
}

CritDomainWitness critdomain_witness(const Element& x, const Element& y, const Element& z) {
  require_same_ring(x, y);
  require_same_ring(x, z);
  require_valid(!x.is_zero() && !y.is_zero() && !z.is_zero(), "x, y, z must be nonzero");
  const Element d = gcd_certificate(x, y).d;
  CritWitness cw = crit_witness(exact_div(x, d), exact_div(y, d), z);
  const Element a = comaximal_combination(cw.u, z).beta;
  const Element b = comaximal_combination(cw.v, one_minus(z)).beta;
  CritDomainWitness out{x, y, z, cw.lambda, a, b};
  return checked(std::move(out), "domain criterion witness failed verification");
}

}  // namespace edr

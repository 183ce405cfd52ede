#include "edr/euclidean.hpp"

#include "edr/kaplansky.hpp"

namespace edr {

IntBezout int_bezout(const mpz_class& f, const mpz_class& g) {
  if (f != 0 && mpz_divisible_p(g.get_mpz_t(), f.get_mpz_t()))
    return {abs(f), mpz_class(sgn(f)), 0};
  mpz_class r0 = f, r1 = g, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    mpz_class q;
    mpz_tdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    mpz_class r2 = r0 - q * r1;
    mpz_class s2 = s0 - q * s1;
    mpz_class t2 = t0 - q * t1;
    r0 = std::move(r1), r1 = std::move(r2);
    s0 = std::move(s1), s1 = std::move(s2);
    t0 = std::move(t1), t1 = std::move(t2);
  }
  if (r0 < 0) {
    r0 = -r0, s0 = -s0, t0 = -t0;
  }
  return {r0, s0, t0};
}

PolyBezout poly_bezout(const QPoly& f, const QPoly& g) {
  if (f.is_zero() && g.is_zero()) return {};
  if (!f.is_zero() && divmod(g, f).second.is_zero()) {
    mpq_class inv = 1 / f.lead();
    return {f * inv, QPoly::constant(inv), QPoly()};
  }
  QPoly r0 = f, r1 = g, s0 = QPoly::constant(1), s1, t0, t1 = QPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r2] = divmod(r0, r1);
    QPoly s2 = s0 - q * s1;
    QPoly t2 = t0 - q * t1;
    r0 = std::move(r1), r1 = std::move(r2);
    s0 = std::move(s1), s1 = std::move(s2);
    t0 = std::move(t1), t1 = std::move(t2);
  }
  mpq_class inv = 1 / r0.lead();
  return {r0 * inv, s0 * inv, t0 * inv};
}

QPoly poly_gcd(const QPoly& f, const QPoly& g) {
  QPoly r0 = f, r1 = g;
  while (!r1.is_zero()) {
    QPoly r2 = divmod(r0, r1).second;
    r0 = std::move(r1), r1 = std::move(r2);
  }
  return r0.monic();
}

BezoutCertificate int_gcd_certificate(const Element& f, const Element& g) {
  if (auto c = detail::divisibility_certificate(f, g)) return *std::move(c);
  IntBezout b = int_bezout(f.integer_part(), g.integer_part());
  return detail::finish_certificate(f, g, Element(Ring::Int, b.d),
                                    Element(Ring::Int, b.s), Element(Ring::Int, b.t));
}

BezoutCertificate polyq_gcd_certificate(const Element& f, const Element& g) {
  if (auto c = detail::divisibility_certificate(f, g)) return *std::move(c);
  PolyBezout b = poly_bezout(f.poly(), g.poly());
  return detail::finish_certificate(f, g, Element(Ring::PolyQ, b.d),
                                    Element(Ring::PolyQ, b.s), Element(Ring::PolyQ, b.t));
}

KaplanskyPair kaplansky_solve_euclidean(const Element& a, const Element& b,
                                        const Element& c) {
  require_same_ring(a, b);
  require_same_ring(a, c);
  const Ring r = a.ring();
  if (r == Ring::Pullback)
    throw Error(ErrorCode::PreconditionViolated,
                "kaplansky_solve_euclidean handles INT and POLYQ only");
  if (!is_unimodular_triple(a, b, c))
    throw Error(ErrorCode::NotUnimodularTriple, "(a, b, c) is not the unit ideal");

  auto checked = [&](KaplanskyPair w) {
    if (!kaplansky_holds(a, b, c, w.p, w.q))
      throw Error(ErrorCode::SearchExhausted, "Kaplansky witness failed verification");
    return w;
  };

  if (c.is_zero()) return checked({one(r), zero(r)});
  if (b.is_zero()) return checked({one(r), one(r)});
  if (a.is_zero()) {
    Combination comb = comaximal_combination(b, c);
    return checked({comb.alpha, comb.beta});
  }

  if (r == Ring::Int) {
    const mpz_class av = a.integer_part(), bv = b.integer_part(), cv = c.integer_part();
    const mpz_class bound = abs(av);
    mpz_class g;
    for (mpz_class q = 0; q <= bound; ++q) {
      mpz_class shifted = bv + q * cv;
      mpz_gcd(g.get_mpz_t(), av.get_mpz_t(), shifted.get_mpz_t());
      if (g == 1) return checked({one(r), Element(r, q)});
    }
  } else {
    for (long tau = 0; tau <= a.degree(); ++tau) {
      Element q(r, tau);
      if (poly_gcd(a.poly(), (b + q * c).poly()).degree() == 0)
        return checked({one(r), q});
    }
  }
  throw Error(ErrorCode::SearchExhausted, "no shift found within the proven bound");
}

Element quotient_sr1_lambda(const Element& x, const Element& y, const Element& z) {
  require_same_ring(x, y);
  require_same_ring(x, z);
  const Ring r = x.ring();
  if (r == Ring::Pullback)
    throw Error(ErrorCode::PreconditionViolated,
                "quotient_sr1_lambda handles INT and POLYQ; use asr1_decide");
  if (z.is_zero()) throw Error(ErrorCode::PreconditionViolated, "z must be nonzero");
  if (!are_comaximal(x, y))
    throw Error(ErrorCode::PreconditionViolated, "(x, y) must be the unit ideal");

  if (r == Ring::Int) {
    const mpz_class xv = x.integer_part(), yv = y.integer_part(), zv = z.integer_part();
    const mpz_class bound = abs(zv);
    mpz_class g;
    for (mpz_class lambda = 0; lambda <= bound; ++lambda) {
      mpz_class shifted = xv + lambda * yv;
      mpz_gcd(g.get_mpz_t(), shifted.get_mpz_t(), zv.get_mpz_t());
      if (g == 1) return Element(r, lambda);
    }
  } else {
    for (long lambda = 0; lambda <= z.degree(); ++lambda) {
      Element l(r, lambda);
      if (poly_gcd((x + l * y).poly(), z.poly()).degree() == 0) return l;
    }
  }
  throw Error(ErrorCode::SearchExhausted, "no lambda found within the proven bound");
}

std::optional<mpz_class> unit_shift_exists(const mpz_class& r1, const mpz_class& r2) {
  if (r2 == 0) {
    if (abs(r1) == 1) return mpz_class(0);
    return std::nullopt;
  }
  for (int target : {1, -1}) {
    mpz_class diff = target - r1;
    if (mpz_divisible_p(diff.get_mpz_t(), r2.get_mpz_t())) {
      mpz_class t;
      mpz_divexact(t.get_mpz_t(), diff.get_mpz_t(), r2.get_mpz_t());
      return t;
    }
  }
  return std::nullopt;
}

}  // namespace edr

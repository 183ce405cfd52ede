#include "edr/pullback.hpp"

#include "edr/kaplansky.hpp"

namespace edr {

namespace {

constexpr Ring kR = Ring::Pullback;

mpz_class int_gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

bool poly_coprime(const QPoly& u, const QPoly& v) { return poly_gcd(u, v).degree() == 0; }

}  // namespace

Element make_pullback(std::vector<mpq_class> coeffs) {
  return Element::from_coeffs(kR, std::move(coeffs));
}

mpq_class rational_gcd(const mpq_class& r1, const mpq_class& r2) {
  if (sgn(r2) == 0) return abs(r1);
  if (sgn(r1) == 0) return abs(r2);
  mpz_class g = int_gcd(r1.get_num() * r2.get_den(), r2.get_num() * r1.get_den());
  mpq_class out(g, r1.get_den() * r2.get_den());
  out.canonicalize();
  return out;
}

BezoutCertificate pullback_gcd_certificate(const Element& f, const Element& g) {
  require_same_ring(f, g);
  if (auto c = detail::divisibility_certificate(f, g)) return *std::move(c);

  // Both nonzero from here; f1, g1 are coprime in Q[X] so their constant
  // terms cannot vanish together.
  const QPoly dq = poly_gcd(f.poly(), g.poly());
  const QPoly f1 = divmod(f.poly(), dq).first;
  const QPoly g1 = divmod(g.poly(), dq).first;
  const mpq_class f10 = f1.constant_term();
  const mpq_class g10 = g1.constant_term();
  const mpq_class rho = rational_gcd(f10, g10);

  PolyBezout pb = poly_bezout(f1, g1);
  QPoly u = pb.s * rho;
  QPoly v = pb.t * rho;

  IntBezout ib = int_bezout(f10.get_num() * g10.get_den(), g10.get_num() * f10.get_den());
  if (sgn(g10) != 0) {
    mpq_class h = (mpq_class(ib.s) - u.constant_term()) / g10;
    u += g1 * h;
    v -= f1 * h;
  } else {
    mpq_class h = (v.constant_term() - mpq_class(ib.t)) / f10;
    u += g1 * h;
    v -= f1 * h;
  }
  return detail::finish_certificate(f, g, Element(kR, dq * rho), Element(kR, std::move(u)),
                                    Element(kR, std::move(v)));
}

ComaximalityBreakdown comaximality_breakdown(const Element& u, const Element& v) {
  require_same_ring(u, v);
  ComaximalityBreakdown out;
  out.poly_level = poly_coprime(u.poly(), v.poly());
  out.int_level = int_gcd(u.integer_part(), v.integer_part());
  out.comaximal = out.poly_level && out.int_level == 1;
  return out;
}

KaplanskyPair kaplansky_solve_pullback(const Element& a, const Element& b, const Element& c) {
  require_same_ring(a, b);
  require_same_ring(a, c);
  if (a.ring() != kR)
    throw Error(ErrorCode::PreconditionViolated, "kaplansky_solve_pullback needs PULLBACK");
  if (!is_unimodular_triple(a, b, c))
    throw Error(ErrorCode::NotUnimodularTriple, "(a, b, c) is not the unit ideal");

  auto checked = [&](KaplanskyPair w) {
    if (!kaplansky_holds(a, b, c, w.p, w.q))
      throw Error(ErrorCode::SearchExhausted, "Kaplansky witness failed verification");
    return w;
  };

  if (c.is_zero()) return checked({one(kR), zero(kR)});
  if (b.is_zero()) return checked({one(kR), one(kR)});
  if (a.is_zero()) {
    Combination comb = comaximal_combination(b, c);
    return checked({comb.alpha, comb.beta});
  }

  const mpz_class a0 = a.integer_part(), b0 = b.integer_part(), c0 = c.integer_part();
  mpz_class p0, q0;
  bool found = false;
  if (a0 != 0) {
    p0 = 1;
    for (mpz_class q = 0; q <= abs(a0); ++q) {
      if (int_gcd(a0, b0 + q * c0) == 1) {
        q0 = q;
        found = true;
        break;
      }
    }
  } else {
    // (a, b, c) = (1) with a(0) = 0 forces gcd(b0, c0) = 1.
    IntBezout ib = int_bezout(b0, c0);
    if (ib.d == 1) {
      p0 = ib.s;
      q0 = ib.t;
      if (c0 != 0) {
        // Move p0 into {1, ..., |c0|} along (p0 + k c0, q0 - k b0).
        const mpz_class m = abs(c0);
        mpz_class target;
        mpz_class shifted = p0 - 1;
        mpz_fdiv_r(target.get_mpz_t(), shifted.get_mpz_t(), m.get_mpz_t());
        target += 1;
        mpz_class k;
        mpz_class diff = target - p0;
        mpz_divexact(k.get_mpz_t(), diff.get_mpz_t(), c0.get_mpz_t());
        p0 = target;
        q0 -= k * b0;
      }
      found = p0 != 0;
    }
  }
  if (!found) throw Error(ErrorCode::SearchExhausted, "no integer-level shift found");

  const Element p(kR, p0);
  for (long tau = 0; tau <= a.degree(); ++tau) {
    Element q = Element(kR, q0) + Element(kR, tau) * Element::x(kR);
    if (poly_coprime((p * a).poly(), (p * b + q * c).poly())) return checked({p, q});
  }
  throw Error(ErrorCode::SearchExhausted, "no polynomial-level shift found");
}

bool ObstructionCertificate::verify() const {
  if (statement.empty()) return false;
  if (y0 == 0) return constant_not_unit && checked_divisibilities.empty() && abs(x0) != 1;
  if (constant_not_unit || checked_divisibilities.size() != 2) return false;
  const mpz_class expected[2] = {x0 - 1, x0 + 1};
  for (int i = 0; i < 2; ++i) {
    const auto& fd = checked_divisibilities[static_cast<std::size_t>(i)];
    if (fd.divisor != y0 || fd.dividend != expected[i]) return false;
    if (mpz_divisible_p(fd.dividend.get_mpz_t(), fd.divisor.get_mpz_t())) return false;
  }
  return true;
}

Asr1Decision asr1_decide(const Element& x, const Element& y, const Element& z) {
  require_same_ring(x, y);
  require_same_ring(x, z);
  if (x.ring() != kR) throw Error(ErrorCode::PreconditionViolated, "asr1_decide needs PULLBACK");
  if (z.is_zero()) throw Error(ErrorCode::PreconditionViolated, "z must be nonzero");
  if (!are_comaximal(x, y))
    throw Error(ErrorCode::PreconditionViolated, "(x, y) must be the unit ideal");

  const mpz_class x0 = x.integer_part(), y0 = y.integer_part(), z0 = z.integer_part();
  mpz_class lambda0;
  if (z0 != 0) {
    bool found = false;
    for (mpz_class l = 0; l <= abs(z0); ++l) {
      if (int_gcd(x0 + l * y0, z0) == 1) {
        lambda0 = l;
        found = true;
        break;
      }
    }
    if (!found) throw Error(ErrorCode::SearchExhausted, "no integer-level lambda found");
  } else {
    auto t = unit_shift_exists(x0, y0);
    if (!t) {
      ObstructionCertificate cert;
      cert.x0 = x0;
      cert.y0 = y0;
      cert.statement = "no integer k with |" + x0.get_str() + " + k*" + y0.get_str() + "| = 1";
      if (y0 == 0) {
        cert.constant_not_unit = true;
      } else {
        cert.checked_divisibilities = {{y0, x0 - 1}, {y0, x0 + 1}};
      }
      return Asr1Refuted{std::move(cert)};
    }
    lambda0 = *t;
  }

  for (long tau = 0; tau <= z.degree(); ++tau) {
    Element lambda = Element(kR, lambda0) + Element(kR, tau) * Element::x(kR);
    if (are_comaximal(x + lambda * y, z)) return Asr1Found{std::move(lambda)};
  }
  throw Error(ErrorCode::SearchExhausted, "no polynomial-level lambda found");
}

}  // namespace edr

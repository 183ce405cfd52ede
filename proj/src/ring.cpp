#include "edr/ring.hpp"

#include "edr/euclidean.hpp"
#include "edr/pullback.hpp"

namespace edr {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::NotInRing: return "NotInRing";
    case ErrorCode::NonIntegralConstantTerm: return "NonIntegralConstantTerm";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::DivisorZero: return "DivisorZero";
    case ErrorCode::NotComaximal: return "NotComaximal";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::NotUnimodularTriple: return "NotUnimodularTriple";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::TransformFailed: return "TransformFailed";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

std::string_view ring_name(Ring ring) noexcept {
  switch (ring) {
    case Ring::Int: return "int";
    case Ring::PolyQ: return "polyq";
    case Ring::Pullback: return "pullback";
  }
  return "unknown";
}

std::optional<Ring> ring_from_name(std::string_view name) noexcept {
  if (name == "int") return Ring::Int;
  if (name == "polyq") return Ring::PolyQ;
  if (name == "pullback") return Ring::Pullback;
  return std::nullopt;
}

namespace {

bool is_integral(const mpq_class& q) { return q.get_den() == 1; }

}  // namespace

Element::Element(Ring ring, QPoly poly) : ring_(ring), poly_(std::move(poly)) {
  if (ring_ == Ring::Int && poly_.degree() > 0)
    throw Error(ErrorCode::NotInRing, "INT elements are constants");
  if (ring_ != Ring::PolyQ && !is_integral(poly_.constant_term()))
    throw Error(ErrorCode::NonIntegralConstantTerm,
                "constant term must be an integer in this ring");
}

Element::Element(Ring ring, const mpz_class& value)
    : ring_(ring), poly_(QPoly::constant(mpq_class(value))) {}

Element Element::x(Ring ring) {
  if (ring == Ring::Int) throw Error(ErrorCode::NotInRing, "X is not in INT");
  return Element(ring, QPoly::monomial(1, 1));
}

Element Element::from_coeffs(Ring ring, std::vector<mpq_class> coeffs) {
  return Element(ring, QPoly(std::move(coeffs)));
}

mpz_class Element::integer_part() const {
  mpq_class c = poly_.constant_term();
  if (!is_integral(c))
    throw Error(ErrorCode::NonIntegralConstantTerm, "constant term is not an integer");
  return c.get_num();
}

Element Element::operator-() const { return Element(ring_, -poly_); }

void require_same_ring(const Element& x, const Element& y) {
  if (x.ring() != y.ring())
    throw Error(ErrorCode::RingMismatch,
                std::string("ring mismatch: ") + std::string(ring_name(x.ring())) +
                    " vs " + std::string(ring_name(y.ring())));
}

Element operator+(const Element& lhs, const Element& rhs) {
  require_same_ring(lhs, rhs);
  return Element(lhs.ring(), lhs.poly() + rhs.poly());
}

Element operator-(const Element& lhs, const Element& rhs) {
  require_same_ring(lhs, rhs);
  return Element(lhs.ring(), lhs.poly() - rhs.poly());
}

Element operator*(const Element& lhs, const Element& rhs) {
  require_same_ring(lhs, rhs);
  return Element(lhs.ring(), lhs.poly() * rhs.poly());
}

Element ring_arithmetic(const Element& x, const Element& y, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return x + y;
    case ArithOp::Sub: return x - y;
    case ArithOp::Mul: return x * y;
    case ArithOp::Neg: return -x;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown arithmetic op");
}

Element zero(Ring ring) { return Element(ring); }
Element one(Ring ring) { return Element(ring, 1L); }

Associate canonical_associate(const Element& x) {
  const Ring r = x.ring();
  if (x.is_zero()) return {x, one(r)};
  switch (r) {
    case Ring::Int:
    case Ring::Pullback: {
      const auto& c = x.poly().coeffs()[x.poly().lowest_order()];
      Element u(r, sgn(c) < 0 ? -1L : 1L);
      return {u * x, u};
    }
    case Ring::PolyQ: {
      Element u(r, QPoly::constant(1 / x.poly().lead()));
      return {u * x, u};
    }
  }
  throw Error(ErrorCode::Internal, "unknown ring");
}

Element canonical(const Element& x) { return canonical_associate(x).value; }

bool is_canonical(const Element& x) { return canonical(x) == x; }

bool associates(const Element& x, const Element& y) {
  require_same_ring(x, y);
  return canonical(x) == canonical(y);
}

bool is_unit(const Element& x) {
  if (x.is_zero()) return false;
  if (x.ring() == Ring::PolyQ) return x.degree() == 0;
  return x.degree() == 0 && abs(x.constant_term()) == 1;
}

Element unit_inverse(const Element& u) {
  if (!is_unit(u)) throw Error(ErrorCode::NotDivisible, "element is not a unit");
  return Element(u.ring(), QPoly::constant(1 / u.constant_term()));
}

std::optional<Element> try_exact_div(const Element& f, const Element& d) {
  require_same_ring(f, d);
  if (d.is_zero()) throw Error(ErrorCode::DivisorZero, "division by zero");
  if (f.ring() == Ring::Int) {
    mpz_class n = f.integer_part();
    mpz_class m = d.integer_part();
    if (!mpz_divisible_p(n.get_mpz_t(), m.get_mpz_t())) return std::nullopt;
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
    return Element(Ring::Int, q);
  }
  auto [q, r] = divmod(f.poly(), d.poly());
  if (!r.is_zero()) return std::nullopt;
  if (f.ring() == Ring::Pullback && q.constant_term().get_den() != 1) return std::nullopt;
  return Element(f.ring(), std::move(q));
}

Element exact_div(const Element& f, const Element& d) {
  auto q = try_exact_div(f, d);
  if (!q) throw Error(ErrorCode::NotDivisible, "exact division failed");
  return *std::move(q);
}

bool divides(const Element& d, const Element& f) {
  require_same_ring(d, f);
  if (d.is_zero()) return f.is_zero();
  return try_exact_div(f, d).has_value();
}

bool BezoutCertificate::certifies(const Element& f, const Element& g) const {
  const Ring r = f.ring();
  for (const Element* e : {&g, &d, &alpha, &beta, &cf, &cg})
    if (e->ring() != r) return false;
  if (alpha * f + beta * g != d) return false;
  if (d * cf != f || d * cg != g) return false;
  if (!is_canonical(d)) return false;
  if (!d.is_zero() && alpha * cf + beta * cg != one(r)) return false;
  return true;
}

namespace detail {

BezoutCertificate finish_certificate(const Element& f, const Element& g,
                                     Element d, Element alpha, Element beta) {
  const Ring r = f.ring();
  auto [dv, u] = canonical_associate(d);
  BezoutCertificate cert{dv, u * alpha, u * beta, zero(r), zero(r)};
  if (!dv.is_zero()) {
    cert.cf = exact_div(f, dv);
    cert.cg = exact_div(g, dv);
  }
  return cert;
}

std::optional<BezoutCertificate> divisibility_certificate(const Element& f,
                                                          const Element& g) {
  const Ring r = f.ring();
  if (f.is_zero() && g.is_zero())
    return BezoutCertificate{zero(r), zero(r), zero(r), zero(r), zero(r)};
  if (!f.is_zero() && try_exact_div(g, f))
    return finish_certificate(f, g, f, one(r), zero(r));
  if (!g.is_zero() && try_exact_div(f, g))
    return finish_certificate(f, g, g, zero(r), one(r));
  return std::nullopt;
}

}  // namespace detail

BezoutCertificate gcd_certificate(const Element& f, const Element& g) {
  require_same_ring(f, g);
  BezoutCertificate cert = [&] {
    switch (f.ring()) {
      case Ring::Int: return int_gcd_certificate(f, g);
      case Ring::PolyQ: return polyq_gcd_certificate(f, g);
      case Ring::Pullback: return pullback_gcd_certificate(f, g);
    }
    throw Error(ErrorCode::Internal, "unknown ring");
  }();
  if (!cert.certifies(f, g))
    throw Error(ErrorCode::Internal, "gcd certificate failed self-check");
  return cert;
}

GcdCombination gcd_many(std::span<const Element> xs) {
  if (xs.empty()) throw Error(ErrorCode::InvalidArgument, "gcd_many of empty list");
  auto [d, u] = canonical_associate(xs[0]);
  GcdCombination out{d, {u}};
  for (std::size_t i = 1; i < xs.size(); ++i) {
    require_same_ring(xs[0], xs[i]);
    BezoutCertificate cert = gcd_certificate(out.d, xs[i]);
    for (auto& c : out.coeffs) c = c * cert.alpha;
    out.coeffs.push_back(cert.beta);
    out.d = cert.d;
  }
  return out;
}

bool are_comaximal(const Element& f, const Element& g) {
  return is_unit(gcd_certificate(f, g).d);
}

Combination comaximal_combination(const Element& f, const Element& g) {
  BezoutCertificate cert = gcd_certificate(f, g);
  if (!is_unit(cert.d)) throw Error(ErrorCode::NotComaximal, "elements are not comaximal");
  Element inv = unit_inverse(cert.d);
  return {cert.alpha * inv, cert.beta * inv};
}

}  // namespace edr

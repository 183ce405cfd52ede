#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "edr/error.hpp"
#include "edr/qpoly.hpp"

namespace edr {

/// The three supported Bezout domains.
enum class Ring {
  Int,       // Z
  PolyQ,     // Q[X]
  Pullback,  // Z + X Q[X]
};

std::string_view ring_name(Ring ring) noexcept;
/// Accepts "int", "polyq", "pullback".
std::optional<Ring> ring_from_name(std::string_view name) noexcept;

/// An exact value of one of the supported rings.
///
/// Every ring is stored as a rational polynomial: an INT element is a constant
/// with integral value, a PULLBACK element has an integral constant term.
/// Membership is validated on construction, so an Element is always a member
/// of its ring.
class Element {
 public:
  explicit Element(Ring ring = Ring::Int) : ring_(ring) {}
  Element(Ring ring, QPoly poly);
  Element(Ring ring, const mpz_class& value);
  Element(Ring ring, long value) : Element(ring, mpz_class(value)) {}

  /// The indeterminate X. Not available in INT.
  static Element x(Ring ring);
  /// Builds an element from coefficients, lowest degree first.
  static Element from_coeffs(Ring ring, std::vector<mpq_class> coeffs);

  Ring ring() const noexcept { return ring_; }
  const QPoly& poly() const noexcept { return poly_; }
  bool is_zero() const noexcept { return poly_.is_zero(); }
  int degree() const noexcept { return poly_.degree(); }
  mpq_class constant_term() const { return poly_.constant_term(); }
  /// Integral constant term (the value itself in INT). Throws on POLYQ
  /// elements whose constant term is not an integer.
  mpz_class integer_part() const;

  Element operator-() const;
  friend bool operator==(const Element&, const Element&) = default;

 private:
  Ring ring_;
  QPoly poly_;
};

Element operator+(const Element& lhs, const Element& rhs);
Element operator-(const Element& lhs, const Element& rhs);
Element operator*(const Element& lhs, const Element& rhs);

enum class ArithOp { Add, Sub, Mul, Neg };
/// Dispatching form of the ring operations; y is ignored for Neg.
Element ring_arithmetic(const Element& x, const Element& y, ArithOp op);

Element zero(Ring ring);
Element one(Ring ring);

struct Associate {
  Element value;  // canonical representative
  Element unit;   // value == unit * input
};

/// INT: nonnegative. POLYQ: monic or zero. PULLBACK: lowest-order nonzero
/// coefficient positive, or zero.
Associate canonical_associate(const Element& x);
Element canonical(const Element& x);
bool is_canonical(const Element& x);
bool associates(const Element& x, const Element& y);

bool is_unit(const Element& x);
/// Inverse of a unit; throws NotDivisible otherwise.
Element unit_inverse(const Element& u);

/// q with f == d*q in the ring. Throws DivisorZero or NotDivisible.
Element exact_div(const Element& f, const Element& d);
std::optional<Element> try_exact_div(const Element& f, const Element& d);
/// d | f. Zero divides only zero.
bool divides(const Element& d, const Element& f);

/// Certificate that d generates the ideal (f, g).
struct BezoutCertificate {
  Element d;
  Element alpha;
  Element beta;
  Element cf;
  Element cg;

  /// Re-checks every identity against the inputs by exact multiplication:
  /// alpha*f + beta*g == d, f == d*cf, g == d*cg, d canonical, and
  /// alpha*cf + beta*cg == 1 when d != 0.
  bool certifies(const Element& f, const Element& g) const;
};

BezoutCertificate gcd_certificate(const Element& f, const Element& g);

struct GcdCombination {
  Element d;
  std::vector<Element> coeffs;  // sum coeffs[i] * xs[i] == d
};

/// Left fold of gcd_certificate with back-substituted coefficients.
GcdCombination gcd_many(std::span<const Element> xs);

bool are_comaximal(const Element& f, const Element& g);

struct Combination {
  Element alpha;
  Element beta;
};

/// alpha*f + beta*g == 1. Throws NotComaximal.
Combination comaximal_combination(const Element& f, const Element& g);

void require_same_ring(const Element& x, const Element& y);

namespace detail {
/// Certificate for the case where one argument divides the other; ties go to
/// the first argument. Shared by all rings so that divisible pivots produce
/// the trivial combination.
std::optional<BezoutCertificate> divisibility_certificate(const Element& f,
                                                          const Element& g);
/// Fills cf, cg and canonicalizes d (scaling alpha, beta by the unit).
BezoutCertificate finish_certificate(const Element& f, const Element& g,
                                     Element d, Element alpha, Element beta);
}  // namespace detail

}  // namespace edr

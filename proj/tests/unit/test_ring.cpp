#include <doctest.h>

#include "edr/ring.hpp"
#include "gen.hpp"
#include "oracle.hpp"
#include "util.hpp"

using namespace edr;
using namespace testutil;

namespace {

constexpr Ring kRings[] = {Ring::Int, Ring::PolyQ, Ring::Pullback};

// alpha*f + beta*g == d and both cofactor identities, recomputed with the
// oracle's naive polynomial arithmetic.
bool identities_hold(const Element& f, const Element& g, const BezoutCertificate& c) {
  using namespace oracle;
  const Poly F = gen::raw(f), G = gen::raw(g), D = gen::raw(c.d);
  if (add(mul(gen::raw(c.alpha), F), mul(gen::raw(c.beta), G)) != D) return false;
  if (mul(D, gen::raw(c.cf)) != F || mul(D, gen::raw(c.cg)) != G) return false;
  if (!D.empty() && add(mul(gen::raw(c.alpha), gen::raw(c.cf)),
                        mul(gen::raw(c.beta), gen::raw(c.cg))) != Poly{1})
    return false;
  return true;
}

// d agrees with an independently computed generator.
bool generator_matches(Ring r, const Element& f, const Element& g, const Element& d) {
  using namespace oracle;
  if (r == Ring::Int) {
    mpz_class expect;
    mpz_gcd(expect.get_mpz_t(), f.integer_part().get_mpz_t(), g.integer_part().get_mpz_t());
    return d.integer_part() == expect;
  }
  if (r == Ring::PolyQ) return gen::raw(d) == gcd(gen::raw(f), gen::raw(g));
  // Pullback: d divides both inputs and lies in the ideal (checked elsewhere),
  // which pins it down up to units.
  return pullback_divides(gen::raw(d), gen::raw(f)) &&
         pullback_divides(gen::raw(d), gen::raw(g));
}

}  // namespace

TEST_CASE("ring arithmetic examples") {
  CHECK(ring_arithmetic(I("2"), I("3"), ArithOp::Add) == I("5"));
  CHECK(ring_arithmetic(P("1/2x"), P("2"), ArithOp::Mul) == P("x"));
  CHECK(ring_arithmetic(Q("1+x"), Q("1+x"), ArithOp::Sub).is_zero());
  CHECK(ring_arithmetic(P("1+x"), P("0"), ArithOp::Neg) == P("-1-x"));
  CHECK_THROWS_AS(I("2") + Q("2"), Error);
}

TEST_CASE("membership") {
  CHECK_THROWS_AS(Element::from_coeffs(Ring::Pullback, {mpq_class(1, 2)}), Error);
  CHECK_THROWS_AS(Element::x(Ring::Int), Error);
  CHECK(Element::from_coeffs(Ring::Pullback, {0, 0}).is_zero());
  try {
    Element::from_coeffs(Ring::Pullback, {mpq_class(1, 2)});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonIntegralConstantTerm);
  }
}

TEST_CASE("canonical associates") {
  Associate a = canonical_associate(I("-6"));
  CHECK(a.value == I("6"));
  CHECK(a.unit == I("-1"));
  a = canonical_associate(Q("2x+2"));
  CHECK(a.value == Q("x+1"));
  CHECK(a.unit == Q("1/2"));
  a = canonical_associate(P("-1/2x"));
  CHECK(a.value == P("1/2x"));
  CHECK(a.unit == P("-1"));
  CHECK(canonical(P("0")).is_zero());
}

TEST_CASE("units") {
  CHECK(is_unit(P("-1")));
  CHECK_FALSE(is_unit(P("2")));
  CHECK_FALSE(try_exact_div(P("1"), P("2")));
  CHECK(is_unit(Q("3/7")));
  CHECK_FALSE(is_unit(Q("x")));
  CHECK(unit_inverse(Q("3/7")) == Q("7/3"));
  CHECK_THROWS_AS(unit_inverse(I("2")), Error);
}

TEST_CASE("exact division") {
  CHECK(exact_div(P("x"), P("2")) == P("1/2x"));
  CHECK_THROWS_AS(exact_div(I("7"), I("2")), Error);
  CHECK_THROWS_AS(exact_div(P("3+x"), P("2")), Error);
  CHECK_THROWS_AS(exact_div(I("7"), I("0")), Error);
  CHECK(divides(I("0"), I("0")));
  CHECK_FALSE(divides(I("0"), I("3")));
}

TEST_CASE("gcd certificate examples") {
  BezoutCertificate c = gcd_certificate(I("12"), I("18"));
  CHECK(c.d == I("6"));
  CHECK(c.alpha == I("-1"));
  CHECK(c.beta == I("1"));
  CHECK(c.alpha * I("12") + c.beta * I("18") == c.d);

  c = gcd_certificate(I("0"), I("0"));
  CHECK(c.d.is_zero());
  CHECK(c.certifies(I("0"), I("0")));

  c = gcd_certificate(I("5"), I("7"));
  CHECK(c.d == I("1"));
  CHECK(c.alpha == I("3"));
  CHECK(c.beta == I("-2"));
}

TEST_CASE("gcd_many") {
  std::vector<Element> xs{I("6"), I("10"), I("15")};
  GcdCombination g = gcd_many(xs);
  CHECK(g.d == I("1"));
  Element sum = I("0");
  for (std::size_t i = 0; i < xs.size(); ++i) sum = sum + g.coeffs[i] * xs[i];
  CHECK(sum == g.d);

  std::vector<Element> zeros{I("0"), I("0"), I("0")};
  CHECK(gcd_many(zeros).d.is_zero());
  std::vector<Element> two{I("4"), I("6")};
  CHECK(gcd_many(two).d == I("2"));
}

TEST_CASE("comaximality") {
  CHECK(are_comaximal(I("5"), I("7")));
  CHECK_FALSE(are_comaximal(I("2"), I("4")));
  CHECK_FALSE(are_comaximal(I("0"), I("0")));
  Combination c = comaximal_combination(I("5"), I("7"));
  CHECK(c.alpha == I("3"));
  CHECK(c.beta == I("-2"));
  c = comaximal_combination(P("1"), P("x^2+3"));
  CHECK(c.alpha == P("1"));
  CHECK(c.beta == P("0"));
  CHECK_THROWS_AS(comaximal_combination(I("2"), I("4")), Error);
}

TEST_CASE("gcd certificates on random pairs") {
  gen::Rng rng(11);
  for (Ring r : kRings) {
    CAPTURE(ring_name(r));
    gen::Shape s;
    s.bound = r == Ring::Int ? 1000000 : 50;
    for (int i = 0; i < 200; ++i) {
      Element f = gen::element(rng, r, s), g = gen::element(rng, r, s);
      BezoutCertificate c = gcd_certificate(f, g);
      REQUIRE(c.certifies(f, g));
      REQUIRE(identities_hold(f, g, c));
      REQUIRE(is_canonical(c.d));
      REQUIRE(generator_matches(r, f, g, c.d));
      // Symmetry and membership of arbitrary combinations.
      CHECK(gcd_certificate(g, f).d == c.d);
      Element combo = gen::element(rng, r, s) * f + gen::element(rng, r, s) * g;
      CHECK(divides(c.d, combo));
    }
  }
}

TEST_CASE("gcd associativity") {
  gen::Rng rng(12);
  for (Ring r : kRings) {
    gen::Shape s;
    s.max_degree = 3;
    s.bound = r == Ring::Int ? 10000 : 20;
    for (int i = 0; i < 100; ++i) {
      Element f = gen::element(rng, r, s), g = gen::element(rng, r, s),
              h = gen::element(rng, r, s);
      Element left = gcd_certificate(gcd_certificate(f, g).d, h).d;
      Element right = gcd_certificate(f, gcd_certificate(g, h).d).d;
      CHECK(left == right);
    }
  }
}

TEST_CASE("canonical associate is idempotent and unit-faithful") {
  gen::Rng rng(13);
  for (Ring r : kRings) {
    for (int i = 0; i < 200; ++i) {
      Element x = gen::element(rng, r);
      Associate a = canonical_associate(x);
      CHECK(is_unit(a.unit));
      CHECK(a.value == a.unit * x);
      CHECK(canonical(a.value) == a.value);
      CHECK(associates(x, a.value));
    }
  }
}

TEST_CASE("pullback closure") {
  gen::Rng rng(14);
  for (int i = 0; i < 200; ++i) {
    Element f = gen::element(rng, Ring::Pullback), g = gen::element(rng, Ring::Pullback);
    for (const Element& e : {f + g, f - g, f * g, -f})
      CHECK(oracle::integral_constant(gen::raw(e)));
  }
}

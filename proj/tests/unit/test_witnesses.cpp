#include <doctest.h>

#include "edr/kaplansky.hpp"
#include "edr/witnesses.hpp"
#include "gen.hpp"
#include "util.hpp"

using namespace edr;
using namespace testutil;

TEST_CASE("verify_witness") {
  CHECK(verify_witness(KaplanskyWitness{I("6"), I("3"), I("2"), I("1"), I("1")}));
  CHECK_FALSE(verify_witness(KaplanskyWitness{I("6"), I("3"), I("2"), I("1"), I("0")}));
  CHECK(verify_witness(FactorizationWitness{I("6"), I("3"), I("2"), I("1"), I("5"), I("1")}));
  CHECK_FALSE(verify_witness(FactorizationWitness{I("6"), I("3"), I("2"), I("1"), I("5"), I("2")}));
  CHECK_FALSE(verify_witness(KaplanskyWitness{I("6"), I("3"), I("2"), I("1"), Q("1")}));
  AnyWitness any = PQ3Witness{I("5"), I("2"), I("3"), I("1"), I("0")};
  CHECK(verify_witness(any));
}

TEST_CASE("Kaplansky to factorization") {
  FactorizationWitness f = kaplansky_to_factorization({I("6"), I("3"), I("2"), I("1"), I("1")});
  CHECK(f.lambda == I("1"));
  CHECK(f.u == I("5"));
  CHECK(f.v == I("1"));

  f = kaplansky_to_factorization({I("3"), I("1"), I("0"), I("1"), I("0")});
  CHECK(f.lambda == I("0"));
  CHECK(f.u == I("1"));
  CHECK(f.v == I("1"));

  f = kaplansky_to_factorization({P("x"), P("2"), P("5"), P("3"), P("-1")});
  CHECK(f.lambda == P("0"));
  CHECK(f.u == P("1"));
  CHECK(f.v == P("2"));
  CHECK(is_strengthened(f));

  CHECK_THROWS_AS(kaplansky_to_factorization({I("6"), I("3"), I("2"), I("1"), I("0")}), Error);
}

TEST_CASE("factorization to pq3") {
  PQ3Witness w = factorization_to_pq3({I("6"), I("3"), I("2"), I("1"), I("5"), I("1")});
  CHECK(w.p == I("1"));
  CHECK(w.q == I("1"));

  w = factorization_to_pq3({I("4"), I("1"), I("7"), I("0"), I("1"), I("1")});
  CHECK(w.p == I("1"));
  CHECK(w.q == I("0"));

  w = factorization_to_pq3({I("5"), I("2"), I("3"), I("0"), I("2"), I("1")});
  CHECK(w.p == I("1"));
  CHECK(w.q == I("0"));
  CHECK(are_comaximal(I("2"), I("5")));
}

TEST_CASE("pq3 to Kaplansky") {
  KaplanskyConversion k = pq3_to_kaplansky({I("5"), I("2"), I("3"), I("1"), I("0")});
  CHECK(k.witness.p == I("1"));
  CHECK(k.witness.q == I("0"));
  CHECK(k.route == KaplanskyRoute::Coefficients);
  CHECK_FALSE(k.used_fallback());

  k = pq3_to_kaplansky({I("1"), I("4"), I("1"), I("0"), I("0")});
  CHECK(k.witness.p == I("1"));
  CHECK(k.witness.q == I("0"));
  CHECK(k.route == KaplanskyRoute::UnitA);

  // gcd(1, 1) has coefficients (1, 0), which fail here: (6, 3) != (1).
  k = pq3_to_kaplansky({I("6"), I("3"), I("2"), I("1"), I("1")});
  CHECK_FALSE(kaplansky_holds(I("6"), I("3"), I("2"), I("1"), I("0")));
  CHECK(k.used_fallback());
  CHECK(k.witness.p == I("1"));
  CHECK(k.witness.q == I("1"));
  CHECK(verify_witness(k.witness));
}

TEST_CASE("star to factorization") {
  FactorizationWitness f = star_to_factorization({I("5"), I("2"), I("3"), I("0"), I("-1"), I("-1")});
  CHECK(f.lambda == I("0"));
  CHECK(f.u == I("2"));
  CHECK(f.v == I("1"));

  f = star_to_factorization({I("8"), I("1"), I("0"), I("0"), I("0"), I("0")});
  CHECK(f.u == I("1"));
  CHECK(f.v == I("1"));

  f = star_to_factorization({I("7"), I("3"), I("4"), I("1"), I("0"), I("2")});
  CHECK(f.u == I("1"));
  CHECK(f.v == I("7"));
  CHECK(verify_witness(f));

  CHECK_THROWS_AS(star_to_factorization({I("5"), I("2"), I("3"), I("0"), I("0"), I("0")}), Error);
}

TEST_CASE("criterion witnesses") {
  CritWitness w = crit_witness(I("3"), I("5"), I("2"));
  CHECK(w.lambda == I("0"));
  CHECK(w.u == I("3"));
  CHECK(w.v == I("1"));
  CHECK(is_strengthened(w));

  w = crit_witness(I("2"), I("5"), I("3"));
  CHECK(w.lambda == I("0"));
  CHECK(w.u == I("2"));
  CHECK(w.v == I("1"));

  for (Ring r : {Ring::Int, Ring::PolyQ, Ring::Pullback}) {
    for (const char* y : {"0", "4", "7"})
      for (const char* z : {"1", "2", "-3"}) {
        w = crit_witness(one(r), E(r, y), E(r, z));
        CHECK(w.lambda.is_zero());
        CHECK(w.u == one(r));
        CHECK(w.v == one(r));
      }
  }
  CHECK_THROWS_AS(crit_witness(I("2"), I("4"), I("3")), Error);
}

TEST_CASE("criterion to Kaplansky") {
  CritConversion c = crit_to_kaplansky(I("5"), I("2"), I("3"), crit_witness);
  CHECK(kaplansky_holds(I("5"), I("2"), I("3"), c.kaplansky.witness.p, c.kaplansky.witness.q));
  CHECK(is_unit(c.kaplansky.witness.p));
  CHECK(c.kaplansky.witness.q == I("0"));
  CHECK(are_comaximal(I("5"), I("2")));

  c = crit_to_kaplansky(I("1"), I("2"), I("3"), crit_witness);
  CHECK(verify_witness(c.kaplansky.witness));

  c = crit_to_kaplansky(P("x"), P("2"), P("5"), crit_witness);
  CHECK(verify_witness(c.kaplansky.witness));
  CHECK(verify_witness(c.factorization));
  CHECK(verify_witness(c.pq3));

  CritSolver bogus = [](const Element& x, const Element& y, const Element& z) {
    return CritWitness{x, y, z, zero(x.ring()), one(x.ring()), one(x.ring())};
  };
  CHECK_THROWS_AS(crit_to_kaplansky(I("5"), I("2"), I("3"), bogus), Error);
}

TEST_CASE("domain criterion") {
  CritDomainWitness w = critdomain_witness(I("2"), I("5"), I("3"));
  CHECK(w.lambda == I("0"));
  CHECK(verify_witness(w));
  CHECK(divides(I("2"), I("5") * (one(Ring::Int) - w.a * I("3")) *
                            (one(Ring::Int) - w.b * (one(Ring::Int) - I("3")))));

  w = critdomain_witness(I("1"), I("9"), I("4"));
  CHECK(w.lambda == I("0"));
  CHECK(verify_witness(w));

  w = critdomain_witness(I("4"), I("6"), I("3"));
  CHECK(verify_witness(w));
  CHECK(try_exact_div(I("6") * (one(Ring::Int) - w.a * I("3")) *
                          (one(Ring::Int) - w.b * (one(Ring::Int) - I("3"))),
                      I("4") + w.lambda * I("6")));
}

TEST_CASE("witness chain round trips") {
  gen::Rng rng(51);
  gen::Shape s;
  s.max_degree = 2;
  s.bound = 12;
  for (Ring r : {Ring::Int, Ring::PolyQ, Ring::Pullback}) {
    for (int i = 0; i < 60; ++i) {
      gen::Triple t = gen::unimodular_triple(rng, r, s, r == Ring::Pullback && i % 4 == 0);
      KaplanskyPair pq = kaplansky_solve(t.a, t.b, t.c);
      KaplanskyWitness k{t.a, t.b, t.c, pq.p, pq.q};
      REQUIRE(kaplansky_remark_holds(k));
      FactorizationWitness f = kaplansky_to_factorization(k);
      CHECK(is_strengthened(f));
      PQ3Witness p3 = factorization_to_pq3(f);
      CHECK(verify_witness(p3));
      KaplanskyConversion back = pq3_to_kaplansky(p3);
      CHECK(verify_witness(back.witness));
    }
  }
}

TEST_CASE("criterion witnesses on random inputs") {
  gen::Rng rng(52);
  gen::Shape s;
  s.max_degree = 2;
  s.bound = 12;
  s.zero = 0;
  for (Ring r : {Ring::Int, Ring::PolyQ, Ring::Pullback}) {
    int done = 0;
    while (done < 40) {
      Element x = gen::element(rng, r, s), y = gen::element(rng, r, s), z = gen::element(rng, r, s);
      if (x.is_zero() || y.is_zero() || z.is_zero()) continue;
      CritDomainWitness dw = critdomain_witness(x, y, z);
      CHECK(verify_witness(dw));
      if (are_comaximal(x, y)) {
        CritWitness w = crit_witness(x, y, z);
        CHECK(verify_witness(w));
        CHECK(is_strengthened(w));
      }
      ++done;
    }
  }
}

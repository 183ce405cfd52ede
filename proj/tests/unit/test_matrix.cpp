#include <doctest.h>

#include "edr/matrix.hpp"
#include "edr/syntax.hpp"
#include "gen.hpp"
#include "oracle.hpp"
#include "util.hpp"

using namespace edr;
using namespace testutil;

namespace {

Matrix M(Ring r, std::string_view text) { return parse_matrix(r, text); }

bool diagonal_associates(const Matrix& d, const std::vector<Element>& expected) {
  auto diag = d.diagonal();
  if (diag.size() != expected.size()) return false;
  for (std::size_t i = 0; i < diag.size(); ++i)
    if (!associates(diag[i], expected[i])) return false;
  return true;
}

Element product(const std::vector<Element>& xs, Ring r) {
  Element p = one(r);
  for (const auto& x : xs) p = p * x;
  return p;
}

// Random invertible matrix: product of elementary row operations.
Matrix random_unimodular(gen::Rng& rng, Ring r, std::size_t n) {
  Matrix u = Matrix::identity(r, n);
  gen::Shape s;
  s.max_degree = 1;
  s.bound = 3;
  for (int step = 0; step < 4; ++step) {
    std::size_t i = static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<long>(n) - 1));
    std::size_t j = static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<long>(n) - 1));
    if (i == j) continue;
    Matrix e = Matrix::identity(r, n);
    e(i, j) = gen::element(rng, r, s);
    u = e * u;
  }
  return u;
}

}  // namespace

TEST_CASE("determinants") {
  CHECK(matrix_det(M(Ring::Int, "[[1,2],[3,4]]")) == I("-2"));
  CHECK(matrix_det(M(Ring::Pullback, "[[0,1],[-1,1/2x]]")) == P("1"));
  CHECK(matrix_det(Matrix::identity(Ring::PolyQ, 3)) == Q("1"));
  CHECK_THROWS_AS(matrix_det(M(Ring::Int, "[[1,2,3]]")), Error);

  gen::Rng rng(41);
  for (int i = 0; i < 50; ++i) {
    Matrix a = gen::matrix(rng, Ring::Int, 3, 3);
    CHECK(matrix_det(a).integer_part() == oracle::det(gen::int_rows(a)));
  }
}

TEST_CASE("hermite examples") {
  Matrix a = M(Ring::Int, "[[6],[4]]");
  HermiteResult h = hermite_triangularize(a);
  CHECK(h.T == M(Ring::Int, "[[2],[0]]"));
  CHECK(h.P * a == h.T);
  CHECK(is_unit(matrix_det(h.P)));

  a = M(Ring::Int, "[[1,5],[0,3]]");
  h = hermite_triangularize(a);
  CHECK(h.T == a);
  CHECK(h.P == Matrix::identity(Ring::Int, 2));

  a = M(Ring::Pullback, "[[x],[2]]");
  h = hermite_triangularize(a);
  CHECK(h.T == M(Ring::Pullback, "[[2],[0]]"));
  CHECK(h.P == M(Ring::Pullback, "[[0,1],[-1,1/2x]]"));
}

TEST_CASE("hermite on random matrices") {
  gen::Rng rng(42);
  for (Ring r : {Ring::Int, Ring::PolyQ, Ring::Pullback}) {
    gen::Shape s;
    s.max_degree = 2;
    s.bound = r == Ring::Int ? 100 : 9;
    for (int i = 0; i < 60; ++i) {
      std::size_t rows = static_cast<std::size_t>(gen::uniform(rng, 1, 4));
      std::size_t cols = static_cast<std::size_t>(gen::uniform(rng, 1, 4));
      Matrix a = gen::matrix(rng, r, rows, cols, s);
      HermiteResult h = hermite_triangularize(a);
      CHECK(h.P * a == h.T);
      CHECK(is_unit(matrix_det(h.P)));
      CHECK(h.T.is_upper_triangular());
    }
  }
}

TEST_CASE("unimodular row completion") {
  std::vector<Element> row{I("2"), I("5")};
  Matrix m = complete_unimodular_row(row);
  CHECK(m(0, 0) == I("2"));
  CHECK(m(0, 1) == I("5"));
  CHECK(is_unit(matrix_det(m)));

  std::vector<Element> e1{I("1"), I("0"), I("0")};
  CHECK(complete_unimodular_row(e1) == Matrix::identity(Ring::Int, 3));

  std::vector<Element> e2{I("0"), I("1")};
  CHECK(complete_unimodular_row(e2) == M(Ring::Int, "[[0,1],[-1,0]]"));

  std::vector<Element> bad{I("2"), I("4")};
  CHECK_THROWS_AS(complete_unimodular_row(bad), Error);

  gen::Rng rng(43);
  for (Ring r : {Ring::Int, Ring::PolyQ, Ring::Pullback}) {
    for (int i = 0; i < 40; ++i) {
      std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 1, 4));
      std::vector<Element> xs;
      for (std::size_t k = 0; k < n; ++k) xs.push_back(gen::element(rng, r));
      if (!is_unit(gcd_many(xs).d)) continue;
      Matrix c = complete_unimodular_row(xs);
      for (std::size_t k = 0; k < n; ++k) CHECK(c(0, k) == xs[k]);
      CHECK(is_unit(matrix_det(c)));
    }
  }
}

TEST_CASE("2x2 diagonalization examples") {
  Matrix a = M(Ring::Pullback, "[[x,2],[0,5]]");
  DiagonalReduction red = diagonalize_2x2(a);
  CHECK(verify_reduction(a, red));
  CHECK(diagonal_associates(red.D, {P("1"), P("5x")}));

  a = M(Ring::Int, "[[2,4],[0,3]]");
  red = diagonalize_2x2(a);
  CHECK(verify_reduction(a, red));
  CHECK(red.D == M(Ring::Int, "[[1,0],[0,6]]"));

  a = M(Ring::Int, "[[0,0],[0,0]]");
  red = diagonalize_2x2(a);
  CHECK(red.D.is_zero());
  CHECK(red.P == Matrix::identity(Ring::Int, 2));
  CHECK(red.Q == Matrix::identity(Ring::Int, 2));
}

TEST_CASE("2x2 diagonalization on random matrices") {
  gen::Rng rng(44);
  for (Ring r : {Ring::Int, Ring::PolyQ, Ring::Pullback}) {
    CAPTURE(ring_name(r));
    gen::Shape s;
    s.max_degree = 3;
    s.bound = r == Ring::Int ? 1000 : 20;
    s.zero = 0.15;
    for (int i = 0; i < 150; ++i) {
      Matrix a = gen::matrix(rng, r, 2, 2, s);
      TwoByTwoTrace trace;
      DiagonalReduction red = diagonalize_2x2(a, &trace);
      REQUIRE(verify_reduction(a, red));
      auto d = red.D.diagonal();
      CHECK(associates(d[0], gcd_many(a.entries()).d));
      CHECK(divides(d[0], d[1]));
      CHECK(associates(d[0] * d[1], matrix_det(a)));
      if (!trace.scale.is_zero()) {
        // The row [p, q] times the scaled triangular matrix.
        const Matrix& t = trace.triangular;
        Element t00 = exact_div(t(0, 0), trace.scale), t01 = exact_div(t(0, 1), trace.scale),
                t11 = exact_div(t(1, 1), trace.scale);
        CHECK(trace.unimodular_row[0] == trace.pq.p * t00);
        CHECK(trace.unimodular_row[1] == trace.pq.p * t01 + trace.pq.q * t11);
      }
    }
  }
}

TEST_CASE("diagonal reduction examples") {
  Matrix a = M(Ring::Int, "[[2,0,0],[0,3,0],[0,0,4]]");
  DiagonalReduction red = diagonal_reduce(a);
  CHECK(verify_reduction(a, red));
  CHECK(red.D.diagonal() == std::vector<Element>{I("1"), I("2"), I("12")});

  a = M(Ring::Pullback, "[[x,0],[0,2]]");
  red = diagonal_reduce(a);
  CHECK(verify_reduction(a, red));
  CHECK(diagonal_associates(red.D, {P("2"), P("x")}));
  CHECK(divides(P("2"), P("x")));

  a = M(Ring::Int, "[[4,6,10]]");
  red = diagonal_reduce(a);
  CHECK(verify_reduction(a, red));
  CHECK(red.D == M(Ring::Int, "[[2,0,0]]"));

  CHECK_THROWS_AS(diagonal_reduce(Matrix(Ring::Int, 0, 3)), Error);
}

TEST_CASE("verify_reduction rejects tampering") {
  Matrix a = M(Ring::Int, "[[2,4],[0,3]]");
  DiagonalReduction red = diagonal_reduce(a);
  CHECK(verify_reduction(a, red));
  DiagonalReduction bad = red;
  bad.D = M(Ring::Int, "[[1,0],[0,5]]");
  CHECK_FALSE(verify_reduction(a, bad));
  bad = red;
  bad.P = Matrix::identity(Ring::Int, 2);
  CHECK_FALSE(verify_reduction(a, bad));

  Matrix z(Ring::PolyQ, 2, 3);
  DiagonalReduction zr{Matrix::identity(Ring::PolyQ, 2), Matrix::identity(Ring::PolyQ, 3), z, 0};
  CHECK(verify_reduction(z, zr));
}

TEST_CASE("reduction matches determinantal divisors over Z") {
  gen::Rng rng(45);
  gen::Shape s;
  s.bound = 30;
  s.zero = 0.1;
  for (int i = 0; i < 80; ++i) {
    std::size_t rows = static_cast<std::size_t>(gen::uniform(rng, 1, 3));
    std::size_t cols = static_cast<std::size_t>(gen::uniform(rng, 1, 3));
    Matrix a = gen::matrix(rng, Ring::Int, rows, cols, s);
    DiagonalReduction red = diagonal_reduce(a);
    REQUIRE(verify_reduction(a, red));
    auto expected = oracle::determinantal_divisors(gen::int_rows(a));
    auto diag = red.D.diagonal();
    REQUIRE(diag.size() == expected.size());
    for (std::size_t k = 0; k < diag.size(); ++k) CHECK(abs(diag[k].integer_part()) == expected[k]);
  }
}

TEST_CASE("reduction on random rectangular matrices") {
  gen::Rng rng(46);
  struct Case {
    Ring ring;
    std::size_t max_rows, max_cols;
    int degree;
    long bound;
  };
  for (const Case& c : {Case{Ring::Int, 4, 5, 0, 100}, Case{Ring::PolyQ, 3, 4, 2, 9},
                        Case{Ring::Pullback, 3, 3, 2, 9}}) {
    CAPTURE(ring_name(c.ring));
    gen::Shape s;
    s.max_degree = c.degree;
    s.bound = c.bound;
    s.zero = 0.1;
    for (int i = 0; i < 25; ++i) {
      std::size_t rows = static_cast<std::size_t>(gen::uniform(rng, 1, static_cast<long>(c.max_rows)));
      std::size_t cols = static_cast<std::size_t>(gen::uniform(rng, 1, static_cast<long>(c.max_cols)));
      Matrix a = gen::matrix(rng, c.ring, rows, cols, s);
      DiagonalReduction red = diagonal_reduce(a);
      REQUIRE(verify_reduction(a, red));
      CHECK(red.passes < kDefaultPassCap);
      if (a.is_square()) CHECK(associates(product(red.D.diagonal(), c.ring), matrix_det(a)));
    }
  }
}

TEST_CASE("equivalent matrices reduce to the same diagonal") {
  gen::Rng rng(47);
  for (Ring r : {Ring::Int, Ring::PolyQ, Ring::Pullback}) {
    gen::Shape s;
    s.max_degree = 1;
    s.bound = 6;
    for (int i = 0; i < 15; ++i) {
      Matrix a = gen::matrix(rng, r, 2, 3, s);
      Matrix b = random_unimodular(rng, r, 2) * a * random_unimodular(rng, r, 3);
      auto da = diagonal_reduce(a).D.diagonal(), db = diagonal_reduce(b).D.diagonal();
      REQUIRE(da.size() == db.size());
      for (std::size_t k = 0; k < da.size(); ++k) CHECK(associates(da[k], db[k]));
    }
  }
}

TEST_CASE("pass cap") {
  Matrix a = M(Ring::Int, "[[2,0],[0,3]]");
  DiagonalReduction red = diagonal_reduce(a, 1000);
  CHECK(verify_reduction(a, red));
  // A zero first column costs one pass for the column swap.
  Matrix b = M(Ring::Int, "[[0,4,6]]");
  CHECK(diagonal_reduce(b, 2).passes == 2);
  try {
    diagonal_reduce(b, 1);
    FAIL("expected the pass cap to be hit");
  } catch (const ReductionCapExceeded& e) {
    CHECK(e.code() == ErrorCode::CapExceeded);
    CHECK(e.partial().passes == 1);
    CHECK(e.partial().P * b * e.partial().Q == e.partial().D);
  }
}

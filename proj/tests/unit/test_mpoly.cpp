#include "doctest.h"

#include "gonal/mpoly/matrix.hpp"
#include "gonal/mpoly/parse.hpp"

using namespace gonal;

namespace {

MPoly random_linear(const RingPtr& r, Rng& rng) {
  std::vector<Scalar> c;
  for (int i = 0; i < r->nvars(); ++i) c.push_back(r->field()->random(rng));
  return MPoly::linear(r, c);
}

MPoly random_poly(const RingPtr& r, Rng& rng, int terms, int maxdeg) {
  std::vector<Term> t;
  std::uniform_int_distribution<int> e(0, maxdeg);
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    for (int v = 0; v < r->nvars(); ++v) {
      m.e[v] = static_cast<std::uint16_t>(e(rng) / r->nvars());
      m.deg += m.e[v];
    }
    t.push_back({m, r->field()->random(rng)});
  }
  return MPoly(r, std::move(t));
}

}  // namespace

TEST_CASE("parse and print") {
  auto R = PolyRing::make(Field::rationals(), {"x", "y", "z"});
  MPoly f = parse_poly(R, "x^2 - 3/2*x*y + (y - z)^2");
  CHECK(f.to_string() == "x^2 - 3/2*x*y + y^2 - 2*y*z + z^2");
  CHECK(parse_poly(R, "-x + 2*y") == MPoly::from_int(R, 2) * MPoly::var(R, "y") - MPoly::var(R, "x"));
  CHECK_THROWS_AS(parse_poly(R, "x + w"), ParseError);
  CHECK_THROWS_AS(parse_poly(R, "x +"), ParseError);
  CHECK_THROWS_AS(parse_poly(R, ""), ParseError);
  try {
    parse_poly(R, "x + y $", 4);
    FAIL("expected error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 7);
  }
}

TEST_CASE("det: small identities") {
  auto R = PolyRing::make(Field::rationals(), {"x", "y", "z", "w"});
  MPoly x = MPoly::var(R, "x");
  PolyMatrix d(R, 5, 5);
  for (int i = 0; i < 5; ++i) d.at(i, i) = x;
  CHECK(det(d) == x.pow(5));
  auto m = PolyMatrix::from_rows(R, {{x, MPoly::var(R, "y")}, {MPoly::var(R, "z"), MPoly::var(R, "w")}});
  CHECK(det(m) == parse_poly(R, "x*w - y*z"));
  CHECK_THROWS_AS(det(PolyMatrix(R, 2, 3)), Error);
}

TEST_CASE("det: Bareiss agrees with cofactor expansion on random linear matrices") {
  auto R = PolyRing::make(Field::prime(7), {"a", "b", "c"});
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 4 + trial % 2;
    PolyMatrix m(R, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = random_linear(R, rng);
    MPoly d = det_bareiss(m);
    CHECK(d == det_cofactor(m));
    CHECK((d.is_zero() || (d.is_homogeneous() && d.total_degree() == n)));
  }
}

TEST_CASE("resultant: conventions and examples") {
  auto R = PolyRing::make(Field::rationals(), {"y", "a", "b", "x"});
  const int y = 0;
  CHECK(resultant(parse_poly(R, "y - a"), parse_poly(R, "y - b"), y) == parse_poly(R, "a - b"));
  CHECK(resultant(parse_poly(R, "y^2 - x"), parse_poly(R, "y - 1"), y) == parse_poly(R, "1 - x"));
  CHECK_THROWS_AS(resultant(parse_poly(R, "a"), parse_poly(R, "b"), y), Error);
}

TEST_CASE("resultant: matches Sylvester cofactor oracle and detects common factors") {
  auto R = PolyRing::make(Field::prime(101), {"y", "x"});
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    MPoly f = random_poly(R, rng, 4, 6) + MPoly::var(R, 0).pow(2);
    MPoly g = random_poly(R, rng, 3, 4) + MPoly::var(R, 0);
    if (trial % 4 == 0) {
      MPoly h = MPoly::var(R, 0) + random_poly(R, rng, 2, 2);
      f = f * h;
      g = g * h;
      CHECK(resultant(f, g, 0).is_zero());
    }
    CHECK(resultant(f, g, 0) == det_cofactor(sylvester_matrix(f, g, 0)));
  }
}

TEST_CASE("jacobian and minors") {
  auto R = PolyRing::make(Field::rationals(), {"x", "y"});
  PolyMatrix j = jacobian({parse_poly(R, "x^2")});
  CHECK(j.at(0, 0) == parse_poly(R, "2*x"));
  CHECK(j.at(0, 1).is_zero());
  PolyMatrix k = jacobian({parse_poly(R, "x*y")});
  CHECK(k.at(0, 0) == parse_poly(R, "y"));
  CHECK(k.at(0, 1) == parse_poly(R, "x"));
  auto S = PolyRing::make(Field::rationals(), {"x", "y", "z", "u", "v", "w"});
  auto m = PolyMatrix::from_rows(S, {{parse_poly(S, "x"), parse_poly(S, "y"), parse_poly(S, "z")},
                                     {parse_poly(S, "u"), parse_poly(S, "v"), parse_poly(S, "w")}});
  auto ms = minors(m, 2);
  REQUIRE(ms.size() == 3);
  CHECK(ms[0] == parse_poly(S, "x*v - y*u"));
  CHECK(ms[1] == parse_poly(S, "x*w - z*u"));
  CHECK(ms[2] == parse_poly(S, "y*w - z*v"));
}

TEST_CASE("minors of linear matrices are homogeneous of degree k") {
  auto R = PolyRing::make(Field::prime(101), {"a", "b", "c", "d"});
  Rng rng(9);
  PolyMatrix m(R, 3, 4);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j) m.at(i, j) = random_linear(R, rng);
  for (int k = 1; k <= 3; ++k) {
    for (const auto& f : minors(m, k)) CHECK((f.is_zero() || (f.is_homogeneous() && f.total_degree() == k)));
  }
}

TEST_CASE("term order conversion round-trips") {
  auto R = PolyRing::make(Field::rationals(), {"x", "y", "z"});
  Rng rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    MPoly f = random_poly(R, rng, 8, 9);
    MPoly g = f.in_ring(R->with_order(MonomialOrder::lex())).in_ring(R);
    CHECK(f == g);
  }
  // lex and grevlex disagree where expected
  MPoly h = parse_poly(R, "x*z + y^2");
  CHECK(R->var(0) == "x");
  CHECK(h.lm() == Monomial::var(1, 2));
  CHECK(h.in_ring(R->with_order(MonomialOrder::lex())).lm() == (Monomial::var(0) * Monomial::var(2)));
}

TEST_CASE("compose, substitute, eval") {
  auto R = PolyRing::make(Field::rationals(), {"x", "y"});
  MPoly f = parse_poly(R, "x^2 + x*y");
  MPoly g = f.substitute(1, parse_poly(R, "x + 1"));
  CHECK(g == parse_poly(R, "2*x^2 + x"));
  auto Q = R->field();
  CHECK(Q->eq(f.eval(Q, {Q->from_int(2), Q->from_int(3)}), Q->from_int(10)));
  CHECK(divide_exact(parse_poly(R, "x^2 - y^2"), parse_poly(R, "x - y")) == parse_poly(R, "x + y"));
  CHECK_THROWS_AS(divide_exact(parse_poly(R, "x^2 + y^2"), parse_poly(R, "x - y")), Error);
}

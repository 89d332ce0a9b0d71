#include "doctest.h"

#include "gonal/arith/factor.hpp"
#include "gonal/arith/linalg.hpp"

using namespace gonal;

namespace {

UPoly product(const std::vector<Factor>& fs, const FieldPtr& k) {
  UPoly r = UPoly::constant(k, k->one());
  for (const auto& f : fs) r = r * f.poly.pow(static_cast<unsigned>(f.multiplicity));
  return r;
}

void check_axioms(const FieldPtr& k, Rng& rng) {
  for (int trial = 0; trial < 30; ++trial) {
    Scalar a = k->random(rng), b = k->random(rng), c = k->random(rng);
    CHECK(k->eq(k->mul(k->mul(a, b), c), k->mul(a, k->mul(b, c))));
    CHECK(k->eq(k->add(k->add(a, b), c), k->add(a, k->add(b, c))));
    CHECK(k->eq(k->mul(a, k->add(b, c)), k->add(k->mul(a, b), k->mul(a, c))));
    CHECK(k->eq(k->mul(a, b), k->mul(b, a)));
    if (!k->is_zero(a)) CHECK(k->is_one(k->mul(a, k->inv(a))));
  }
}

}  // namespace

TEST_CASE("prime field construction gates") {
  CHECK_THROWS_AS(Field::prime(2), Error);
  CHECK_THROWS_AS(Field::prime(3), Error);
  CHECK_THROWS_AS(Field::prime(15), Error);
  CHECK(Field::prime(101)->characteristic() == 101);
}

TEST_CASE("field axioms hold on random triples") {
  Rng rng(7);
  FieldPtr Q = Field::rationals();
  FieldPtr F = Field::prime(101);
  check_axioms(Q, rng);
  check_axioms(F, rng);
  FieldPtr K = extend(Q, UPoly::from_ints(Q, {-2, 0, 1}));
  check_axioms(K, rng);
  FieldPtr L = extend(K, UPoly::from_ints(K, {-3, 0, 1}));
  check_axioms(L, rng);
  FieldPtr F2 = extend(F, UPoly::from_ints(F, {2, 0, 1}));
  check_axioms(F2, rng);
}

TEST_CASE("extend: defining relation and collapse") {
  FieldPtr Q = Field::rationals();
  CHECK(extend(Q, UPoly::from_ints(Q, {-2, 1}))->is_rationals());
  FieldPtr K = extend(Q, UPoly::from_ints(Q, {-2, 0, 1}));
  CHECK(K->degree() == 2);
  CHECK(K->eq(K->mul(K->gen(), K->gen()), K->from_int(2)));
  CHECK_THROWS_WITH_AS(extend(Q, UPoly::from_ints(Q, {-1, 0, 1})), "reducible minimal polynomial", Error);
  // generator is a root of the minimal polynomial
  UPoly f = UPoly::from_ints(Q, {1, 1, 0, 1});
  FieldPtr L = extend(Q, f);
  CHECK(L->is_zero(f.map_to(L).eval(L->gen())));
}

TEST_CASE("towers deeper than two are rejected") {
  FieldPtr Q = Field::rationals();
  FieldPtr K = extend(Q, UPoly::from_ints(Q, {-2, 0, 1}));
  FieldPtr L = extend(K, UPoly::from_ints(K, {-3, 0, 1}));
  CHECK(L->depth() == 2);
  CHECK(L->absolute_degree() == 4);
  CHECK_THROWS_AS(extend(L, UPoly::from_ints(L, {-5, 0, 1})), Error);
}

TEST_CASE("factor over Q: small cases") {
  FieldPtr Q = Field::rationals();
  auto fs = factor(UPoly::from_ints(Q, {-1, 0, 1}));
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].poly == UPoly::from_ints(Q, {-1, 1}));
  CHECK(fs[1].poly == UPoly::from_ints(Q, {1, 1}));
  CHECK(is_irreducible(UPoly::from_ints(Q, {1, 0, 1})));
  CHECK_THROWS_AS(factor(UPoly(Q)), Error);
}

TEST_CASE("factor over Q reproduces the input") {
  FieldPtr Q = Field::rationals();
  // (x^2+1)^2 (x^3-2)(3x-1)(x^4-10x^2+1)
  UPoly a = UPoly::from_ints(Q, {1, 0, 1});
  UPoly b = UPoly::from_ints(Q, {-2, 0, 0, 1});
  UPoly c = UPoly::from_ints(Q, {-1, 3});
  UPoly d = UPoly::from_ints(Q, {1, 0, -10, 0, 1});
  UPoly f = a * a * b * c * d;
  auto fs = factor(f);
  CHECK(fs.size() == 4);
  CHECK(product(fs, Q) == f.monic());
  for (const auto& x : fs) CHECK(x.poly.is_monic());
  int mult_a = 0;
  for (const auto& x : fs) {
    if (x.poly == a) mult_a = x.multiplicity;
  }
  CHECK(mult_a == 2);
  // Swinnerton-Dyer polynomial splits into quadratics modulo every prime.
  CHECK(is_irreducible(d));
}

TEST_CASE("factor over F_101 recovers known irreducibles") {
  FieldPtr F = Field::prime(101);
  Rng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    // Build irreducibles of degree 1, 2 and 2 by rejection.
    std::vector<UPoly> parts;
    for (int deg : {1, 2, 2}) {
      for (;;) {
        std::vector<Scalar> c(deg + 1);
        for (auto& s : c) s = F->random(rng);
        c[deg] = F->one();
        UPoly g(F, c);
        if (is_irreducible(g)) {
          parts.push_back(g);
          break;
        }
      }
    }
    UPoly f = parts[0] * parts[1] * parts[2];
    auto fs = factor(f);
    CHECK(product(fs, F) == f);
    for (const auto& p : parts) {
      bool found = false;
      for (const auto& x : fs) found = found || x.poly == p;
      CHECK(found);
    }
  }
}

TEST_CASE("factor in characteristic p with p-th powers") {
  FieldPtr F = Field::prime(5);
  UPoly f = UPoly::from_ints(F, {1, 0, 0, 0, 0, 1}).pow(2) * UPoly::from_ints(F, {2, 0, 1});
  auto fs = factor(f);
  CHECK(product(fs, F) == f);
  // x^5 + 1 = (x+1)^5 over F_5
  bool ok = false;
  for (const auto& x : fs) ok = ok || (x.poly == UPoly::from_ints(F, {1, 1}) && x.multiplicity == 10);
  CHECK(ok);
}

TEST_CASE("factor over an extension of F_p") {
  FieldPtr F = Field::prime(7);
  FieldPtr K = extend(F, UPoly::from_ints(F, {1, 0, 1}));  // x^2+1 irreducible mod 7
  UPoly f = UPoly::from_ints(K, {1, 0, 1});
  auto fs = factor(f);
  CHECK(fs.size() == 2);
  CHECK(product(fs, K) == f);
}

TEST_CASE("factor over number fields by norms") {
  FieldPtr Q = Field::rationals();
  FieldPtr K = extend(Q, UPoly::from_ints(Q, {-2, 0, 1}));
  auto fs = factor(UPoly::from_ints(K, {-2, 0, 1}));
  CHECK(fs.size() == 2);
  auto rs = roots_in(UPoly::from_ints(Q, {-2, 0, 1}), K);
  REQUIRE(rs.size() == 2);
  for (const auto& r : rs) CHECK(K->eq(K->mul(r.raw(), r.raw()), K->from_int(2)));
  CHECK(roots_in(UPoly::from_ints(Q, {-2, 0, 1}), Q).empty());
  // x^4 - 10x^2 + 1 splits into two quadratics over Q(sqrt 2)
  auto gs = factor(UPoly::from_ints(K, {1, 0, -10, 0, 1}));
  CHECK(gs.size() == 2);
  CHECK(product(gs, K) == UPoly::from_ints(K, {1, 0, -10, 0, 1}));
  // and completely over Q(sqrt 2, sqrt 3)
  FieldPtr L = extend(K, UPoly::from_ints(K, {-3, 0, 1}));
  CHECK(roots_in(UPoly::from_ints(Q, {1, 0, -10, 0, 1}), L).size() == 4);
}

TEST_CASE("linear algebra basics") {
  FieldPtr Q = Field::rationals();
  Mat m(Q, 3, 3);
  long v[3][3] = {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = Q->from_int(v[i][j]);
  CHECK(Q->eq(m.det(), Q->from_int(18)));
  Mat inv = m.inverse();
  Mat id = m * inv;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(Q->eq(id.at(i, j), Q->from_int(i == j)));
  // charpoly: x^3 - 9x^2 + 24x - 18
  auto cp = m.charpoly();
  CHECK(UPoly(Q, cp) == UPoly::from_ints(Q, {-18, 24, -9, 1}));
  Mat s(Q, 2, 3);
  s.at(0, 0) = Q->one();
  s.at(1, 1) = Q->one();
  s.at(0, 2) = Q->one();
  s.at(1, 2) = Q->one();
  Mat ker = s.kernel();
  REQUIRE(ker.rows() == 1);
  CHECK((s * ker.transpose()).is_zero());
}

TEST_CASE("gcd over Q of products with a known common factor") {
  const FieldPtr q = Field::rationals();
  Rng rng(31);
  auto rand_poly = [&](int deg) {
    std::vector<Scalar> c;
    for (int i = 0; i <= deg; ++i) {
      c.push_back(q->from_rational(mpq_class(static_cast<long>(rng() % 2001) - 1000, 1 + static_cast<long>(rng() % 97))));
    }
    if (q->is_zero(c.back())) c.back() = q->one();
    return UPoly(q, c, "t");
  };
  for (int trial = 0; trial < 20; ++trial) {
    UPoly g = rand_poly(static_cast<int>(rng() % 4)).monic();
    UPoly u = rand_poly(1 + static_cast<int>(rng() % 8)), v = rand_poly(1 + static_cast<int>(rng() % 8));
    UPoly h = gcd(g * u, g * v);
    CHECK(h.is_monic());
    // g divides h, h divides both products, and the cofactors are coprime.
    CHECK((h % g).is_zero());
    CHECK(((g * u) % h).is_zero());
    CHECK(((g * v) % h).is_zero());
    CHECK(gcd((g * u) / h, (g * v) / h).degree() == 0);
  }
  UPoly a = UPoly::from_ints(q, {-1, 0, 1}, "t"), b = UPoly::from_ints(q, {1, 1}, "t");
  CHECK(gcd(a, b) == b);
  CHECK(gcd(a, UPoly(q, "t")) == a.monic());
}

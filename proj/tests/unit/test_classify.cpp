#include "doctest.h"
#include "fixtures.hpp"

#include "gonal/classify/classify.hpp"
#include "gonal/mpoly/matrix.hpp"

using namespace gonal;
using fixtures::parse_all;

namespace {

RingPtr p5(const FieldPtr& k) { return PolyRing::make(k, {"x0", "x1", "x2", "x3", "x4", "x5"}); }
RingPtr p4(const FieldPtr& k) { return PolyRing::make(k, {"x0", "x1", "x2", "x3", "x4"}); }

Ideal rational_normal_quintic(const RingPtr& P) {
  std::vector<MPoly> g;
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      g.push_back(MPoly::var(P, i) * MPoly::var(P, j + 1) - MPoly::var(P, j) * MPoly::var(P, i + 1));
    }
  }
  return Ideal(P, g);
}

Ideal veronese(const RingPtr& P) {
  auto M = PolyMatrix::from_rows(P, {parse_all(P, {"x0", "x1", "x2"}), parse_all(P, {"x1", "x3", "x4"}),
                                     parse_all(P, {"x2", "x4", "x5"})});
  return Ideal(P, minors(M, 2));
}

}  // namespace

TEST_CASE("sanity: degree and genus") {
  auto in = fixtures::load("x0_58.txt");
  Sanity s = sanity(Ideal(in.ring, in.polys), 6);
  CHECK(s.dim == 1);
  CHECK(s.degree == 10);
  CHECK(s.genus == 6);
  CHECK(s.is_canonical);

  Sanity r = sanity(rational_normal_quintic(p5(Field::rationals())), 6);
  CHECK(r.degree == 5);
  CHECK(r.genus == 0);

  Rng rng(11);
  auto P = p4(Field::prime(32003));
  Sanity g5 = sanity(Ideal(P, fixtures::random_net(P, rng)), 5);
  CHECK(g5.degree == 8);
  CHECK(g5.genus == 5);
}

TEST_CASE("hyperelliptic detection") {
  auto rnc = rational_normal_quintic(p5(Field::rationals()));
  CHECK(detect_hyperelliptic(rnc));
  CHECK(classify(rnc, 6).stratum == Stratum::Hyperelliptic);
  auto in = fixtures::load("x0_58.txt");
  CHECK(!detect_hyperelliptic(Ideal(in.ring, in.polys)));
  auto R = PolyRing::make(Field::rationals(), {"x", "y", "z", "s", "t", "u"});
  CHECK(!detect_hyperelliptic(Ideal(R, fixtures::sextic_a3_canonical(R))));
}

TEST_CASE("Lie algebra of the Veronese surface is sl_3") {
  auto rep = lie_algebra(veronese(p5(Field::rationals())));
  CHECK(rep.dimension == 8);
  CHECK(!rep.is_soluble);
  CHECK(rep.derived_series == std::vector<int>{8});
}

namespace {

void check_derivations(const Ideal& I, const LieAlgebraReport& rep) {
  const RingPtr& P = I.ring();
  const int n = P->nvars();
  for (const auto& A : rep.basis) {
    for (const auto& q : I.gens()) {
      MPoly d(P);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) d += (MPoly::var(P, j) * q.derivative(i)).scale(A.at(i, j));
      }
      CHECK(I.contains(d));
    }
  }
}

}  // namespace

TEST_CASE("Lie algebra of quartic surface scrolls") {
  auto P = p5(Field::rationals());
  // S(1,3)
  auto M = PolyMatrix::from_rows(P, {parse_all(P, {"x0", "x1", "x2", "x4"}), parse_all(P, {"x1", "x2", "x3", "x5"})});
  Ideal I(P, minors(M, 2));
  auto rep = lie_algebra(I);
  const bool listed = rep.dimension == 7 || rep.dimension == 9 || (rep.dimension == 8 && rep.is_soluble);
  CHECK(listed);
  check_derivations(I, rep);
  // S(2,2): only required to differ from the Veronese invariants
  auto N = PolyMatrix::from_rows(P, {parse_all(P, {"x0", "x1", "x3", "x4"}), parse_all(P, {"x1", "x2", "x4", "x5"})});
  Ideal J(P, minors(N, 2));
  auto rj = lie_algebra(J);
  CHECK(!(rj.dimension == 8 && !rj.is_soluble));
  check_derivations(J, rj);
}

TEST_CASE("classify: X0(58) is generic genus 6") {
  auto in = fixtures::load("x0_58.txt");
  auto c = classify(Ideal(in.ring, in.polys), 6);
  CHECK(c.stratum == Stratum::Genus6Generic);
  CHECK(to_string(c.stratum) == "Genus6Generic");
  CHECK(c.generator_degrees == std::vector<std::pair<int, int>>{{2, 6}});
}

TEST_CASE("classify: generic and trigonal genus 5") {
  Rng rng(3);
  auto P = p4(Field::prime(32003));
  CHECK(classify(Ideal(P, fixtures::random_net(P, rng)), 5).stratum == Stratum::Genus5Generic);
  auto c = classify(Ideal(P, fixtures::nodal_quintic_canonical(P, rng)), 5);
  CHECK(c.stratum == Stratum::Trigonal);
  CHECK(c.generator_degrees == std::vector<std::pair<int, int>>{{2, 3}, {3, 2}});
}

TEST_CASE("classify: plane quintic versus trigonal genus 6") {
  Rng rng(8);
  auto P = p5(Field::prime(32003));
  auto q = classify(Ideal(P, fixtures::plane_quintic_canonical(P, rng)), 6);
  CHECK(q.stratum == Stratum::PlaneQuintic);
  REQUIRE(q.lie);
  CHECK(q.lie->dimension == 8);
  CHECK(!q.lie->is_soluble);
  auto t = classify(Ideal(P, fixtures::triple_point_sextic_canonical(P, rng)), 6);
  CHECK(t.stratum == Stratum::Trigonal);
  REQUIRE(t.lie);
  CHECK(!(t.lie->dimension == 8 && !t.lie->is_soluble));
}

TEST_CASE("classify is invariant under linear coordinate changes") {
  Rng rng(21);
  auto P6 = p5(Field::prime(32003));
  auto P5 = p4(Field::prime(32003));
  struct Case {
    std::vector<MPoly> gens;
    int g;
  };
  std::vector<Case> cases{{fixtures::plane_quintic_canonical(P6, rng), 6},
                          {fixtures::triple_point_sextic_canonical(P6, rng), 6},
                          {fixtures::random_net(P5, rng), 5},
                          {fixtures::nodal_quintic_canonical(P5, rng), 5}};
  for (const auto& c : cases) {
    auto a = classify(Ideal(c.gens[0].ring(), c.gens), c.g);
    auto b = classify(Ideal(c.gens[0].ring(), fixtures::random_linear_change(c.gens, rng)), c.g);
    CHECK(a.stratum == b.stratum);
    CHECK(a.lie.has_value() == b.lie.has_value());
    if (a.lie && b.lie) CHECK(a.lie->dimension == b.lie->dimension);
  }
}

TEST_CASE("classify rejects non-canonical input") {
  auto P = p4(Field::rationals());
  CHECK(classify(Ideal(P, parse_all(P, {"x0", "x1"})), 5).stratum == Stratum::NotCanonicalInput);
  CHECK(classify(Ideal(P, parse_all(P, {"x0^2 - x1*x2"})), 6).stratum == Stratum::NotCanonicalInput);
}

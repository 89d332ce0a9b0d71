#include "doctest.h"
#include "fixtures.hpp"

#include "gonal/genus5/genus5.hpp"
#include "gonal/genus6/genus6.hpp"
#include "gonal/resolution/resolution.hpp"

#include <algorithm>

using namespace gonal;
using fixtures::parse_all;

namespace {

struct Pipeline {
  Ideal curve;
  SummandData summand;
  ScrollSearch search;
};

Pipeline run_pipeline(const Ideal& I, int stop_at = 5) {
  auto res = minimal_resolution(I);
  auto sd = rank5_summand(phi_matrix(res), first_generators(res));
  ScrollSearchOptions opts;
  opts.stop_at = stop_at;
  auto search = all_scrolls(sd.m5, opts);
  return Pipeline{I, sd, search};
}

const Pipeline& x0_58() {
  static const Pipeline p = [] {
    auto in = fixtures::load("x0_58.txt");
    return run_pipeline(Ideal(in.ring, in.polys));
  }();
  return p;
}

const ScrollPresentation& rational_scroll(const Pipeline& p) {
  for (const auto& s : p.search.scrolls) {
    if (s.orbit_size == 1) return s;
  }
  throw Error("no rational scroll");
}

// f and g agree up to a nonzero scalar.
bool proportional(const MPoly& f, const MPoly& g) {
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  const Scalar a = f.terms()[0].c;
  const Scalar b = g.terms()[0].c;
  return f.scale(b) == g.scale(a);
}

// Normal forms of f and g modulo J are proportional (f/g is constant on V(J)).
bool ratio_constant_on(const Ideal& J, const MPoly& f, const MPoly& g) {
  MPoly nf = J.normal_form(f), ng = J.normal_form(g);
  if (nf.is_zero() || ng.is_zero()) return true;
  return proportional(nf, ng);
}

// The three minors and their cross-products: every scroll-side check.
void check_scroll(const ScrollPresentation& s, const Ideal& curve) {
  const RingPtr& r = s.t_sol.ring();
  Ideal scroll = s.ideal();
  Ideal c = extend_scalars(curve, r);
  for (const auto& m : s.minors) CHECK(c.normal_form(m).is_zero());
  auto h = scroll.hilbert();
  CHECK(h.dim == 4);
  CHECK(h.h == std::vector<long>{1, 2});
  auto res = minimal_resolution(scroll);
  REQUIRE(res.maps.size() == 2);
  CHECK(res.maps[0].source.to_string() == "R(-2)^3");
  CHECK(res.maps[1].source.to_string() == "R(-3)^2");
  // Random combinations of the minors have rank >= 3, so are irreducible.
  Rng rng(11);
  const FieldPtr& L = r->field();
  const FieldPtr kp = L->prime_field();
  for (int i = 0; i < 3; ++i) {
    MPoly q(r);
    for (const auto& m : s.minors) {
      const Scalar c = kp->is_finite() ? kp->random(rng) : kp->from_int(static_cast<long>(rng() % 19) - 9);
      q += m.scale(L->embed(kp, c));
    }
    if (!q.is_zero()) CHECK(gram_matrix(q).rank() >= 3);
  }
}

}  // namespace

TEST_CASE("rank-5 summand of a matrix with a zero column") {
  auto R = PolyRing::make(Field::prime(32003), {"x", "y", "z", "u", "v", "w"});
  Rng rng(3);
  PolyMatrix m(R, 5, 6);
  for (int a = 0; a < 5; ++a) {
    for (int b = 0; b < 5; ++b) m.at(a, b) = fixtures::random_form(R, 1, rng);
  }
  std::vector<MPoly> q;
  for (int i = 0; i < 6; ++i) q.push_back(fixtures::random_form(R, 2, rng));
  auto sd = rank5_summand(m, q);
  const FieldPtr& k = R->field();
  for (int j = 0; j < 5; ++j) CHECK(k->is_zero(sd.kernel[j]));
  CHECK(!k->is_zero(sd.kernel[5]));
  CHECK(sd.complementary == 5);
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 6; ++j) CHECK(k->eq(sd.basis.at(i, j), i == j ? k->one() : k->zero()));
  }
  CHECK(sd.m5.rows() == 5);
  for (int a = 0; a < 5; ++a) {
    for (int b = 0; b < 5; ++b) CHECK(sd.m5.at(a, b) == m.at(a, b));
  }
  for (int a = 0; a < 5; ++a) m.at(a, 4) = MPoly(R);
  CHECK_THROWS_WITH_AS(rank5_summand(m, q), "image of phi not in a rank-5 summand", Error);
}

TEST_CASE("patch systems have 24 equations of degree at most 2") {
  const auto& p = x0_58();
  for (const auto& f : subsets(5, 3)) {
    for (const auto& g : {std::vector<int>{0, 1}, std::vector<int>{2, 4}}) {
      auto ps = patch_system(p.summand.m5, f, g);
      CHECK(ps.equations.size() == 24);
      CHECK(ps.ring->nvars() == 12);
      for (const auto& e : ps.equations) CHECK(e.total_degree() <= 2);
    }
  }
  CHECK_THROWS_AS(patch_system(p.summand.m5, {0, 0, 1}, {0, 1}), Error);
}

TEST_CASE("sextic with an A3 point: surface, cone test and the three scrolls") {
  auto R = PolyRing::make(Field::rationals(), {"x", "y", "z", "s", "t", "u"});
  Ideal I(R, fixtures::sextic_a3_canonical(R));
  auto p = run_pipeline(I, 0);
  Ideal reference_y(R, parse_all(R, {"z^2 - x*t", "y*s - x*t", "z*s - x*u", "z*t - y*u", "s*t - z*u"}));
  CHECK(p.summand.surface.equals(reference_y));
  CHECK(I.contains(p.summand.surface));

  auto cone = elliptic_cone_test(p.summand.surface);
  CHECK(!cone.is_cone);
  REQUIRE(cone.singular_points.size() == 2);
  std::vector<std::vector<long>> pts;
  for (const auto& sp : cone.singular_points) {
    REQUIRE(sp.orbit_size() == 1);
    std::vector<long> c;
    for (const auto& x : sp.coords) c.push_back(R->field()->is_zero(x) ? 0 : R->field()->eq(x, R->field()->one()) ? 1 : -1);
    pts.push_back(c);
  }
  std::sort(pts.begin(), pts.end());
  CHECK(pts == std::vector<std::vector<long>>{{0, 1, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}});

  CHECK(!p.search.infinite_family);
  REQUIRE(p.search.scrolls.size() == 3);
  CHECK(p.search.geometric_count() == 3);
  std::vector<Ideal> reference{Ideal(R, parse_all(R, {"y*s - x*t", "z*s - x*u", "z*t - y*u"})),
                             Ideal(R, parse_all(R, {"z^2 - y*s", "z*t - y*u", "s*t - z*u"})),
                             Ideal(R, parse_all(R, {"z^2 - x*t", "z*s - x*u", "s*t - z*u"}))};
  std::vector<int> hits(3, 0);
  for (const auto& s : p.search.scrolls) {
    for (int i = 0; i < 3; ++i) hits[i] += s.ideal().equals(reference[i]);
    check_scroll(s, I);
  }
  CHECK(hits == std::vector<int>{1, 1, 1});
}

TEST_CASE("X0(58): five scrolls, one rational and two quadratic pairs") {
  const auto& p = x0_58();
  CHECK(!elliptic_cone_test(p.summand.surface).is_cone);
  CHECK(p.curve.contains(p.summand.surface));
  CHECK(!p.search.infinite_family);
  CHECK(p.search.geometric_count() == 5);
  std::vector<int> orbits;
  for (const auto& s : p.search.scrolls) {
    orbits.push_back(s.orbit_size);
    CHECK(s.field->degree() == s.orbit_size);
    check_scroll(s, p.curve);
  }
  std::sort(orbits.begin(), orbits.end());
  CHECK(orbits == std::vector<int>{1, 2, 2});
}

TEST_CASE("X0(58): the gonal pencil of the rational scroll") {
  const auto& p = x0_58();
  const auto& s = rational_scroll(p);
  const RingPtr& R = p.curve.ring();
  RationalMap pencil = gonal_function(s, p.curve);
  CHECK(pencil.forms[0] == s.t_sol.at(0, 0));
  CHECK(pencil.forms[1] == s.t_sol.at(1, 0));

  // The three columns define one function on the scroll.
  Ideal scroll = s.ideal();
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      CHECK(scroll.normal_form(s.t_sol.at(0, a) * s.t_sol.at(1, b) - s.t_sol.at(0, b) * s.t_sol.at(1, a)).is_zero());
    }
  }

  // Every fiber of the reference pencil is a fiber of ours, so both give
  // the same g^1_4 (Moebius-equivalent functions).
  const MPoly a = parse_poly(R, "2*y - v + w"), b = parse_poly(R, "2*x + 2*z - v + w");
  for (long c : {0L, -1L, 3L}) {
    Ideal fiber = saturate(p.curve.with({a - b.scale(R->field()->from_int(c))}), b);
    CHECK(fiber.hilbert().degree == 4);
    CHECK(ratio_constant_on(fiber, pencil.forms[0], pencil.forms[1]));
  }
  // The reference pair is the column sum of the presentation.
  Mat span(R->field(), 0, 6);
  for (const auto& f : {a, b}) span.append_row(f.linear_coeffs());
  for (int row = 0; row < 2; ++row) {
    MPoly sum = s.t_sol.at(row, 0) + s.t_sol.at(row, 1) + s.t_sol.at(row, 2);
    Mat m = span;
    m.append_row(sum.linear_coeffs());
    CHECK(m.rank() == 2);
  }
}

TEST_CASE("X0(58): degree-6 plane model") {
  const auto& p = x0_58();
  const auto& s = rational_scroll(p);
  const RingPtr& R = p.curve.ring();
  const FieldPtr& k = R->field();
  RationalMap pencil = gonal_function(s, p.curve);

  auto own = plane_model6(pencil, p.curve);
  CHECK(own.birational());
  auto sing = plane_singularities(own.image);
  int count = 0;
  for (const auto& sp : sing) {
    count += sp.point.orbit_size();
    CHECK(sp.is_node());
  }
  CHECK(count == 4);

  // The reference hyperplanes cut out a fiber of the pencil, and are the
  // residual hyperplanes of that fiber.
  auto reference = parse_all(R, {"y + u + v", "z - v + w", "x - u - v"});
  Ideal D = p.curve.with(reference);
  CHECK(D.hilbert().degree == 4);
  MPoly n0 = D.normal_form(pencil.forms[0]), n1 = D.normal_form(pencil.forms[1]);
  REQUIRE(!n1.is_zero());
  const Scalar value = k->div(n0.terms()[0].c, n1.terms()[0].c);
  CHECK(n0 == n1.scale(value));
  Ideal residual(R, residual_hyperplanes(pencil, p.curve, value));
  CHECK(residual.equals(Ideal(R, reference)));

  auto model = plane_model6(pencil, p.curve, reference);
  CHECK(model.birational());
  auto A = PolyRing::make(k, {"X", "Y"});
  MPoly affine = model.image.compose({MPoly::var(A, 0), MPoly::var(A, 1), MPoly::from_int(A, 1)});
  MPoly sextic = parse_poly(A,
                            "Y^5-Y^4*X^2-2*Y^4*X-10*Y^4+Y^3*X^3+11*Y^3*X^2+9*Y^3*X+33*Y^3-Y^2*X^4-2*Y^2*X^3-"
                            "36*Y^2*X^2-10*Y^2*X-37*Y^2+3*Y*X^5+22*Y*X^4+12*Y*X^3+36*Y*X^2+6*Y*X+17*Y-"
                            "2*X^6+2*X^5-3*X^4+4*X^3-3*X^2+2*X-2");
  CHECK(proportional(affine, sextic));

  // Conics through the nodes pull back to the g^1_4.
  auto conics = conics_through([&] {
    std::vector<SolutionPoint> pts;
    for (const auto& sp : sing) pts.push_back(sp.point);
    return pts;
  }(), own.image.ring());
  REQUIRE(conics.size() == 2);
  MPoly q0 = conics[0].compose(own.map.forms), q1 = conics[1].compose(own.map.forms);
  for (long c : {0L, 2L}) {
    Ideal fiber = saturate(p.curve.with({pencil.forms[0] - pencil.forms[1].scale(k->from_int(c))}), pencil.forms[1]);
    CHECK(ratio_constant_on(fiber, q0, q1));
  }
}

TEST_CASE("random del Pezzo curves: scroll invariants") {
  auto R = PolyRing::make(Field::prime(32003), {"x", "y", "z", "u", "v", "w"});
  Rng rng(2024);
  for (int trial = 0; trial < 3; ++trial) {
    auto p = run_pipeline(Ideal(R, fixtures::del_pezzo_curve(R, rng)));
    auto cone = elliptic_cone_test(p.summand.surface);
    CHECK(!cone.is_cone);
    CHECK(cone.singular_points.empty());
    CHECK(!p.search.infinite_family);
    CHECK(p.search.geometric_count() <= 5);
    CHECK(p.search.geometric_count() >= 1);
    for (const auto& s : p.search.scrolls) check_scroll(s, p.curve);
    const auto& s = p.search.scrolls.front();
    RationalMap pencil = gonal_function(s, p.curve);
    auto model = plane_model6(pencil, p.curve);
    CHECK(model.birational());
  }
}

TEST_CASE("curves on an elliptic cone: cone detected, scroll family infinite") {
  auto R = PolyRing::make(Field::prime(32003), {"x", "y", "z", "u", "v", "w"});
  Rng rng(77);
  for (int trial = 0; trial < 2; ++trial) {
    Ideal I(R, fixtures::elliptic_cone_curve(R, rng));
    auto p = run_pipeline(I);
    auto cone = elliptic_cone_test(p.summand.surface);
    REQUIRE(cone.is_cone);
    REQUIRE(cone.base_curve);
    CHECK(cone.base_curve->ring()->nvars() == 5);
    CHECK(cone.base_curve->hilbert().degree == 5);
    CHECK(cone.base_curve->hilbert().dim == 2);
    // Projecting from the apex sends the curve into the base curve.
    for (const auto& e : cone.base_curve->gens()) {
      CHECK(I.normal_form(e.compose(cone.projection->forms)).is_zero());
    }
    CHECK(p.search.infinite_family);
  }
}

TEST_CASE("scroll search does not depend on the number of jobs") {
  auto R = PolyRing::make(Field::prime(101), {"x", "y", "z", "u", "v", "w"});
  Rng rng(5);
  Ideal I(R, fixtures::del_pezzo_curve(R, rng));
  auto res = minimal_resolution(I);
  auto sd = rank5_summand(phi_matrix(res), first_generators(res));
  ScrollSearchOptions one, three;
  three.jobs = 3;
  auto a = all_scrolls(sd.m5, one), b = all_scrolls(sd.m5, three);
  REQUIRE(a.scrolls.size() == b.scrolls.size());
  for (std::size_t i = 0; i < a.scrolls.size(); ++i) CHECK(a.scrolls[i].key == b.scrolls[i].key);
  CHECK(a.patches_tried == b.patches_tried);
}

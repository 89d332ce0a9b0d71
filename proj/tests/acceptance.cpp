// Acceptance run: one PASS/FAIL line per criterion. Exit status is 0 iff the
// set of failing criteria equals the --expect-fail set.

#include "unit/fixtures.hpp"

#include "gonal/classify/classify.hpp"
#include "gonal/genus5/genus5.hpp"
#include "gonal/genus6/genus6.hpp"
#include "gonal/radical/radical.hpp"
#include "gonal/resolution/resolution.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace gonal;
using fixtures::parse_all;

namespace {

// Pinned tolerances and budgets.
constexpr double kScrollBudgetSeconds = 60.0;
constexpr double kRadicalTolerance = 1e-6;
constexpr int kRadicalSamples = 20;
constexpr int kDelPezzoTrials = 25;
constexpr int kNetTrials = 26;
constexpr int kFiberPoints = 5;
constexpr int kOracleInstances = 100;
constexpr std::uint64_t kPrime = 32003;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failed sub-checks for one criterion.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failed_.push_back(what);
  }
  void note(const std::string& s) { notes_.push_back(s); }
  Outcome outcome() const {
    Outcome o;
    o.pass = failed_.empty();
    std::ostringstream os;
    for (std::size_t i = 0; i < notes_.size(); ++i) os << (i ? "; " : "") << notes_[i];
    if (!failed_.empty()) {
      os << (notes_.empty() ? "" : "; ") << "failed:";
      for (const auto& f : failed_) os << " [" << f << "]";
    }
    o.detail = os.str();
    return o;
  }

 private:
  std::vector<std::string> failed_, notes_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v, int prec = 2) {
  std::ostringstream os;
  os.precision(prec);
  os << v;
  return os.str();
}

// Equality of the spans of two lists of linear forms over one field.
bool same_span(const std::vector<MPoly>& a, const std::vector<MPoly>& b) {
  const FieldPtr& k = a.at(0).field();
  auto rank_of = [&](const std::vector<MPoly>& fs) {
    Mat m(k, 0, a[0].ring()->nvars());
    for (const auto& f : fs) m.append_row(f.linear_coeffs());
    return m.rank();
  };
  std::vector<MPoly> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const int ra = rank_of(a);
  return ra == rank_of(b) && ra == rank_of(both);
}

bool proportional(const MPoly& f, const MPoly& g) {
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  return f.scale(g.terms()[0].c) == g.scale(f.terms()[0].c);
}

// Everything the genus-6 pipeline computes before the gonal map.
struct Genus6Run {
  Ideal curve;
  Resolution res;
  SummandData summand;
  ScrollSearch search;
  double seconds = 0;
};

Genus6Run run_genus6(const Ideal& I, int stop_at) {
  const auto t0 = std::chrono::steady_clock::now();
  Resolution res = minimal_resolution(I);
  SummandData sd = rank5_summand(phi_matrix(res), first_generators(res));
  ScrollSearchOptions opts;
  opts.stop_at = stop_at;
  ScrollSearch search = all_scrolls(sd.m5, opts);
  return Genus6Run{I, res, sd, search, seconds_since(t0)};
}

const Genus6Run& x0_58() {
  static const Genus6Run run = [] {
    auto in = fixtures::load("x0_58.txt");
    return run_genus6(Ideal(in.ring, in.polys), 5);
  }();
  return run;
}

const ScrollPresentation& rational_scroll(const Genus6Run& r) {
  for (const auto& s : r.search.scrolls) {
    if (s.orbit_size == 1) return s;
  }
  throw Error("no rational scroll");
}

// Scroll ideal: Hilbert series (1 + 2t)/(1 - t)^4 and resolution
// R(-2)^3 <- R(-3)^2.
bool scroll_invariants(const ScrollPresentation& s) {
  Ideal J = s.ideal();
  auto h = J.hilbert();
  if (h.dim != 4 || h.h != std::vector<long>{1, 2}) return false;
  auto res = minimal_resolution(J);
  return res.maps.size() == 2 && res.maps[0].source.to_string() == "R(-2)^3" &&
         res.maps[1].source.to_string() == "R(-3)^2";
}

// Test-side Buchberger check: every S-polynomial reduces to zero by plain
// multivariate division.
MPoly reduce_by(MPoly p, const std::vector<MPoly>& g) {
  const FieldPtr& k = p.field();
  MPoly rem(p.ring());
  while (!p.is_zero()) {
    const Term lt = p.lt();
    bool divided = false;
    for (const auto& f : g) {
      if (f.lm().divides(lt.m)) {
        p = p.sub_mul(k->div(lt.c, f.lc()), lt.m / f.lm(), f);
        divided = true;
        break;
      }
    }
    if (!divided) {
      rem += MPoly::monomial(p.ring(), lt.m, lt.c);
      p -= MPoly::monomial(p.ring(), lt.m, lt.c);
    }
  }
  return rem;
}

bool is_groebner_basis_of(const std::vector<MPoly>& gb, const std::vector<MPoly>& gens) {
  const FieldPtr& k = gb.at(0).field();
  for (std::size_t i = 0; i < gb.size(); ++i) {
    for (std::size_t j = i + 1; j < gb.size(); ++j) {
      const Monomial l = gb[i].lm().lcm(gb[j].lm());
      MPoly s = gb[i].mul_term(l / gb[i].lm(), k->inv(gb[i].lc())) - gb[j].mul_term(l / gb[j].lm(), k->inv(gb[j].lc()));
      if (!reduce_by(s, gb).is_zero()) return false;
    }
  }
  for (const auto& f : gens) {
    if (!reduce_by(f, gb).is_zero()) return false;
  }
  return true;
}

// Laplace expansion along the first row.
MPoly laplace_det(const std::vector<std::vector<MPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  MPoly d(m[0][0].ring());
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<MPoly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<MPoly> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != j) row.push_back(m[i][c]);
      }
      minor.push_back(row);
    }
    MPoly t = m[0][j] * laplace_det(minor);
    d = j % 2 ? d - t : d + t;
  }
  return d;
}

// Sylvester matrix in var built independently: deg g rows of f, then
// deg f rows of g, coefficients from the top degree down.
std::vector<std::vector<MPoly>> sylvester(const MPoly& f, const MPoly& g, int var) {
  const int m = f.degree_in(var), n = g.degree_in(var);
  const RingPtr& r = f.ring();
  std::vector<std::vector<MPoly>> s(m + n, std::vector<MPoly>(m + n, MPoly(r)));
  for (int i = 0; i < n; ++i) {
    for (int d = 0; d <= m; ++d) s[i][i + m - d] = f.coeff_of(var, d);
  }
  for (int i = 0; i < m; ++i) {
    for (int d = 0; d <= n; ++d) s[n + i][i + n - d] = g.coeff_of(var, d);
  }
  return s;
}

MPoly random_poly(const RingPtr& r, int max_deg, Rng& rng) {
  const FieldPtr& k = r->field();
  MPoly f(r);
  for (int d = 0; d <= max_deg; ++d) {
    for (const auto& m : monomials_of_degree(r->nvars(), d)) {
      if (rng() % 2) continue;
      const Scalar c = k->is_finite() ? k->random(rng) : k->from_int(static_cast<long>(rng() % 11) - 5);
      f += MPoly::monomial(r, m, c);
    }
  }
  return f;
}

RingPtr p5(const FieldPtr& k) { return PolyRing::make(k, {"x0", "x1", "x2", "x3", "x4", "x5"}); }
RingPtr p4(const FieldPtr& k) { return PolyRing::make(k, {"x0", "x1", "x2", "x3", "x4"}); }

const char* kReferenceSextic =
    "Y^5-Y^4*X^2-2*Y^4*X-10*Y^4+Y^3*X^3+11*Y^3*X^2+9*Y^3*X+33*Y^3-Y^2*X^4-2*Y^2*X^3-36*Y^2*X^2-10*Y^2*X-37*Y^2+"
    "3*Y*X^5+22*Y*X^4+12*Y*X^3+36*Y*X^2+6*Y*X+17*Y-2*X^6+2*X^5-3*X^4+4*X^3-3*X^2+2*X-2";

// 1. Five geometric scrolls on X0(58) in orbits of sizes 1, 2, 2.
Outcome scroll_count() {
  Checks c;
  const auto& r = x0_58();
  std::vector<int> orbits;
  for (const auto& s : r.search.scrolls) orbits.push_back(s.orbit_size);
  std::sort(orbits.begin(), orbits.end());
  c.expect(!r.search.infinite_family, "finite family");
  c.expect(r.search.geometric_count() == 5, "5 geometric scrolls");
  c.expect(orbits == std::vector<int>{1, 2, 2}, "orbits {1,2,2}");
  c.expect(r.seconds <= kScrollBudgetSeconds, "time budget");
  std::string o;
  for (int x : orbits) o += (o.empty() ? "" : ",") + std::to_string(x);
  c.note(std::to_string(r.search.geometric_count()) + " scrolls, orbit sizes {" + o + "}");
  c.note("resolution and search " + fmt(r.seconds, 3) + " s (budget " + fmt(kScrollBudgetSeconds) + " s)");
  return c.outcome();
}

// 2. The pencil of the rational scroll spans <2y-v+w, 2x+2z-v+w>.
Outcome gonal_pencil() {
  Checks c;
  const auto& r = x0_58();
  const auto& s = rational_scroll(r);
  RationalMap pencil = gonal_function(s, r.curve);
  const RingPtr& R = pencil.ring();
  auto target = parse_all(R, {"2*y - v + w", "2*x + 2*z - v + w"});
  const bool first_column = same_span(pencil.forms, target);
  c.expect(first_column, "span of the first-column pencil equals the target span");
  c.note("first column (" + pencil.forms[0].to_string() + " : " + pencil.forms[1].to_string() + ")");
  // Diagnostics: the row sums of the 2x3 matrix give the same pencil.
  std::vector<MPoly> sums;
  for (int i = 0; i < 2; ++i) {
    MPoly t(s.t_sol.ring());
    for (int j = 0; j < 3; ++j) t += s.t_sol.at(i, j);
    sums.push_back(t.in_ring(R));
  }
  c.note(std::string("matrix times (1,1,1) spans the target: ") + (same_span(sums, target) ? "yes" : "no"));
  // Every fiber of the target pencil is a fiber of ours.
  const FieldPtr& k = R->field();
  bool fibers = true;
  for (long v : {0L, -1L, 3L}) {
    Ideal fiber = saturate(r.curve.with({target[0] - target[1].scale(k->from_int(v))}), target[1]);
    MPoly n0 = fiber.normal_form(pencil.forms[0]), n1 = fiber.normal_form(pencil.forms[1]);
    fibers = fibers && fiber.hilbert().degree == 4 && !n1.is_zero() && proportional(n0, n1);
  }
  c.note(std::string("same fibers as the target pencil: ") + (fibers ? "yes" : "no"));
  return c.outcome();
}

// 3. Plane sextic: reference hyperplane basis and the default model.
Outcome plane_model() {
  Checks c;
  const auto& r = x0_58();
  RationalMap pencil = gonal_function(rational_scroll(r), r.curve);
  const RingPtr& R = pencil.ring();
  const FieldPtr& k = R->field();
  auto basis = parse_all(R, {"y + u + v", "z - v + w", "x - u - v"});
  // The fiber these hyperplanes cut, and the saturation for that member.
  Ideal D = r.curve.with(basis);
  MPoly n0 = D.normal_form(pencil.forms[0]), n1 = D.normal_form(pencil.forms[1]);
  c.expect(D.hilbert().degree == 4 && !n1.is_zero(), "basis cuts a degree-4 divisor");
  if (!n1.is_zero()) {
    const Scalar value = k->div(n0.terms()[0].c, n1.terms()[0].c);
    c.expect(n0 == n1.scale(value), "divisor is a fiber of the pencil");
    auto sat = residual_hyperplanes(pencil, r.curve, value);
    c.expect(same_span(sat, basis), "saturation degree-1 part equals the basis span");
    c.note("member value " + k->to_string(value));
  }
  Genus6PlaneModel with_basis = plane_model6(pencil, r.curve, basis);
  auto A = PolyRing::make(k, {"X", "Y"});
  MPoly affine = with_basis.image.compose({MPoly::var(A, 0), MPoly::var(A, 1), MPoly::from_int(A, 1)});
  c.expect(proportional(affine, parse_poly(A, kReferenceSextic)), "image equals the reference sextic up to scalar");

  Genus6PlaneModel own = plane_model6(pencil, r.curve);
  auto sing = plane_singularities(own.image);
  int count = 0;
  bool nodes = true;
  for (const auto& s : sing) {
    count += s.point.orbit_size();
    nodes = nodes && s.is_node();
  }
  c.expect(own.image_degree == 6 && own.map_degree == 1, "default image is a birational sextic");
  c.expect(count == 4 && nodes, "4 singular points, all nodes");
  c.note("default model degree " + std::to_string(own.image_degree) + ", " + std::to_string(count) + " singular points" +
         (nodes ? " (nodes)" : ""));
  return c.outcome();
}

// 4. Relation, Y and radical roots over Q(t).
Outcome radical_stage() {
  Checks c;
  auto q = Field::rationals();
  auto A = PolyRing::make(q, {"X", "Y"});
  auto fp = present(parse_poly(A, kReferenceSextic), parse_poly(A, "3*X^2 + Y^2 - 6*Y + 3"),
                    parse_poly(A, "X*Y - Y^2 + 3*X + 4*Y"));
  const RingPtr& tx = fp.relation.ring();
  MPoly quartic = parse_poly(tx,
                             "(8*t^3+12*t^2+8*t+4)*X^4 - (4*t^5+6*t^4-12*t^3-32*t^2-22*t-12)*X^3"
                             " - (12*t^5+17*t^4-4*t^3-40*t^2-27*t-14)*X^2"
                             " - (13*t^5+9*t^4-9*t^3-48*t^2-34*t-12)*X - 4*t^5+3*t^4+13*t^3+32*t^2+25*t+10");
  c.expect(proportional(fp.relation, quartic), "relation equals the reference quartic up to a unit");
  c.expect(fp.y_num == parse_poly(tx, "(2*t^2-3*t+3)*X^2 + (t^2-6*t)*X + 2*t^2-3*t+3"), "Y numerator");
  c.expect(fp.y_den == parse_poly(tx, "(2*t^2+5*t+3)*X + 5*t^2+5*t+9"), "Y denominator");
  auto coeffs = coefficients_in_x(fp.relation);
  auto roots = solve_by_radicals(coeffs);
  auto rep = verify_numeric(roots, coeffs, kRadicalSamples, 58);
  c.expect(roots.size() == 4, "four roots");
  c.expect(rep.samples >= kRadicalSamples && rep.ok(kRadicalTolerance), "numeric residuals");
  c.note("max residual " + fmt(rep.max_residual) + ", Vieta " + fmt(std::max(rep.vieta_sum_defect, rep.vieta_product_defect)) +
         " at " + std::to_string(rep.samples) + " points (tol " + fmt(kRadicalTolerance) + ")");
  return c.outcome();
}

// 5. The sextic with an A3 point: surface, cone test, three scrolls.
Outcome a3_example() {
  Checks c;
  auto R = PolyRing::make(Field::rationals(), {"x", "y", "z", "s", "t", "u"});
  Ideal I(R, fixtures::sextic_a3_canonical(R));
  auto run = run_genus6(I, 0);
  Ideal reference_y(R, parse_all(R, {"z^2 - x*t", "y*s - x*t", "z*s - x*u", "z*t - y*u", "s*t - z*u"}));
  c.expect(run.summand.surface.equals(reference_y), "surface ideal equals the five quadrics");
  auto cone = elliptic_cone_test(run.summand.surface);
  c.expect(!cone.is_cone, "not a cone");
  std::vector<std::vector<std::string>> pts;
  for (const auto& sp : cone.singular_points) {
    std::vector<std::string> v;
    for (const auto& x : sp.coords) v.push_back(sp.field->to_string(x));
    pts.push_back(v);
  }
  std::sort(pts.begin(), pts.end());
  c.expect(pts == std::vector<std::vector<std::string>>{{"0", "1", "0", "0", "0", "0"}, {"1", "0", "0", "0", "0", "0"}},
           "singular locus {(1:0:0:0:0:0), (0:1:0:0:0:0)}");
  std::vector<Ideal> reference{Ideal(R, parse_all(R, {"y*s - x*t", "z*s - x*u", "z*t - y*u"})),
                             Ideal(R, parse_all(R, {"z^2 - y*s", "z*t - y*u", "s*t - z*u"})),
                             Ideal(R, parse_all(R, {"z^2 - x*t", "z*s - x*u", "s*t - z*u"}))};
  std::vector<int> hits(3, 0);
  for (const auto& s : run.search.scrolls) {
    for (int i = 0; i < 3; ++i) hits[i] += s.ideal().equals(reference[i]);
  }
  c.expect(run.search.scrolls.size() == 3 && hits == std::vector<int>{1, 1, 1}, "exactly the three scroll ideals");
  c.note(std::to_string(run.search.scrolls.size()) + " scrolls, " + std::to_string(cone.singular_points.size()) +
         " singular points");
  return c.outcome();
}

// 6. Scroll invariants on random del Pezzo curves over F_p.
Outcome scroll_properties() {
  Checks c;
  auto R = PolyRing::make(Field::prime(kPrime), {"x", "y", "z", "u", "v", "w"});
  Rng rng(606);
  int scrolls = 0, max_count = 0, bad = 0;
  for (int trial = 0; trial < kDelPezzoTrials; ++trial) {
    auto run = run_genus6(Ideal(R, fixtures::del_pezzo_curve(R, rng)), 5);
    auto cone = elliptic_cone_test(run.summand.surface);
    bool ok = !run.search.infinite_family && !run.search.scrolls.empty();
    if (!cone.is_cone) ok = ok && run.search.geometric_count() <= 5;
    for (const auto& s : run.search.scrolls) ok = ok && scroll_invariants(s);
    scrolls += static_cast<int>(run.search.scrolls.size());
    max_count = std::max(max_count, run.search.geometric_count());
    if (!ok) ++bad;
  }
  c.expect(bad == 0, std::to_string(bad) + " curves violate an invariant");
  c.note(std::to_string(kDelPezzoTrials) + " curves over GF(" + std::to_string(kPrime) + "), " + std::to_string(scrolls) +
         " scroll orbits checked, max count " + std::to_string(max_count));
  return c.outcome();
}

// 7. Genus-5 properties over F_101 and F_32003.
Outcome genus5_properties() {
  Checks c;
  Rng rng(505);
  int bad_quintic = 0, bad_rank = 0, bad_fiber = 0, bad_plane = 0, maps = 0;
  for (int trial = 0; trial < kNetTrials; ++trial) {
    const std::uint64_t p = trial % 2 ? 101 : kPrime;
    auto R = p4(Field::prime(p));
    const FieldPtr& k = R->field();
    Ideal I(R, fixtures::smooth_net(R, rng));
    QuadricNet net = quadric_net(I);
    MPoly F = determinant_quintic(net);
    bad_quintic += F.total_degree() != 5;
    SingularQuadric sq = find_singular_quadric(F, net, 100 + trial);
    bad_rank += sq.rank != 3 && sq.rank != 4;
    Genus5GonalMap gm = gonal_map_genus5(sq, I, 200 + trial);
    Ideal IK = extend_scalars(I, gm.maps.at(0).ring());
    const FieldPtr& K = gm.field;
    for (const auto& m : gm.maps) {
      ++maps;
      for (int i = 0; i < kFiberPoints; ++i) {
        const Scalar v = K->embed(k, k->random(rng));
        bad_fiber += fiber_degree(IK, m, {v, K->one()}) != 4;
      }
    }
    Genus5PlaneModel pm = plane_model6_genus5(I, std::nullopt, nullptr, 300 + trial);
    bad_plane += pm.image_degree * pm.map_degree != 6;
  }
  c.expect(bad_quintic == 0, "quintic degree");
  c.expect(bad_rank == 0, "singular quadric rank");
  c.expect(bad_fiber == 0, std::to_string(bad_fiber) + " fibers of degree other than 4");
  c.expect(bad_plane == 0, "image degree times map degree");
  c.note(std::to_string(kNetTrials) + " nets over GF(101) and GF(" + std::to_string(kPrime) + "), " + std::to_string(maps) +
         " maps, " + std::to_string(kFiberPoints) + " fibers each");
  return c.outcome();
}

// 8. Kernel oracles.
Outcome kernel_oracles() {
  Checks c;
  // Groebner bases of every ideal met above plus random ones.
  std::vector<Ideal> ideals;
  const auto& r = x0_58();
  ideals.push_back(r.curve);
  ideals.push_back(r.summand.surface);
  for (const auto& s : r.search.scrolls) ideals.push_back(s.ideal());
  Rng rng(808);
  auto R5 = p4(Field::prime(kPrime));
  for (int i = 0; i < 10; ++i) ideals.push_back(Ideal(R5, fixtures::smooth_net(R5, rng)));
  auto Q3 = PolyRing::make(Field::rationals(), {"a", "b", "c"});
  for (int i = 0; i < 10; ++i) {
    ideals.push_back(Ideal(Q3, {random_poly(Q3, 2, rng), random_poly(Q3, 2, rng), random_poly(Q3, 3, rng)}));
  }
  int bad_gb = 0;
  for (const auto& I : ideals) {
    if (I.is_zero()) continue;
    bad_gb += !is_groebner_basis_of(I.groebner(), I.gens());
  }
  c.expect(bad_gb == 0, std::to_string(bad_gb) + " bases fail the S-pair check");

  // Determinants and resultants against expansion along a row.
  int bad_det = 0, bad_res = 0;
  for (int i = 0; i < kOracleInstances; ++i) {
    const FieldPtr k = i % 2 ? Field::rationals() : Field::prime(101);
    auto S = PolyRing::make(k, {"a", "b", "c"});
    const int n = 2 + static_cast<int>(rng() % 3);
    std::vector<std::vector<MPoly>> m(n, std::vector<MPoly>(n, MPoly(S)));
    for (auto& row : m) {
      for (auto& e : row) e = random_poly(S, 1, rng);
    }
    bad_det += det(PolyMatrix::from_rows(S, m)) != laplace_det(m);
    MPoly f = random_poly(S, 3, rng), g = random_poly(S, 2, rng);
    if (f.degree_in(0) < 1 || g.degree_in(0) < 1) {
      f += MPoly::var(S, 0).pow(2);
      g += MPoly::var(S, 0);
    }
    bad_res += resultant(f, g, 0) != laplace_det(sylvester(f, g, 0));
  }
  c.expect(bad_det == 0, std::to_string(bad_det) + " determinant mismatches");
  c.expect(bad_res == 0, std::to_string(bad_res) + " resultant mismatches");

  // Resolutions: consecutive maps compose to zero, generic Betti tables.
  auto composes = [](const Resolution& res) {
    for (std::size_t i = 0; i + 1 < res.maps.size(); ++i) {
      if (!(res.maps[i + 1].matrix * res.maps[i].matrix).is_zero()) return false;
    }
    return true;
  };
  const Resolution g6 = r.res;
  const Resolution g5 = minimal_resolution(Ideal(R5, fixtures::smooth_net(R5, rng)));
  auto R6 = PolyRing::make(Field::prime(kPrime), {"x", "y", "z", "u", "v", "w"});
  const Resolution g6p = minimal_resolution(Ideal(R6, fixtures::del_pezzo_curve(R6, rng)));
  c.expect(composes(g6) && composes(g5) && composes(g6p), "maps compose to zero");
  c.expect(g5.betti.compact() == "1; 3; 3; 1", "genus-5 table");
  c.expect(g6.betti.compact() == "1; 6; 5, 5; 6; 1" && g6p.betti.compact() == "1; 6; 5, 5; 6; 1", "genus-6 table");
  c.note(std::to_string(ideals.size()) + " bases, " + std::to_string(kOracleInstances) +
         " determinant and resultant instances, tables " + g5.betti.compact() + " and " + g6.betti.compact());
  return c.outcome();
}

// 9. Plane quintic classification and the Veronese stabilizer.
Outcome classification() {
  Checks c;
  auto P = p5(Field::rationals());
  Rng rng(909);
  auto cl = classify(Ideal(P, fixtures::plane_quintic_canonical(P, rng)), 6);
  c.expect(cl.stratum == Stratum::PlaneQuintic, "plane quintic stratum");
  c.expect(cl.lie && cl.lie->dimension == 8 && !cl.lie->is_soluble, "stabilizer of dimension 8, not soluble");
  auto M = PolyMatrix::from_rows(P, {parse_all(P, {"x0", "x1", "x2"}), parse_all(P, {"x1", "x3", "x4"}),
                                     parse_all(P, {"x2", "x4", "x5"})});
  auto lie = lie_algebra(Ideal(P, minors(M, 2)));
  c.expect(lie.dimension == 8, "Veronese stabilizer dimension 8");
  c.note("stratum " + to_string(cl.stratum) + ", Veronese dimension " + std::to_string(lie.dimension));
  return c.outcome();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> expect_fail, only;
  app.add_option("--expect-fail", expect_fail, "Criteria known to fail")->delimiter(',');
  app.add_option("--only", only, "Run only these criteria")->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"X0(58) scroll count", scroll_count},
      {"X0(58) gonal pencil", gonal_pencil},
      {"X0(58) plane model", plane_model},
      {"X0(58) radical stage", radical_stage},
      {"A3 sextic surface and scrolls", a3_example},
      {"scroll invariants on random curves", scroll_properties},
      {"genus-5 properties", genus5_properties},
      {"kernel oracles", kernel_oracles},
      {"classification", classification},
  };
  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) failed.insert(id);
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << " (" << criteria[i].first << "): " << o.detail
              << " [" << fmt(seconds_since(t0), 3) << " s]" << std::endl;
  }
  std::set<int> expected;
  for (int id : expect_fail) {
    if (only.empty() || std::find(only.begin(), only.end(), id) != only.end()) expected.insert(id);
  }
  if (failed != expected) {
    std::cout << "unexpected outcome: failing set differs from --expect-fail" << std::endl;
    return 1;
  }
  std::cout << failed.size() << " expected failure(s), all other criteria pass" << std::endl;
  return 0;
}

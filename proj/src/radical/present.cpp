#include "gonal/arith/linalg.hpp"
#include "gonal/groebner/ideal.hpp"
#include "gonal/mpoly/matrix.hpp"
#include "gonal/radical/radical.hpp"

#include <numeric>

namespace gonal {

namespace {

// Ring (Y, t, X): Y first so that the resultant and the normal forms below
// eliminate it.
constexpr int kY = 0, kT = 1, kX = 2;

MPoly from_t_and_x(const RingPtr& r, int t_var, int x_var, const std::vector<std::vector<Scalar>>& c) {
  std::vector<Term> ts;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = 0; j < c[i].size(); ++j) {
      if (r->field()->is_zero(c[i][j])) continue;
      ts.push_back({Monomial::var(t_var, static_cast<int>(i)) * Monomial::var(x_var, static_cast<int>(j)), c[i][j]});
    }
  }
  return MPoly(r, std::move(ts));
}

// Scale to integer coefficients with content 1 and a positive leading
// coefficient in the ring's order.
MPoly primitive_integral(const MPoly& f) {
  if (f.is_zero()) return f;
  mpz_class den = 1, num = 0;
  for (const auto& t : f.terms()) {
    den = lcm(den, mpz_class(t.c.rational().get_den()));
    num = gcd(num, mpz_class(t.c.rational().get_num()));
  }
  mpq_class s(den, num);
  s.canonicalize();
  if (f.lc().rational() < 0) s = -s;
  return f.scale(f.field()->from_rational(s));
}

MPoly primitive_pair_scale(const MPoly& a, const MPoly& b, MPoly& b_out) {
  mpz_class den = 1, num = 0;
  for (const auto* f : {&a, &b}) {
    for (const auto& t : f->terms()) {
      den = lcm(den, mpz_class(t.c.rational().get_den()));
      num = gcd(num, mpz_class(t.c.rational().get_num()));
    }
  }
  mpq_class s(den, num);
  s.canonicalize();
  if (b.lc().rational() < 0) s = -s;
  const Scalar c = a.field()->from_rational(s);
  b_out = b.scale(c);
  return a.scale(c);
}

}  // namespace

int FieldPresentation::degree() const { return relation.degree_in(1); }

FieldPresentation present(const MPoly& f, const MPoly& t_num, const MPoly& t_den) {
  const RingPtr& src = f.ring();
  if (src->nvars() < 2) throw Error("present: expected a plane curve in X, Y");
  const FieldPtr& k = src->field();
  if (k->is_finite() || k->is_extension()) throw Error("present: base field must be Q");
  if (t_den.is_zero()) throw Error("present: zero denominator");
  RingPtr r = PolyRing::make(k, {"Y", "t", "X"});
  std::vector<MPoly> images(src->nvars(), MPoly(r));
  images[0] = MPoly::var(r, kX);
  images[1] = MPoly::var(r, kY);
  const MPoly F = f.compose(images), N = t_num.compose(images), D = t_den.compose(images);
  const MPoly H = N - MPoly::var(r, kT) * D;

  MPoly g = resultant(F, H, kY);
  if (g.is_zero()) throw Error("present: curve and level sets share a component");
  // Factors in X alone come from base points of t; factors in t alone from
  // fibers contained in the curve's singular or infinite part.
  UPoly cx(k, "X");
  for (int i = 0; i <= g.degree_in(kT); ++i) {
    MPoly c = g.coeff_of(kT, i);
    if (!c.is_zero()) cx = gcd(cx, c.to_upoly(kX));
  }
  if (cx.degree() > 0) g = divide_exact(g, MPoly::from_upoly(r, kX, cx));
  UPoly ct(k, "t");
  for (int j = 0; j <= g.degree_in(kX); ++j) {
    MPoly c = g.coeff_of(kX, j);
    if (!c.is_zero()) ct = gcd(ct, c.to_upoly(kT));
  }
  if (ct.degree() > 0) g = divide_exact(g, MPoly::from_upoly(r, kT, ct));
  const int d = g.degree_in(kX);
  if (d > 4) throw Error("t is not a gonal parameter");
  if (d < 1) throw Error("present: X is constant on the fibers of t");

  RingPtr tx = PolyRing::make(k, {"t", "X"});
  // Leading coefficient in X positive (its top t-coefficient), integral and primitive.
  {
    MPoly lead = g.coeff_of(kX, d);
    UPoly lu = lead.to_upoly(kT);
    if (lu.lc().rational() < 0) g = -g;
    g = primitive_integral(g);
    if (g.coeff_of(kX, d).to_upoly(kT).lc().rational() < 0) g = -g;
  }

  // Y = a / b with deg_X a <= d - 2 and deg_X b <= 1 (both 0 when d = 1):
  // a line over Q(t); take its primitive polynomial generator.
  Ideal graph = saturate(Ideal(r, {F, H}), D);
  const int da = d >= 2 ? d - 2 : 0, db = d >= 2 ? 1 : 0;
  const MPoly y = MPoly::var(r, kY);
  for (int e = 0; e <= 40; ++e) {
    std::vector<MPoly> columns;
    for (int i = 0; i <= e; ++i) {
      for (int j = 0; j <= da; ++j) columns.push_back(graph.normal_form(-MPoly::monomial(r, Monomial::var(kT, i) * Monomial::var(kX, j), k->one())));
    }
    for (int i = 0; i <= e; ++i) {
      for (int j = 0; j <= db; ++j) {
        columns.push_back(graph.normal_form(y * MPoly::monomial(r, Monomial::var(kT, i) * Monomial::var(kX, j), k->one())));
      }
    }
    std::vector<Monomial> rows;
    for (const auto& c : columns) {
      for (const auto& t : c.terms()) {
        if (std::find(rows.begin(), rows.end(), t.m) == rows.end()) rows.push_back(t.m);
      }
    }
    Mat m(k, static_cast<int>(rows.size()), static_cast<int>(columns.size()));
    for (std::size_t c = 0; c < columns.size(); ++c) {
      for (const auto& t : columns[c].terms()) {
        m.at(static_cast<int>(std::find(rows.begin(), rows.end(), t.m) - rows.begin()), static_cast<int>(c)) = t.c;
      }
    }
    Mat ker = m.kernel();
    if (ker.rows() == 0) continue;
    if (ker.rows() > 1) throw Error("present: Y is not determined by t and X");
    const auto v = ker.row(0);
    std::vector<std::vector<Scalar>> ac(e + 1, std::vector<Scalar>(da + 1)), bc(e + 1, std::vector<Scalar>(db + 1));
    int pos = 0;
    for (int i = 0; i <= e; ++i) {
      for (int j = 0; j <= da; ++j) ac[i][j] = v[pos++];
    }
    for (int i = 0; i <= e; ++i) {
      for (int j = 0; j <= db; ++j) bc[i][j] = v[pos++];
    }
    MPoly a = from_t_and_x(tx, 0, 1, ac), b = from_t_and_x(tx, 0, 1, bc);
    if (b.is_zero()) throw Error("present: Y is not determined by t and X");
    MPoly b_norm(tx);
    MPoly a_norm = primitive_pair_scale(a, b, b_norm);
    return FieldPresentation{f, t_num, t_den, g.in_ring(tx), a_norm, b_norm};
  }
  throw Error("present: no expression for Y of bounded degree in t");
}

std::vector<RatFun> coefficients_in_x(const MPoly& relation) {
  const RingPtr& r = relation.ring();
  const int x = r->index_of("X"), t = r->index_of("t");
  std::vector<RatFun> out;
  for (int j = 0; j <= relation.degree_in(x); ++j) out.emplace_back(to_t_poly(relation.coeff_of(x, j), t));
  return out;
}

}  // namespace gonal

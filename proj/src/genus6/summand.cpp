#include "gonal/genus6/genus6.hpp"

#include <algorithm>

namespace gonal {

namespace {

int linear_var(const Monomial& m) {
  for (int i = 0; i < static_cast<int>(m.e.size()); ++i) {
    if (m.e[i]) return i;
  }
  throw Error("constant term in a matrix of linear forms");
}

}  // namespace

SummandData rank5_summand(const PolyMatrix& m_phi, const std::vector<MPoly>& quadrics) {
  const RingPtr& r = m_phi.ring();
  const FieldPtr& k = r->field();
  const int n = r->nvars();
  if (m_phi.rows() != 5 || m_phi.cols() != 6 || quadrics.size() != 6) {
    throw Error("rank5_summand: expected a 5 x 6 matrix and six quadrics");
  }
  if (!m_phi.is_linear()) throw Error("rank5_summand: entries must be linear forms");

  // One row per (syzygy, variable); columns are the six quadrics.
  Mat coeffs(k, 5 * n, 6);
  for (int a = 0; a < 5; ++a) {
    for (int b = 0; b < 6; ++b) {
      for (const auto& t : m_phi.at(a, b).terms()) coeffs.at(a * n + linear_var(t.m), b) = t.c;
    }
  }
  Mat ker = coeffs.kernel();
  if (ker.rows() != 1) throw Error("image of phi not in a rank-5 summand");
  std::vector<Scalar> v = ker.row(0);

  Mat vrow(k, 0, 6);
  vrow.append_row(v);
  Mat basis = vrow.kernel();
  std::vector<int> piv = basis.rref();
  int comp = -1;
  for (int j = 0; j < 6 && comp < 0; ++j) {
    if (std::find(piv.begin(), piv.end(), j) == piv.end()) comp = j;
  }

  std::vector<MPoly> gens;
  for (int i = 0; i < 5; ++i) {
    MPoly q(r);
    for (int j = 0; j < 6; ++j) {
      if (!k->is_zero(basis.at(i, j))) q += quadrics[j].in_ring(r).scale(basis.at(i, j));
    }
    gens.push_back(q);
  }
  return SummandData{v, basis, Ideal(r, gens), comp, m_phi.drop_col(comp)};
}

ConeTest elliptic_cone_test(const Ideal& surface, std::uint64_t seed) {
  ConeTest out;
  const RingPtr& r = surface.ring();
  const int n = r->nvars();
  Ideal sing = surface.with(minors(jacobian(surface.gens()), 3));
  if (sing.is_unit() || sing.dimension() <= 0) return out;
  if (sing.dimension() > 1) {
    out.singular_locus_finite = false;
    return out;
  }
  out.singular_points = projective_points(sing, seed);
  int count = 0;
  for (const auto& p : out.singular_points) count += p.orbit_size();
  if (count != 1) return out;

  // Move the singular point P to (0:...:0:1): x_j = y_j + P_j y_n for
  // j != lead, x_lead = y_n.
  const auto& P = out.singular_points[0].coords;
  int lead = 0;
  while (r->field()->is_zero(P[lead])) ++lead;
  std::vector<std::string> ynames;
  for (int i = 1; i <= n; ++i) ynames.push_back("y" + std::to_string(i));
  RingPtr yr = PolyRing::make(r->field(), ynames);
  std::vector<MPoly> images(n, MPoly(yr));
  std::vector<MPoly> proj;
  const MPoly apex_var = MPoly::var(yr, n - 1);
  for (int j = 0, slot = 0; j < n; ++j) {
    if (j == lead) {
      images[j] = apex_var;
      continue;
    }
    images[j] = MPoly::var(yr, slot++) + apex_var.scale(P[j]);
    proj.push_back(MPoly::var(r, j) - MPoly::var(r, lead).scale(P[j]));
  }
  std::vector<MPoly> moved;
  for (const auto& g : surface.gens()) {
    MPoly h = g.compose(images);
    if (h.involves(n - 1)) return out;
    moved.push_back(h);
  }
  ynames.pop_back();
  RingPtr er = PolyRing::make(r->field(), ynames);
  std::vector<MPoly> e;
  for (const auto& h : moved) e.push_back(h.in_ring(er));
  out.is_cone = true;
  out.apex = P;
  out.base_curve = Ideal(er, e);
  out.projection = RationalMap{proj};
  return out;
}

}  // namespace gonal

#include "gonal/genus6/genus6.hpp"

namespace gonal {

namespace {

// Coordinates of a over the base field k of its field (k itself or a
// simple extension of k).
std::vector<Scalar> base_coords(const FieldPtr& L, const FieldPtr& k, const Scalar& a) {
  if (L->same_as(*k)) return {a};
  if (!L->base()->same_as(*k)) throw Error("point field must be a simple extension of the base");
  std::vector<Scalar> c = a.coeffs();
  c.resize(L->degree(), k->zero());
  return c;
}

}  // namespace

RationalMap gonal_function(const ScrollPresentation& s, const Ideal& curve, std::uint64_t seed) {
  RationalMap pencil{{s.t_sol.at(0, 0), s.t_sol.at(1, 0)}};
  const FieldPtr& L = s.field;
  const FieldPtr kp = L->prime_field();
  Rng rng(seed);
  for (int i = 0; i < 3; ++i) {
    const Scalar c = kp->is_finite() ? kp->random(rng) : kp->from_int(static_cast<long>(rng() % 41) - 20);
    if (fiber_degree(curve, pencil, {L->embed(kp, c), L->one()}) != 4) {
      throw Error("presentation degenerate on curve");
    }
  }
  return pencil;
}

std::vector<MPoly> residual_hyperplanes(const RationalMap& pencil, const Ideal& curve) {
  return residual_hyperplanes(pencil, curve, pencil.ring()->field()->zero());
}

std::vector<MPoly> residual_hyperplanes(const RationalMap& pencil, const Ideal& curve, const Scalar& value) {
  const RingPtr& r = pencil.ring();
  const MPoly member = pencil.forms[0] - pencil.forms[1].scale(value);
  Ideal J = saturate(extend_scalars(curve, r).with({member}), pencil.forms[1]);
  return J.degree_part(1);
}

Genus6PlaneModel plane_model6(const RationalMap& pencil, const Ideal& curve, std::optional<std::vector<MPoly>> basis,
                              std::uint64_t seed) {
  std::vector<MPoly> forms = basis ? *basis : residual_hyperplanes(pencil, curve);
  if (forms.size() != 3) {
    throw Error("residual hyperplanes: expected a 3-dimensional space, got " + std::to_string(forms.size()));
  }
  RationalMap map{forms};
  RingPtr target = PolyRing::make(map.ring()->field(), {"X", "Y", "Z"});
  PlaneImage img = plane_image(curve, map, target, 6, seed);
  return Genus6PlaneModel{map, img.equation, img.degree, img.map_degree};
}

std::vector<MPoly> conics_through(const std::vector<SolutionPoint>& points, const RingPtr& plane) {
  const FieldPtr& k = plane->field();
  const auto mons = monomials_of_degree(3, 2);
  Mat cond(k, 0, static_cast<int>(mons.size()));
  for (const auto& p : points) {
    const FieldPtr& L = p.field;
    std::vector<std::vector<Scalar>> rows;
    for (const auto& m : mons) {
      Scalar v = L->one();
      for (int i = 0; i < 3; ++i) v = L->mul(v, L->pow(p.coords[i], m.e[i]));
      rows.push_back(base_coords(L, k, v));
    }
    for (std::size_t c = 0; c < rows[0].size(); ++c) {
      std::vector<Scalar> row;
      for (const auto& r : rows) row.push_back(r[c]);
      cond.append_row(row);
    }
  }
  Mat ker = cond.kernel();
  ker.rref();
  std::vector<MPoly> out;
  for (int i = 0; i < ker.rows(); ++i) out.push_back(from_coeff_vector(plane, mons, ker.row(i)));
  return out;
}

}  // namespace gonal

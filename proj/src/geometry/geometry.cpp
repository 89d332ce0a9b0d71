#include "gonal/geometry/geometry.hpp"

#include "gonal/arith/linalg.hpp"
#include "gonal/mpoly/matrix.hpp"

#include <map>
#include <sstream>

namespace gonal {

std::string RationalMap::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < forms.size(); ++i) os << (i ? " : " : "") << forms[i].to_string();
  os << ")";
  return os.str();
}

Ideal extend_scalars(const Ideal& I, const RingPtr& r) {
  std::vector<MPoly> g;
  for (const auto& f : I.gens()) g.push_back(f.in_ring(r));
  return Ideal(r, std::move(g));
}

long fiber_degree(const Ideal& I, const RationalMap& m, const std::vector<Scalar>& target_point) {
  const RingPtr& r = m.ring();
  const FieldPtr& k = r->field();
  const int n = static_cast<int>(m.forms.size());
  if (static_cast<int>(target_point.size()) != n) throw Error("fiber_degree: target point has the wrong length");
  int chart = 0;
  while (chart < n && k->is_zero(target_point[chart])) ++chart;
  if (chart == n) throw Error("fiber_degree: target point is zero");
  // Graph of the map on the affine chart of the target where coordinate
  // `chart` is 1. Saturating by that form gives the closure of the graph,
  // so fiber points in the base locus of the forms are kept.
  std::vector<std::string> vars = r->vars();
  std::vector<int> slot(n, -1);
  for (int i = 0; i < n; ++i) {
    if (i == chart) continue;
    std::string y = "y_fib" + std::to_string(i);
    while (r->has_var(y)) y += "_";
    slot[i] = static_cast<int>(vars.size());
    vars.push_back(y);
  }
  RingPtr big = PolyRing::make(k, vars);
  std::vector<MPoly> g;
  for (const auto& f : I.gens()) g.push_back(f.in_ring(big));
  const MPoly fc = m.forms[chart].in_ring(big);
  for (int i = 0; i < n; ++i) {
    if (i != chart) g.push_back(m.forms[i].in_ring(big) - MPoly::var(big, slot[i]) * fc);
  }
  Ideal graph = saturate(Ideal(big, std::move(g)), fc);
  std::vector<MPoly> images;
  for (int v = 0; v < r->nvars(); ++v) images.push_back(MPoly::var(r, v));
  for (int i = 0; i < n; ++i) {
    if (i != chart) images.push_back(MPoly::constant(r, k->div(target_point[i], target_point[chart])));
  }
  std::vector<MPoly> fib;
  for (const auto& f : graph.gens()) fib.push_back(f.compose(images));
  Ideal fiber(r, std::move(fib));
  if (fiber.is_unit()) return 0;
  HilbertData h = fiber.hilbert();
  if (h.dim != 1) throw Error("fiber is not finite");
  return h.degree;
}

ZeroDimSolution hyperplane_section(const Ideal& I, std::uint64_t seed) {
  const RingPtr& r = I.ring();
  const FieldPtr& k = r->field();
  Rng rng(seed);
  for (int attempt = 0; attempt < 20; ++attempt) {
    std::vector<Scalar> a(r->nvars()), b(r->nvars());
    for (auto& c : a) c = k->is_finite() ? k->random(rng) : k->from_int(static_cast<long>(rng() % 7) - 3);
    for (auto& c : b) c = k->is_finite() ? k->random(rng) : k->from_int(static_cast<long>(rng() % 7) - 3);
    MPoly h = MPoly::linear(r, a), l = MPoly::linear(r, b);
    if (h.is_zero() || l.is_zero()) continue;
    Ideal slice = I.with({h, l - MPoly::from_int(r, 1)});
    if (slice.dimension() != 0) continue;
    return solve_zero_dim(slice, seed + static_cast<std::uint64_t>(attempt));
  }
  throw Error("no transversal hyperplane section found");
}

std::vector<Scalar> conjugate_point(const SolutionPoint& p, const Scalar& root) {
  const FieldPtr& L = p.field;
  if (p.eliminant_factor.degree() <= 1) return p.coords;
  std::vector<Scalar> out;
  for (const auto& c : p.coords) {
    Scalar v = L->zero();
    Scalar pw = L->one();
    for (const auto& ci : c.coeffs()) {
      L->add_to(v, L->mul(L->embed(L->base(), ci), pw));
      pw = L->mul(pw, root);
    }
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

// Embeds in place when a lies in base, walking down the tower.
bool lies_in(const FieldPtr& from, const Scalar& a, const FieldPtr& base, Scalar& out) {
  if (from->same_as(*base)) {
    out = a;
    return true;
  }
  if (!from->is_extension()) return false;
  const auto& c = a.coeffs();
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (!from->base()->is_zero(c[i])) return false;
  }
  return lies_in(from->base(), c.empty() ? from->base()->zero() : c[0], base, out);
}

Mat hessian_at(const MPoly& F, const FieldPtr& L, const std::vector<Scalar>& p) {
  const int n = F.ring()->nvars();
  Mat h(L, n, n);
  for (int i = 0; i < n; ++i) {
    MPoly fi = F.derivative(i);
    for (int j = 0; j < n; ++j) h.at(i, j) = fi.derivative(j).eval(L, p);
  }
  return h;
}

}  // namespace

std::vector<std::vector<Scalar>> descend_rows(const FieldPtr& from, const std::vector<std::vector<Scalar>>& rows,
                                              const FieldPtr& base, bool* descended) {
  if (rows.empty()) {
    if (descended) *descended = true;
    return rows;
  }
  Mat m(from, 0, static_cast<int>(rows[0].size()));
  for (const auto& r : rows) m.append_row(r);
  m.rref();
  std::vector<std::vector<Scalar>> ech;
  for (int i = 0; i < m.rank(); ++i) ech.push_back(m.row(i));
  std::vector<std::vector<Scalar>> down;
  for (const auto& r : ech) {
    std::vector<Scalar> d;
    for (const auto& x : r) {
      Scalar y;
      if (!lies_in(from, x, base, y)) {
        if (descended) *descended = false;
        return ech;
      }
      d.push_back(std::move(y));
    }
    down.push_back(std::move(d));
  }
  if (descended) *descended = true;
  return down;
}

std::vector<PlaneSingularity> plane_singularities(const MPoly& F, std::uint64_t seed) {
  const RingPtr& r = F.ring();
  if (r->nvars() != 3 || !F.is_homogeneous()) throw Error("plane_singularities: expected a ternary form");
  std::vector<MPoly> grad{F, F.derivative(0), F.derivative(1), F.derivative(2)};
  const MPoly x = MPoly::var(r, 0), y = MPoly::var(r, 1), z = MPoly::var(r, 2), one = MPoly::from_int(r, 1);
  const std::vector<std::vector<MPoly>> charts{{z - one}, {z, y - one}, {z, y, x - one}};
  std::vector<PlaneSingularity> out;
  for (const auto& chart : charts) {
    Ideal I(r, grad);
    I = I.with(chart);
    if (dimension_by_reduction(I) < 0) continue;
    ZeroDimSolution sol = solve_zero_dim(I, seed);
    for (auto& p : sol.points) {
      const int rank = hessian_at(F, p.field, p.coords).rank();
      out.push_back({std::move(p), rank});
    }
  }
  return out;
}

std::vector<SolutionPoint> projective_points(const Ideal& I, std::uint64_t seed) {
  const RingPtr& r = I.ring();
  const int n = r->nvars();
  std::vector<SolutionPoint> out;
  for (int lead = 0; lead < n; ++lead) {
    std::vector<MPoly> chart;
    for (int j = 0; j < lead; ++j) chart.push_back(MPoly::var(r, j));
    chart.push_back(MPoly::var(r, lead) - MPoly::from_int(r, 1));
    Ideal J = I.with(chart);
    const int dim = dimension_by_reduction(J);
    if (dim < 0) continue;
    if (dim > 0) throw Error("projective_points: infinitely many points");
    for (auto& p : solve_zero_dim(J, seed).points) out.push_back(std::move(p));
  }
  return out;
}

PlaneImage plane_image(const Ideal& I, const RationalMap& m, const RingPtr& target, int max_degree, std::uint64_t seed) {
  auto eqs = image_equations(I, m, target, max_degree);
  if (eqs.size() != 1) throw Error("image is not a plane curve of degree <= " + std::to_string(max_degree));
  PlaneImage out{eqs[0]};
  out.degree = out.equation.total_degree();
  const RingPtr& r = m.ring();
  const FieldPtr& k = r->field();
  const FieldPtr kp = k->prime_field();
  Rng rng(seed);
  MPoly pulled(r);
  for (const auto& f : m.forms) {
    const Scalar c = kp->is_finite() ? kp->random(rng) : kp->from_int(static_cast<long>(rng() % 7) - 3);
    pulled += f.scale(k->embed(kp, c));
  }
  Ideal section = saturate(extend_scalars(I, r).with({pulled}), m.forms);
  const long total = section.hilbert().degree;
  if (total % out.degree != 0) throw Error("plane image: inconsistent degree count");
  out.map_degree = static_cast<int>(total / out.degree);
  return out;
}

bool is_smooth(const Ideal& I, int codim) {
  std::vector<MPoly> extra = minors(jacobian(I.gens()), codim);
  Ideal sing = I.with(extra);
  return sing.is_unit() || sing.dimension() <= 0;
}

std::vector<MPoly> image_equations(const Ideal& I, const RationalMap& m, const RingPtr& target, int max_degree) {
  const RingPtr& r = m.ring();
  if (target->nvars() != static_cast<int>(m.forms.size())) throw Error("image_equations: target variable count");
  Ideal J = extend_scalars(I, r);
  const auto& gb = J.groebner();
  const FieldPtr& k = r->field();
  RingPtr tgt = target->with_field(k);
  for (int d = 1; d <= max_degree; ++d) {
    const auto mons = monomials_of_degree(target->nvars(), d);
    std::vector<MPoly> nfs;
    std::map<Monomial, int> index;
    for (const auto& mon : mons) {
      MPoly g = MPoly::from_int(r, 1);
      for (int v = 0; v < target->nvars(); ++v) {
        if (mon.e[v]) g = g * m.forms[v].pow(mon.e[v]);
      }
      nfs.push_back(normal_form(g, gb));
      for (const auto& t : nfs.back().terms()) index.emplace(t.m, 0);
    }
    int row = 0;
    for (auto& [mon, i] : index) i = row++;
    Mat A(k, row, static_cast<int>(mons.size()));
    for (int j = 0; j < A.cols(); ++j) {
      for (const auto& t : nfs[j].terms()) A.at(index[t.m], j) = t.c;
    }
    Mat K = A.kernel();
    if (K.rows() == 0) continue;
    std::vector<MPoly> out;
    for (int i = 0; i < K.rows(); ++i) out.push_back(from_coeff_vector(tgt, mons, K.row(i)));
    return out;
  }
  return {};
}

}  // namespace gonal

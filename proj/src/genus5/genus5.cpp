#include "gonal/genus5/genus5.hpp"

#include "gonal/arith/factor.hpp"
#include "gonal/mpoly/matrix.hpp"

namespace gonal {

Mat gram_matrix(const MPoly& q) {
  const RingPtr& r = q.ring();
  const FieldPtr& k = r->field();
  const int n = r->nvars();
  Mat g(k, n, n);
  const Scalar half = k->inv(k->from_int(2));
  for (const auto& t : q.terms()) {
    if (t.m.deg != 2) throw Error("gram_matrix: not a quadratic form");
    int i = -1, j = -1;
    for (int v = 0; v < n; ++v) {
      for (int e = 0; e < t.m.e[v]; ++e) (i < 0 ? i : j) = v;
    }
    if (i == j) {
      g.at(i, i) = t.c;
    } else {
      g.at(i, j) = k->mul(t.c, half);
      g.at(j, i) = g.at(i, j);
    }
  }
  return g;
}

MPoly quadric_from_gram(const RingPtr& r, const Mat& g) {
  const FieldPtr& k = r->field();
  std::vector<Term> t;
  const Scalar two = k->from_int(2);
  for (int i = 0; i < g.rows(); ++i) {
    for (int j = i; j < g.cols(); ++j) {
      Scalar c = i == j ? g.at(i, j) : k->mul(two, g.at(i, j));
      if (!k->is_zero(c)) t.push_back({Monomial::var(i) * Monomial::var(j), std::move(c)});
    }
  }
  return MPoly(r, std::move(t));
}

QuadricNet quadric_net(const Ideal& I) {
  QuadricNet net;
  net.ring = I.ring();
  if (net.ring->nvars() != 5) throw Error("genus 5 input must live in P^4");
  net.quadrics = I.degree_part(2);
  if (net.quadrics.size() != 3) throw Error("expected exactly three quadrics, found " + std::to_string(net.quadrics.size()));
  for (const auto& q : net.quadrics) net.gram.push_back(gram_matrix(q));
  return net;
}

MPoly determinant_quintic(const QuadricNet& net) {
  const FieldPtr& k = net.ring->field();
  RingPtr S = PolyRing::make(k, {"x", "y", "z"});
  const int n = net.gram[0].rows();
  PolyMatrix m(S, n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m.at(i, j) = MPoly::linear(S, {net.gram[0].at(i, j), net.gram[1].at(i, j), net.gram[2].at(i, j)});
    }
  }
  MPoly F = det(m);
  if (F.is_zero()) throw Error("determinant quintic vanishes identically");
  return F;
}

namespace {

Scalar small_or_random(const FieldPtr& k, Rng& rng) {
  if (k->is_finite()) return k->random(rng);
  return k->from_int(static_cast<long>(rng() % 7) - 3);
}

std::vector<Scalar> embed_all(const FieldPtr& to, const FieldPtr& from, const std::vector<Scalar>& v) {
  std::vector<Scalar> out;
  for (const auto& x : v) out.push_back(to->embed(from, x));
  return out;
}

Mat embed_mat(const FieldPtr& to, const Mat& m) {
  Mat out(to, m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = to->embed(m.field(), m.at(i, j));
  }
  return out;
}

std::vector<Scalar> mat_vec(const Mat& g, const std::vector<Scalar>& v) {
  const Field& k = *g.field();
  std::vector<Scalar> out(g.rows(), k.zero());
  for (int i = 0; i < g.rows(); ++i) {
    for (int j = 0; j < g.cols(); ++j) k.add_to(out[i], k.mul(g.at(i, j), v[j]));
  }
  return out;
}

Scalar dot(const Field& k, const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  Scalar s = k.zero();
  for (std::size_t i = 0; i < a.size(); ++i) k.add_to(s, k.mul(a[i], b[i]));
  return s;
}

Scalar bilinear(const Mat& g, const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  return dot(*g.field(), a, mat_vec(g, b));
}

bool all_zero(const Field& k, const std::vector<Scalar>& v) {
  for (const auto& x : v) {
    if (!k.is_zero(x)) return false;
  }
  return true;
}

// A root of a s^2 + b s + c over k, or the field where one exists.
struct QuadRoot {
  FieldPtr field;
  Scalar root;
  bool extended = false;
};

std::optional<Scalar> root_in(const FieldPtr& k, const Scalar& a, const Scalar& b, const Scalar& c) {
  UPoly q(k, {c, b, a}, "s");
  if (q.degree() <= 0) return std::nullopt;
  auto rs = roots_in(q, k);
  if (rs.empty()) return std::nullopt;
  return rs[0].raw();
}

QuadRoot adjoin_root(const FieldPtr& k, const Scalar& a, const Scalar& b, const Scalar& c) {
  if (auto r = root_in(k, a, b, c)) return {k, *r, false};
  if (k->depth() >= Field::kMaxDepth) throw Error("the rulings need an extension tower deeper than " + std::to_string(Field::kMaxDepth) + " over the base field");
  UPoly q = UPoly(k, {c, b, a}, "s").monic();
  FieldPtr L = extend(k, q);
  return {L, L->gen(), true};
}

// Isotropic vector of the form g outside its radical, over k or a quadratic
// extension of it.
std::pair<FieldPtr, std::vector<Scalar>> isotropic_vector(const Mat& g, Rng& rng) {
  const FieldPtr& k = g.field();
  const int n = g.rows();
  std::vector<Scalar> a, b;
  for (int attempt = 0; attempt < 40; ++attempt) {
    a.assign(n, k->zero());
    b.assign(n, k->zero());
    for (auto& x : a) x = k->embed(k->prime_field(), small_or_random(k->prime_field(), rng));
    for (auto& x : b) x = k->embed(k->prime_field(), small_or_random(k->prime_field(), rng));
    const Scalar qa = bilinear(g, a, a), qb = bilinear(g, b, b);
    const Scalar bab = k->mul(k->from_int(2), bilinear(g, a, b));
    if (k->is_zero(qb)) continue;
    auto r = root_in(k, qb, bab, qa);
    if (!r) continue;
    std::vector<Scalar> e(n);
    for (int i = 0; i < n; ++i) e[i] = k->add(a[i], k->mul(*r, b[i]));
    if (!all_zero(*k, mat_vec(g, e))) return {k, e};
  }
  // Adjoin a root along the last line tried.
  for (int attempt = 0; attempt < 40; ++attempt) {
    const Scalar qa = bilinear(g, a, a), qb = bilinear(g, b, b);
    const Scalar bab = k->mul(k->from_int(2), bilinear(g, a, b));
    if (!k->is_zero(qb)) {
      QuadRoot qr = adjoin_root(k, qb, bab, qa);
      const FieldPtr& L = qr.field;
      std::vector<Scalar> e(n);
      for (int i = 0; i < n; ++i) e[i] = L->add(L->embed(k, a[i]), L->mul(qr.root, L->embed(k, b[i])));
      if (!all_zero(*L, mat_vec(embed_mat(L, g), e))) return {L, e};
    }
    for (auto& x : a) x = k->embed(k->prime_field(), small_or_random(k->prime_field(), rng));
    for (auto& x : b) x = k->embed(k->prime_field(), small_or_random(k->prime_field(), rng));
  }
  throw Error("no isotropic vector found");
}

MPoly form_from(const RingPtr& r, const std::vector<Scalar>& c) { return MPoly::linear(r, c); }

void check_fibers(const Ideal& I, const RationalMap& m, Rng& rng) {
  const FieldPtr& k = m.ring()->field();
  const Scalar c = k->embed(k->prime_field(), small_or_random(k->prime_field(), rng));
  if (fiber_degree(I, m, {c, k->one()}) != 4) throw Error("degenerate quadric/curve configuration");
}

}  // namespace

SingularQuadric find_singular_quadric(const MPoly& F, const QuadricNet& net, std::uint64_t seed, int max_lines) {
  const FieldPtr& k = net.ring->field();
  if (F.is_zero() || F.total_degree() != 5) throw Error("find_singular_quadric: expected a quintic");
  RingPtr T = PolyRing::make(k, {"s"});
  Rng rng(seed);
  for (int attempt = 0; attempt < max_lines; ++attempt) {
    std::vector<Scalar> a(3), b(3);
    for (auto& x : a) x = small_or_random(k, rng);
    for (auto& x : b) x = small_or_random(k, rng);
    Mat ab(k, 0, 3);
    ab.append_row(a);
    ab.append_row(b);
    if (ab.rank() < 2) continue;
    std::vector<MPoly> images;
    for (int i = 0; i < 3; ++i) images.push_back(MPoly::constant(T, a[i]) + MPoly::var(T, 0) * MPoly::constant(T, b[i]));
    UPoly f = F.in_ring(F.ring()).compose(images).to_upoly(0);
    if (f.degree() != 5) continue;
    auto fs = factor(f, seed);
    const Factor* pick = &fs[0];
    for (const auto& x : fs) {
      if (x.poly.degree() < pick->poly.degree()) pick = &x;
    }
    FieldPtr L = extend(k, pick->poly);
    const Scalar theta = pick->poly.degree() == 1 ? k->neg(pick->poly.coeff(0)) : L->gen();
    std::vector<Scalar> point;
    for (int i = 0; i < 3; ++i) point.push_back(L->add(L->embed(k, a[i]), L->mul(theta, L->embed(k, b[i]))));
    Mat g(L, 5, 5);
    for (int q = 0; q < 3; ++q) {
      for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) L->add_to(g.at(i, j), L->mul(point[q], L->embed(k, net.gram[q].at(i, j))));
      }
    }
    const int rank = g.rank();
    if (rank <= 2) throw Error("input not a canonical curve");
    if (rank == 5) throw Error("find_singular_quadric: point is not on the quintic");
    Mat ker = g.kernel();
    std::vector<std::vector<Scalar>> vertex;
    for (int i = 0; i < ker.rows(); ++i) vertex.push_back(ker.row(i));
    MPoly quadric = quadric_from_gram(net.ring->with_field(L), g);
    return SingularQuadric{L, std::move(point), std::move(quadric), std::move(g), rank, std::move(vertex)};
  }
  throw Error("no point found on the determinant quintic");
}

Genus5GonalMap gonal_map_genus5(const SingularQuadric& sq, const Ideal& I, std::uint64_t seed) {
  Rng rng(seed);
  Genus5GonalMap out;
  out.rank = sq.rank;
  if (sq.rank == 4) {
    auto [L, e] = isotropic_vector(sq.gram, rng);
    Mat g = embed_mat(L, sq.gram);
    const int n = g.rows();
    const std::vector<Scalar> ge = mat_vec(g, e);
    int j = 0;
    while (L->is_zero(ge[j])) ++j;
    std::vector<Scalar> f0(n, L->zero());
    f0[j] = L->one();
    const Scalar beta = ge[j];
    const Scalar qf0 = bilinear(g, f0, f0);
    const Scalar ce = L->div(qf0, L->mul(L->from_int(2), L->mul(beta, beta)));
    std::vector<Scalar> f(n);
    for (int i = 0; i < n; ++i) f[i] = L->sub(L->div(f0[i], beta), L->mul(ce, e[i]));
    const std::vector<Scalar> gf = mat_vec(g, f);

    // Remaining rank-2 part after splitting off the hyperbolic plane.
    Mat h(L, n, n);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) h.at(a, b) = L->sub(g.at(a, b), L->add(L->mul(ge[a], gf[b]), L->mul(gf[a], ge[b])));
    }
    auto pick_anisotropic = [&](const Mat& m) -> std::optional<std::vector<Scalar>> {
      for (int a = 0; a < n; ++a) {
        for (int b = a; b < n; ++b) {
          std::vector<Scalar> u(n, L->zero());
          u[a] = L->one();
          if (b != a) u[b] = L->one();
          if (!L->is_zero(bilinear(m, u, u))) return u;
        }
      }
      return std::nullopt;
    };
    auto u = pick_anisotropic(h);
    if (!u) throw Error("degenerate quadric/curve configuration");
    const Scalar l1 = bilinear(h, *u, *u);
    const std::vector<Scalar> P = mat_vec(h, *u);
    Mat h2(L, n, n);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) h2.at(a, b) = L->sub(h.at(a, b), L->div(L->mul(P[a], P[b]), l1));
    }
    auto w = pick_anisotropic(h2);
    if (!w) throw Error("degenerate quadric/curve configuration");
    const Scalar l2 = bilinear(h2, *w, *w);
    const std::vector<Scalar> M = mat_vec(h2, *w);
    // Q' = P^2/l1 + M^2/l2 = (P - d M)(P + d M)/l1 with d^2 = -l1/l2
    QuadRoot d = adjoin_root(L, L->one(), L->zero(), L->div(l1, l2));
    const FieldPtr& K = d.field;
    out.field = K;
    RingPtr RK = I.ring()->with_field(K);
    auto lift = [&](const std::vector<Scalar>& v) { return embed_all(K, L, v); };
    MPoly le = form_from(RK, lift(ge)), lf = form_from(RK, lift(gf));
    MPoly pf = form_from(RK, lift(P)), mf = form_from(RK, lift(M));
    MPoly r = pf - mf.scale(d.root), s = pf + mf.scale(d.root);
    const Scalar il1 = K->inv(K->embed(L, l1));
    MPoly x0 = le.scale(K->from_int(2)), x1 = lf, x2 = r, x3 = s.scale(K->neg(il1));
    MPoly Q = sq.quadric.in_ring(RK);
    if (Q != x0 * x1 - x2 * x3) throw Error("rank-4 normal form check failed");
    out.coords = {x0, x1, x2, x3};
    out.maps.push_back({{x0, x2}});
    if (!d.extended) out.maps.push_back({{x0, x3}});
  } else if (sq.rank == 3) {
    const Mat& g = sq.gram;
    const FieldPtr& L = sq.field;
    Mat ech = g;
    std::vector<int> piv = ech.rref();
    // rows of g at the pivot rows of its transpose span the forms killing the vertex
    Mat gt = g.transpose();
    std::vector<int> rows = gt.rref();
    Mat C(L, 3, 5);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 5; ++j) C.at(i, j) = g.at(rows[i], j);
    }
    Mat CJ(L, 3, 3), GJ(L, 3, 3);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        CJ.at(i, j) = C.at(i, piv[j]);
        GJ.at(i, j) = g.at(piv[i], piv[j]);
      }
    }
    Mat Ci = CJ.inverse();
    Mat H = Ci.transpose() * GJ * Ci;
    // point on the conic y^T H y = 0
    auto [K, p0] = isotropic_vector(H, rng);
    out.field = K;
    RingPtr RK = I.ring()->with_field(K);
    std::vector<MPoly> y;
    for (int i = 0; i < 3; ++i) y.push_back(form_from(RK, embed_all(K, L, C.row(i))));
    Mat pt(K, 1, 3);
    for (int i = 0; i < 3; ++i) pt.at(0, i) = p0[i];
    Mat ker = pt.kernel();
    std::vector<MPoly> ab;
    for (int t = 0; t < 2; ++t) {
      MPoly f(RK);
      for (int i = 0; i < 3; ++i) f += y[i].scale(ker.at(t, i));
      ab.push_back(f);
    }
    out.coords = y;
    out.maps.push_back({ab});
  } else {
    throw Error("input not a canonical curve");
  }
  for (const auto& m : out.maps) check_fibers(I, m, rng);
  return out;
}

Genus5PlaneModel plane_model6_genus5(const Ideal& I,
                                     std::optional<std::pair<std::vector<Scalar>, std::vector<Scalar>>> points,
                                     FieldPtr points_field, std::uint64_t seed) {
  const FieldPtr& k = I.ring()->field();
  struct {
    FieldPtr field;
    std::vector<Scalar> p, q;
  } pm;
  if (points) {
    pm.field = points_field ? points_field : k;
    pm.p = points->first;
    pm.q = points->second;
  } else {
    ZeroDimSolution sec = hyperplane_section(I, seed);
    std::vector<const SolutionPoint*> rational;
    for (const auto& p : sec.points) {
      if (p.orbit_size() == 1 && p.multiplicity == 1) rational.push_back(&p);
    }
    if (rational.size() >= 2) {
      pm.field = k;
      pm.p = rational[0]->coords;
      pm.q = rational[1]->coords;
    } else {
      const SolutionPoint* best = nullptr;
      for (const auto& p : sec.points) {
        if (p.orbit_size() >= 2 && p.multiplicity == 1 && (!best || p.orbit_size() < best->orbit_size())) best = &p;
      }
      if (!best) throw Error("plane model: no usable pair of points on the hyperplane section");
      const FieldPtr& L = best->field;
      auto roots = roots_in(best->eliminant_factor.map_to(L), L);
      const Scalar* other = nullptr;
      for (const auto& r : roots) {
        if (!L->eq(r.raw(), L->gen())) other = &r.raw();
      }
      if (!other) throw Error("plane model: conjugate point not defined over the point's field");
      pm.field = L;
      pm.p = best->coords;
      pm.q = conjugate_point(*best, *other);
    }
  }
  const FieldPtr& L = pm.field;
  Mat pq(L, 0, 5);
  pq.append_row(pm.p);
  pq.append_row(pm.q);
  if (pq.rank() != 2) throw Error("plane model: points coincide");
  Mat ker = pq.kernel();
  std::vector<std::vector<Scalar>> rows;
  for (int i = 0; i < ker.rows(); ++i) rows.push_back(ker.row(i));
  bool down = false;
  auto forms = descend_rows(L, rows, k, &down);
  RingPtr RF = I.ring()->with_field(down ? k : L);
  RationalMap map;
  for (const auto& r : forms) map.forms.push_back(MPoly::linear(RF, r));

  RingPtr target = PolyRing::make(RF->field(), {"X", "Y", "Z"});
  PlaneImage img = plane_image(I, map, target, 6, seed ^ 0x9e3779b97f4a7c15ULL);
  Genus5PlaneModel out{pm.field, pm.p, pm.q, map, img.equation};
  out.image_degree = img.degree;
  out.map_degree = img.map_degree;
  out.bielliptic = out.image_degree == 3 && out.map_degree == 2;
  return out;
}

}  // namespace gonal

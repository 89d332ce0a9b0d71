#include "gonal/classify/classify.hpp"

#include "gonal/resolution/resolution.hpp"

#include <map>

namespace gonal {

std::string to_string(Stratum s) {
  switch (s) {
    case Stratum::Hyperelliptic: return "Hyperelliptic";
    case Stratum::Trigonal: return "Trigonal";
    case Stratum::PlaneQuintic: return "PlaneQuintic";
    case Stratum::Genus5Generic: return "Genus5Generic";
    case Stratum::Genus6Generic: return "Genus6Generic";
    case Stratum::Genus6EllipticCone: return "Genus6Generic-EllipticCone";
    case Stratum::Genus6DelPezzo: return "Genus6Generic-DelPezzo";
    case Stratum::NotCanonicalInput: return "NotCanonicalInput";
  }
  return "?";
}

Sanity sanity(const Ideal& I, int g) {
  Sanity s;
  if (!I.is_homogeneous() || I.is_unit()) return s;
  HilbertData h = I.hilbert();
  s.dim = h.dim - 1;
  s.degree = h.degree;
  mpq_class p0 = h.hilbert_poly_at(0);
  if (s.dim == 1 && p0.get_den() == 1) s.genus = 1 - p0.get_num().get_si();
  s.is_canonical = s.dim == 1 && s.degree == 2L * g - 2 && s.genus == g;
  return s;
}

bool detect_hyperelliptic(const Ideal& I) {
  Sanity s = sanity(I, 0);
  return s.dim == 1 && s.genus == 0;
}

namespace {

using Vecs = std::vector<std::vector<Scalar>>;

// Basis of the span of vs, as echelon rows.
Vecs span_basis(const FieldPtr& k, const Vecs& vs, int len) {
  Mat m(k, 0, len);
  for (const auto& v : vs) m.append_row(v);
  m.rref();
  Vecs out;
  for (int i = 0; i < m.rows(); ++i) {
    auto r = m.row(i);
    bool zero = true;
    for (const auto& x : r) zero = zero && k->is_zero(x);
    if (!zero) out.push_back(std::move(r));
  }
  return out;
}

std::vector<Scalar> flatten(const Mat& a) {
  std::vector<Scalar> v;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) v.push_back(a.at(i, j));
  }
  return v;
}

Mat unflatten(const FieldPtr& k, const std::vector<Scalar>& v, int n) {
  Mat a(k, n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a.at(i, j) = v[static_cast<std::size_t>(i) * n + j];
  }
  return a;
}

Mat bracket(const Mat& a, const Mat& b) {
  Mat ab = a * b, ba = b * a;
  const Field& k = *a.field();
  for (int i = 0; i < ab.rows(); ++i) {
    for (int j = 0; j < ab.cols(); ++j) ab.at(i, j) = k.sub(ab.at(i, j), ba.at(i, j));
  }
  return ab;
}

}  // namespace

LieAlgebraReport lie_algebra(const Ideal& I) {
  const RingPtr& R = I.ring();
  const FieldPtr& k = R->field();
  const int n = R->nvars();
  LieAlgebraReport rep;
  rep.n = n;
  std::vector<MPoly> quads = I.degree_part(2);
  const auto mons = monomials_of_degree(n, 2);
  const int nm = static_cast<int>(mons.size());

  // Quotient of the quadrics by I_2: reduce coefficient vectors against its echelon basis.
  Vecs ibasis;
  for (const auto& q : quads) ibasis.push_back(coeff_vector(q, mons));
  Mat ech(k, 0, nm);
  for (const auto& v : ibasis) ech.append_row(v);
  std::vector<int> piv = ech.rref();
  auto reduce = [&](std::vector<Scalar> v) {
    for (int r = 0; r < static_cast<int>(piv.size()); ++r) {
      const Scalar c = v[piv[r]];
      if (k->is_zero(c)) continue;
      for (int j = 0; j < nm; ++j) v[j] = k->sub(v[j], k->mul(c, ech.at(r, j)));
    }
    return v;
  };

  // Unknown A_{ij}: derivation sends x_i to sum_j A_{ij} x_j, so f maps to
  // sum_{i,j} A_{ij} x_j df/dx_i.
  std::vector<Mat> blocks;
  Mat sys(k, 0, n * n);
  for (const auto& q : quads) {
    std::vector<std::vector<Scalar>> images(n * n);
    for (int i = 0; i < n; ++i) {
      MPoly dq = q.derivative(i);
      for (int j = 0; j < n; ++j) images[i * n + j] = reduce(coeff_vector(MPoly::var(R, j) * dq, mons));
    }
    for (int row = 0; row < nm; ++row) {
      std::vector<Scalar> eq(n * n);
      for (int u = 0; u < n * n; ++u) eq[u] = images[u][row];
      sys.append_row(eq);
    }
  }
  std::vector<Scalar> trace(n * n, k->zero());
  for (int i = 0; i < n; ++i) trace[i * n + i] = k->one();
  sys.append_row(trace);
  Mat ker = sys.kernel();
  for (int i = 0; i < ker.rows(); ++i) rep.basis.push_back(unflatten(k, ker.row(i), n));
  rep.dimension = static_cast<int>(rep.basis.size());

  // Derived series until it stabilizes.
  std::vector<Mat> cur = rep.basis;
  rep.derived_series.push_back(static_cast<int>(cur.size()));
  for (int step = 0; step <= rep.dimension && !cur.empty(); ++step) {
    Vecs br;
    for (std::size_t a = 0; a < cur.size(); ++a) {
      for (std::size_t b = a + 1; b < cur.size(); ++b) br.push_back(flatten(bracket(cur[a], cur[b])));
    }
    Vecs next = span_basis(k, br, n * n);
    if (next.size() == cur.size()) break;
    cur.clear();
    for (const auto& v : next) cur.push_back(unflatten(k, v, n));
    rep.derived_series.push_back(static_cast<int>(cur.size()));
  }
  rep.is_soluble = cur.empty();
  return rep;
}

Classification classify(const Ideal& I, int g) {
  if (g != 5 && g != 6) throw Error("classify: genus must be 5 or 6");
  Classification c;
  if (I.ring()->nvars() != g) return c;
  c.sanity = sanity(I, g);
  if (c.sanity.dim != 1) return c;
  if (c.sanity.genus == 0) {
    c.stratum = Stratum::Hyperelliptic;
    return c;
  }
  if (!c.sanity.is_canonical) return c;
  std::vector<MPoly> gens = minimal_generators(I);
  std::map<int, int> degs;
  for (const auto& f : gens) ++degs[f.total_degree()];
  c.generator_degrees.assign(degs.begin(), degs.end());
  if (degs.count(1) || degs.count(2) == 0) return c;
  const int quadrics = degs[2];
  if (quadrics != (g - 2) * (g - 3) / 2) return c;
  if (degs.count(3) == 0) {
    if (degs.size() != 1) return c;
    c.stratum = g == 5 ? Stratum::Genus5Generic : Stratum::Genus6Generic;
    return c;
  }
  if (g == 5) {
    c.stratum = Stratum::Trigonal;
    return c;
  }
  std::vector<MPoly> q2;
  for (const auto& f : gens) {
    if (f.total_degree() == 2) q2.push_back(f);
  }
  c.lie = lie_algebra(Ideal(I.ring(), q2));
  const bool veronese = c.lie->dimension == 8 && !c.lie->is_soluble;
  c.stratum = veronese ? Stratum::PlaneQuintic : Stratum::Trigonal;
  return c;
}

}  // namespace gonal

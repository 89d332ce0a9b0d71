#include "gonal/groebner/solve.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

namespace gonal {

int ZeroDimSolution::geometric_count() const {
  int n = 0;
  for (const auto& p : points) n += p.orbit_size();
  return n;
}

bool ZeroDimSolution::is_radical() const {
  for (const auto& p : points) {
    if (p.multiplicity != 1) return false;
  }
  return true;
}

namespace {

std::vector<Scalar> coords_in_basis(const MPoly& f, const std::map<Monomial, int>& index, int n) {
  std::vector<Scalar> v(n, f.field()->zero());
  for (const auto& t : f.terms()) {
    auto it = index.find(t.m);
    if (it == index.end()) throw Error("normal form outside the standard basis");
    v[it->second] = t.c;
  }
  return v;
}

std::map<Monomial, int> index_of(const std::vector<Monomial>& basis) {
  std::map<Monomial, int> idx;
  for (int i = 0; i < static_cast<int>(basis.size()); ++i) idx[basis[i]] = i;
  return idx;
}

UPoly squarefree_part(const UPoly& f) {
  UPoly r = UPoly::constant(f.field(), f.field()->one(), f.var());
  for (const auto& part : squarefree_decomposition(f)) r = r * part.poly;
  return r;
}

bool is_squarefree(const UPoly& f) { return gcd(f, f.derivative()).degree() == 0; }

}  // namespace

Mat multiplication_matrix(const MPoly& f, const std::vector<MPoly>& gb, const std::vector<Monomial>& basis) {
  const RingPtr& r = gb[0].ring();
  const int n = static_cast<int>(basis.size());
  auto idx = index_of(basis);
  Mat m(r->field(), n, n);
  const MPoly fr = f.in_ring(r);
  for (int i = 0; i < n; ++i) {
    MPoly p = normal_form(fr * MPoly::monomial(r, basis[i], r->field()->one()), gb);
    auto v = coords_in_basis(p, idx, n);
    for (int j = 0; j < n; ++j) m.at(i, j) = v[j];
  }
  return m;
}

namespace {

// Shape-lemma data of a zero-dimensional ideal for a separating form ell:
// chi is the minimal polynomial of ell on R/rad(I), coordinate v equals
// shape[v](ell) there, and chi_full is the characteristic polynomial of ell
// on R/I (its factor multiplicities give the point multiplicities).
struct ShapeData {
  long degree = 0;
  std::vector<Scalar> ell;
  std::vector<Scalar> chi;
  std::vector<std::vector<Scalar>> shape;
  std::vector<Scalar> chi_full;
};

// Fails (nullopt) when ell does not separate the points.
std::optional<ShapeData> shape_for(const RingPtr& grev, const std::vector<MPoly>& gb, const std::vector<Scalar>& ell) {
  const FieldPtr& k = grev->field();
  const int nv = grev->nvars();
  std::vector<Monomial> basis = standard_monomials(gb);
  ShapeData sd;
  sd.degree = static_cast<long>(basis.size());
  sd.ell = ell;

  // Radical via the squarefree parts of each coordinate's characteristic polynomial.
  std::vector<MPoly> rad_gens = gb;
  bool changed = false;
  for (int v = 0; v < nv; ++v) {
    UPoly chi(k, multiplication_matrix(MPoly::var(grev, v), gb, basis).charpoly(), grev->var(v));
    UPoly sf = squarefree_part(chi);
    if (sf.degree() < chi.degree()) changed = true;
    rad_gens.push_back(MPoly::from_upoly(grev, v, sf));
  }
  std::vector<MPoly> rgb = changed ? groebner_basis(rad_gens) : gb;
  std::vector<Monomial> rbasis = changed ? standard_monomials(rgb) : basis;
  const int D = static_cast<int>(rbasis.size());
  auto ridx = index_of(rbasis);

  MPoly l = MPoly::linear(grev, ell);
  if (l.is_zero()) return std::nullopt;
  Mat ML = multiplication_matrix(l, rgb, rbasis);
  UPoly chi(k, ML.charpoly(), "T");
  if (!is_squarefree(chi)) return std::nullopt;
  sd.chi = chi.coeffs();

  // Coordinates as polynomials in ell: solve sum_j c_j ell^j = x_i in R/rad.
  std::vector<Scalar> cur(D, k->zero());
  cur[ridx.at(Monomial{})] = k->one();
  Mat powers(k, D, D);  // column j = coordinates of ell^j
  for (int j = 0; j < D; ++j) {
    for (int i = 0; i < D; ++i) powers.at(i, j) = cur[i];
    std::vector<Scalar> next(D, k->zero());
    for (int i = 0; i < D; ++i) {
      if (k->is_zero(cur[i])) continue;
      for (int c = 0; c < D; ++c) k->add_to(next[c], k->mul(cur[i], ML.at(i, c)));
    }
    cur = std::move(next);
  }
  for (int v = 0; v < nv; ++v) {
    auto target = coords_in_basis(normal_form(MPoly::var(grev, v), rgb), ridx, D);
    auto c = powers.solve(target);
    if (!c) throw Error("shape lemma: coordinate not a polynomial in the separating form");
    c->resize(D, k->zero());
    sd.shape.push_back(std::move(*c));
  }
  sd.chi_full = multiplication_matrix(l, gb, basis).charpoly();
  return sd;
}

ZeroDimSolution points_from_shape(const Ideal& I, const FieldPtr& k, const ShapeData& sd) {
  ZeroDimSolution sol;
  sol.base = k;
  sol.degree = sd.degree;
  sol.separating_form = sd.ell;
  UPoly chi(k, sd.chi, "T");
  auto full_factors = factor(UPoly(k, sd.chi_full, "T"));
  for (const auto& fc : factor(chi)) {
    SolutionPoint pt{extend(k, fc.poly), {}, 0, fc.poly};
    const FieldPtr& L = pt.field;
    const Scalar theta = fc.poly.degree() == 1 ? k->neg(fc.poly.coeff(0)) : L->gen();
    for (const auto& sh : sd.shape) pt.coords.push_back(UPoly(k, sh, "T").map_to(L).eval(theta));
    for (const auto& ff : full_factors) {
      if (ff.poly == fc.poly) pt.multiplicity = ff.multiplicity;
    }
    for (const auto& g : I.gens()) {
      if (!L->is_zero(g.eval(L, pt.coords))) throw Error("solve_zero_dim: verification failed");
    }
    sol.points.push_back(std::move(pt));
  }
  return sol;
}

std::vector<Scalar> random_form(const FieldPtr& k, int nv, Rng& rng) {
  std::vector<Scalar> ell(nv);
  for (auto& c : ell) c = k->is_finite() ? k->random(rng) : k->from_int(static_cast<long>(rng() % 21) - 10);
  return ell;
}

// Large primes below 2^32, deterministic from an index.
std::uint64_t large_prime(int i) {
  mpz_class p = mpz_class(1) << 31;
  p += 1000003UL * static_cast<unsigned long>(i + 1);
  mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  return p.get_ui();
}

std::optional<MPoly> reduce_mod(const MPoly& f, const RingPtr& rp) {
  const FieldPtr& k = rp->field();
  std::vector<Term> ts;
  for (const auto& t : f.terms()) {
    Scalar d = k->from_mpz(t.c.rational().get_den());
    if (k->is_zero(d)) return std::nullopt;
    ts.push_back({t.m, k->div(k->from_mpz(t.c.rational().get_num()), d)});
  }
  return MPoly(rp, std::move(ts));
}

std::optional<Ideal> ideal_mod(const Ideal& I, std::uint64_t p) {
  RingPtr rp = PolyRing::make(Field::prime(p), I.ring()->vars(), I.ring()->order());
  std::vector<MPoly> g;
  for (const auto& f : I.gens()) {
    auto r = reduce_mod(f, rp);
    if (!r) return std::nullopt;
    g.push_back(std::move(*r));
  }
  return Ideal(rp, std::move(g));
}

// Rational number congruent to a modulo m with numerator and denominator
// below sqrt(m / 2), if one exists.
bool rational_reconstruct(const mpz_class& a, const mpz_class& m, mpq_class& out) {
  mpz_class bound;
  mpz_class half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = m, r1 = a % m, t0 = 0, t1 = 1;
  if (r1 < 0) r1 += m;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1, t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || abs(t1) > bound) return false;
  mpz_class g = gcd(r1, t1);
  if (g != 1) return false;
  out = mpq_class(r1, t1);
  out.canonicalize();
  return true;
}

// Flattened residues of the shape data, in a fixed layout.
std::vector<std::uint64_t> flatten(const ShapeData& sd) {
  std::vector<std::uint64_t> out;
  for (const auto& c : sd.chi) out.push_back(c.residue());
  for (const auto& sh : sd.shape) {
    for (const auto& c : sh) out.push_back(c.residue());
  }
  for (const auto& c : sd.chi_full) out.push_back(c.residue());
  return out;
}

ZeroDimSolution solve_over_rationals(const Ideal& I, std::uint64_t seed) {
  const FieldPtr& Q = I.ring()->field();
  const int nv = I.ring()->nvars();
  Rng rng(seed);
  std::vector<Scalar> ell(nv, Q->zero());
  ell[nv - 1] = Q->one();
  constexpr int kMaxPrimes = 80;
  for (int attempt = 0; attempt < 20; ++attempt) {
    if (attempt > 0) ell = random_form(Q, nv, rng);
    std::vector<mpz_class> acc;
    mpz_class modulus = 1;
    long degree = -1;
    std::size_t chi_len = 0, full_len = 0;
    bool restart = false;
    for (int pi = 0; pi < kMaxPrimes && !restart; ++pi) {
      const std::uint64_t p = large_prime(pi);
      auto Ip = ideal_mod(I, p);
      if (!Ip) continue;
      const FieldPtr& Fp = Ip->ring()->field();
      RingPtr grev = Ip->ring()->with_order(MonomialOrder::grevlex());
      std::vector<MPoly> gb = Ip->groebner(MonomialOrder::grevlex());
      if (gb.size() == 1 && gb[0].is_constant()) {
        if (pi >= 1 && degree < 0) return ZeroDimSolution{Q, {}, 0, {}};
        continue;
      }
      std::vector<Scalar> ellp;
      bool bad = false;
      for (const auto& c : ell) {
        Scalar d = Fp->from_mpz(c.rational().get_den());
        if (Fp->is_zero(d)) bad = true;
        ellp.push_back(bad ? Fp->zero() : Fp->div(Fp->from_mpz(c.rational().get_num()), d));
      }
      if (bad) continue;
      std::optional<ShapeData> sd = shape_for(grev, gb, ellp);
      if (!sd) {
        // Either ell is not separating or p is unlucky; a second failure means ell.
        if (pi > 0 || degree >= 0) restart = true;
        continue;
      }
      // Good primes give the largest degree and radical size.
      if (degree >= 0 && (sd->degree != degree || sd->chi.size() != chi_len)) {
        if (sd->degree < degree || (sd->degree == degree && sd->chi.size() < chi_len)) continue;
        acc.clear();
        modulus = 1;
      }
      degree = sd->degree;
      chi_len = sd->chi.size();
      full_len = sd->chi_full.size();
      auto res = flatten(*sd);
      if (!acc.empty()) {
        // Check the current reconstruction against this prime first.
        bool stable = true;
        std::vector<mpq_class> rec(acc.size());
        for (std::size_t i = 0; i < acc.size() && stable; ++i) {
          stable = rational_reconstruct(acc[i], modulus, rec[i]);
          if (stable) {
            Scalar d = Fp->from_mpz(rec[i].get_den());
            stable = !Fp->is_zero(d) && Fp->div(Fp->from_mpz(rec[i].get_num()), d).residue() == res[i];
          }
        }
        if (stable) {
          ShapeData q;
          q.degree = degree;
          q.ell = ell;
          std::size_t pos = 0;
          for (std::size_t i = 0; i < chi_len; ++i) q.chi.push_back(Scalar(rec[pos++]));
          for (int v = 0; v < nv; ++v) {
            std::vector<Scalar> sh;
            for (std::size_t i = 0; i + 1 < chi_len; ++i) sh.push_back(Scalar(rec[pos++]));
            q.shape.push_back(std::move(sh));
          }
          for (std::size_t i = 0; i < full_len; ++i) q.chi_full.push_back(Scalar(rec[pos++]));
          try {
            return points_from_shape(I, Q, q);
          } catch (const Error&) {
            // Not yet correct; keep accumulating primes.
          }
        }
      }
      if (acc.empty()) acc.assign(res.size(), mpz_class(0));
      const mpz_class pz(static_cast<unsigned long>(p));
      for (std::size_t i = 0; i < res.size(); ++i) {
        // acc' = acc + modulus * ((r - acc) * modulus^{-1} mod p)
        mpz_class diff = (mpz_class(static_cast<unsigned long>(res[i])) - acc[i]) % pz;
        if (diff < 0) diff += pz;
        mpz_class inv;
        mpz_class mm = modulus % pz;
        mpz_invert(inv.get_mpz_t(), mm.get_mpz_t(), pz.get_mpz_t());
        acc[i] += modulus * ((diff * inv) % pz);
      }
      modulus *= pz;
    }
  }
  throw Error("solve_zero_dim: multimodular reconstruction did not converge");
}

}  // namespace

int dimension_by_reduction(const Ideal& I) {
  if (!I.ring()->field()->is_rationals()) return I.is_unit() ? -1 : I.dimension();
  int agreed = -2, found = 0;
  for (int pi = 0; pi < 40 && found < 2; ++pi) {
    auto Ip = ideal_mod(I, large_prime(100 + pi));
    if (!Ip) continue;
    const int d = Ip->is_unit() ? -1 : Ip->dimension();
    if (found == 0 || d == agreed) {
      agreed = d;
      ++found;
    } else {
      // Disagreement: the larger value is the generic one.
      agreed = std::max(agreed, d);
      found = 1;
    }
  }
  return agreed;
}

ZeroDimSolution solve_zero_dim(const Ideal& I, std::uint64_t seed) {
  const FieldPtr& k = I.ring()->field();
  if (k->is_rationals()) {
    if (dimension_by_reduction(I) > 0) throw Error("not zero-dimensional");
    return solve_over_rationals(I, seed);
  }
  const RingPtr grev = I.ring()->with_order(MonomialOrder::grevlex());
  std::vector<MPoly> gb = I.groebner(MonomialOrder::grevlex());
  if (gb.size() == 1 && gb[0].is_constant()) return ZeroDimSolution{k, {}, 0, {}};
  // Separating linear form: last variable first, then seeded random forms.
  Rng rng(seed);
  std::vector<Scalar> ell(grev->nvars(), k->zero());
  ell[grev->nvars() - 1] = k->one();
  for (int attempt = 0; attempt <= 200; ++attempt) {
    if (attempt > 0) ell = random_form(k, grev->nvars(), rng);
    if (auto sd = shape_for(grev, gb, ell)) return points_from_shape(I, k, *sd);
  }
  throw Error("no separating linear form found");
}

std::vector<MPoly> lex_groebner_fglm(const Ideal& I) {
  const RingPtr grev = I.ring()->with_order(MonomialOrder::grevlex());
  const RingPtr lexr = I.ring()->with_order(MonomialOrder::lex());
  const FieldPtr& k = grev->field();
  const int nv = grev->nvars();
  std::vector<MPoly> gb = I.groebner(MonomialOrder::grevlex());
  if (gb.size() == 1 && gb[0].is_constant()) return {MPoly::from_int(lexr, 1)};
  std::vector<Monomial> basis = standard_monomials(gb);
  const int D = static_cast<int>(basis.size());
  auto idx = index_of(basis);

  std::vector<Monomial> stair;
  Mat vecs(k, D, 0);  // columns = coordinate vectors of staircase monomials
  std::vector<MPoly> out;
  auto lex_less = [&](const Monomial& a, const Monomial& b) { return lexr->compare(a, b) < 0; };
  std::set<Monomial, decltype(lex_less)> next(lex_less);
  next.insert(Monomial{});
  while (!next.empty()) {
    Monomial m = *next.begin();
    next.erase(next.begin());
    bool multiple = false;
    for (const auto& g : out) multiple = multiple || g.lm().divides(m);
    if (multiple) continue;
    auto v = coords_in_basis(normal_form(MPoly::monomial(grev, m, k->one()), gb), idx, D);
    std::optional<std::vector<Scalar>> c;
    if (vecs.cols() > 0) c = vecs.solve(v);
    bool all_zero = true;
    for (const auto& x : v) all_zero = all_zero && k->is_zero(x);
    if (all_zero) c = std::vector<Scalar>(vecs.cols(), k->zero());
    if (c) {
      std::vector<Term> t{{m, k->one()}};
      for (std::size_t j = 0; j < stair.size(); ++j) t.push_back({stair[j], k->neg((*c)[j])});
      out.emplace_back(lexr, std::move(t));
      continue;
    }
    stair.push_back(m);
    Mat nv2(k, D, vecs.cols() + 1);
    for (int i = 0; i < D; ++i) {
      for (int j = 0; j < vecs.cols(); ++j) nv2.at(i, j) = vecs.at(i, j);
      nv2.at(i, vecs.cols()) = v[i];
    }
    vecs = std::move(nv2);
    for (int x = 0; x < nv; ++x) next.insert(m * Monomial::var(x));
  }
  std::sort(out.begin(), out.end(), [&](const MPoly& a, const MPoly& b) { return lexr->compare(a.lm(), b.lm()) < 0; });
  return out;
}

}  // namespace gonal

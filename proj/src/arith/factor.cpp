#include "gonal/arith/factor.hpp"

#include "gonal/arith/linalg.hpp"

#include <algorithm>
#include <functional>

namespace gonal {

namespace {

UPoly one_like(const UPoly& f) { return UPoly::constant(f.field(), f.field()->one(), f.var()); }

// ---------------------------------------------------------------------------
// squarefree parts

void yun(const UPoly& f, std::vector<Factor>& out) {
  UPoly df = f.derivative();
  UPoly b = gcd(f, df);
  UPoly c = f / b;
  UPoly d = df / b - c.derivative();
  int i = 1;
  while (c.degree() > 0) {
    UPoly a = gcd(c, d);
    if (a.degree() > 0) out.push_back({a.monic(), i});
    c = c / a;
    d = d / a - c.derivative();
    ++i;
  }
}

UPoly pth_root(const UPoly& f) {
  const FieldPtr& k = f.field();
  const auto p = k->characteristic();
  const mpz_class e = k->cardinality() / static_cast<unsigned long>(p);
  std::vector<Scalar> c;
  for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) c.push_back(k->pow(f.coeff(i), e));
  return UPoly(k, std::move(c), f.var());
}

void musser(const UPoly& f, int mult, std::vector<Factor>& out) {
  UPoly c = gcd(f, f.derivative());
  UPoly w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    UPoly y = gcd(w, c);
    UPoly z = w / y;
    if (z.degree() > 0) out.push_back({z.monic(), i * mult});
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) musser(pth_root(c.monic()), mult * static_cast<int>(f.field()->characteristic()), out);
}

// ---------------------------------------------------------------------------
// finite fields: distinct-degree then Cantor-Zassenhaus

void edf(const UPoly& g, int d, Rng& rng, std::vector<UPoly>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  const FieldPtr& k = g.field();
  mpz_class qd;
  mpz_pow_ui(qd.get_mpz_t(), k->cardinality().get_mpz_t(), static_cast<unsigned long>(d));
  const mpz_class e = (qd - 1) / 2;
  for (;;) {
    std::vector<Scalar> a(g.degree());
    for (auto& c : a) c = k->random(rng);
    UPoly ap(k, std::move(a), g.var());
    if (ap.degree() < 1) continue;
    UPoly b = powmod(ap, e, g) - one_like(g);
    UPoly h = gcd(b, g);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      edf(h, d, rng, out);
      edf(g / h, d, rng, out);
      return;
    }
  }
}

std::vector<UPoly> factor_finite_squarefree(UPoly f, Rng& rng) {
  std::vector<UPoly> out;
  const FieldPtr& k = f.field();
  const mpz_class q = k->cardinality();
  const UPoly x = UPoly::x(k, f.var());
  UPoly h = x % f;
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = powmod(h, q, f);
    UPoly g = gcd(h - x, f);
    if (g.degree() > 0) {
      edf(g, d, rng, out);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.push_back(f.monic());
  return out;
}

// ---------------------------------------------------------------------------
// integer polynomials for the rational case

using ZPoly = std::vector<mpz_class>;  // low to high

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

void zmod(ZPoly& a, const mpz_class& m) {
  for (auto& c : a) {
    c %= m;
    if (c < 0) c += m;
  }
  ztrim(a);
}

mpz_class zcontent(const ZPoly& a) {
  mpz_class g = 0;
  for (const auto& c : a) g = gcd(g, c);
  return g;
}

// Exact division over Z; false when the quotient is not integral.
bool zdiv_exact(ZPoly a, const ZPoly& b, ZPoly& q) {
  ztrim(a);
  if (a.size() < b.size()) {
    q.clear();
    return a.empty();
  }
  const std::size_t db = b.size() - 1;
  q.assign(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    if (a[i] == 0) continue;
    if (!mpz_divisible_p(a[i].get_mpz_t(), b.back().get_mpz_t())) return false;
    mpz_class c = a[i] / b.back();
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (a[i] != 0) return false;
  }
  ztrim(q);
  return true;
}

UPoly to_fp(const ZPoly& a, const FieldPtr& fp, const std::string& var) {
  std::vector<Scalar> c;
  c.reserve(a.size());
  for (const auto& x : a) c.push_back(fp->from_mpz(x));
  return UPoly(fp, std::move(c), var);
}

ZPoly from_fp(const UPoly& a) {
  ZPoly r;
  for (const auto& c : a.coeffs()) r.push_back(mpz_class(static_cast<unsigned long>(c.residue())));
  return r;
}

// Lift f = g*h mod p to mod p^k (g,h monic; f monic mod p^k).
void hensel_pair(const ZPoly& f, ZPoly& g, ZPoly& h, std::uint64_t p, unsigned k, const FieldPtr& fp,
                 const std::string& var) {
  const UPoly gp = to_fp(g, fp, var), hp = to_fp(h, fp, var);
  XGcd e = xgcd(gp, hp);
  if (e.g.degree() != 0) throw Error("Hensel lifting: factors not coprime modulo p");
  const mpz_class P(static_cast<unsigned long>(p));
  mpz_class pk = P;
  for (unsigned step = 1; step < k; ++step) {
    ZPoly diff = f;
    ZPoly gh = zmul(g, h);
    diff.resize(std::max(diff.size(), gh.size()), 0);
    for (std::size_t i = 0; i < gh.size(); ++i) diff[i] -= gh[i];
    for (auto& c : diff) c /= pk;
    zmod(diff, P);
    UPoly err = to_fp(diff, fp, var);
    auto [q, dg] = (e.t * err).divmod(gp);
    UPoly dh = e.s * err + q * hp;
    ZPoly zdg = from_fp(dg), zdh = from_fp(dh);
    for (std::size_t i = 0; i < zdg.size(); ++i) g[i] += pk * zdg[i];
    for (std::size_t i = 0; i < zdh.size(); ++i) h[i] += pk * zdh[i];
    pk *= P;
  }
}

std::vector<ZPoly> hensel_multi(const ZPoly& f, const std::vector<ZPoly>& facs, std::uint64_t p, unsigned k,
                                const FieldPtr& fp, const std::string& var, const mpz_class& pk) {
  if (facs.size() == 1) return {f};
  const std::size_t mid = facs.size() / 2;
  ZPoly g{1}, h{1};
  for (std::size_t i = 0; i < mid; ++i) g = zmul(g, facs[i]);
  for (std::size_t i = mid; i < facs.size(); ++i) h = zmul(h, facs[i]);
  const mpz_class P(static_cast<unsigned long>(p));
  zmod(g, P);
  zmod(h, P);
  hensel_pair(f, g, h, p, k, fp, var);
  zmod(g, pk);
  zmod(h, pk);
  std::vector<ZPoly> left(facs.begin(), facs.begin() + static_cast<std::ptrdiff_t>(mid));
  std::vector<ZPoly> right(facs.begin() + static_cast<std::ptrdiff_t>(mid), facs.end());
  auto a = hensel_multi(g, left, p, k, fp, var, pk);
  auto b = hensel_multi(h, right, p, k, fp, var, pk);
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

void symmetric(ZPoly& a, const mpz_class& m) {
  const mpz_class half = m / 2;
  for (auto& c : a) {
    c %= m;
    if (c < 0) c += m;
    if (c > half) c -= m;
  }
  ztrim(a);
}

ZPoly primitive(ZPoly a) {
  ztrim(a);
  mpz_class c = zcontent(a);
  if (c == 0) return a;
  if (a.back() < 0) c = -c;
  for (auto& x : a) x /= c;
  return a;
}

// Factor a primitive squarefree integer polynomial of positive degree.
std::vector<ZPoly> factor_z_squarefree(ZPoly f, Rng& rng) {
  const std::size_t n = f.size() - 1;
  if (n == 1) return {f};
  // Pick the prime with the fewest modular factors among a few candidates.
  std::uint64_t best_p = 0;
  std::vector<UPoly> best;
  int tried = 0;
  for (std::uint64_t p = 5; tried < 4; p += 2) {
    if (!is_probable_prime(p)) continue;
    if (mpz_divisible_ui_p(f.back().get_mpz_t(), static_cast<unsigned long>(p))) continue;
    FieldPtr fp = Field::prime(p);
    UPoly fb = to_fp(f, fp, "x");
    if (gcd(fb, fb.derivative()).degree() != 0) continue;
    ++tried;
    auto facs = factor_finite_squarefree(fb.monic(), rng);
    if (best_p == 0 || facs.size() < best.size()) {
      best_p = p;
      best = std::move(facs);
    }
    if (best.size() == 1) return {f};
  }
  const std::uint64_t p = best_p;
  FieldPtr fp = Field::prime(p);
  // Mignotte-type bound on coefficients of factors of lc*f.
  mpz_class norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  mpz_class nrm = sqrt(norm2) + 1;
  mpz_class bound = nrm * abs(f.back()) * 2;
  mpz_class twon;
  mpz_ui_pow_ui(twon.get_mpz_t(), 2, static_cast<unsigned long>(n));
  bound *= twon;
  unsigned k = 1;
  mpz_class pk(static_cast<unsigned long>(p));
  while (pk <= 2 * bound) {
    pk *= static_cast<unsigned long>(p);
    ++k;
  }
  // Monic associate of f modulo p^k.
  mpz_class lc_inv;
  mpz_invert(lc_inv.get_mpz_t(), f.back().get_mpz_t(), pk.get_mpz_t());
  ZPoly fm = f;
  for (auto& c : fm) c *= lc_inv;
  zmod(fm, pk);
  std::vector<ZPoly> modfacs;
  for (const auto& u : best) modfacs.push_back(from_fp(u));
  std::vector<ZPoly> lifted = hensel_multi(fm, modfacs, p, k, fp, "x", pk);

  std::vector<ZPoly> out;
  std::vector<bool> used(lifted.size(), false);
  std::size_t remaining = lifted.size();
  ZPoly rest = f;
  for (std::size_t s = 1; 2 * s <= remaining; ++s) {
    bool found = true;
    while (found && 2 * s <= remaining) {
      found = false;
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < lifted.size(); ++i) {
        if (!used[i]) idx.push_back(i);
      }
      std::vector<bool> pick(idx.size(), false);
      std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(s), true);
      do {
        ZPoly g{rest.back()};
        for (std::size_t j = 0; j < idx.size(); ++j) {
          if (pick[j]) {
            g = zmul(g, lifted[idx[j]]);
            zmod(g, pk);
          }
        }
        symmetric(g, pk);
        g = primitive(g);
        ZPoly q;
        if (zdiv_exact(rest, g, q)) {
          out.push_back(g);
          rest = q;
          for (std::size_t j = 0; j < idx.size(); ++j) {
            if (pick[j]) used[idx[j]] = true;
          }
          remaining -= s;
          found = true;
          break;
        }
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
  }
  if (rest.size() > 1) out.push_back(primitive(rest));
  return out;
}

std::vector<UPoly> factor_rational_squarefree(const UPoly& f, Rng& rng) {
  const FieldPtr& Q = f.field();
  mpz_class den = 1;
  for (const auto& c : f.coeffs()) den = lcm(den, c.rational().get_den());
  ZPoly z;
  for (const auto& c : f.coeffs()) z.push_back(mpz_class(c.rational() * den));
  z = primitive(z);
  std::vector<UPoly> out;
  for (const auto& g : factor_z_squarefree(z, rng)) {
    std::vector<Scalar> c;
    for (const auto& x : g) c.push_back(Q->from_mpz(x));
    out.push_back(UPoly(Q, std::move(c), f.var()).monic());
  }
  return out;
}

// ---------------------------------------------------------------------------
// characteristic-zero extensions: norm method

// Newton interpolation through (x_j, y_j) with x_j = 0..m-1.
UPoly interpolate(const FieldPtr& k, const std::vector<Scalar>& ys, const std::string& var) {
  const int m = static_cast<int>(ys.size());
  std::vector<Scalar> dd = ys;
  for (int j = 1; j < m; ++j) {
    for (int i = m - 1; i >= j; --i) {
      dd[i] = k->div(k->sub(dd[i], dd[i - 1]), k->from_int(j));
    }
  }
  UPoly r = UPoly::constant(k, dd[m - 1], var);
  for (int i = m - 2; i >= 0; --i) {
    r = r * UPoly::from_ints(k, {-i, 1}, var) + UPoly::constant(k, dd[i], var);
  }
  return r;
}

std::vector<UPoly> factor_squarefree(const UPoly& f, Rng& rng);

std::vector<UPoly> factor_trager(const UPoly& f, Rng& rng) {
  const FieldPtr& K = f.field();
  const FieldPtr& base = K->base();
  const int n = f.degree() * K->degree();
  for (long s = 0;; s = s > 0 ? -s : -s + 1) {
    // g(x) = f(x - s*alpha)
    UPoly shift(K, {K->neg(K->mul(K->from_int(s), K->gen())), K->one()}, f.var());
    UPoly g = f.compose(shift);
    std::vector<Scalar> vals;
    for (int j = 0; j <= n; ++j) vals.push_back(norm_to_base(*K, g.eval(K->from_int(j))));
    UPoly N = interpolate(base, vals, f.var());
    if (gcd(N, N.derivative()).degree() != 0) continue;
    std::vector<UPoly> out;
    UPoly unshift(K, {K->mul(K->from_int(s), K->gen()), K->one()}, f.var());
    for (const auto& h : factor_squarefree(N.monic(), rng)) {
      UPoly c = gcd(g, h.map_to(K));
      out.push_back(c.compose(unshift).monic());
    }
    return out;
  }
}

std::vector<UPoly> factor_squarefree(const UPoly& f, Rng& rng) {
  if (f.degree() == 1) return {f.monic()};
  const FieldPtr& k = f.field();
  if (k->is_finite()) return factor_finite_squarefree(f.monic(), rng);
  if (k->is_rationals()) return factor_rational_squarefree(f, rng);
  return factor_trager(f.monic(), rng);
}

bool poly_less(const UPoly& a, const UPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const Field& k = *a.field();
  for (int i = a.degree(); i >= 0; --i) {
    std::string x = k.serialize(a.coeff(i)), y = k.serialize(b.coeff(i));
    if (x != y) return x < y;
  }
  return false;
}

}  // namespace

Scalar norm_to_base(const Field& K, const Scalar& a) {
  const FieldPtr& base = K.base();
  const int d = K.degree();
  Mat m(base, d, d);
  Scalar pw = K.one();
  for (int i = 0; i < d; ++i) {
    Scalar v = K.mul(a, pw);
    for (int j = 0; j < d; ++j) m.at(i, j) = v.coeffs()[j];
    pw = K.mul(pw, K.gen());
  }
  return m.det();
}

std::vector<Factor> squarefree_decomposition(const UPoly& f) {
  if (f.is_zero()) throw Error("squarefree decomposition of zero polynomial");
  std::vector<Factor> out;
  if (f.degree() == 0) return out;
  if (f.field()->is_finite()) {
    musser(f.monic(), 1, out);
  } else {
    yun(f.monic(), out);
  }
  return out;
}

std::vector<Factor> factor(const UPoly& f, std::uint64_t seed) {
  if (f.is_zero()) throw Error("cannot factor the zero polynomial");
  Rng rng(seed);
  std::vector<Factor> out;
  for (const auto& part : squarefree_decomposition(f)) {
    for (auto& g : factor_squarefree(part.poly, rng)) out.push_back({std::move(g), part.multiplicity});
  }
  // Musser's output can repeat an irreducible across p-power levels.
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) { return poly_less(a.poly, b.poly); });
  std::vector<Factor> merged;
  for (auto& fc : out) {
    if (!merged.empty() && merged.back().poly == fc.poly) {
      merged.back().multiplicity += fc.multiplicity;
    } else {
      merged.push_back(std::move(fc));
    }
  }
  return merged;
}

bool is_irreducible(const UPoly& f) {
  if (f.degree() < 1) return false;
  auto fs = factor(f);
  return fs.size() == 1 && fs[0].multiplicity == 1;
}

std::vector<FieldElement> roots_in(const UPoly& f, const FieldPtr& K) {
  UPoly g = f.field()->same_as(*K) ? f : f.map_to(K);
  std::vector<FieldElement> out;
  if (g.degree() < 1) return out;
  for (const auto& fc : factor(g)) {
    if (fc.poly.degree() != 1) continue;
    for (int i = 0; i < fc.multiplicity; ++i) out.emplace_back(K, K->neg(fc.poly.coeff(0)));
  }
  return out;
}

FieldPtr extend(const FieldPtr& K, const UPoly& f, std::string generator) {
  if (f.degree() < 1) throw Error("minimal polynomial must have positive degree");
  UPoly g = f.field()->same_as(*K) ? f.monic() : f.map_to(K).monic();
  if (g.degree() == 1) return K;
  if (K->depth() + 1 > Field::kMaxDepth) {
    throw Error("extension tower deeper than " + std::to_string(Field::kMaxDepth) + " requested");
  }
  if (!is_irreducible(g)) throw Error("reducible minimal polynomial");
  if (generator.empty()) generator = K->depth() == 0 ? "a" : "b";
  return Field::extension_unchecked(K, g.coeffs(), generator);
}

}  // namespace gonal

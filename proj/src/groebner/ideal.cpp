#include "gonal/groebner/ideal.hpp"

#include "gonal/groebner/module.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gonal {

namespace {

std::vector<long> poly_mul(const std::vector<long>& a, const std::vector<long>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<long> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

void poly_add_to(std::vector<long>& a, const std::vector<long>& b, int shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
}

void minimalize(std::vector<Monomial>& g) {
  std::sort(g.begin(), g.end(), [](const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    return a < b;
  });
  std::vector<Monomial> out;
  for (const auto& m : g) {
    bool redundant = false;
    for (const auto& o : out) {
      if (o.divides(m)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(m);
  }
  g = std::move(out);
}

std::vector<long> hn_rec(std::vector<Monomial> g, int n) {
  minimalize(g);
  if (g.empty()) return {1};
  // Base case: pairwise coprime generators.
  bool coprime = true;
  for (std::size_t i = 0; i < g.size() && coprime; ++i) {
    for (std::size_t j = i + 1; j < g.size() && coprime; ++j) coprime = g[i].coprime(g[j]);
  }
  if (coprime) {
    std::vector<long> r{1};
    for (const auto& m : g) {
      std::vector<long> f(m.deg + 1, 0);
      f[0] = 1;
      f[m.deg] -= 1;
      r = poly_mul(r, f);
    }
    return r;
  }
  // Pivot on the variable occurring in the most non-pure-power generators.
  std::vector<int> count(n, 0);
  for (const auto& m : g) {
    int support = 0;
    for (int i = 0; i < n; ++i) support += m.e[i] > 0;
    if (support < 2) continue;
    for (int i = 0; i < n; ++i) count[i] += m.e[i] > 0;
  }
  int x = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
  if (count[x] == 0) {
    // Only pure powers, yet not coprime: two powers of one variable cannot
    // both be minimal, so this cannot happen.
    throw Error("hilbert numerator: internal inconsistency");
  }
  int e = 1 << 15;
  for (const auto& m : g) {
    int support = 0;
    for (int i = 0; i < n; ++i) support += m.e[i] > 0;
    if (support >= 2 && m.e[x] > 0) e = std::min(e, static_cast<int>(m.e[x]));
  }
  const Monomial p = Monomial::var(x, e);
  std::vector<Monomial> plus = g;
  plus.push_back(p);
  std::vector<Monomial> colon;
  for (const auto& m : g) {
    Monomial q = m;
    const int d = std::min<int>(q.e[x], e);
    q.e[x] = static_cast<std::uint16_t>(q.e[x] - d);
    q.deg -= d;
    colon.push_back(q);
  }
  std::vector<long> r = hn_rec(std::move(plus), n);
  poly_add_to(r, hn_rec(std::move(colon), n), e);
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::string fresh_name(const PolyRing& r, const std::string& base) {
  std::string s = base;
  while (r.has_var(s)) s += "_";
  return s;
}

}  // namespace

std::vector<long> hilbert_numerator(std::vector<Monomial> gens, int n) { return hn_rec(std::move(gens), n); }

mpq_class HilbertData::hilbert_poly_at(long n) const {
  mpq_class v = 0, p = 1;
  for (const auto& c : hilbert_poly) {
    v += c * p;
    p *= n;
  }
  return v;
}

std::string HilbertData::series_string() const {
  auto poly = [](const std::vector<long>& c) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] == 0) continue;
      long a = c[i];
      if (!first) os << (a < 0 ? " - " : " + ");
      else if (a < 0) os << "-";
      first = false;
      long b = a < 0 ? -a : a;
      if (i == 0 || b != 1) os << b;
      if (i > 0) os << (b != 1 ? "*t" : "t");
      if (i > 1) os << "^" << i;
    }
    return first ? std::string("0") : os.str();
  };
  return "(" + poly(h) + ")/(1-t)^" + std::to_string(dim);
}

std::string HilbertData::polynomial_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = hilbert_poly.size(); i-- > 0;) {
    const mpq_class& c = hilbert_poly[i];
    if (c == 0) continue;
    mpq_class a = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    if (i == 0 || a != 1) os << a.get_str();
    if (i > 0) os << (a != 1 ? "*n" : "n");
    if (i > 1) os << "^" << i;
  }
  return first ? "0" : os.str();
}

// ---------------------------------------------------------------------------

std::vector<MPoly> groebner_basis(const std::vector<MPoly>& gens) {
  std::vector<MPoly> nz;
  for (const auto& g : gens) {
    if (!g.is_zero()) nz.push_back(g);
  }
  if (nz.empty()) return {};
  const RingPtr& r = nz[0].ring();
  ModuleArith A(ModuleOrder::top(r, 1));
  std::vector<Vec> vs;
  for (const auto& g : nz) vs.push_back(A.from_poly(g, 0));
  ModuleGB gb = module_groebner(A, vs);
  std::vector<MPoly> out;
  for (const auto& v : gb.basis) out.push_back(A.to_polys(v)[0]);
  return out;
}

MPoly normal_form(const MPoly& f, const std::vector<MPoly>& gb) {
  if (gb.empty() || f.is_zero()) return f;
  ModuleArith A(ModuleOrder::top(f.ring(), 1));
  std::vector<Vec> vs;
  for (const auto& g : gb) vs.push_back(A.from_poly(g, 0));
  return A.to_polys(module_normal_form(A, A.from_poly(f, 0), vs))[0];
}

MPoly s_poly(const MPoly& f, const MPoly& g) {
  ModuleArith A(ModuleOrder::top(f.ring(), 1));
  return A.to_polys(s_vector(A, A.from_poly(f, 0), A.from_poly(g, 0)))[0];
}

bool buchberger_criterion(const std::vector<MPoly>& gb) {
  for (std::size_t i = 0; i < gb.size(); ++i) {
    for (std::size_t j = i + 1; j < gb.size(); ++j) {
      if (!normal_form(s_poly(gb[i], gb[j]), gb).is_zero()) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

Ideal::Ideal(RingPtr r, std::vector<MPoly> gens) : r_(std::move(r)), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    gens_.push_back(g.ring()->same_as(*r_) ? std::move(g) : g.in_ring(r_));
  }
}

const std::vector<MPoly>& Ideal::groebner() const {
  const std::string key = r_->order().name();
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->gb.find(key);
    if (it != cache_->gb.end()) return it->second;
  }
  std::vector<MPoly> gb = groebner_basis(gens_);
  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->gb.emplace(key, std::move(gb)).first->second;
}

std::vector<MPoly> Ideal::groebner(const MonomialOrder& o) const {
  if (o == r_->order()) return groebner();
  const std::string key = o.name();
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->gb.find(key);
    if (it != cache_->gb.end()) return it->second;
  }
  RingPtr s = r_->with_order(o);
  std::vector<MPoly> g;
  for (const auto& f : gens_) g.push_back(f.in_ring(s));
  std::vector<MPoly> gb = groebner_basis(g);
  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->gb.emplace(key, std::move(gb)).first->second;
}

MPoly Ideal::normal_form(const MPoly& f) const { return gonal::normal_form(f.in_ring(r_), groebner()); }

bool Ideal::contains(const MPoly& f) const { return normal_form(f).is_zero(); }

bool Ideal::contains(const Ideal& J) const {
  for (const auto& g : J.gens()) {
    if (!contains(g)) return false;
  }
  return true;
}

bool Ideal::is_unit() const {
  const auto& gb = groebner();
  return gb.size() == 1 && gb[0].is_constant();
}

bool Ideal::is_zero() const { return gens_.empty(); }

bool Ideal::is_homogeneous() const {
  for (const auto& g : gens_) {
    if (!g.is_homogeneous()) return false;
  }
  return true;
}

Ideal Ideal::operator+(const Ideal& o) const {
  std::vector<MPoly> g = gens_;
  for (const auto& f : o.gens_) g.push_back(f.in_ring(r_));
  return Ideal(r_, std::move(g));
}

Ideal Ideal::with(const std::vector<MPoly>& extra) const {
  std::vector<MPoly> g = gens_;
  for (const auto& f : extra) g.push_back(f.in_ring(r_));
  return Ideal(r_, std::move(g));
}

Ideal Ideal::in_ring(const RingPtr& target) const {
  std::vector<MPoly> g;
  for (const auto& f : gens_) g.push_back(f.in_ring(target));
  return Ideal(target, std::move(g));
}

int Ideal::dimension() const {
  const auto& gb = groebner(MonomialOrder::grevlex());
  if (gb.empty()) return r_->nvars();
  if (gb.size() == 1 && gb[0].is_constant()) return -1;
  const int n = r_->nvars();
  std::vector<std::uint32_t> masks;
  for (const auto& g : gb) {
    std::uint32_t m = 0;
    for (int i = 0; i < n; ++i) {
      if (g.lm().e[i]) m |= 1u << i;
    }
    masks.push_back(m);
  }
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    const int sz = __builtin_popcount(s);
    if (sz <= best) continue;
    bool ok = true;
    for (auto m : masks) {
      if ((m & ~s) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) best = sz;
  }
  return best;
}

HilbertData Ideal::hilbert() const {
  if (!is_homogeneous()) throw Error("hilbert: ideal is not homogeneous");
  const int n = r_->nvars();
  HilbertData hd;
  hd.nvars = n;
  const auto& gb = groebner(MonomialOrder::grevlex());
  std::vector<Monomial> leads;
  for (const auto& g : gb) leads.push_back(g.lm());
  hd.numerator = hilbert_numerator(leads, n);
  if (hd.numerator.empty()) {
    hd.dim = -1;
    return hd;
  }
  std::vector<long> h = hd.numerator;
  int divisions = 0;
  for (;;) {
    long v = 0;
    for (long c : h) v += c;
    if (v != 0 || divisions == n) break;
    // divide by (1 - t)
    std::vector<long> q(h.size() - 1, 0);
    long acc = 0;
    for (std::size_t i = 0; i + 1 < h.size(); ++i) {
      acc += h[i];
      q[i] = acc;
    }
    h = std::move(q);
    ++divisions;
  }
  hd.h = h;
  hd.dim = n - divisions;
  for (long c : h) hd.degree += c;
  // P(n) = sum_i h_i * binom(n - i + d - 1, d - 1)
  const int d = hd.dim;
  hd.hilbert_poly.assign(std::max(d, 1), 0);
  if (d == 0) {
    hd.hilbert_poly = {0};
    return hd;
  }
  for (std::size_t i = 0; i < h.size(); ++i) {
    std::vector<mpq_class> b{1};
    for (int k = 1; k <= d - 1; ++k) {
      // multiply by (n - i + k)/k
      std::vector<mpq_class> nb(b.size() + 1, 0);
      const mpq_class c0(static_cast<long>(k) - static_cast<long>(i), k);
      const mpq_class c1(1, k);
      for (std::size_t j = 0; j < b.size(); ++j) {
        nb[j] += b[j] * c0;
        nb[j + 1] += b[j] * c1;
      }
      b = std::move(nb);
    }
    for (std::size_t j = 0; j < b.size(); ++j) hd.hilbert_poly[j] += b[j] * h[i];
  }
  while (hd.hilbert_poly.size() > 1 && hd.hilbert_poly.back() == 0) hd.hilbert_poly.pop_back();
  return hd;
}

std::vector<Monomial> standard_monomials(const std::vector<MPoly>& gb) {
  if (gb.empty()) throw Error("not zero-dimensional");
  const RingPtr& r = gb[0].ring();
  const int n = r->nvars();
  for (int v = 0; v < n; ++v) {
    bool pure = false;
    for (const auto& g : gb) {
      if (g.lm().e[v] == g.lm().deg && g.lm().deg > 0) pure = true;
      if (g.lm().deg == 0) return {};
    }
    if (!pure) throw Error("not zero-dimensional");
  }
  std::vector<Monomial> out;
  std::set<Monomial> seen;
  std::vector<Monomial> frontier{Monomial{}};
  seen.insert(Monomial{});
  while (!frontier.empty()) {
    Monomial m = frontier.back();
    frontier.pop_back();
    out.push_back(m);
    for (int v = 0; v < n; ++v) {
      Monomial x = m * Monomial::var(v);
      if (seen.count(x)) continue;
      bool in_lead = false;
      for (const auto& g : gb) {
        if (g.lm().divides(x)) {
          in_lead = true;
          break;
        }
      }
      if (in_lead) continue;
      seen.insert(x);
      frontier.push_back(x);
    }
  }
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return r->compare(a, b) < 0; });
  return out;
}

long Ideal::affine_degree() const { return static_cast<long>(standard_monomials(groebner()).size()); }

std::vector<MPoly> Ideal::degree_part(int d) const {
  if (!is_homogeneous()) throw Error("degree_part: ideal is not homogeneous");
  const auto& gb = groebner();
  std::vector<MPoly> out;
  for (const auto& mono : monomials_of_degree(r_->nvars(), d)) {
    bool lead = false;
    for (const auto& g : gb) {
      if (g.lm().divides(mono)) {
        lead = true;
        break;
      }
    }
    if (!lead) continue;
    MPoly m = MPoly::monomial(r_, mono, r_->field()->one());
    out.push_back(m - gonal::normal_form(m, gb));
  }
  return out;
}

// ---------------------------------------------------------------------------

Ideal eliminate(const Ideal& I, const std::vector<std::string>& vars) {
  const RingPtr& r = I.ring();
  std::vector<std::string> order = vars, rest;
  for (const auto& v : vars) r->index_of(v);
  for (const auto& v : r->vars()) {
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) rest.push_back(v);
  }
  order.insert(order.end(), rest.begin(), rest.end());
  const int k = static_cast<int>(vars.size());
  RingPtr big = PolyRing::make(r->field(), order, MonomialOrder::block_order(k));
  std::vector<MPoly> g;
  for (const auto& f : I.gens()) g.push_back(f.in_ring(big));
  MonomialOrder small_order = r->order().kind == OrderKind::Block ? MonomialOrder::grevlex() : r->order();
  RingPtr small = PolyRing::make(r->field(), rest, small_order);
  std::vector<MPoly> kept;
  for (const auto& f : groebner_basis(g)) {
    bool involves = false;
    for (int i = 0; i < k; ++i) involves = involves || f.involves(i);
    if (!involves) kept.push_back(f.in_ring(small));
  }
  return Ideal(small, std::move(kept));
}

Ideal saturate(const Ideal& I, const MPoly& f) {
  if (f.is_zero()) throw Error("saturation by zero polynomial");
  const RingPtr& r = I.ring();
  const std::string w = fresh_name(*r, "w_sat");
  std::vector<std::string> vars{w};
  vars.insert(vars.end(), r->vars().begin(), r->vars().end());
  RingPtr big = PolyRing::make(r->field(), vars, MonomialOrder::block_order(1));
  std::vector<MPoly> g;
  for (const auto& p : I.gens()) g.push_back(p.in_ring(big));
  g.push_back(MPoly::from_int(big, 1) - MPoly::var(big, 0) * f.in_ring(big));
  std::vector<MPoly> kept;
  for (const auto& p : groebner_basis(g)) {
    if (!p.involves(0)) kept.push_back(p.in_ring(r));
  }
  return Ideal(r, std::move(kept));
}

Ideal saturate(const Ideal& I, const std::vector<MPoly>& fs) {
  if (fs.empty()) return I;
  Ideal acc = saturate(I, fs[0]);
  for (std::size_t i = 1; i < fs.size(); ++i) acc = intersect(acc, saturate(I, fs[i]));
  return acc;
}

Ideal intersect(const Ideal& I, const Ideal& J) {
  const RingPtr& r = I.ring();
  const std::string t = fresh_name(*r, "t_int");
  std::vector<std::string> vars{t};
  vars.insert(vars.end(), r->vars().begin(), r->vars().end());
  RingPtr big = PolyRing::make(r->field(), vars, MonomialOrder::block_order(1));
  MPoly tv = MPoly::var(big, 0);
  MPoly one_minus = MPoly::from_int(big, 1) - tv;
  std::vector<MPoly> g;
  for (const auto& p : I.gens()) g.push_back(tv * p.in_ring(big));
  for (const auto& p : J.gens()) g.push_back(one_minus * p.in_ring(big));
  std::vector<MPoly> kept;
  for (const auto& p : groebner_basis(g)) {
    if (!p.involves(0)) kept.push_back(p.in_ring(r));
  }
  return Ideal(r, std::move(kept));
}

Ideal quotient(const Ideal& I, const MPoly& f) {
  Ideal both = intersect(I, Ideal(I.ring(), {f}));
  std::vector<MPoly> g;
  for (const auto& p : both.gens()) g.push_back(divide_exact(p, f.in_ring(I.ring())));
  return Ideal(I.ring(), std::move(g));
}

}  // namespace gonal

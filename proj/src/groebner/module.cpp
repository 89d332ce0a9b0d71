#include "gonal/groebner/module.hpp"

#include <algorithm>
#include <numeric>

namespace gonal {

ModuleOrderPtr ModuleOrder::top(RingPtr r, int rank, std::vector<int> shifts) {
  auto o = std::shared_ptr<ModuleOrder>(new ModuleOrder());
  o->r_ = std::move(r);
  o->rank_ = rank;
  o->kind_ = Kind::Top;
  if (!shifts.empty() && static_cast<int>(shifts.size()) != rank) throw Error("shift list length mismatch");
  o->shifts_ = std::move(shifts);
  return o;
}

ModuleOrderPtr ModuleOrder::pot(RingPtr r, int rank) {
  auto o = std::shared_ptr<ModuleOrder>(new ModuleOrder());
  o->r_ = std::move(r);
  o->rank_ = rank;
  o->kind_ = Kind::Pot;
  return o;
}

ModuleOrderPtr ModuleOrder::schreyer(ModuleOrderPtr prev, std::vector<std::pair<Monomial, int>> leads) {
  auto o = std::shared_ptr<ModuleOrder>(new ModuleOrder());
  o->r_ = prev->ring();
  o->rank_ = static_cast<int>(leads.size());
  o->kind_ = Kind::Schreyer;
  for (const auto& [m, c] : leads) o->shifts_.push_back(m.deg + prev->shift(c));
  o->prev_ = std::move(prev);
  o->leads_ = std::move(leads);
  return o;
}

int ModuleOrder::compare(const Monomial& a, int ia, const Monomial& b, int ib) const {
  switch (kind_) {
    case Kind::Top: {
      if (!shifts_.empty()) {
        const int da = a.deg + shifts_[ia], db = b.deg + shifts_[ib];
        if (da != db) return da > db ? 1 : -1;
      }
      int c = r_->compare(a, b);
      if (c) return c;
      if (ia != ib) return ia < ib ? 1 : -1;
      return 0;
    }
    case Kind::Pot: {
      if (ia != ib) return ia < ib ? 1 : -1;
      return r_->compare(a, b);
    }
    case Kind::Schreyer: {
      const auto& la = leads_[ia];
      const auto& lb = leads_[ib];
      int c = prev_->compare(a * la.first, la.second, b * lb.first, lb.second);
      if (c) return c;
      if (ia != ib) return ia > ib ? 1 : -1;
      return 0;
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------

namespace {

std::uint32_t support_mask(const Monomial& m) {
  std::uint32_t mask = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    if (m.e[i]) mask |= 1u << i;
  }
  return mask;
}

// a[from..] - c*m*b, merged.
std::vector<MTerm> merge_sub(const ModuleArith& A, const std::vector<MTerm>& a, std::size_t from, const Scalar& c,
                             const Monomial& m, const std::vector<MTerm>& b) {
  const Field& k = *A.field();
  const ModuleOrder& o = *A.order();
  std::vector<MTerm> out;
  out.reserve(a.size() - from + b.size());
  std::size_t i = from, j = 0;
  const bool unit = m.is_one();
  while (i < a.size() && j < b.size()) {
    Monomial bm = unit ? b[j].m : b[j].m * m;
    int cmp = o.compare(a[i].m, a[i].comp, bm, b[j].comp);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({bm, b[j].comp, k.neg(k.mul(c, b[j].c))});
      ++j;
    } else {
      Scalar s = k.sub(a[i].c, k.mul(c, b[j].c));
      if (!k.is_zero(s)) out.push_back({bm, b[j].comp, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({unit ? b[j].m : b[j].m * m, b[j].comp, k.neg(k.mul(c, b[j].c))});
  return out;
}

}  // namespace

Vec ModuleArith::make(std::vector<MTerm> terms) const {
  const Field& k = *k_;
  std::sort(terms.begin(), terms.end(), [&](const MTerm& a, const MTerm& b) { return compare(a, b) > 0; });
  Vec v;
  for (auto& t : terms) {
    if (!v.t.empty() && v.t.back().m == t.m && v.t.back().comp == t.comp) {
      k.add_to(v.t.back().c, t.c);
    } else {
      if (!v.t.empty() && k.is_zero(v.t.back().c)) v.t.pop_back();
      v.t.push_back(std::move(t));
    }
  }
  if (!v.t.empty() && k.is_zero(v.t.back().c)) v.t.pop_back();
  return v;
}

Vec ModuleArith::from_poly(const MPoly& f, int comp) const {
  std::vector<MTerm> t;
  for (const auto& x : f.terms()) t.push_back({x.m, comp, x.c});
  return make(std::move(t));
}

std::vector<MPoly> ModuleArith::to_polys(const Vec& v) const {
  const RingPtr& r = o_->ring();
  std::vector<std::vector<Term>> parts(o_->rank());
  for (const auto& t : v.t) parts[t.comp].push_back({t.m, t.c});
  std::vector<MPoly> out;
  for (auto& p : parts) out.emplace_back(r, std::move(p));
  return out;
}

Vec ModuleArith::add(const Vec& a, const Vec& b) const {
  Vec v;
  v.t = merge_sub(*this, a.t, 0, k_->neg(k_->one()), Monomial{}, b.t);
  return v;
}

Vec ModuleArith::sub_mul(const Vec& a, const Scalar& c, const Monomial& m, const Vec& b) const {
  Vec v;
  v.t = merge_sub(*this, a.t, 0, c, m, b.t);
  return v;
}

Vec ModuleArith::scale(const Vec& a, const Scalar& c) const {
  if (k_->is_zero(c)) return {};
  Vec v = a;
  for (auto& t : v.t) t.c = k_->mul(t.c, c);
  return v;
}

Vec ModuleArith::mul_term(const Vec& a, const Scalar& c, const Monomial& m) const {
  if (k_->is_zero(c)) return {};
  Vec v;
  v.t.reserve(a.t.size());
  for (const auto& t : a.t) v.t.push_back({t.m * m, t.comp, k_->mul(t.c, c)});
  // Multiplying by a monomial preserves the order, Schreyer included.
  return v;
}

Vec ModuleArith::monic(const Vec& a) const {
  if (a.is_zero() || k_->is_one(a.lt().c)) return a;
  return scale(a, k_->inv(a.lt().c));
}

Vec ModuleArith::resort(const Vec& a) const { return make(a.t); }

int ModuleArith::degree(const Vec& a) const {
  int d = -1;
  for (const auto& t : a.t) d = std::max(d, t.m.deg + o_->shift(t.comp));
  return d;
}

Vec s_vector(const ModuleArith& A, const Vec& f, const Vec& g) {
  const Field& k = *A.field();
  const Monomial l = f.lt().m.lcm(g.lt().m);
  Vec a = A.mul_term(f, k.inv(f.lt().c), l / f.lt().m);
  return A.sub_mul(a, k.inv(g.lt().c), l / g.lt().m, g);
}

// ---------------------------------------------------------------------------

namespace {

struct Reducer {
  const Vec* v;
  std::uint32_t mask;
};

const Reducer* find_reducer(const std::vector<Reducer>& rs, const MTerm& t, std::uint32_t tmask) {
  for (const auto& r : rs) {
    const MTerm& l = r.v->lt();
    if (l.comp != t.comp || (r.mask & ~tmask) || l.m.deg > t.m.deg) continue;
    if (l.m.divides(t.m)) return &r;
  }
  return nullptr;
}

struct Element {
  Vec v;
  int sugar;
  std::vector<MPoly> cof;
  bool active = true;
  std::uint32_t mask = 0;
};

struct Pair {
  int i, j;
  Monomial lcm;
  int comp;
  int sugar;
};

// Full reduction of f (with sugar and optional cofactors) by elements.
void reduce_full(const ModuleArith& A, Vec& f, int& sugar, std::vector<MPoly>* cof, const std::vector<Element>& G,
                 const std::vector<int>& reducers) {
  const Field& k = *A.field();
  std::vector<Reducer> rs;
  rs.reserve(reducers.size());
  for (int idx : reducers) rs.push_back({&G[idx].v, G[idx].mask});
  std::vector<MTerm> done;
  std::vector<MTerm> p = std::move(f.t);
  std::size_t pos = 0;
  while (pos < p.size()) {
    const MTerm& t = p[pos];
    const Reducer* r = find_reducer(rs, t, support_mask(t.m));
    if (!r) {
      done.push_back(t);
      ++pos;
      continue;
    }
    const std::size_t gi = static_cast<std::size_t>(r - rs.data());
    const Element& g = G[reducers[gi]];
    const Monomial m = t.m / g.v.lt().m;
    const Scalar c = k.div(t.c, g.v.lt().c);
    sugar = std::max(sugar, g.sugar + m.deg);
    if (cof) {
      for (std::size_t j = 0; j < cof->size(); ++j) {
        if (!g.cof[j].is_zero()) (*cof)[j] = (*cof)[j].sub_mul(c, m, g.cof[j]);
      }
    }
    p = merge_sub(A, p, pos, c, m, g.v.t);
    pos = 0;
  }
  f.t = std::move(done);
}

}  // namespace

Vec module_normal_form(const ModuleArith& A, const Vec& f, const std::vector<Vec>& gb, std::vector<MPoly>* quotients) {
  const Field& k = *A.field();
  const RingPtr& R = A.order()->ring();
  std::vector<Reducer> rs;
  for (const auto& g : gb) {
    if (!g.is_zero()) rs.push_back({&g, support_mask(g.lt().m)});
  }
  std::vector<std::vector<Term>> q(gb.size());
  std::vector<MTerm> done;
  std::vector<MTerm> p = f.t;
  std::size_t pos = 0;
  while (pos < p.size()) {
    const MTerm& t = p[pos];
    const Reducer* r = find_reducer(rs, t, support_mask(t.m));
    if (!r) {
      done.push_back(t);
      ++pos;
      continue;
    }
    const Vec& g = *r->v;
    const Monomial m = t.m / g.lt().m;
    const Scalar c = k.div(t.c, g.lt().c);
    if (quotients) q[static_cast<std::size_t>(r->v - gb.data())].push_back({m, c});
    p = merge_sub(A, p, pos, c, m, g.t);
    pos = 0;
  }
  if (quotients) {
    quotients->clear();
    for (auto& terms : q) quotients->emplace_back(R, std::move(terms));
  }
  Vec out;
  out.t = std::move(done);
  return out;
}

ModuleGB module_groebner(const ModuleArith& A, const std::vector<Vec>& gens, bool track) {
  const Field& k = *A.field();
  const ModuleOrder& ord = *A.order();
  const RingPtr& R = ord.ring();
  const bool rank_one = ord.rank() == 1;
  const std::size_t ngens = gens.size();

  std::vector<Element> G;
  std::vector<Pair> B;

  auto pair_less = [&](const Pair& a, const Pair& b) {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    int c = ord.compare(a.lcm, a.comp, b.lcm, b.comp);
    if (c) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  };

  auto update = [&](int h) {
    const MTerm& lh = G[h].v.lt();
    struct Cand {
      int g;
      Monomial lcm;
      bool coprime;
      bool keep;
    };
    std::vector<Cand> C;
    for (int g = 0; g < h; ++g) {
      if (!G[g].active || G[g].v.lt().comp != lh.comp) continue;
      const Monomial& lg = G[g].v.lt().m;
      C.push_back({g, lh.m.lcm(lg), rank_one && lh.m.coprime(lg), true});
    }
    // Chain criterion inside the new pairs.
    for (std::size_t a = 0; a < C.size(); ++a) {
      if (C[a].coprime) continue;
      for (std::size_t b = 0; b < C.size(); ++b) {
        if (a == b || !C[b].keep) continue;
        if (C[b].lcm.divides(C[a].lcm) && (C[b].lcm != C[a].lcm || b < a)) {
          C[a].keep = false;
          break;
        }
      }
    }
    // Old pairs made redundant by h.
    std::vector<Pair> kept;
    kept.reserve(B.size());
    for (const auto& p : B) {
      if (p.comp == lh.comp && lh.m.divides(p.lcm)) {
        const Monomial l1 = G[p.i].v.lt().m.lcm(lh.m), l2 = G[p.j].v.lt().m.lcm(lh.m);
        if (l1 != p.lcm && l2 != p.lcm) continue;
      }
      kept.push_back(p);
    }
    B = std::move(kept);
    for (const auto& c : C) {
      if (!c.keep || c.coprime) continue;
      const Element& eg = G[c.g];
      const int sug = std::max(eg.sugar + (c.lcm.deg - eg.v.lt().m.deg), G[h].sugar + (c.lcm.deg - lh.m.deg));
      B.push_back({c.g, h, c.lcm, lh.comp, sug});
    }
    for (int g = 0; g < h; ++g) {
      if (G[g].active && G[g].v.lt().comp == lh.comp && lh.m.divides(G[g].v.lt().m)) G[g].active = false;
    }
  };

  auto active_indices = [&]() {
    std::vector<int> idx;
    for (int i = 0; i < static_cast<int>(G.size()); ++i) {
      if (G[i].active) idx.push_back(i);
    }
    return idx;
  };

  auto insert = [&](Vec v, int sugar, std::vector<MPoly> cof) {
    Scalar inv = k.inv(v.lt().c);
    v = A.scale(v, inv);
    if (track) {
      for (auto& c : cof) c = c.scale(inv);
    }
    Element e{std::move(v), sugar, std::move(cof), true, 0};
    e.mask = support_mask(e.v.lt().m);
    G.push_back(std::move(e));
    update(static_cast<int>(G.size()) - 1);
  };

  // Inputs: sorted by increasing leading term for determinism.
  std::vector<std::size_t> order(ngens);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (gens[a].is_zero() || gens[b].is_zero()) return !gens[a].is_zero() && gens[b].is_zero();
    int da = A.degree(gens[a]), db = A.degree(gens[b]);
    if (da != db) return da < db;
    return A.compare(gens[a].lt(), gens[b].lt()) < 0;
  });
  for (std::size_t oi : order) {
    if (gens[oi].is_zero()) continue;
    Vec v = gens[oi];
    int sugar = A.degree(v);
    std::vector<MPoly> cof;
    if (track) {
      cof.assign(ngens, MPoly(R));
      cof[oi] = MPoly::from_int(R, 1);
    }
    reduce_full(A, v, sugar, track ? &cof : nullptr, G, active_indices());
    if (v.is_zero()) continue;
    insert(std::move(v), sugar, std::move(cof));
  }

  while (!B.empty()) {
    auto it = std::min_element(B.begin(), B.end(), pair_less);
    Pair p = *it;
    B.erase(it);
    const Element& fi = G[p.i];
    const Element& fj = G[p.j];
    Vec s = s_vector(A, fi.v, fj.v);
    int sugar = p.sugar;
    std::vector<MPoly> cof;
    if (track) {
      const Monomial mi = p.lcm / fi.v.lt().m, mj = p.lcm / fj.v.lt().m;
      const Scalar ci = k.inv(fi.v.lt().c), cj = k.inv(fj.v.lt().c);
      cof.assign(ngens, MPoly(R));
      for (std::size_t t = 0; t < ngens; ++t) {
        cof[t] = fi.cof[t].mul_term(mi, ci).sub_mul(cj, mj, fj.cof[t]);
      }
    }
    reduce_full(A, s, sugar, track ? &cof : nullptr, G, active_indices());
    if (s.is_zero()) continue;
    insert(std::move(s), sugar, std::move(cof));
  }

  // Interreduce the minimal basis.
  std::vector<int> idx = active_indices();
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return A.compare(G[a].v.lt(), G[b].v.lt()) < 0; });
  ModuleGB out;
  for (std::size_t a = 0; a < idx.size(); ++a) {
    Element& e = G[idx[a]];
    std::vector<int> others;
    for (std::size_t b = 0; b < idx.size(); ++b) {
      if (b != a) others.push_back(idx[b]);
    }
    // Leading term is irreducible by the others; reduce the tail only.
    MTerm lead = e.v.t.front();
    Vec tail;
    tail.t.assign(e.v.t.begin() + 1, e.v.t.end());
    int sugar = e.sugar;
    std::vector<MPoly> cof = e.cof;
    reduce_full(A, tail, sugar, track ? &cof : nullptr, G, others);
    Vec full;
    full.t.reserve(tail.t.size() + 1);
    full.t.push_back(lead);
    for (auto& t : tail.t) full.t.push_back(std::move(t));
    out.basis.push_back(std::move(full));
    if (track) out.cofactors.push_back(std::move(cof));
  }
  return out;
}

}  // namespace gonal

#include "gonal/genus6/genus6.hpp"

#include <algorithm>
#include <map>
#include <thread>

namespace gonal {

namespace {

const std::vector<std::string> kPatchVars{"u1", "u2", "v1", "v2", "w1", "w2", "r1", "r2", "r3", "s1", "s2", "s3"};

std::vector<int> complement(const std::vector<int>& s, int n) {
  std::vector<int> out;
  for (int j = 0; j < n; ++j) {
    if (std::find(s.begin(), s.end(), j) == s.end()) out.push_back(j);
  }
  return out;
}

void check_subset(const std::vector<int>& s, int size) {
  if (static_cast<int>(s.size()) != size) throw Error("patch: wrong subset size");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] > 4 || (i > 0 && s[i] <= s[i - 1])) throw Error("patch: subset must be increasing in 0..4");
  }
}

std::string basis_key(const std::vector<MPoly>& gb) {
  std::string key;
  for (const auto& g : gb) key += g.to_string() + ";";
  return key;
}

// Reduced GB over the base field of the ideal of the whole Galois orbit:
// the generator of the point field becomes a variable and is eliminated.
std::string orbit_key(const std::vector<MPoly>& minors, const RingPtr& base_ring, const FieldPtr& L) {
  const FieldPtr& k = base_ring->field();
  if (L->same_as(*k)) {
    std::vector<MPoly> g;
    for (const auto& m : minors) g.push_back(m.in_ring(base_ring));
    return basis_key(Ideal(base_ring, g).groebner());
  }
  if (!L->base()->same_as(*k)) throw Error("scroll key: point field must be a simple extension of the base");
  std::vector<std::string> names{"theta_"};
  for (const auto& v : base_ring->vars()) names.push_back(v);
  RingPtr big = PolyRing::make(k, names);
  const int d = L->degree();
  std::vector<MPoly> gens;
  std::vector<Term> mp;
  for (int i = 0; i <= d; ++i) {
    Monomial m = Monomial::var(0, i);
    const Scalar c = i == d ? k->one() : L->minpoly()[i];
    if (!k->is_zero(c)) mp.push_back({m, c});
  }
  gens.emplace_back(big, std::move(mp));
  for (const auto& f : minors) {
    std::vector<Term> ts;
    for (const auto& t : f.terms()) {
      Monomial shifted;
      for (int v = 0; v < base_ring->nvars(); ++v) shifted.e[v + 1] = t.m.e[v];
      shifted.deg = t.m.deg;
      const auto& cs = t.c.coeffs();
      for (int i = 0; i < static_cast<int>(cs.size()); ++i) {
        if (k->is_zero(cs[i])) continue;
        ts.push_back({shifted * Monomial::var(0, i), cs[i]});
      }
    }
    gens.emplace_back(big, std::move(ts));
  }
  Ideal e = eliminate(Ideal(big, gens), {"theta_"});
  return basis_key(e.in_ring(base_ring).groebner());
}

}  // namespace

Ideal ScrollPresentation::ideal() const { return Ideal(t_sol.ring(), minors); }

int ScrollSearch::geometric_count() const {
  int n = 0;
  for (const auto& s : scrolls) n += s.orbit_size;
  return n;
}

PatchSystem patch_system(const PolyMatrix& m5, const std::vector<int>& f_pivots, const std::vector<int>& g_pivots) {
  check_subset(f_pivots, 3);
  check_subset(g_pivots, 2);
  if (m5.rows() != 5 || m5.cols() != 5) throw Error("patch_system: expected a 5 x 5 matrix");
  const RingPtr& xr = m5.ring();
  const FieldPtr& k = xr->field();
  const int n = xr->nvars();
  PatchSystem ps{f_pivots, g_pivots, PolyRing::make(k, kPatchVars), {}, {}, {}};
  const RingPtr& P = ps.ring;
  auto var = [&](const std::string& s) { return MPoly::var(P, s); };
  const MPoly one = MPoly::from_int(P, 1), zero(P);

  // Rows of G: identity at g_pivots, unknowns r (resp. s) elsewhere.
  const auto g_free = complement(g_pivots, 5);
  std::vector<std::vector<MPoly>> mg(2, std::vector<MPoly>(5, zero));
  for (int row = 0; row < 2; ++row) {
    mg[row][g_pivots[0]] = row == 0 ? one : zero;
    mg[row][g_pivots[1]] = row == 1 ? one : zero;
    for (int q = 0; q < 3; ++q) mg[row][g_free[q]] = var((row == 0 ? "r" : "s") + std::to_string(q + 1));
  }
  auto image = [&](int row) {
    std::vector<std::vector<MPoly>> out(5, std::vector<MPoly>(n, zero));
    for (int c = 0; c < 5; ++c) {
      for (int a = 0; a < 5; ++a) {
        for (const auto& t : m5.at(a, c).terms()) {
          int j = 0;
          while (!t.m.e[j]) ++j;
          out[c][j] += mg[row][a].scale(t.c);
        }
      }
    }
    return out;
  };
  ps.mu = image(0);
  ps.nu = image(1);

  // Rows of F: identity at f_pivots; row t has (u, v, w)[t] at the two free columns.
  const auto f_free = complement(f_pivots, 5);
  const char* row_names[3] = {"u", "v", "w"};
  // Blocks of n coefficient equations, for the two free columns of mu, then of nu.
  for (const auto* img : {&ps.mu, &ps.nu}) {
    for (int q = 0; q < 2; ++q) {
      for (int j = 0; j < n; ++j) {
        MPoly eq = (*img)[f_free[q]][j];
        for (int t = 0; t < 3; ++t) eq -= (*img)[f_pivots[t]][j] * var(row_names[t] + std::to_string(q + 1));
        ps.equations.push_back(eq);
      }
    }
  }
  return ps;
}

PatchResult scrolls_on_patch(const PolyMatrix& m5, const std::vector<int>& f_pivots, const std::vector<int>& g_pivots,
                             std::uint64_t seed) {
  PatchSystem ps = patch_system(m5, f_pivots, g_pivots);
  PatchResult out;
  Ideal J(ps.ring, ps.equations);
  const int dim = dimension_by_reduction(J);
  if (dim < 0) return out;
  if (dim > 0) {
    out.status = PatchResult::Infinite;
    return out;
  }
  out.status = PatchResult::Finite;
  ZeroDimSolution sol = solve_zero_dim(J, seed);
  out.degree = sol.degree;
  const RingPtr& xr = m5.ring();
  const int n = xr->nvars();
  const auto f_free = complement(f_pivots, 5);
  const auto g_free = complement(g_pivots, 5);
  for (const auto& pt : sol.points) {
    const FieldPtr& L = pt.field;
    const auto& val = pt.coords;  // in kPatchVars order
    RingPtr xl = xr->with_field(L);
    Mat F(L, 3, 5), G(L, 2, 5);
    for (int t = 0; t < 3; ++t) {
      F.at(t, f_pivots[t]) = L->one();
      for (int q = 0; q < 2; ++q) F.at(t, f_free[q]) = val[2 * t + q];
    }
    for (int row = 0; row < 2; ++row) {
      G.at(row, g_pivots[row]) = L->one();
      for (int q = 0; q < 3; ++q) G.at(row, g_free[q]) = val[6 + 3 * row + q];
    }
    PolyMatrix T(xl, 2, 3);
    for (int row = 0; row < 2; ++row) {
      const auto& img = row == 0 ? ps.mu : ps.nu;
      for (int t = 0; t < 3; ++t) {
        std::vector<Scalar> c(n);
        for (int j = 0; j < n; ++j) c[j] = img[f_pivots[t]][j].eval(L, val);
        T.at(row, t) = MPoly::linear(xl, c);
      }
    }
    std::vector<MPoly> mins = minors(T, 2);
    std::string key = orbit_key(mins, xr, L);
    ScrollPresentation s{L, pt.eliminant_factor, pt.orbit_size(), F, G, T, mins, key, f_pivots, g_pivots,
                         pt.multiplicity};
    out.scrolls.push_back(std::move(s));
  }
  return out;
}

ScrollSearch all_scrolls(const PolyMatrix& m5, const ScrollSearchOptions& opts) {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> patches;
  if (opts.only_patch) {
    patches.push_back(*opts.only_patch);
  } else {
    for (const auto& f : subsets(5, 3)) {
      for (const auto& g : subsets(5, 2)) patches.emplace_back(f, g);
    }
  }
  ScrollSearch out;
  std::map<std::string, bool> seen;
  const int jobs = std::max(1, opts.jobs);
  for (std::size_t start = 0; start < patches.size(); start += jobs) {
    const std::size_t end = std::min(patches.size(), start + static_cast<std::size_t>(jobs));
    std::vector<std::optional<PatchResult>> results(end - start);
    std::vector<std::string> errors(end - start);
    auto work = [&](std::size_t i) {
      try {
        results[i] = scrolls_on_patch(m5, patches[start + i].first, patches[start + i].second, opts.seed);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    };
    if (jobs == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t i = 0; i < results.size(); ++i) pool.emplace_back(work, i);
      for (auto& th : pool) th.join();
    }
    // Merge in patch order so the outcome does not depend on jobs.
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (!errors[i].empty()) throw Error(errors[i]);
      ++out.patches_tried;
      if (results[i]->status == PatchResult::Infinite) {
        out.infinite_family = true;
        return out;
      }
      for (auto& s : results[i]->scrolls) {
        if (seen.emplace(s.key, true).second) out.scrolls.push_back(std::move(s));
      }
      if (opts.stop_at > 0 && out.geometric_count() >= opts.stop_at) return out;
    }
  }
  return out;
}

}  // namespace gonal

#pragma once

#include "gonal/arith/linalg.hpp"
#include "gonal/geometry/geometry.hpp"
#include "gonal/groebner/implicit.hpp"
#include "gonal/mpoly/parse.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fixtures {

inline std::string read_text(const std::string& name) {
  std::ifstream in(std::string(GONAL_TEST_DATA) + "/" + name);
  if (!in) throw gonal::Error("missing fixture " + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline gonal::IdealText load(const std::string& name) { return gonal::parse_ideal_text(read_text(name)); }

inline std::vector<gonal::MPoly> parse_all(const gonal::RingPtr& r, const std::vector<std::string>& s) {
  std::vector<gonal::MPoly> out;
  for (const auto& x : s) out.push_back(gonal::parse_poly(r, x));
  return out;
}

/// Canonical ideal of the plane sextic with an A3 point and two nodes.
inline std::vector<gonal::MPoly> sextic_a3_canonical(const gonal::RingPtr& target) {
  auto plane = load("sextic_a3.txt");
  auto map = parse_all(plane.ring, {"x^2*z", "x*y^2", "x*y*z", "x*z^2", "y^2*z", "y*z^2"});
  return gonal::image_forms(plane.polys[0], map, target, 2);
}

/// Random form of degree d whose monomials pass the filter.
template <class Pred>
gonal::MPoly random_form(const gonal::RingPtr& r, int d, gonal::Rng& rng, Pred keep) {
  std::vector<gonal::Term> t;
  for (const auto& m : gonal::monomials_of_degree(r->nvars(), d)) {
    if (keep(m)) t.push_back({m, r->field()->random(rng)});
  }
  return gonal::MPoly(r, std::move(t));
}

inline gonal::MPoly random_form(const gonal::RingPtr& r, int d, gonal::Rng& rng) {
  return random_form(r, d, rng, [](const gonal::Monomial&) { return true; });
}

/// The polynomials after a random invertible linear change of coordinates.
inline std::vector<gonal::MPoly> random_linear_change(const std::vector<gonal::MPoly>& f, gonal::Rng& rng) {
  using namespace gonal;
  const RingPtr& r = f[0].ring();
  const int n = r->nvars();
  for (;;) {
    Mat a(r->field(), n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) a.at(i, j) = r->field()->random(rng);
    }
    if (a.rank() < n) continue;
    std::vector<MPoly> images;
    for (int i = 0; i < n; ++i) images.push_back(MPoly::linear(r, a.row(i)));
    std::vector<MPoly> out;
    for (const auto& g : f) out.push_back(g.compose(images));
    return out;
  }
}

/// Canonical ideal (quadrics and cubics) of a plane curve under adjoint forms.
inline std::vector<gonal::MPoly> canonical_from_plane(const gonal::MPoly& plane, const std::vector<gonal::MPoly>& adj,
                                                      const gonal::RingPtr& target) {
  auto q = gonal::image_forms(plane, adj, target, 2);
  auto c = gonal::image_forms(plane, adj, target, 3);
  q.insert(q.end(), c.begin(), c.end());
  return q;
}

/// Smooth plane quintic, canonically embedded by conics.
inline std::vector<gonal::MPoly> plane_quintic_canonical(const gonal::RingPtr& target, gonal::Rng& rng) {
  auto P = gonal::PolyRing::make(target->field(), {"a", "b", "c"});
  auto f = random_form(P, 5, rng);
  return canonical_from_plane(f, parse_all(P, {"a^2", "a*b", "a*c", "b^2", "b*c", "c^2"}), target);
}

/// Genus 5: plane quintic with a node at (0:0:1); adjoint conics through it.
inline std::vector<gonal::MPoly> nodal_quintic_canonical(const gonal::RingPtr& target, gonal::Rng& rng) {
  auto P = gonal::PolyRing::make(target->field(), {"a", "b", "c"});
  auto f = random_form(P, 5, rng, [](const gonal::Monomial& m) { return m.e[0] + m.e[1] >= 2; });
  return canonical_from_plane(f, parse_all(P, {"a^2", "a*b", "a*c", "b^2", "b*c"}), target);
}

/// Genus 6 trigonal: sextic with a triple point at (0:0:1) and a node at (0:1:0).
inline std::vector<gonal::MPoly> triple_point_sextic_canonical(const gonal::RingPtr& target, gonal::Rng& rng) {
  auto P = gonal::PolyRing::make(target->field(), {"a", "b", "c"});
  auto f = random_form(P, 6, rng,
                       [](const gonal::Monomial& m) { return m.e[0] + m.e[1] >= 3 && m.e[0] + m.e[2] >= 2; });
  return canonical_from_plane(f, parse_all(P, {"a^3", "a^2*b", "a^2*c", "a*b^2", "a*b*c", "b^2*c"}), target);
}

/// Three random quadrics in P^4.
inline std::vector<gonal::MPoly> random_net(const gonal::RingPtr& target, gonal::Rng& rng) {
  return {random_form(target, 2, rng), random_form(target, 2, rng), random_form(target, 2, rng)};
}

/// Three random quadrics in P^4 cutting out a smooth curve.
inline std::vector<gonal::MPoly> smooth_net(const gonal::RingPtr& target, gonal::Rng& rng) {
  for (;;) {
    auto g = random_net(target, rng);
    if (gonal::is_smooth(gonal::Ideal(target, g), 3)) return g;
  }
}

/// The five 4x4 Pfaffians of a 5x5 skew matrix given by its upper triangle
/// (upper[i][j] for i < j).
inline std::vector<gonal::MPoly> pfaffians(const std::vector<std::vector<gonal::MPoly>>& upper) {
  auto m = [&](int i, int j) { return upper[i][j]; };
  std::vector<gonal::MPoly> out;
  for (int drop = 0; drop < 5; ++drop) {
    std::vector<int> k;
    for (int i = 0; i < 5; ++i) {
      if (i != drop) k.push_back(i);
    }
    out.push_back(m(k[0], k[1]) * m(k[2], k[3]) - m(k[0], k[2]) * m(k[1], k[3]) + m(k[0], k[3]) * m(k[1], k[2]));
  }
  return out;
}

/// Pfaffians of a random skew matrix of linear forms in the first nv
/// variables of r.
inline std::vector<gonal::MPoly> random_pfaffians(const gonal::RingPtr& r, int nv, gonal::Rng& rng) {
  std::vector<std::vector<gonal::MPoly>> upper(5, std::vector<gonal::MPoly>(5, gonal::MPoly(r)));
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      upper[i][j] = random_form(r, 1, rng, [nv](const gonal::Monomial& m) {
        for (int v = nv; v < static_cast<int>(m.e.size()); ++v) {
          if (m.e[v]) return false;
        }
        return true;
      });
    }
  }
  return pfaffians(upper);
}

/// Genus-6 canonical curve: a random quintic del Pezzo surface in P^5 cut
/// by a random quadric. Retries until the curve is smooth.
inline std::vector<gonal::MPoly> del_pezzo_curve(const gonal::RingPtr& r, gonal::Rng& rng) {
  for (;;) {
    auto g = random_pfaffians(r, 6, rng);
    g.push_back(random_form(r, 2, rng));
    if (gonal::is_smooth(gonal::Ideal(r, g), 4)) return g;
  }
}

/// Genus-6 canonical curve on the cone over an elliptic normal quintic,
/// after a random change of coordinates.
inline std::vector<gonal::MPoly> elliptic_cone_curve(const gonal::RingPtr& r, gonal::Rng& rng) {
  for (;;) {
    auto g = random_pfaffians(r, 5, rng);
    g.push_back(random_form(r, 2, rng));
    if (gonal::is_smooth(gonal::Ideal(r, g), 4)) return random_linear_change(g, rng);
  }
}

}  // namespace fixtures

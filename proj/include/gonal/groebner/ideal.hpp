#pragma once

#include "gonal/mpoly/mpoly.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace gonal {

/// Hilbert series data of R/I for homogeneous I.
struct HilbertData {
  int nvars = 0;
  /// Krull dimension of R/I (projective dimension + 1).
  int dim = 0;
  long degree = 0;
  /// Numerator over (1-t)^nvars, low to high.
  std::vector<long> numerator;
  /// Reduced numerator h(t) over (1-t)^dim.
  std::vector<long> h;
  /// Hilbert polynomial coefficients in n, low to high.
  std::vector<mpq_class> hilbert_poly;

  /// Value of the Hilbert polynomial at n.
  mpq_class hilbert_poly_at(long n) const;
  std::string series_string() const;
  std::string polynomial_string() const;
};

/// Ideal of a polynomial ring with cached reduced Groebner bases.
class Ideal {
 public:
  Ideal(RingPtr r, std::vector<MPoly> gens);

  const RingPtr& ring() const { return r_; }
  const std::vector<MPoly>& gens() const { return gens_; }

  /// Reduced GB for the ring's order.
  const std::vector<MPoly>& groebner() const;
  /// Reduced GB for another order; polynomials live in ring()->with_order(o).
  std::vector<MPoly> groebner(const MonomialOrder& o) const;

  MPoly normal_form(const MPoly& f) const;
  bool contains(const MPoly& f) const;
  bool contains(const Ideal& J) const;
  bool equals(const Ideal& J) const { return contains(J) && J.contains(*this); }
  bool is_unit() const;
  bool is_zero() const;
  bool is_homogeneous() const;

  Ideal operator+(const Ideal& o) const;
  Ideal with(const std::vector<MPoly>& extra) const;
  /// Same generators in another ring (matching variable names).
  Ideal in_ring(const RingPtr& target) const;

  HilbertData hilbert() const;
  /// Krull dimension from the leading-term ideal (works for inhomogeneous ideals).
  int dimension() const;
  /// Vector-space dimension of R/I for zero-dimensional I.
  long affine_degree() const;
  /// Homogeneous part of degree d of the ideal, as a basis in echelon form.
  std::vector<MPoly> degree_part(int d) const;

 private:
  struct Cache {
    std::mutex mu;
    std::map<std::string, std::vector<MPoly>> gb;
  };

  RingPtr r_;
  std::vector<MPoly> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Reduced GB of gens for their ring's order.
std::vector<MPoly> groebner_basis(const std::vector<MPoly>& gens);
/// Full normal form modulo a Groebner basis.
MPoly normal_form(const MPoly& f, const std::vector<MPoly>& gb);
MPoly s_poly(const MPoly& f, const MPoly& g);
/// All S-polynomials reduce to zero.
bool buchberger_criterion(const std::vector<MPoly>& gb);

/// I : f^infinity, by eliminating w from I + <1 - w f>.
Ideal saturate(const Ideal& I, const MPoly& f);
/// I : J^infinity for J generated by fs, as the intersection of the saturations.
Ideal saturate(const Ideal& I, const std::vector<MPoly>& fs);
/// I intersected with k[remaining vars]; result lives in a ring on the
/// remaining variables (original order kind, grevlex if it was a block order).
Ideal eliminate(const Ideal& I, const std::vector<std::string>& vars);
Ideal intersect(const Ideal& I, const Ideal& J);
/// I : f
Ideal quotient(const Ideal& I, const MPoly& f);

/// Hilbert numerator of a monomial ideal over (1-t)^n.
std::vector<long> hilbert_numerator(std::vector<Monomial> gens, int n);

/// Monomials not in the ideal of leading monomials, for zero-dimensional GBs.
std::vector<Monomial> standard_monomials(const std::vector<MPoly>& gb);

}  // namespace gonal

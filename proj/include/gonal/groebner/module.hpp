#pragma once

#include "gonal/mpoly/mpoly.hpp"

#include <memory>
#include <vector>

namespace gonal {

/// Term c * m * e_comp of a free module element.
struct MTerm {
  Monomial m;
  int comp;
  Scalar c;
};

class ModuleOrder;
using ModuleOrderPtr = std::shared_ptr<const ModuleOrder>;

/// Order on terms of a free module R^rank.
///  - Top: monomial (after degree shifts) first, then lower component index wins.
///  - Pot: lower component index wins, then monomial.
///  - Schreyer: m e_i vs n e_j compares m*LT(g_i) with n*LT(g_j) in the
///    previous order; ties go to the larger index.
class ModuleOrder {
 public:
  enum class Kind { Top, Pot, Schreyer };

  static ModuleOrderPtr top(RingPtr r, int rank, std::vector<int> shifts = {});
  static ModuleOrderPtr pot(RingPtr r, int rank);
  /// leads[i] = leading term (monomial, component) of the i-th generator
  /// in the previous module.
  static ModuleOrderPtr schreyer(ModuleOrderPtr prev, std::vector<std::pair<Monomial, int>> leads);

  const RingPtr& ring() const { return r_; }
  int rank() const { return rank_; }
  Kind kind() const { return kind_; }
  /// Degree of the basis element e_i.
  int shift(int i) const { return shifts_.empty() ? 0 : shifts_[i]; }

  int compare(const Monomial& a, int ia, const Monomial& b, int ib) const;

 private:
  ModuleOrder() = default;

  RingPtr r_;
  int rank_ = 1;
  Kind kind_ = Kind::Top;
  std::vector<int> shifts_;
  ModuleOrderPtr prev_;
  std::vector<std::pair<Monomial, int>> leads_;
};

/// Element of a free module; terms strictly descending in its order.
struct Vec {
  std::vector<MTerm> t;

  bool is_zero() const { return t.empty(); }
  const MTerm& lt() const { return t.front(); }
};

/// Arithmetic on Vec under a fixed ModuleOrder.
class ModuleArith {
 public:
  explicit ModuleArith(ModuleOrderPtr o) : o_(std::move(o)), k_(o_->ring()->field()) {}

  const ModuleOrderPtr& order() const { return o_; }
  const FieldPtr& field() const { return k_; }

  Vec make(std::vector<MTerm> terms) const;
  Vec from_poly(const MPoly& f, int comp) const;
  /// Polynomial entries, one per component.
  std::vector<MPoly> to_polys(const Vec& v) const;
  Vec add(const Vec& a, const Vec& b) const;
  /// a - c*m*b
  Vec sub_mul(const Vec& a, const Scalar& c, const Monomial& m, const Vec& b) const;
  Vec scale(const Vec& a, const Scalar& c) const;
  Vec mul_term(const Vec& a, const Scalar& c, const Monomial& m) const;
  Vec monic(const Vec& a) const;
  /// Same terms re-sorted under this order.
  Vec resort(const Vec& a) const;
  int compare(const MTerm& a, const MTerm& b) const { return o_->compare(a.m, a.comp, b.m, b.comp); }
  /// Maximum of deg(m) + shift(comp) over the terms.
  int degree(const Vec& a) const;

 private:
  ModuleOrderPtr o_;
  FieldPtr k_;
};

struct ModuleGB {
  std::vector<Vec> basis;
  /// cofactors[i][j]: coefficient of input j in basis[i] (when tracked).
  std::vector<std::vector<MPoly>> cofactors;
};

/// Reduced Groebner basis of the submodule generated by gens (normal
/// strategy with sugar; deterministic). With track = true, also returns
/// each basis element as a combination of the inputs.
ModuleGB module_groebner(const ModuleArith& A, const std::vector<Vec>& gens, bool track = false);

/// Full normal form of f modulo a Groebner basis. If quotients is given it
/// receives q with f = sum q_i gb_i + remainder.
Vec module_normal_form(const ModuleArith& A, const Vec& f, const std::vector<Vec>& gb,
                       std::vector<MPoly>* quotients = nullptr);

/// S-vector of two elements with equal leading component.
Vec s_vector(const ModuleArith& A, const Vec& f, const Vec& g);

}  // namespace gonal

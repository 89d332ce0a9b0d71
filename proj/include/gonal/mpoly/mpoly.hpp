#pragma once

#include "gonal/arith/upoly.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace gonal {

constexpr int kMaxVars = 16;

/// Exponent vector with cached total degree.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};
  int deg = 0;

  static Monomial var(int i, int power = 1) {
    Monomial m;
    m.e[i] = static_cast<std::uint16_t>(power);
    m.deg = power;
    return m;
  }
  bool is_one() const { return deg == 0; }
  bool operator==(const Monomial& o) const { return deg == o.deg && e == o.e; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }
  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(e[i] + o.e[i]);
    r.deg = deg + o.deg;
    return r;
  }
  /// Caller guarantees o divides *this.
  Monomial operator/(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(e[i] - o.e[i]);
    r.deg = deg - o.deg;
    return r;
  }
  bool divides(const Monomial& o) const {
    if (deg > o.deg) return false;
    for (int i = 0; i < kMaxVars; ++i) {
      if (e[i] > o.e[i]) return false;
    }
    return true;
  }
  Monomial lcm(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
      r.e[i] = std::max(e[i], o.e[i]);
      r.deg += r.e[i];
    }
    return r;
  }
  bool coprime(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i) {
      if (e[i] && o.e[i]) return false;
    }
    return true;
  }
  /// Lexicographic on exponents; a total order usable as a map key.
  bool operator<(const Monomial& o) const { return e < o.e; }
};

enum class OrderKind { Grevlex, Lex, Block };

/// Monomial order. Block(k): grevlex on the first k variables, ties
/// broken by grevlex on the rest (an elimination order for the first k).
struct MonomialOrder {
  OrderKind kind = OrderKind::Grevlex;
  int block = 0;

  static MonomialOrder grevlex() { return {OrderKind::Grevlex, 0}; }
  static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
  static MonomialOrder block_order(int k) { return {OrderKind::Block, k}; }

  /// -1, 0, 1 as a <, =, > b, for monomials in n variables.
  int compare(const Monomial& a, const Monomial& b, int n) const {
    switch (kind) {
      case OrderKind::Lex:
        for (int i = 0; i < n; ++i) {
          if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
        }
        return 0;
      case OrderKind::Grevlex:
        return grevlex_range(a, b, 0, n, a.deg, b.deg);
      case OrderKind::Block: {
        int da = 0, db = 0;
        for (int i = 0; i < block; ++i) {
          da += a.e[i];
          db += b.e[i];
        }
        int c = grevlex_range(a, b, 0, block, da, db);
        if (c) return c;
        return grevlex_range(a, b, block, n, a.deg - da, b.deg - db);
      }
    }
    return 0;
  }
  bool operator==(const MonomialOrder& o) const { return kind == o.kind && block == o.block; }
  std::string name() const;

 private:
  static int grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi, int da, int db) {
    if (da != db) return da > db ? 1 : -1;
    for (int i = hi; i-- > lo;) {
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    }
    return 0;
  }
};

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

class PolyRing {
 public:
  static RingPtr make(FieldPtr k, std::vector<std::string> vars, MonomialOrder order = MonomialOrder::grevlex());

  const FieldPtr& field() const { return k_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::string& var(int i) const { return vars_[i]; }
  const MonomialOrder& order() const { return order_; }
  /// Index of a variable name; throws when absent.
  int index_of(const std::string& name) const;
  bool has_var(const std::string& name) const;

  RingPtr with_order(MonomialOrder o) const;
  RingPtr with_field(FieldPtr k) const;
  /// Same field and order, different variables.
  RingPtr with_vars(std::vector<std::string> vars) const;

  int compare(const Monomial& a, const Monomial& b) const { return order_.compare(a, b, nvars()); }
  /// Same field, variables, and order.
  bool same_as(const PolyRing& o) const;
  std::string monomial_string(const Monomial& m) const;
  std::string describe() const;

 private:
  PolyRing(FieldPtr k, std::vector<std::string> vars, MonomialOrder order);

  FieldPtr k_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

struct Term {
  Monomial m;
  Scalar c;
};

/// Sparse polynomial; terms strictly descending in the ring's order.
class MPoly {
 public:
  explicit MPoly(RingPtr r) : r_(std::move(r)) {}
  MPoly(RingPtr r, std::vector<Term> terms);  // sorts and combines

  static MPoly constant(const RingPtr& r, const Scalar& c);
  static MPoly from_int(const RingPtr& r, long c) { return constant(r, r->field()->from_int(c)); }
  static MPoly var(const RingPtr& r, int i);
  static MPoly var(const RingPtr& r, const std::string& name) { return var(r, r->index_of(name)); }
  static MPoly monomial(const RingPtr& r, const Monomial& m, const Scalar& c);
  /// Linear form sum c_i x_i.
  static MPoly linear(const RingPtr& r, const std::vector<Scalar>& c);

  const RingPtr& ring() const { return r_; }
  const FieldPtr& field() const { return r_->field(); }
  const std::vector<Term>& terms() const { return t_; }
  std::size_t size() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }
  const Term& lt() const;
  const Monomial& lm() const { return lt().m; }
  const Scalar& lc() const { return lt().c; }
  int total_degree() const;
  bool is_homogeneous() const;
  int degree_in(int var) const;
  bool involves(int var) const { return degree_in(var) > 0; }

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator-() const;
  MPoly operator*(const MPoly& o) const;
  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  MPoly scale(const Scalar& c) const;
  MPoly mul_term(const Monomial& m, const Scalar& c) const;
  MPoly pow(unsigned e) const;
  bool operator==(const MPoly& o) const;
  bool operator!=(const MPoly& o) const { return !(*this == o); }
  /// this - c*m*g, in one merge pass.
  MPoly sub_mul(const Scalar& c, const Monomial& m, const MPoly& g) const;
  MPoly monic() const;

  MPoly derivative(int var) const;
  /// Coefficient of var^d, as a polynomial not involving var.
  MPoly coeff_of(int var, int d) const;
  /// Homogeneous component of degree d.
  MPoly degree_part(int d) const;
  /// Substitute images for all variables; images live in a common ring.
  MPoly compose(const std::vector<MPoly>& images) const;
  /// Substitute a single variable.
  MPoly substitute(int var, const MPoly& value) const;
  /// Evaluate at a point over a field K containing the coefficient field.
  Scalar eval(const FieldPtr& K, const std::vector<Scalar>& point) const;
  /// Same variables (matched by name) in another ring; re-sorts and embeds.
  MPoly in_ring(const RingPtr& target) const;
  /// Coefficient vector of a linear form (length nvars); throws if not linear.
  std::vector<Scalar> linear_coeffs() const;
  /// Univariate view in var; throws if other variables occur.
  UPoly to_upoly(int var) const;
  static MPoly from_upoly(const RingPtr& r, int var, const UPoly& u);
  /// Coefficient of the monomial m (zero if absent).
  Scalar coeff(const Monomial& m) const;

  std::string to_string() const;

 private:
  RingPtr r_;
  std::vector<Term> t_;
};

/// All monomials of total degree d in n variables, descending grevlex.
std::vector<Monomial> monomials_of_degree(int n, int d);

/// Coefficient vector of a homogeneous polynomial on monomials_of_degree.
std::vector<Scalar> coeff_vector(const MPoly& f, const std::vector<Monomial>& basis);
MPoly from_coeff_vector(const RingPtr& r, const std::vector<Monomial>& basis, const std::vector<Scalar>& v);

/// Exact quotient a / b; throws when b does not divide a.
MPoly divide_exact(const MPoly& a, const MPoly& b);

/// Linear change of coordinates x_i -> sum_j T(i,j) x_j given as images.
std::vector<MPoly> linear_images(const RingPtr& r, const std::vector<std::vector<Scalar>>& rows);

}  // namespace gonal

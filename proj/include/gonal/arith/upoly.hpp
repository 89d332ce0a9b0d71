#pragma once

#include "gonal/arith/field.hpp"

#include <string>
#include <utility>
#include <vector>

namespace gonal {

/// Dense univariate polynomial over a Field, coefficients low to high.
class UPoly {
 public:
  explicit UPoly(FieldPtr k, std::string var = "x");
  UPoly(FieldPtr k, std::vector<Scalar> coeffs, std::string var = "x");

  static UPoly constant(const FieldPtr& k, const Scalar& c, std::string var = "x");
  static UPoly monomial(const FieldPtr& k, const Scalar& c, int deg, std::string var = "x");
  static UPoly x(const FieldPtr& k, std::string var = "x") { return monomial(k, k->one(), 1, std::move(var)); }
  /// Integer coefficients, low to high.
  static UPoly from_ints(const FieldPtr& k, const std::vector<long>& c, std::string var = "x");

  const FieldPtr& field() const { return k_; }
  const std::string& var() const { return var_; }
  UPoly with_var(std::string v) const;
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && k_->is_one(c_.back()); }
  const std::vector<Scalar>& coeffs() const { return c_; }
  /// Coefficient of x^i; zero past the degree.
  Scalar coeff(int i) const;
  const Scalar& lc() const;

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator-() const;
  UPoly operator*(const UPoly& o) const;
  UPoly scale(const Scalar& c) const;
  bool operator==(const UPoly& o) const;
  bool operator!=(const UPoly& o) const { return !(*this == o); }

  /// Euclidean division; throws on division by zero.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
  UPoly operator/(const UPoly& d) const { return divmod(d).first; }
  UPoly operator%(const UPoly& d) const { return divmod(d).second; }
  UPoly monic() const;
  UPoly derivative() const;
  Scalar eval(const Scalar& a) const;
  /// this(g(x)).
  UPoly compose(const UPoly& g) const;
  UPoly pow(unsigned e) const;
  /// Coefficients pushed into a field containing this one.
  UPoly map_to(const FieldPtr& K) const;

  std::string to_string() const;

 private:
  void trim();

  FieldPtr k_;
  std::vector<Scalar> c_;
  std::string var_;
};

/// Monic gcd (zero if both are zero).
UPoly gcd(const UPoly& a, const UPoly& b);
/// Returns (g, s, t) with s*a + t*b = g monic.
struct XGcd {
  UPoly g, s, t;
};
XGcd xgcd(const UPoly& a, const UPoly& b);
/// base^e mod m.
UPoly powmod(const UPoly& base, const mpz_class& e, const UPoly& m);

}  // namespace gonal

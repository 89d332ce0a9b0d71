#pragma once

#include "gonal/arith/upoly.hpp"
#include "gonal/mpoly/mpoly.hpp"

#include <complex>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace gonal {

/// Element of Q(t): num / den with den monic and gcd(num, den) = 1.
class RatFun {
 public:
  RatFun();
  RatFun(UPoly num);
  RatFun(UPoly num, UPoly den);
  static RatFun from_int(long c);

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RatFun operator+(const RatFun& o) const;
  RatFun operator-(const RatFun& o) const;
  RatFun operator-() const;
  RatFun operator*(const RatFun& o) const;
  RatFun operator/(const RatFun& o) const;
  bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }

  std::complex<double> eval(std::complex<double> t) const;
  std::string to_string() const;

 private:
  UPoly num_, den_;
};

/// t-polynomial from an MPoly that only involves variable var.
UPoly to_t_poly(const MPoly& f, int var);

/// The function field of a plane curve f(X, Y) = 0 as an extension of
/// Q(t) for t = t_num / t_den.
struct FieldPresentation {
  MPoly curve;               // in X, Y
  MPoly t_num, t_den;        // in X, Y
  /// Relation g(t, X), ring (t, X): primitive over Z[t] with positive
  /// leading coefficient.
  MPoly relation;
  /// Y = y_num / y_den on the curve, both in the ring (t, X).
  MPoly y_num, y_den;
  int degree() const;
};

/// f, t_num, t_den live in a ring whose first two variables are X, Y (the
/// coordinates of the affine plane). Throws "t is not a gonal parameter"
/// when the relation has degree > 4 in X.
FieldPresentation present(const MPoly& f, const MPoly& t_num, const MPoly& t_den);

/// Coefficients of g in X (low to high) as elements of Q(t).
std::vector<RatFun> coefficients_in_x(const MPoly& relation);

// Radical expressions over Q(t).
struct RadicalNode;
using RadicalExpr = std::shared_ptr<const RadicalNode>;

enum class RadicalOp { Leaf, Zeta, Add, Sub, Mul, Div, Pow, Sqrt, Cbrt, Coupled };

struct RadicalNode {
  RadicalOp op = RadicalOp::Leaf;
  RatFun value;  // leaves only
  /// Optional display name; named nodes print as [name].
  std::string name;
  std::vector<RadicalExpr> args;
  /// Pow: exponent. Sqrt: branch 0/1. Cbrt: branch 0/1/2.
  int index = 0;
};

RadicalExpr leaf(const RatFun& v, std::string name = "");
RadicalExpr zeta();
RadicalExpr add(RadicalExpr a, RadicalExpr b);
RadicalExpr sub(RadicalExpr a, RadicalExpr b);
RadicalExpr mul(RadicalExpr a, RadicalExpr b);
RadicalExpr div(RadicalExpr a, RadicalExpr b);
RadicalExpr pow(RadicalExpr a, int e);
/// Principal square root for branch 0, its negative for branch 1.
RadicalExpr sqrt(RadicalExpr a, int branch);
/// Principal cube root times zeta^branch.
RadicalExpr cbrt(RadicalExpr a, int branch);
/// A square root of radicand fixed by a product constraint: the value is
/// numerator / (s1 * s2). Evaluation checks that it squares to radicand.
RadicalExpr coupled_sqrt(RadicalExpr radicand, RadicalExpr numerator, RadicalExpr s1, RadicalExpr s2);
/// Copy of the node carrying a display name.
RadicalExpr named(const RadicalExpr& e, std::string name);

struct EvalResult {
  std::complex<double> value;
  /// Worst relative defect of a coupled root against its radicand.
  double coupling_defect = 0;
};

EvalResult evaluate(const RadicalExpr& e, std::complex<double> t);

/// Prefix form, e.g. "(* {1/4} (+ (/ [C] [D]) [S1]))". Named nodes below
/// the root print as [name]; unnamed leaves as {value}.
std::string to_prefix(const RadicalExpr& e);

/// Definitions of the named inner (non-leaf) nodes reachable from e, in
/// dependency order: (name, prefix form of its body).
std::vector<std::pair<std::string, std::string>> named_definitions(const RadicalExpr& e);

/// Named leaves reachable from e, name -> value.
std::map<std::string, RatFun> named_leaves(const RadicalExpr& e);

/// Roots of a polynomial in X of degree 1 to 4 with coefficients in Q(t)
/// (low to high). Quartics follow the shape: shift by C / (4D), resolvent
/// cubic in a with a = (s - 2A) / (3D), Cardano with R1 = cbrt(-P1 + 3 P2
/// sqrt(P3)), and X = (C/D + S1 + S2 + S3) / 4 with S3 coupled to S1, S2.
std::vector<RadicalExpr> solve_by_radicals(const std::vector<RatFun>& coeffs);

/// Named quantities of the quartic construction (A, B, C, D, P1, P2, P3).
std::map<std::string, RatFun> quartic_quantities(const std::vector<RatFun>& coeffs);

struct NumericReport {
  int samples = 0;
  /// max over samples and roots of |g(t, X)| / sum_i |g_i(t)| |X|^i.
  double max_residual = 0;
  /// max relative defect of sum of roots against -g_{d-1}/g_d, and of the
  /// product against (-1)^d g_0 / g_d.
  double vieta_sum_defect = 0;
  double vieta_product_defect = 0;
  double max_coupling_defect = 0;
  bool ok(double tol) const {
    return max_residual < tol && vieta_sum_defect < tol && vieta_product_defect < tol && max_coupling_defect < tol;
  }
};

/// Evaluates the root expressions at random rational t in [lo, hi].
NumericReport verify_numeric(const std::vector<RadicalExpr>& roots, const std::vector<RatFun>& coeffs, int samples,
                             std::uint64_t seed, double lo = 1, double hi = 100);

}  // namespace gonal

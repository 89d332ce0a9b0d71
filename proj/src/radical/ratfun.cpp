#include "gonal/radical/radical.hpp"

namespace gonal {

namespace {

const FieldPtr& rationals() {
  static const FieldPtr q = Field::rationals();
  return q;
}

std::complex<double> eval_poly(const UPoly& p, std::complex<double> t) {
  std::complex<double> v = 0;
  for (int i = p.degree(); i >= 0; --i) v = v * t + p.coeffs()[i].rational().get_d();
  return v;
}

}  // namespace

RatFun::RatFun() : num_(rationals(), "t"), den_(UPoly::constant(rationals(), rationals()->one(), "t")) {}

RatFun::RatFun(UPoly num) : RatFun(std::move(num), UPoly::constant(rationals(), rationals()->one(), "t")) {}

RatFun::RatFun(UPoly num, UPoly den) : num_(num.with_var("t")), den_(den.with_var("t")) {
  if (den_.is_zero()) throw Error("RatFun: zero denominator");
  if (num_.is_zero()) {
    den_ = UPoly::constant(rationals(), rationals()->one(), "t");
    return;
  }
  UPoly g = gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  const Scalar inv = rationals()->inv(den_.lc());
  num_ = num_.scale(inv);
  den_ = den_.scale(inv);
}

RatFun RatFun::from_int(long c) { return RatFun(UPoly::constant(rationals(), rationals()->from_int(c), "t")); }

RatFun RatFun::operator+(const RatFun& o) const { return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
RatFun RatFun::operator-(const RatFun& o) const { return RatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
RatFun RatFun::operator-() const { return RatFun(-num_, den_); }
RatFun RatFun::operator*(const RatFun& o) const { return RatFun(num_ * o.num_, den_ * o.den_); }
RatFun RatFun::operator/(const RatFun& o) const {
  if (o.is_zero()) throw Error("RatFun: division by zero");
  return RatFun(num_ * o.den_, den_ * o.num_);
}

std::complex<double> RatFun::eval(std::complex<double> t) const { return eval_poly(num_, t) / eval_poly(den_, t); }

std::string RatFun::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

UPoly to_t_poly(const MPoly& f, int var) { return f.to_upoly(var).with_var("t"); }

}  // namespace gonal

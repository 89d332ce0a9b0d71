#include "gonal/arith/upoly.hpp"

#include <sstream>

namespace gonal {

UPoly::UPoly(FieldPtr k, std::string var) : k_(std::move(k)), var_(std::move(var)) {}

UPoly::UPoly(FieldPtr k, std::vector<Scalar> coeffs, std::string var)
    : k_(std::move(k)), c_(std::move(coeffs)), var_(std::move(var)) {
  trim();
}

UPoly UPoly::constant(const FieldPtr& k, const Scalar& c, std::string var) {
  return UPoly(k, {c}, std::move(var));
}

UPoly UPoly::monomial(const FieldPtr& k, const Scalar& c, int deg, std::string var) {
  std::vector<Scalar> v(deg + 1, k->zero());
  v[deg] = c;
  return UPoly(k, std::move(v), std::move(var));
}

UPoly UPoly::from_ints(const FieldPtr& k, const std::vector<long>& c, std::string var) {
  std::vector<Scalar> v;
  v.reserve(c.size());
  for (long x : c) v.push_back(k->from_int(x));
  return UPoly(k, std::move(v), std::move(var));
}

UPoly UPoly::with_var(std::string v) const {
  UPoly r = *this;
  r.var_ = std::move(v);
  return r;
}

void UPoly::trim() {
  while (!c_.empty() && k_->is_zero(c_.back())) c_.pop_back();
}

Scalar UPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return k_->zero();
  return c_[i];
}

const Scalar& UPoly::lc() const {
  if (c_.empty()) throw Error("leading coefficient of zero polynomial");
  return c_.back();
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<Scalar> r = c_.size() >= o.c_.size() ? c_ : o.c_;
  const auto& s = c_.size() >= o.c_.size() ? o.c_ : c_;
  for (std::size_t i = 0; i < s.size(); ++i) k_->add_to(r[i], s[i]);
  return UPoly(k_, std::move(r), var_);
}

UPoly UPoly::operator-() const {
  std::vector<Scalar> r;
  r.reserve(c_.size());
  for (const auto& a : c_) r.push_back(k_->neg(a));
  return UPoly(k_, std::move(r), var_);
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
  if (c_.empty() || o.c_.empty()) return UPoly(k_, var_);
  std::vector<Scalar> r(c_.size() + o.c_.size() - 1, k_->zero());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (k_->is_zero(c_[i])) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (k_->is_zero(o.c_[j])) continue;
      k_->add_to(r[i + j], k_->mul(c_[i], o.c_[j]));
    }
  }
  return UPoly(k_, std::move(r), var_);
}

UPoly UPoly::scale(const Scalar& c) const {
  std::vector<Scalar> r;
  r.reserve(c_.size());
  for (const auto& a : c_) r.push_back(k_->mul(a, c));
  return UPoly(k_, std::move(r), var_);
}

bool UPoly::operator==(const UPoly& o) const {
  if (c_.size() != o.c_.size()) return false;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!k_->eq(c_[i], o.c_[i])) return false;
  }
  return true;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) throw Error("polynomial division by zero");
  if (degree() < d.degree()) return {UPoly(k_, var_), *this};
  std::vector<Scalar> r = c_;
  const int dd = d.degree();
  std::vector<Scalar> q(degree() - dd + 1, k_->zero());
  const Scalar inv_lc = k_->inv(d.lc());
  const bool monic = d.is_monic();
  for (int i = degree(); i >= dd; --i) {
    if (k_->is_zero(r[i])) continue;
    Scalar c = monic ? r[i] : k_->mul(r[i], inv_lc);
    q[i - dd] = c;
    for (int j = 0; j <= dd; ++j) {
      if (k_->is_zero(d.c_[j])) continue;
      r[i - dd + j] = k_->sub(r[i - dd + j], k_->mul(c, d.c_[j]));
    }
  }
  r.resize(dd);
  return {UPoly(k_, std::move(q), var_), UPoly(k_, std::move(r), var_)};
}

UPoly UPoly::monic() const {
  if (c_.empty() || is_monic()) return *this;
  return scale(k_->inv(lc()));
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly(k_, var_);
  std::vector<Scalar> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = k_->mul(c_[i], k_->from_int(static_cast<long>(i)));
  return UPoly(k_, std::move(r), var_);
}

Scalar UPoly::eval(const Scalar& a) const {
  Scalar r = k_->zero();
  for (std::size_t i = c_.size(); i-- > 0;) r = k_->add(k_->mul(r, a), c_[i]);
  return r;
}

UPoly UPoly::compose(const UPoly& g) const {
  UPoly r(k_, var_);
  for (std::size_t i = c_.size(); i-- > 0;) r = r * g + constant(k_, c_[i], var_);
  return r.with_var(g.var_);
}

UPoly UPoly::pow(unsigned e) const {
  UPoly r = constant(k_, k_->one(), var_);
  UPoly b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

UPoly UPoly::map_to(const FieldPtr& K) const {
  std::vector<Scalar> r;
  r.reserve(c_.size());
  for (const auto& a : c_) r.push_back(K->embed(k_, a));
  return UPoly(K, std::move(r), var_);
}

std::string UPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (k_->is_zero(c_[i])) continue;
    std::string cs = k_->to_string(c_[i]);
    const bool compound = k_->is_extension() && cs.find(' ') != std::string::npos;
    if (compound) cs = "(" + cs + ")";
    bool negative = !compound && cs[0] == '-';
    if (negative) cs = cs.substr(1);
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = cs == "1";
    if (i == 0) {
      os << cs;
      continue;
    }
    if (!unit) os << cs << "*";
    os << var_;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

namespace {

using ZPoly = std::vector<mpz_class>;

void trim_z(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Primitive integer polynomial proportional to a (a over Q, nonzero).
ZPoly primitive_integer(const UPoly& a) {
  mpz_class den = 1;
  for (const auto& c : a.coeffs()) den = lcm(den, mpz_class(c.rational().get_den()));
  ZPoly z;
  z.reserve(a.coeffs().size());
  mpz_class g = 0;
  for (const auto& c : a.coeffs()) {
    z.emplace_back(c.rational().get_num() * (den / c.rational().get_den()));
    g = gcd(g, z.back());
  }
  for (auto& c : z) c /= g;
  return z;
}

void make_primitive(ZPoly& a) {
  mpz_class g = 0;
  for (const auto& c : a) {
    g = gcd(g, c);
    if (g == 1) return;
  }
  if (g > 1) {
    for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

// Degree of gcd(a mod p, b mod p), or -1 when p divides a leading coefficient.
int gcd_degree_mod(const ZPoly& a, const ZPoly& b, std::uint64_t p) {
  auto reduce = [p](const ZPoly& z) {
    std::vector<std::uint64_t> r(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
      mpz_class m = z[i] % static_cast<unsigned long>(p);
      if (m < 0) m += static_cast<unsigned long>(p);
      r[i] = m.get_ui();
    }
    return r;
  };
  auto x = reduce(a), y = reduce(b);
  if (x.back() == 0 || y.back() == 0) return -1;
  auto mulmod = [p](std::uint64_t u, std::uint64_t v) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(u) * v % p);
  };
  auto inv = [&](std::uint64_t u) {
    std::uint64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = mulmod(r, u);
      u = mulmod(u, u);
      e >>= 1;
    }
    return r;
  };
  auto trim_p = [](std::vector<std::uint64_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  while (!y.empty()) {
    const std::uint64_t li = inv(y.back());
    while (x.size() >= y.size() && !x.empty()) {
      const std::uint64_t c = mulmod(x.back(), li);
      const std::size_t d = x.size() - y.size();
      for (std::size_t i = 0; i < y.size(); ++i) x[i + d] = (x[i + d] + p - mulmod(c, y[i])) % p;
      trim_p(x);
    }
    std::swap(x, y);
  }
  return static_cast<int>(x.size()) - 1;
}

// gcd over Q: a modular degree test settles the common coprime case, the
// rest goes through a primitive remainder sequence over Z.
UPoly rational_gcd(const UPoly& a, const UPoly& b) {
  ZPoly x = primitive_integer(a), y = primitive_integer(b);
  if (x.size() < y.size()) std::swap(x, y);
  for (std::uint64_t p : {2147483647ULL, 2147483629ULL, 2147483587ULL}) {
    const int d = gcd_degree_mod(x, y, p);
    if (d == 0) return UPoly::constant(a.field(), a.field()->one(), a.var());
    if (d > 0) break;
  }
  while (!y.empty()) {
    const mpz_class lb = y.back();
    while (x.size() >= y.size() && !x.empty()) {
      const mpz_class c = x.back();
      const std::size_t d = x.size() - y.size();
      for (auto& e : x) e *= lb;
      for (std::size_t i = 0; i < y.size(); ++i) x[i + d] -= c * y[i];
      trim_z(x);
      make_primitive(x);
    }
    std::swap(x, y);
  }
  std::vector<Scalar> c;
  for (const auto& e : x) c.push_back(a.field()->from_mpz(e));
  return UPoly(a.field(), std::move(c), a.var()).monic();
}

}  // namespace

UPoly gcd(const UPoly& a, const UPoly& b) {
  if (a.field()->is_rationals() && !a.is_zero() && !b.is_zero()) return rational_gcd(a, b);
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

XGcd xgcd(const UPoly& a, const UPoly& b) {
  const FieldPtr& k = a.field();
  UPoly r0 = a, r1 = b;
  UPoly s0 = UPoly::constant(k, k->one(), a.var()), s1(k, a.var());
  UPoly t0(k, a.var()), t1 = UPoly::constant(k, k->one(), a.var());
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly s2 = s0 - q * s1;
    UPoly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Scalar c = k->inv(r0.lc());
  return {r0.scale(c), s0.scale(c), t0.scale(c)};
}

UPoly powmod(const UPoly& base, const mpz_class& e, const UPoly& m) {
  const FieldPtr& k = base.field();
  UPoly r = UPoly::constant(k, k->one(), base.var()) % m;
  UPoly b = base % m;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = (r * r) % m;
    if (mpz_tstbit(e.get_mpz_t(), i)) r = (r * b) % m;
  }
  return r;
}

}  // namespace gonal

#include "gonal/arith/field.hpp"

#include <sstream>

namespace gonal {

namespace {

using Vec = std::vector<Scalar>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Dense polynomial helpers over a field, used for extension arithmetic.
void trim(const Field& k, Vec& a) {
  while (!a.empty() && k.is_zero(a.back())) a.pop_back();
}

Vec poly_mul(const Field& k, const Vec& a, const Vec& b) {
  if (a.empty() || b.empty()) return {};
  Vec r(a.size() + b.size() - 1, k.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (k.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (k.is_zero(b[j])) continue;
      k.add_to(r[i + j], k.mul(a[i], b[j]));
    }
  }
  return r;
}

// Remainder modulo a monic polynomial m.
void reduce_monic(const Field& k, Vec& a, const Vec& m) {
  const std::size_t dm = m.size() - 1;
  for (std::size_t i = a.size(); i-- > dm;) {
    if (k.is_zero(a[i])) continue;
    Scalar c = a[i];
    for (std::size_t j = 0; j <= dm; ++j) {
      a[i - dm + j] = k.sub(a[i - dm + j], k.mul(c, m[j]));
    }
  }
  if (a.size() > dm) a.resize(dm);
}

// Quotient and remainder by an arbitrary nonzero polynomial.
void poly_divmod(const Field& k, Vec a, const Vec& b, Vec& q, Vec& r) {
  trim(k, a);
  const std::size_t db = b.size() - 1;
  Scalar inv_lc = k.inv(b.back());
  if (a.size() < b.size()) {
    q.clear();
    r = std::move(a);
    return;
  }
  q.assign(a.size() - db, k.zero());
  for (std::size_t i = a.size(); i-- > db;) {
    if (k.is_zero(a[i])) continue;
    Scalar c = k.mul(a[i], inv_lc);
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) {
      a[i - db + j] = k.sub(a[i - db + j], k.mul(c, b[j]));
    }
  }
  a.resize(db);
  trim(k, a);
  r = std::move(a);
}

}  // namespace

bool is_probable_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldPtr Field::rationals() {
  static const FieldPtr q = [] {
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = Kind::Rationals;
    return FieldPtr(f);
  }();
  return q;
}

FieldPtr Field::prime(std::uint64_t p) {
  if (p == 2 || p == 3) throw Error("characteristic 2 and 3 are not supported");
  if (p >= (1ULL << 32)) throw Error("prime modulus must be below 2^32");
  if (!is_probable_prime(p)) throw Error("modulus " + std::to_string(p) + " is not prime");
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = Kind::Prime;
  f->p_ = p;
  return f;
}

FieldPtr Field::extension_unchecked(FieldPtr base, std::vector<Scalar> minpoly, std::string generator) {
  if (minpoly.size() < 3) throw Error("extension minimal polynomial must have degree >= 2");
  if (!base->is_one(minpoly.back())) throw Error("extension minimal polynomial must be monic");
  if (base->depth() + 1 > kMaxDepth) {
    throw Error("extension tower deeper than " + std::to_string(kMaxDepth) + " requested");
  }
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = Kind::Extension;
  f->p_ = base->characteristic();
  f->depth_ = base->depth() + 1;
  f->degree_ = static_cast<int>(minpoly.size()) - 1;
  f->prime_ = base->prime_field();
  f->base_ = std::move(base);
  f->minpoly_ = std::move(minpoly);
  f->gen_ = std::move(generator);
  return f;
}

int Field::absolute_degree() const {
  return is_extension() ? degree_ * base_->absolute_degree() : 1;
}

mpz_class Field::cardinality() const {
  if (p_ == 0) return 0;
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), p_, static_cast<unsigned long>(absolute_degree()));
  return q;
}

FieldPtr Field::prime_field() const {
  if (is_extension()) return prime_;
  return shared_from_this();
}

bool Field::same_as(const Field& o) const {
  if (this == &o) return true;
  if (kind_ != o.kind_ || p_ != o.p_ || degree_ != o.degree_) return false;
  if (!is_extension()) return true;
  if (!base_->same_as(*o.base_)) return false;
  for (std::size_t i = 0; i < minpoly_.size(); ++i) {
    if (!base_->eq(minpoly_[i], o.minpoly_[i])) return false;
  }
  return true;
}

std::string Field::describe() const {
  switch (kind_) {
    case Kind::Rationals:
      return "Q";
    case Kind::Prime:
      return "GF(" + std::to_string(p_) + ")";
    case Kind::Extension: {
      std::ostringstream os;
      os << base_->describe() << "[" << gen_ << "]/(";
      bool first = true;
      for (std::size_t i = minpoly_.size(); i-- > 0;) {
        if (base_->is_zero(minpoly_[i])) continue;
        std::string c = base_->to_string(minpoly_[i]);
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
          os << c;
        } else {
          if (!base_->is_one(minpoly_[i])) os << "(" << c << ")*";
          os << gen_;
          if (i > 1) os << "^" << i;
        }
      }
      os << ")";
      return os.str();
    }
  }
  return "?";
}

Scalar Field::zero() const {
  switch (kind_) {
    case Kind::Rationals:
      return Scalar(mpq_class(0));
    case Kind::Prime:
      return Scalar(std::uint64_t{0});
    case Kind::Extension:
      return Scalar(Vec(degree_, base_->zero()));
  }
  return {};
}

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long v) const {
  switch (kind_) {
    case Kind::Rationals:
      return Scalar(mpq_class(v));
    case Kind::Prime: {
      long r = v % static_cast<long>(p_);
      if (r < 0) r += static_cast<long>(p_);
      return Scalar(static_cast<std::uint64_t>(r));
    }
    case Kind::Extension: {
      Vec c(degree_, base_->zero());
      c[0] = base_->from_int(v);
      return Scalar(std::move(c));
    }
  }
  return {};
}

Scalar Field::from_mpz(const mpz_class& v) const {
  switch (kind_) {
    case Kind::Rationals:
      return Scalar(mpq_class(v));
    case Kind::Prime: {
      mpz_class r = v % mpz_class(static_cast<unsigned long>(p_));
      if (r < 0) r += static_cast<unsigned long>(p_);
      return Scalar(static_cast<std::uint64_t>(r.get_ui()));
    }
    case Kind::Extension: {
      Vec c(degree_, base_->zero());
      c[0] = base_->from_mpz(v);
      return Scalar(std::move(c));
    }
  }
  return {};
}

Scalar Field::from_rational(const mpq_class& q) const {
  if (kind_ == Kind::Rationals) return Scalar(q);
  Scalar d = from_mpz(q.get_den());
  if (is_zero(d)) throw Error("denominator vanishes in characteristic " + std::to_string(p_));
  return div(from_mpz(q.get_num()), d);
}

Scalar Field::gen() const {
  if (!is_extension()) throw Error("field has no generator");
  Vec c(degree_, base_->zero());
  c[1] = base_->one();
  return Scalar(std::move(c));
}

Scalar Field::embed(const FieldPtr& from, const Scalar& s) const {
  if (from->same_as(*this)) return s;
  if (!is_extension()) throw Error("cannot embed " + from->describe() + " into " + describe());
  Vec c(degree_, base_->zero());
  c[0] = base_->embed(from, s);
  return Scalar(std::move(c));
}

bool Field::is_zero(const Scalar& a) const {
  switch (kind_) {
    case Kind::Rationals:
      return sgn(a.rational()) == 0;
    case Kind::Prime:
      return a.residue() == 0;
    case Kind::Extension:
      for (const auto& c : a.coeffs()) {
        if (!base_->is_zero(c)) return false;
      }
      return true;
  }
  return false;
}

bool Field::is_one(const Scalar& a) const { return eq(a, one()); }

bool Field::eq(const Scalar& a, const Scalar& b) const {
  switch (kind_) {
    case Kind::Rationals:
      return a.rational() == b.rational();
    case Kind::Prime:
      return a.residue() == b.residue();
    case Kind::Extension: {
      const auto& x = a.coeffs();
      const auto& y = b.coeffs();
      for (int i = 0; i < degree_; ++i) {
        if (!base_->eq(x[i], y[i])) return false;
      }
      return true;
    }
  }
  return false;
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  switch (kind_) {
    case Kind::Rationals:
      return Scalar(mpq_class(a.rational() + b.rational()));
    case Kind::Prime: {
      std::uint64_t s = a.residue() + b.residue();
      return Scalar(s >= p_ ? s - p_ : s);
    }
    case Kind::Extension: {
      Vec c(degree_);
      for (int i = 0; i < degree_; ++i) c[i] = base_->add(a.coeffs()[i], b.coeffs()[i]);
      return Scalar(std::move(c));
    }
  }
  return {};
}

void Field::add_to(Scalar& a, const Scalar& b) const {
  switch (kind_) {
    case Kind::Rationals:
      std::get<mpq_class>(a.rep) += b.rational();
      return;
    case Kind::Prime: {
      std::uint64_t s = a.residue() + b.residue();
      a.rep = s >= p_ ? s - p_ : s;
      return;
    }
    case Kind::Extension: {
      auto& x = std::get<Vec>(a.rep);
      for (int i = 0; i < degree_; ++i) base_->add_to(x[i], b.coeffs()[i]);
      return;
    }
  }
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  switch (kind_) {
    case Kind::Rationals:
      return Scalar(mpq_class(a.rational() - b.rational()));
    case Kind::Prime:
      return Scalar(a.residue() >= b.residue() ? a.residue() - b.residue() : a.residue() + p_ - b.residue());
    case Kind::Extension: {
      Vec c(degree_);
      for (int i = 0; i < degree_; ++i) c[i] = base_->sub(a.coeffs()[i], b.coeffs()[i]);
      return Scalar(std::move(c));
    }
  }
  return {};
}

Scalar Field::neg(const Scalar& a) const {
  switch (kind_) {
    case Kind::Rationals:
      return Scalar(mpq_class(-a.rational()));
    case Kind::Prime:
      return Scalar(a.residue() == 0 ? 0 : p_ - a.residue());
    case Kind::Extension: {
      Vec c(degree_);
      for (int i = 0; i < degree_; ++i) c[i] = base_->neg(a.coeffs()[i]);
      return Scalar(std::move(c));
    }
  }
  return {};
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  switch (kind_) {
    case Kind::Rationals:
      return Scalar(mpq_class(a.rational() * b.rational()));
    case Kind::Prime:
      return Scalar(a.residue() * b.residue() % p_);
    case Kind::Extension: {
      Vec c = poly_mul(*base_, a.coeffs(), b.coeffs());
      reduce_monic(*base_, c, minpoly_);
      c.resize(degree_, base_->zero());
      return Scalar(std::move(c));
    }
  }
  return {};
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw Error("division by zero in " + describe());
  switch (kind_) {
    case Kind::Rationals:
      return Scalar(mpq_class(1 / a.rational()));
    case Kind::Prime:
      return Scalar(powmod(a.residue(), p_ - 2, p_));
    case Kind::Extension: {
      // Extended Euclid on (a, m) over the base field.
      const Field& k = *base_;
      Vec r0 = minpoly_, r1 = a.coeffs();
      trim(k, r1);
      Vec s0, s1{k.one()};
      while (!(r1.size() == 1)) {
        if (r1.empty()) throw Error("non-invertible element: extension polynomial is reducible");
        Vec q, r;
        poly_divmod(k, r0, r1, q, r);
        Vec qs = poly_mul(k, q, s1);
        Vec ns(std::max(s0.size(), qs.size()), k.zero());
        for (std::size_t i = 0; i < s0.size(); ++i) ns[i] = s0[i];
        for (std::size_t i = 0; i < qs.size(); ++i) ns[i] = k.sub(ns[i], qs[i]);
        trim(k, ns);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(ns);
      }
      Scalar c = k.inv(r1[0]);
      Vec out(degree_, k.zero());
      for (std::size_t i = 0; i < s1.size() && i < out.size(); ++i) out[i] = k.mul(s1[i], c);
      return Scalar(std::move(out));
    }
  }
  return {};
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

Scalar Field::pow(const Scalar& a, const mpz_class& e) const {
  if (e < 0) return pow(inv(a), -e);
  Scalar r = one();
  Scalar b = a;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, b);
    if (i + 1 < bits) b = mul(b, b);
  }
  return r;
}

bool Field::to_rational(const Scalar& a, mpq_class& out) const {
  switch (kind_) {
    case Kind::Rationals:
      out = a.rational();
      return true;
    case Kind::Prime:
      out = mpq_class(static_cast<unsigned long>(a.residue()));
      return true;
    case Kind::Extension:
      for (int i = 1; i < degree_; ++i) {
        if (!base_->is_zero(a.coeffs()[i])) return false;
      }
      return base_->to_rational(a.coeffs()[0], out);
  }
  return false;
}

Scalar Field::random(Rng& rng) const {
  switch (kind_) {
    case Kind::Rationals: {
      std::uniform_int_distribution<long> d(-9, 9);
      return from_int(d(rng));
    }
    case Kind::Prime: {
      std::uniform_int_distribution<std::uint64_t> d(0, p_ - 1);
      return Scalar(d(rng));
    }
    case Kind::Extension: {
      Vec c(degree_);
      for (auto& x : c) x = base_->random(rng);
      return Scalar(std::move(c));
    }
  }
  return {};
}

std::string Field::to_string(const Scalar& a) const {
  switch (kind_) {
    case Kind::Rationals:
      return a.rational().get_str();
    case Kind::Prime:
      return std::to_string(a.residue());
    case Kind::Extension: {
      std::ostringstream os;
      bool first = true;
      for (int i = degree_; i-- > 0;) {
        const Scalar& c = a.coeffs()[i];
        if (base_->is_zero(c)) continue;
        std::string cs = base_->to_string(c);
        const bool compound = base_->is_extension() || (i > 0 && cs.find_first_of("+-/", 1) != std::string::npos);
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
          os << (compound ? "(" + cs + ")" : cs);
          continue;
        }
        if (!base_->is_one(c)) os << (compound ? "(" + cs + ")" : cs) << "*";
        os << gen_;
        if (i > 1) os << "^" << i;
      }
      if (first) return "0";
      return os.str();
    }
  }
  return "?";
}

std::string Field::serialize(const Scalar& a) const {
  if (!is_extension()) return to_string(a);
  std::string s = "[";
  for (int i = 0; i < degree_; ++i) {
    if (i) s += ",";
    s += base_->serialize(a.coeffs()[i]);
  }
  return s + "]";
}

}  // namespace gonal

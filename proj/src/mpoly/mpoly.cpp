#include "gonal/mpoly/mpoly.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace gonal {

std::string MonomialOrder::name() const {
  switch (kind) {
    case OrderKind::Grevlex:
      return "grevlex";
    case OrderKind::Lex:
      return "lex";
    case OrderKind::Block:
      return "block(" + std::to_string(block) + ")";
  }
  return "?";
}

PolyRing::PolyRing(FieldPtr k, std::vector<std::string> vars, MonomialOrder order)
    : k_(std::move(k)), vars_(std::move(vars)), order_(order) {}

RingPtr PolyRing::make(FieldPtr k, std::vector<std::string> vars, MonomialOrder order) {
  if (static_cast<int>(vars.size()) > kMaxVars) {
    throw Error("at most " + std::to_string(kMaxVars) + " variables are supported");
  }
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty()) throw Error("empty variable name");
    if (!seen.insert(v).second) throw Error("duplicate variable name '" + v + "'");
  }
  if (order.kind == OrderKind::Block && (order.block < 0 || order.block > static_cast<int>(vars.size()))) {
    throw Error("block order size out of range");
  }
  return RingPtr(new PolyRing(std::move(k), std::move(vars), order));
}

int PolyRing::index_of(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i) {
    if (vars_[i] == name) return i;
  }
  throw Error("unknown variable '" + name + "'");
}

bool PolyRing::has_var(const std::string& name) const {
  return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
}

RingPtr PolyRing::with_order(MonomialOrder o) const { return make(k_, vars_, o); }
RingPtr PolyRing::with_field(FieldPtr k) const { return make(std::move(k), vars_, order_); }
RingPtr PolyRing::with_vars(std::vector<std::string> vars) const { return make(k_, std::move(vars), order_); }

bool PolyRing::same_as(const PolyRing& o) const {
  return this == &o || (order_ == o.order_ && vars_ == o.vars_ && k_->same_as(*o.k_));
}

std::string PolyRing::monomial_string(const Monomial& m) const {
  std::string s;
  for (int i = 0; i < nvars(); ++i) {
    if (!m.e[i]) continue;
    if (!s.empty()) s += "*";
    s += vars_[i];
    if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
  }
  return s.empty() ? "1" : s;
}

std::string PolyRing::describe() const {
  std::string s = k_->describe() + "[";
  for (int i = 0; i < nvars(); ++i) s += (i ? "," : "") + vars_[i];
  return s + "] " + order_.name();
}

// ---------------------------------------------------------------------------

MPoly::MPoly(RingPtr r, std::vector<Term> terms) : r_(std::move(r)) {
  const PolyRing& R = *r_;
  const Field& k = *R.field();
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return R.compare(a.m, b.m) > 0; });
  for (auto& t : terms) {
    if (!t_.empty() && t_.back().m == t.m) {
      k.add_to(t_.back().c, t.c);
    } else {
      if (!t_.empty() && k.is_zero(t_.back().c)) t_.pop_back();
      t_.push_back(std::move(t));
    }
  }
  if (!t_.empty() && k.is_zero(t_.back().c)) t_.pop_back();
}

MPoly MPoly::constant(const RingPtr& r, const Scalar& c) {
  MPoly p(r);
  if (!r->field()->is_zero(c)) p.t_.push_back({Monomial{}, c});
  return p;
}

MPoly MPoly::var(const RingPtr& r, int i) { return monomial(r, Monomial::var(i), r->field()->one()); }

MPoly MPoly::monomial(const RingPtr& r, const Monomial& m, const Scalar& c) {
  MPoly p(r);
  if (!r->field()->is_zero(c)) p.t_.push_back({m, c});
  return p;
}

MPoly MPoly::linear(const RingPtr& r, const std::vector<Scalar>& c) {
  std::vector<Term> t;
  for (int i = 0; i < static_cast<int>(c.size()); ++i) t.push_back({Monomial::var(i), c[i]});
  return MPoly(r, std::move(t));
}

const Term& MPoly::lt() const {
  if (t_.empty()) throw Error("leading term of zero polynomial");
  return t_.front();
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& t : t_) d = std::max(d, t.m.deg);
  return d;
}

bool MPoly::is_homogeneous() const {
  for (const auto& t : t_) {
    if (t.m.deg != t_.front().m.deg) return false;
  }
  return true;
}

int MPoly::degree_in(int var) const {
  int d = 0;
  for (const auto& t : t_) d = std::max(d, static_cast<int>(t.m.e[var]));
  return d;
}

MPoly MPoly::operator+(const MPoly& o) const {
  const Field& k = *field();
  const PolyRing& R = *r_;
  MPoly out(r_);
  out.t_.reserve(t_.size() + o.t_.size());
  std::size_t i = 0, j = 0;
  while (i < t_.size() && j < o.t_.size()) {
    int c = R.compare(t_[i].m, o.t_[j].m);
    if (c > 0) {
      out.t_.push_back(t_[i++]);
    } else if (c < 0) {
      out.t_.push_back(o.t_[j++]);
    } else {
      Scalar s = k.add(t_[i].c, o.t_[j].c);
      if (!k.is_zero(s)) out.t_.push_back({t_[i].m, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < t_.size(); ++i) out.t_.push_back(t_[i]);
  for (; j < o.t_.size(); ++j) out.t_.push_back(o.t_[j]);
  return out;
}

MPoly MPoly::operator-() const {
  MPoly out(r_);
  out.t_.reserve(t_.size());
  for (const auto& t : t_) out.t_.push_back({t.m, field()->neg(t.c)});
  return out;
}

MPoly MPoly::operator-(const MPoly& o) const {
  return sub_mul(field()->one(), Monomial{}, o);
}

MPoly MPoly::sub_mul(const Scalar& c, const Monomial& m, const MPoly& g) const {
  const Field& k = *field();
  const PolyRing& R = *r_;
  MPoly out(r_);
  out.t_.reserve(t_.size() + g.t_.size());
  std::size_t i = 0, j = 0;
  const bool unit = m.is_one();
  while (i < t_.size() && j < g.t_.size()) {
    Monomial gm = unit ? g.t_[j].m : g.t_[j].m * m;
    int cmp = R.compare(t_[i].m, gm);
    if (cmp > 0) {
      out.t_.push_back(t_[i++]);
    } else if (cmp < 0) {
      out.t_.push_back({gm, k.neg(k.mul(c, g.t_[j].c))});
      ++j;
    } else {
      Scalar s = k.sub(t_[i].c, k.mul(c, g.t_[j].c));
      if (!k.is_zero(s)) out.t_.push_back({gm, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < t_.size(); ++i) out.t_.push_back(t_[i]);
  for (; j < g.t_.size(); ++j) out.t_.push_back({unit ? g.t_[j].m : g.t_[j].m * m, k.neg(k.mul(c, g.t_[j].c))});
  return out;
}

MPoly MPoly::operator*(const MPoly& o) const {
  if (t_.empty() || o.t_.empty()) return MPoly(r_);
  if (o.t_.size() == 1) return mul_term(o.t_[0].m, o.t_[0].c);
  if (t_.size() == 1) return o.mul_term(t_[0].m, t_[0].c);
  const Field& k = *field();
  std::vector<Term> prod;
  prod.reserve(t_.size() * o.t_.size());
  for (const auto& a : t_) {
    for (const auto& b : o.t_) prod.push_back({a.m * b.m, k.mul(a.c, b.c)});
  }
  return MPoly(r_, std::move(prod));
}

MPoly MPoly::scale(const Scalar& c) const {
  if (field()->is_zero(c)) return MPoly(r_);
  MPoly out(r_);
  out.t_.reserve(t_.size());
  for (const auto& t : t_) out.t_.push_back({t.m, field()->mul(t.c, c)});
  return out;
}

MPoly MPoly::mul_term(const Monomial& m, const Scalar& c) const {
  if (field()->is_zero(c)) return MPoly(r_);
  MPoly out(r_);
  out.t_.reserve(t_.size());
  for (const auto& t : t_) out.t_.push_back({t.m * m, field()->mul(t.c, c)});
  return out;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly r = from_int(r_, 1);
  MPoly b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

bool MPoly::operator==(const MPoly& o) const {
  if (t_.size() != o.t_.size()) return false;
  for (std::size_t i = 0; i < t_.size(); ++i) {
    if (t_[i].m != o.t_[i].m || !field()->eq(t_[i].c, o.t_[i].c)) return false;
  }
  return true;
}

MPoly MPoly::monic() const {
  if (t_.empty() || field()->is_one(lc())) return *this;
  return scale(field()->inv(lc()));
}

MPoly MPoly::derivative(int var) const {
  std::vector<Term> out;
  for (const auto& t : t_) {
    if (!t.m.e[var]) continue;
    Monomial m = t.m;
    m.e[var]--;
    m.deg--;
    out.push_back({m, field()->mul(t.c, field()->from_int(t.m.e[var]))});
  }
  return MPoly(r_, std::move(out));
}

MPoly MPoly::coeff_of(int var, int d) const {
  std::vector<Term> out;
  for (const auto& t : t_) {
    if (t.m.e[var] != d) continue;
    Monomial m = t.m;
    m.e[var] = 0;
    m.deg -= d;
    out.push_back({m, t.c});
  }
  return MPoly(r_, std::move(out));
}

MPoly MPoly::degree_part(int d) const {
  MPoly out(r_);
  for (const auto& t : t_) {
    if (t.m.deg == d) out.t_.push_back(t);
  }
  return out;
}

MPoly MPoly::compose(const std::vector<MPoly>& images) const {
  if (static_cast<int>(images.size()) != r_->nvars()) throw Error("compose: wrong number of images");
  if (images.empty()) throw Error("compose: no images");
  const RingPtr& T = images[0].ring();
  const FieldPtr& K = T->field();
  std::vector<std::vector<MPoly>> powers(images.size());
  MPoly out(T);
  std::vector<Term> acc;
  for (const auto& t : t_) {
    MPoly p = MPoly::constant(T, K->embed(field(), t.c));
    for (int i = 0; i < r_->nvars(); ++i) {
      const int e = t.m.e[i];
      if (!e) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(images[i]);
      while (static_cast<int>(pw.size()) < e) pw.push_back(pw.back() * images[i]);
      p = p * pw[e - 1];
    }
    for (auto& x : p.t_) acc.push_back(std::move(x));
  }
  return MPoly(T, std::move(acc));
}

MPoly MPoly::substitute(int var, const MPoly& value) const {
  std::vector<MPoly> im;
  for (int i = 0; i < r_->nvars(); ++i) im.push_back(i == var ? value : MPoly::var(r_, i));
  return compose(im);
}

Scalar MPoly::eval(const FieldPtr& K, const std::vector<Scalar>& point) const {
  const int n = r_->nvars();
  std::vector<std::vector<Scalar>> powers(n);
  Scalar sum = K->zero();
  for (const auto& t : t_) {
    Scalar v = K->embed(field(), t.c);
    for (int i = 0; i < n; ++i) {
      const int e = t.m.e[i];
      if (!e) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(point[i]);
      while (static_cast<int>(pw.size()) < e) pw.push_back(K->mul(pw.back(), point[i]));
      v = K->mul(v, pw[e - 1]);
    }
    K->add_to(sum, v);
  }
  return sum;
}

MPoly MPoly::in_ring(const RingPtr& target) const {
  if (r_->same_as(*target)) {
    MPoly out = *this;
    out.r_ = target;
    return out;
  }
  std::vector<int> map(r_->nvars(), -1);
  for (int i = 0; i < r_->nvars(); ++i) {
    if (target->has_var(r_->var(i))) map[i] = target->index_of(r_->var(i));
  }
  const FieldPtr& K = target->field();
  std::vector<Term> out;
  out.reserve(t_.size());
  for (const auto& t : t_) {
    Monomial m;
    for (int i = 0; i < r_->nvars(); ++i) {
      if (!t.m.e[i]) continue;
      if (map[i] < 0) throw Error("variable '" + r_->var(i) + "' missing from target ring");
      m.e[map[i]] = t.m.e[i];
    }
    m.deg = t.m.deg;
    out.push_back({m, K->embed(field(), t.c)});
  }
  return MPoly(target, std::move(out));
}

std::vector<Scalar> MPoly::linear_coeffs() const {
  std::vector<Scalar> c(r_->nvars(), field()->zero());
  for (const auto& t : t_) {
    if (t.m.deg != 1) throw Error("not a linear form: " + to_string());
    for (int i = 0; i < r_->nvars(); ++i) {
      if (t.m.e[i]) c[i] = t.c;
    }
  }
  return c;
}

UPoly MPoly::to_upoly(int var) const {
  std::vector<Scalar> c(std::max(0, degree_in(var)) + 1, field()->zero());
  for (const auto& t : t_) {
    if (t.m.deg != t.m.e[var]) throw Error("polynomial is not univariate in " + r_->var(var));
    c[t.m.e[var]] = t.c;
  }
  return UPoly(field(), std::move(c), r_->var(var));
}

MPoly MPoly::from_upoly(const RingPtr& r, int var, const UPoly& u) {
  std::vector<Term> t;
  for (int i = 0; i <= u.degree(); ++i) t.push_back({Monomial::var(var, i), r->field()->embed(u.field(), u.coeff(i))});
  return MPoly(r, std::move(t));
}

Scalar MPoly::coeff(const Monomial& m) const {
  for (const auto& t : t_) {
    if (t.m == m) return t.c;
  }
  return field()->zero();
}

std::string MPoly::to_string() const {
  if (t_.empty()) return "0";
  const Field& k = *field();
  std::ostringstream os;
  bool first = true;
  for (const auto& t : t_) {
    std::string cs = k.to_string(t.c);
    bool neg = false;
    if (k.is_extension()) {
      if (cs.find(' ') != std::string::npos || cs.find('*') != std::string::npos) cs = "(" + cs + ")";
    } else if (cs[0] == '-') {
      neg = true;
      cs = cs.substr(1);
    }
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (t.m.is_one()) {
      os << cs;
    } else {
      if (cs != "1") os << cs << "*";
      os << r_->monomial_string(t.m);
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------

std::vector<Monomial> monomials_of_degree(int n, int d) {
  std::vector<Monomial> out;
  Monomial m;
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      m.e[i] = static_cast<std::uint16_t>(left);
      m.deg = d;
      out.push_back(m);
      m.e[i] = 0;
      return;
    }
    for (int a = left; a >= 0; --a) {
      m.e[i] = static_cast<std::uint16_t>(a);
      rec(i + 1, left - a);
    }
    m.e[i] = 0;
  };
  if (n == 0) {
    if (d == 0) out.push_back(m);
    return out;
  }
  rec(0, d);
  const MonomialOrder g = MonomialOrder::grevlex();
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return g.compare(a, b, n) > 0; });
  return out;
}

std::vector<Scalar> coeff_vector(const MPoly& f, const std::vector<Monomial>& basis) {
  std::map<Monomial, std::size_t> idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx[basis[i]] = i;
  std::vector<Scalar> v(basis.size(), f.field()->zero());
  for (const auto& t : f.terms()) {
    auto it = idx.find(t.m);
    if (it == idx.end()) throw Error("coefficient vector: monomial outside basis in " + f.to_string());
    v[it->second] = t.c;
  }
  return v;
}

MPoly from_coeff_vector(const RingPtr& r, const std::vector<Monomial>& basis, const std::vector<Scalar>& v) {
  std::vector<Term> t;
  for (std::size_t i = 0; i < basis.size(); ++i) t.push_back({basis[i], v[i]});
  return MPoly(r, std::move(t));
}

MPoly divide_exact(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw Error("division by zero polynomial");
  const Field& k = *a.field();
  const Scalar inv = k.inv(b.lc());
  std::vector<Term> q;
  MPoly r = a;
  while (!r.is_zero()) {
    if (!b.lm().divides(r.lm())) throw Error("inexact polynomial division");
    Monomial m = r.lm() / b.lm();
    Scalar c = k.mul(r.lc(), inv);
    q.push_back({m, c});
    r = r.sub_mul(c, m, b);
  }
  return MPoly(a.ring(), std::move(q));
}

std::vector<MPoly> linear_images(const RingPtr& r, const std::vector<std::vector<Scalar>>& rows) {
  std::vector<MPoly> out;
  for (const auto& row : rows) out.push_back(MPoly::linear(r, row));
  return out;
}

}  // namespace gonal

#include "gonal/arith/factor.hpp"
#include "gonal/arith/field.hpp"
#include "gonal/radical/radical.hpp"

#include <cmath>
#include <functional>

namespace gonal {

namespace {

using cd = std::complex<double>;

RadicalExpr make(RadicalOp op, std::vector<RadicalExpr> args, int index = 0) {
  auto n = std::make_shared<RadicalNode>();
  n->op = op;
  n->args = std::move(args);
  n->index = index;
  return n;
}

const cd kZeta(-0.5, std::sqrt(3.0) / 2);

cd eval_node(const RadicalExpr& e, cd t, double& defect) {
  auto arg = [&](int i) { return eval_node(e->args[i], t, defect); };
  switch (e->op) {
    case RadicalOp::Leaf:
      return e->value.eval(t);
    case RadicalOp::Zeta:
      return kZeta;
    case RadicalOp::Add:
      return arg(0) + arg(1);
    case RadicalOp::Sub:
      return arg(0) - arg(1);
    case RadicalOp::Mul:
      return arg(0) * arg(1);
    case RadicalOp::Div:
      return arg(0) / arg(1);
    case RadicalOp::Pow:
      return std::pow(arg(0), e->index);
    case RadicalOp::Sqrt: {
      cd v = std::sqrt(arg(0));
      return e->index ? -v : v;
    }
    case RadicalOp::Cbrt: {
      cd v = std::pow(arg(0), 1.0 / 3.0);
      for (int i = 0; i < e->index; ++i) v *= kZeta;
      return v;
    }
    case RadicalOp::Coupled: {
      const cd rad = arg(0);
      const cd v = arg(1) / (arg(2) * arg(3));
      const double scale = std::max(std::abs(rad), 1e-300);
      defect = std::max(defect, std::abs(v * v - rad) / scale);
      return v;
    }
  }
  throw Error("radical: bad node");
}


RatFun r(long c) { return RatFun::from_int(c); }

RatFun rq(long n, long d) {
  const FieldPtr q = Field::rationals();
  return RatFun(UPoly::constant(q, q->from_rational(mpq_class(n, d)), "t"));
}

RatFun power(const RatFun& a, int e) {
  RatFun out = r(1);
  for (int i = 0; i < e; ++i) out = out * a;
  return out;
}

std::vector<RatFun> trimmed(std::vector<RatFun> c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
  return c;
}

// Square-free part and square root: n = 9 * p2^2 * p3 with p3 square-free,
// its polynomial part primitive over Z with positive leading coefficient and
// its constant a square-free integer.
void split_square(const RatFun& n, RatFun& p2, RatFun& p3) {
  const FieldPtr q = Field::rationals();
  // n = N / Dn = (N * Dn) / Dn^2.
  UPoly top = n.num() * n.den();
  const mpq_class lc = top.lc().rational();
  UPoly odd = UPoly::constant(q, q->one(), "t"), sq = UPoly::constant(q, q->one(), "t");
  for (const auto& f : squarefree_decomposition(top.monic())) {
    for (int i = 0; i < f.multiplicity / 2; ++i) sq = sq * f.poly;
    if (f.multiplicity % 2) odd = odd * f.poly;
  }
  auto integral_primitive = [&](const UPoly& p, mpq_class& scale) {
    mpz_class den = 1, num = 0;
    for (const auto& c : p.coeffs()) {
      den = lcm(den, mpz_class(c.rational().get_den()));
      num = gcd(num, mpz_class(c.rational().get_num()));
    }
    scale = mpq_class(den, num);
    scale.canonicalize();
    return p.scale(q->from_rational(scale));
  };
  mpq_class so, ss;
  UPoly odd_i = integral_primitive(odd, so), sq_i = integral_primitive(sq, ss);
  // top = lc * odd * sq^2 = c * odd_i * sq_i^2 with c = lc / (so * ss^2).
  mpq_class c = lc / (so * ss * ss);
  c /= 9;
  c.canonicalize();
  // c = s * w^2 with s a square-free integer.
  mpz_class nn = c.get_num() * c.get_den();
  mpz_class s = nn < 0 ? -1 : 1;
  nn = abs(nn);
  mpz_class w2 = 1;
  for (mpz_class pfac = 2; pfac * pfac <= nn; ++pfac) {
    while (nn % (pfac * pfac) == 0) {
      nn /= pfac * pfac;
      w2 *= pfac;
    }
  }
  s *= nn;
  // c = s * (w2 / den)^2 since c.num * c.den = s * w2^2.
  mpq_class w(w2, c.get_den());
  w.canonicalize();
  p3 = RatFun(odd_i.scale(q->from_rational(mpq_class(s))));
  p2 = RatFun(sq_i.scale(q->from_rational(w)), n.den());
}

}  // namespace

RadicalExpr leaf(const RatFun& v, std::string name) {
  auto n = std::make_shared<RadicalNode>();
  n->value = v;
  n->name = std::move(name);
  return n;
}
RadicalExpr zeta() { return make(RadicalOp::Zeta, {}); }
RadicalExpr add(RadicalExpr a, RadicalExpr b) { return make(RadicalOp::Add, {std::move(a), std::move(b)}); }
RadicalExpr sub(RadicalExpr a, RadicalExpr b) { return make(RadicalOp::Sub, {std::move(a), std::move(b)}); }
RadicalExpr mul(RadicalExpr a, RadicalExpr b) { return make(RadicalOp::Mul, {std::move(a), std::move(b)}); }
RadicalExpr div(RadicalExpr a, RadicalExpr b) { return make(RadicalOp::Div, {std::move(a), std::move(b)}); }
RadicalExpr pow(RadicalExpr a, int e) { return make(RadicalOp::Pow, {std::move(a)}, e); }
RadicalExpr sqrt(RadicalExpr a, int branch) {
  if (branch < 0 || branch > 1) throw Error("sqrt: branch must be 0 or 1");
  return make(RadicalOp::Sqrt, {std::move(a)}, branch);
}
RadicalExpr cbrt(RadicalExpr a, int branch) {
  if (branch < 0 || branch > 2) throw Error("cbrt: branch must be 0, 1 or 2");
  return make(RadicalOp::Cbrt, {std::move(a)}, branch);
}
RadicalExpr coupled_sqrt(RadicalExpr radicand, RadicalExpr numerator, RadicalExpr s1, RadicalExpr s2) {
  return make(RadicalOp::Coupled, {std::move(radicand), std::move(numerator), std::move(s1), std::move(s2)});
}

EvalResult evaluate(const RadicalExpr& e, std::complex<double> t) {
  EvalResult out;
  out.value = eval_node(e, t, out.coupling_defect);
  return out;
}

RadicalExpr named(const RadicalExpr& e, std::string name) {
  auto n = std::make_shared<RadicalNode>(*e);
  n->name = std::move(name);
  return n;
}

namespace {

std::string prefix_body(const RadicalExpr& e);

std::string prefix_ref(const RadicalExpr& e) {
  if (!e->name.empty()) return "[" + e->name + "]";
  return prefix_body(e);
}

std::string prefix_body(const RadicalExpr& e) {
  auto args = [&](std::string head) {
    for (const auto& a : e->args) head += " " + prefix_ref(a);
    return "(" + head + ")";
  };
  switch (e->op) {
    case RadicalOp::Leaf:
      return "{" + e->value.to_string() + "}";
    case RadicalOp::Zeta:
      return "zeta";
    case RadicalOp::Add:
      return args("+");
    case RadicalOp::Sub:
      return args("-");
    case RadicalOp::Mul:
      return args("*");
    case RadicalOp::Div:
      return args("/");
    case RadicalOp::Pow:
      return "(^ " + prefix_ref(e->args[0]) + " " + std::to_string(e->index) + ")";
    case RadicalOp::Sqrt:
      return args("sqrt " + std::to_string(e->index));
    case RadicalOp::Cbrt:
      return args("cbrt " + std::to_string(e->index));
    case RadicalOp::Coupled:
      return args("coupled");
  }
  throw Error("radical: bad node");
}

}  // namespace

std::string to_prefix(const RadicalExpr& e) {
  if (e->op == RadicalOp::Leaf && !e->name.empty()) return "[" + e->name + "]";
  return prefix_body(e);
}

std::vector<std::pair<std::string, std::string>> named_definitions(const RadicalExpr& e) {
  std::vector<std::pair<std::string, std::string>> out;
  std::map<std::string, bool> seen;
  std::function<void(const RadicalExpr&, bool)> walk = [&](const RadicalExpr& n, bool root) {
    for (const auto& a : n->args) walk(a, false);
    if (root || n->name.empty() || n->op == RadicalOp::Leaf) return;
    if (seen.emplace(n->name, true).second) out.emplace_back(n->name, prefix_body(n));
  };
  walk(e, true);
  return out;
}

std::map<std::string, RatFun> named_leaves(const RadicalExpr& e) {
  std::map<std::string, RatFun> out;
  std::function<void(const RadicalExpr&)> walk = [&](const RadicalExpr& n) {
    if (n->op == RadicalOp::Leaf && !n->name.empty()) out.emplace(n->name, n->value);
    for (const auto& a : n->args) walk(a);
  };
  walk(e);
  return out;
}

std::map<std::string, RatFun> quartic_quantities(const std::vector<RatFun>& coeffs_in) {
  auto c = trimmed(coeffs_in);
  if (c.size() != 5) throw Error("quartic_quantities: expected degree 4");
  std::map<std::string, RatFun> out;
  const RatFun D = c[4] * rq(1, 4), C = -c[3] * rq(1, 4), A = -c[2];
  const RatFun b3 = c[3] / c[4], b2 = c[2] / c[4], b1 = c[1] / c[4], b0 = c[0] / c[4];
  const RatFun p = b2 - rq(3, 8) * b3 * b3;
  const RatFun q = b1 - rq(1, 2) * b2 * b3 + rq(1, 8) * power(b3, 3);
  const RatFun rr = b0 - rq(1, 4) * b1 * b3 + rq(1, 16) * b2 * b3 * b3 - rq(3, 256) * power(b3, 4);
  // Resolvent z^3 + e2 z^2 + e1 z + e0 whose roots z_i give y = sum sqrt(z_i).
  const RatFun e2 = p * rq(1, 2), e1 = (p * p - r(4) * rr) * rq(1, 16), e0 = -(q * q) * rq(1, 64);
  // z = ((C/D)^2 - a) / 16 and a = (s - 2A) / (3D): z = alpha + beta s.
  const RatFun cd = C / D;
  const RatFun alpha = (cd * cd + r(2) * A / (r(3) * D)) * rq(1, 16);
  const RatFun beta = -(r(1) / (r(48) * D));
  const RatFun s3 = power(beta, 3);
  const RatFun s2 = r(3) * alpha * beta * beta + e2 * beta * beta;
  const RatFun s1 = r(3) * alpha * alpha * beta + r(2) * e2 * alpha * beta + e1 * beta;
  const RatFun s0 = power(alpha, 3) + e2 * alpha * alpha + e1 * alpha + e0;
  if (!(s2 / s3).is_zero()) throw Error("quartic_quantities: resolvent shift failed");
  const RatFun P = s1 / s3, Q = s0 / s3;
  const RatFun B = P * rq(1, 3), P1 = Q * rq(1, 2);
  RatFun P2, P3;
  split_square(P1 * P1 + power(B, 3), P2, P3);
  out.emplace("A", A);
  out.emplace("B", B);
  out.emplace("C", C);
  out.emplace("D", D);
  out.emplace("P1", P1);
  out.emplace("P2", P2);
  out.emplace("P3", P3);
  out.emplace("N", -(r(8) * q));
  return out;
}

std::vector<RadicalExpr> solve_by_radicals(const std::vector<RatFun>& coeffs_in) {
  auto c = trimmed(coeffs_in);
  if (c.empty()) throw Error("solve_by_radicals: zero polynomial");
  if (coeffs_in.size() != c.size()) throw Error("solve_by_radicals: vanishing leading coefficient");
  const int d = static_cast<int>(c.size()) - 1;
  if (d < 1 || d > 4) throw Error("solve_by_radicals: degree must be 1 to 4");
  std::vector<RadicalExpr> out;
  if (d == 1) {
    out.push_back(leaf(-c[0] / c[1]));
    return out;
  }
  if (d == 2) {
    auto disc = leaf(c[1] * c[1] - r(4) * c[2] * c[0], "disc");
    auto m = leaf(-c[1] / (r(2) * c[2])), h = leaf(r(1) / (r(2) * c[2]));
    for (int b = 0; b < 2; ++b) out.push_back(add(m, mul(h, sqrt(disc, b))));
    return out;
  }
  if (d == 3) {
    // X = s - c2 / (3 c3), s^3 + P s + Q = 0; s = u - P / (3u).
    const RatFun b2 = c[2] / c[3], b1 = c[1] / c[3], b0 = c[0] / c[3];
    const RatFun P = b1 - b2 * b2 * rq(1, 3);
    const RatFun Q = rq(2, 27) * power(b2, 3) - b2 * b1 * rq(1, 3) + b0;
    auto shift = leaf(-b2 * rq(1, 3), "shift");
    auto half_q = leaf(-Q * rq(1, 2), "-Q/2");
    auto disc = leaf(Q * Q * rq(1, 4) + power(P, 3) * rq(1, 27), "disc");
    auto p3 = leaf(P * rq(1, 3), "P/3");
    for (int k = 0; k < 3; ++k) {
      auto u = cbrt(add(half_q, sqrt(disc, 0)), k);
      RadicalExpr s = P.is_zero() ? u : sub(u, div(p3, u));
      out.push_back(add(s, shift));
    }
    return out;
  }
  auto qq = quartic_quantities(c);
  auto A = leaf(qq.at("A"), "A"), B = leaf(qq.at("B"), "B"), C = leaf(qq.at("C"), "C"), D = leaf(qq.at("D"), "D");
  auto P1 = leaf(qq.at("P1"), "P1"), P2 = leaf(qq.at("P2"), "P2"), P3 = leaf(qq.at("P3"), "P3");
  auto N = leaf(qq.at("N"), "N");
  auto R1 = named(cbrt(sub(mul(mul(leaf(r(3)), P2), sqrt(P3, 0)), P1), 0), "R1");
  auto diff = sub(R1, div(B, R1)), sum = add(R1, div(B, R1));
  // sqrt(-3) = 1 + 2 zeta.
  auto root3 = add(leaf(r(1)), mul(leaf(r(2)), zeta()));
  auto two_a = mul(leaf(r(2)), A), three_d = mul(leaf(r(3)), D), half = leaf(rq(1, 2));
  auto a1 = named(div(sub(diff, two_a), three_d), "a1");
  auto a2 = named(div(sub(mul(half, sub(mul(root3, sum), diff)), two_a), three_d), "a2");
  auto a3 = named(div(sub(mul(leaf(rq(-1, 2)), add(mul(root3, sum), diff)), two_a), three_d), "a3");
  auto cd = div(C, D);
  auto cd2 = pow(cd, 2);
  auto rad1 = sub(cd2, a1), rad2 = sub(cd2, a2), rad3 = sub(cd2, a3);
  auto quarter = leaf(rq(1, 4));
  for (int b1 = 0; b1 < 2; ++b1) {
    for (int b2 = 0; b2 < 2; ++b2) {
      // Branch 1 is the negated root: S1-, S2-.
      auto S1 = named(sqrt(rad1, b1), b1 ? "S1-" : "S1+"), S2 = named(sqrt(rad2, b2), b2 ? "S2-" : "S2+");
      auto S3 = coupled_sqrt(rad3, N, S1, S2);
      out.push_back(mul(quarter, add(add(add(cd, S1), S2), S3)));
    }
  }
  return out;
}

NumericReport verify_numeric(const std::vector<RadicalExpr>& roots, const std::vector<RatFun>& coeffs_in, int samples,
                             std::uint64_t seed, double lo, double hi) {
  auto c = trimmed(coeffs_in);
  const int d = static_cast<int>(c.size()) - 1;
  NumericReport rep;
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    // Rational sample lo + (hi - lo) * k / 997.
    const double t = lo + (hi - lo) * static_cast<double>(rng() % 998) / 997.0;
    std::vector<cd> g(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) g[i] = c[i].eval(t);
    cd sum = 0, prod = 1;
    double abs_sum = 0, abs_prod = 1;
    for (const auto& e : roots) {
      EvalResult ev = evaluate(e, t);
      rep.max_coupling_defect = std::max(rep.max_coupling_defect, ev.coupling_defect);
      const cd x = ev.value;
      cd val = 0;
      double scale = 0;
      for (int i = d; i >= 0; --i) {
        val = val * x + g[i];
        scale += std::abs(g[i]) * std::pow(std::abs(x), i);
      }
      rep.max_residual = std::max(rep.max_residual, std::abs(val) / std::max(scale, 1e-300));
      sum += x;
      prod *= x;
      abs_sum += std::abs(x);
      abs_prod *= std::abs(x);
    }
    if (static_cast<int>(roots.size()) == d) {
      const cd want_sum = -g[d - 1] / g[d];
      const cd want_prod = (d % 2 ? -1.0 : 1.0) * g[0] / g[d];
      rep.vieta_sum_defect = std::max(rep.vieta_sum_defect, std::abs(sum - want_sum) / std::max(abs_sum, 1e-300));
      rep.vieta_product_defect =
          std::max(rep.vieta_product_defect, std::abs(prod - want_prod) / std::max(abs_prod, 1e-300));
    }
    ++rep.samples;
  }
  return rep;
}

}  // namespace gonal

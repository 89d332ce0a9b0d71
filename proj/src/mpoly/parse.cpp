#include "gonal/mpoly/parse.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace gonal {

namespace {

class Parser {
 public:
  Parser(const RingPtr& r, const std::string& s, int line) : r_(r), s_(s), line_(line) {}

  MPoly run() {
    skip();
    if (pos_ >= s_.size()) fail("empty polynomial");
    MPoly p = expr();
    skip();
    if (pos_ < s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, static_cast<int>(pos_) + 1, msg); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MPoly expr() {
    MPoly acc(r_);
    bool neg = false;
    if (accept('-')) {
      neg = true;
    } else {
      accept('+');
    }
    MPoly t = term();
    acc = neg ? -t : t;
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MPoly term() {
    MPoly acc = power();
    for (;;) {
      if (accept('*')) {
        acc *= power();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        MPoly d = power();
        if (!d.is_constant() || d.is_zero()) {
          pos_ = at;
          fail("division only by nonzero constants");
        }
        acc = acc.scale(r_->field()->inv(d.lc()));
      } else {
        return acc;
      }
    }
  }

  MPoly power() {
    MPoly base = atom();
    if (accept('^')) {
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected non-negative integer exponent");
      const std::string digits = s_.substr(start, pos_ - start);
      if (digits.size() > 4) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  MPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class v(s_.substr(start, pos_ - start));
      return MPoly::constant(r_, r_->field()->from_mpz(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      if (!r_->has_var(name)) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return MPoly::var(r_, name);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  const RingPtr& r_;
  const std::string& s_;
  int line_;
  std::size_t pos_ = 0;
};

}  // namespace

MPoly parse_poly(const RingPtr& r, const std::string& text, int line) { return Parser(r, text, line).run(); }

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

FieldPtr parse_field(const std::string& spec) {
  const std::string s = trim(spec);
  if (s == "Q" || s == "QQ") return Field::rationals();
  if (s.size() > 4 && s.rfind("GF(", 0) == 0 && s.back() == ')') {
    const std::string digits = s.substr(3, s.size() - 4);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      return Field::prime(std::stoull(digits));
    }
  }
  throw Error("unknown field '" + s + "' (expected Q or GF(p))");
}

IdealText parse_ideal_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  FieldPtr k = Field::rationals();
  std::vector<std::string> vars;
  std::vector<std::pair<int, std::string>> body;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.rfind("field:", 0) == 0) {
      if (!vars.empty() || !body.empty()) throw ParseError(lineno, 1, "field header must come first");
      try {
        k = parse_field(t.substr(6));
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        throw ParseError(lineno, 1, e.what());
      }
      continue;
    }
    if (t.rfind("vars:", 0) == 0) {
      if (!vars.empty()) throw ParseError(lineno, 1, "duplicate vars header");
      std::string list = t.substr(5);
      std::replace(list.begin(), list.end(), ',', ' ');
      std::istringstream vs(list);
      std::string v;
      while (vs >> v) vars.push_back(v);
      if (vars.empty()) throw ParseError(lineno, 1, "empty variable list");
      continue;
    }
    if (vars.empty()) throw ParseError(lineno, 1, "missing vars header");
    body.emplace_back(lineno, line);
  }
  if (vars.empty()) throw ParseError(lineno + 1, 1, "missing vars header");
  if (body.empty()) throw ParseError(lineno + 1, 1, "no polynomials in input");
  IdealText out;
  out.ring = PolyRing::make(k, vars);
  for (const auto& [no, src] : body) out.polys.push_back(parse_poly(out.ring, src, no));
  return out;
}

}  // namespace gonal

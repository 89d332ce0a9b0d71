#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace gonal {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

using Rng = std::mt19937_64;

/// Raw element storage. The owning Field gives it meaning: a residue for
/// prime fields, a reduced rational for Q, and a fixed-length coefficient
/// vector over the base field for simple extensions.
struct Scalar {
  std::variant<std::uint64_t, mpq_class, std::vector<Scalar>> rep;

  Scalar() : rep(std::uint64_t{0}) {}
  explicit Scalar(std::uint64_t r) : rep(r) {}
  explicit Scalar(mpq_class q) : rep(std::move(q)) {}
  explicit Scalar(std::vector<Scalar> v) : rep(std::move(v)) {}

  std::uint64_t residue() const { return std::get<std::uint64_t>(rep); }
  const mpq_class& rational() const { return std::get<mpq_class>(rep); }
  const std::vector<Scalar>& coeffs() const { return std::get<std::vector<Scalar>>(rep); }
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Exact coefficient field: Q, F_p (p > 3), or a simple extension
/// base[a]/(m(a)) of tower depth at most 2.
class Field : public std::enable_shared_from_this<Field> {
 public:
  enum class Kind { Rationals, Prime, Extension };
  static constexpr int kMaxDepth = 2;

  static FieldPtr rationals();
  static FieldPtr prime(std::uint64_t p);
  /// No irreducibility check; use gonal::extend() for the checked version.
  static FieldPtr extension_unchecked(FieldPtr base, std::vector<Scalar> monic_minpoly,
                                      std::string generator);

  Kind kind() const { return kind_; }
  bool is_rationals() const { return kind_ == Kind::Rationals; }
  bool is_prime() const { return kind_ == Kind::Prime; }
  bool is_extension() const { return kind_ == Kind::Extension; }
  bool is_finite() const { return characteristic() != 0; }
  std::uint64_t characteristic() const { return p_; }
  std::uint64_t modulus() const { return p_; }
  int depth() const { return depth_; }
  /// Degree over the immediate base (1 for Q and F_p).
  int degree() const { return degree_; }
  /// Degree over the prime field.
  int absolute_degree() const;
  /// Number of elements; 0 for characteristic zero.
  mpz_class cardinality() const;
  const FieldPtr& base() const { return base_; }
  FieldPtr prime_field() const;
  /// Monic minimal polynomial of the generator over base(), low to high.
  const std::vector<Scalar>& minpoly() const { return minpoly_; }
  const std::string& generator_name() const { return gen_; }

  bool same_as(const Field& other) const;
  std::string describe() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long v) const;
  Scalar from_mpz(const mpz_class& v) const;
  Scalar from_rational(const mpq_class& q) const;
  /// Generator of an extension field.
  Scalar gen() const;
  /// Image of an element of base() (or of any field below in the tower).
  Scalar embed(const FieldPtr& from, const Scalar& s) const;

  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;
  bool eq(const Scalar& a, const Scalar& b) const;
  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const;
  Scalar pow(const Scalar& a, const mpz_class& e) const;
  void add_to(Scalar& a, const Scalar& b) const;

  /// True when the element lies in the prime field (Q or F_p); sets out.
  bool to_rational(const Scalar& a, mpq_class& out) const;
  Scalar random(Rng& rng) const;
  std::string to_string(const Scalar& a) const;
  /// Machine-readable form: rationals as "n/d", extensions as coefficient lists.
  std::string serialize(const Scalar& a) const;

 private:
  Field() = default;

  Kind kind_ = Kind::Rationals;
  std::uint64_t p_ = 0;
  int depth_ = 0;
  int degree_ = 1;
  FieldPtr base_;
  std::vector<Scalar> minpoly_;
  std::string gen_;
  FieldPtr prime_;
};

/// Element bundled with its field, for user-facing code and tests.
class FieldElement {
 public:
  FieldElement(FieldPtr f, Scalar s) : field_(std::move(f)), s_(std::move(s)) {}
  static FieldElement from_int(const FieldPtr& f, long v) { return {f, f->from_int(v)}; }

  const FieldPtr& field() const { return field_; }
  const Scalar& raw() const { return s_; }
  bool is_zero() const { return field_->is_zero(s_); }

  FieldElement operator+(const FieldElement& o) const { return {field_, field_->add(s_, o.s_)}; }
  FieldElement operator-(const FieldElement& o) const { return {field_, field_->sub(s_, o.s_)}; }
  FieldElement operator*(const FieldElement& o) const { return {field_, field_->mul(s_, o.s_)}; }
  FieldElement operator/(const FieldElement& o) const { return {field_, field_->div(s_, o.s_)}; }
  FieldElement operator-() const { return {field_, field_->neg(s_)}; }
  FieldElement inverse() const { return {field_, field_->inv(s_)}; }
  bool operator==(const FieldElement& o) const { return field_->eq(s_, o.s_); }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }
  std::string to_string() const { return field_->to_string(s_); }

 private:
  FieldPtr field_;
  Scalar s_;
};

bool is_probable_prime(std::uint64_t n);

}  // namespace gonal

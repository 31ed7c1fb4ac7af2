#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace gradus {

/// Coefficient field: either F_p for an odd prime p < 2^31, or Q.
class FieldSpec {
 public:
  static constexpr std::uint32_t kDefaultPrime = 32003;

  /// Throws PreconditionError unless p is a prime with 2 < p < 2^31.
  static FieldSpec prime(std::uint64_t p);
  static FieldSpec rationals() { return FieldSpec(0); }
  static FieldSpec default_field() { return FieldSpec(kDefaultPrime); }

  /// Accepts a decimal prime ("32003") or "Q".
  static FieldSpec parse(std::string_view text);

  bool is_prime() const { return p_ != 0; }
  bool is_rational() const { return p_ == 0; }
  /// The prime p; zero for Q.
  std::uint32_t characteristic() const { return p_; }

  std::string to_string() const;

  friend bool operator==(FieldSpec, FieldSpec) = default;

 private:
  explicit FieldSpec(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

/// Exact field element in canonical form: a residue in [0, p) or a reduced
/// fraction with positive denominator.
class Scalar {
 public:
  Scalar() : Scalar(FieldSpec::default_field(), 0) {}
  Scalar(FieldSpec field, std::int64_t value);
  Scalar(FieldSpec field, const mpq_class& value);

  static Scalar zero(FieldSpec field) { return Scalar(field, 0); }
  static Scalar one(FieldSpec field) { return Scalar(field, 1); }

  /// Parses an integer or a fraction "a/b"; in F_p the fraction is a*b^-1.
  static Scalar parse(FieldSpec field, std::string_view text);

  FieldSpec field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Residue in [0, p); only valid for prime fields.
  std::uint32_t residue() const { return std::get<std::uint32_t>(value_); }
  /// Only valid for the rational field.
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }

  Scalar inverse() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Canonical text: residue for F_p, "a" or "a/b" for Q.
  std::string to_string() const;
  /// Signed text used by the polynomial printer: residues above p/2 are
  /// written as negative integers. Parses back to the same element.
  std::string to_signed_string() const;
  /// True when to_signed_string() starts with '-'.
  bool prints_negative() const;

 private:
  FieldSpec field_;
  std::variant<std::uint32_t, mpq_class> value_;
};

enum class ArithOp { kAdd, kSub, kMul, kDiv };

/// Checked binary operation; throws MismatchError or DivisionByZero.
Scalar field_arith(const Scalar& a, const Scalar& b, ArithOp op);

bool is_prime(std::uint64_t n);

}  // namespace gradus

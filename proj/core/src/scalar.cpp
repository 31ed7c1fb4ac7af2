#include "gradus/scalar.hpp"

#include <charconv>
#include <limits>

#include "gradus/error.hpp"

namespace gradus {
namespace {

std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t reduce(const mpz_class& v, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

void check_same(const Scalar& a, const Scalar& b) {
  if (a.field() != b.field()) {
    throw MismatchError("scalars from different fields: " + a.field().to_string() +
                        " vs " + b.field().to_string());
  }
}

mpz_class parse_integer(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty integer literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw ParseError("malformed integer literal '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw ParseError("malformed integer literal '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return mpz_class(s, 10);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p <= 2 || p >= (std::uint64_t{1} << 31) || !gradus::is_prime(p)) {
    throw PreconditionError("field characteristic must be a prime with 2 < p < 2^31, got " +
                            std::to_string(p));
  }
  return FieldSpec(static_cast<std::uint32_t>(p));
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q" || text == "q" || text == "QQ") return rationals();
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("malformed field '" + std::string(text) + "' (expected a prime or Q)");
  }
  return prime(p);
}

std::string FieldSpec::to_string() const {
  return is_rational() ? std::string("Q") : std::to_string(p_);
}

Scalar::Scalar(FieldSpec field, std::int64_t value) : field_(field) {
  if (field.is_prime()) {
    value_ = reduce(value, field.characteristic());
  } else {
    value_ = mpq_class(static_cast<long>(value));
  }
}

Scalar::Scalar(FieldSpec field, const mpq_class& value) : field_(field) {
  if (field.is_prime()) {
    std::uint32_t p = field.characteristic();
    mpq_class q = value;
    q.canonicalize();
    std::uint32_t den = reduce(q.get_den(), p);
    if (den == 0) throw DivisionByZero();
    std::uint64_t num = reduce(q.get_num(), p);
    value_ = static_cast<std::uint32_t>(num * pow_mod(den, p - 2, p) % p);
  } else {
    mpq_class q = value;
    q.canonicalize();
    value_ = std::move(q);
  }
}

Scalar Scalar::parse(FieldSpec field, std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Scalar(field, mpq_class(parse_integer(text)));
  }
  mpz_class num = parse_integer(text.substr(0, slash));
  mpz_class den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw DivisionByZero();
  return Scalar(field, mpq_class(num, den));
}

bool Scalar::is_zero() const {
  if (field_.is_prime()) return std::get<std::uint32_t>(value_) == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_prime()) return std::get<std::uint32_t>(value_) == 1;
  return std::get<mpq_class>(value_) == 1;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Scalar r = *this;
  if (field_.is_prime()) {
    std::uint32_t p = field_.characteristic();
    r.value_ = pow_mod(residue(), p - 2, p);
  } else {
    r.value_ = mpq_class(1) / rational();
  }
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (field_.is_prime()) {
    std::uint32_t v = residue();
    r.value_ = v == 0 ? 0u : field_.characteristic() - v;
  } else {
    r.value_ = mpq_class(-rational());
  }
  return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  check_same(a, b);
  Scalar r = a;
  if (a.field_.is_prime()) {
    std::uint64_t s = std::uint64_t{a.residue()} + b.residue();
    std::uint32_t p = a.field_.characteristic();
    r.value_ = static_cast<std::uint32_t>(s >= p ? s - p : s);
  } else {
    r.value_ = mpq_class(a.rational() + b.rational());
  }
  return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  check_same(a, b);
  Scalar r = a;
  if (a.field_.is_prime()) {
    std::uint32_t p = a.field_.characteristic();
    std::uint64_t s = std::uint64_t{a.residue()} + p - b.residue();
    r.value_ = static_cast<std::uint32_t>(s >= p ? s - p : s);
  } else {
    r.value_ = mpq_class(a.rational() - b.rational());
  }
  return r;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  check_same(a, b);
  Scalar r = a;
  if (a.field_.is_prime()) {
    r.value_ = static_cast<std::uint32_t>(std::uint64_t{a.residue()} * b.residue() %
                                          a.field_.characteristic());
  } else {
    r.value_ = mpq_class(a.rational() * b.rational());
  }
  return r;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  check_same(a, b);
  return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string Scalar::to_string() const {
  if (field_.is_prime()) return std::to_string(residue());
  return rational().get_str();
}

bool Scalar::prints_negative() const {
  if (field_.is_prime()) return residue() > field_.characteristic() / 2;
  return sgn(rational()) < 0;
}

std::string Scalar::to_signed_string() const {
  if (field_.is_prime() && prints_negative()) {
    return "-" + std::to_string(field_.characteristic() - residue());
  }
  return to_string();
}

Scalar field_arith(const Scalar& a, const Scalar& b, ArithOp op) {
  switch (op) {
    case ArithOp::kAdd: return a + b;
    case ArithOp::kSub: return a - b;
    case ArithOp::kMul: return a * b;
    case ArithOp::kDiv: return a / b;
  }
  throw PreconditionError("unknown arithmetic operation");
}

}  // namespace gradus

#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>

namespace gradus {

inline constexpr std::size_t kMaxVariables = 16;

/// Exponent vector x_0^{a_0} ... x_n^{a_n} with cached total degree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<unsigned> exponents);
  explicit Monomial(std::span<const unsigned> exponents);

  /// The monomial x_index in nvars variables.
  static Monomial variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  unsigned degree() const { return degree_; }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, unsigned e);

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  /// True when exactly one variable occurs.
  bool is_pure_power() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient a / b; throws PreconditionError unless b divides a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.nvars_ == b.nvars_ && a.exps_ == b.exps_;
  }

  /// "1", "x0", "x0^2*x2", ...
  std::string to_string() const;

 private:
  std::array<std::uint16_t, kMaxVariables> exps_{};
  std::uint8_t nvars_ = 0;
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Monomial order. Elimination(k) compares the first k variables by grevlex,
/// then the remaining ones by grevlex; it eliminates x_0..x_{k-1}.
class TermOrder {
 public:
  enum class Kind : std::uint8_t { kGrevlex, kLex, kElimination };

  static TermOrder grevlex() { return TermOrder(Kind::kGrevlex, 0); }
  static TermOrder lex() { return TermOrder(Kind::kLex, 0); }
  static TermOrder elimination(std::size_t block) { return TermOrder(Kind::kElimination, block); }
  /// Accepts "grevlex", "lex" or "elim:<k>".
  static TermOrder parse(std::string_view text);

  Kind kind() const { return kind_; }
  std::size_t block() const { return block_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string to_string() const;

  friend bool operator==(TermOrder, TermOrder) = default;

 private:
  TermOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) {}
  Kind kind_;
  std::size_t block_;
};

/// Free-function spelling of TermOrder::compare.
inline std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b,
                                              const TermOrder& order) {
  return order.compare(a, b);
}

}  // namespace gradus

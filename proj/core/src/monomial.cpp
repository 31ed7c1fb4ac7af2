#include "gradus/monomial.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "gradus/error.hpp"

namespace gradus {
namespace {

void check_nvars(std::size_t nvars) {
  if (nvars == 0 || nvars > kMaxVariables) {
    throw PreconditionError("variable count must lie in [1, " + std::to_string(kMaxVariables) +
                            "], got " + std::to_string(nvars));
  }
}

void check_compatible(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw MismatchError("monomials with different variable counts");
}

// Graded reverse lexicographic comparison restricted to variables [lo, hi).
std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                                   std::size_t hi) {
  unsigned da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da <=> db;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return b[i] <=> a[i];  // smaller last exponent wins
  }
  return std::strong_ordering::equal;
}

}  // namespace

Monomial::Monomial(std::size_t nvars) : nvars_(static_cast<std::uint8_t>(nvars)) {
  check_nvars(nvars);
}

Monomial::Monomial(std::initializer_list<unsigned> exponents)
    : Monomial(std::span<const unsigned>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const unsigned> exponents) : Monomial(exponents.size()) {
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index) {
  Monomial m(nvars);
  m.set(index, 1);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= nvars_) throw PreconditionError("variable index out of range");
  if (e > std::numeric_limits<std::uint16_t>::max()) throw PreconditionError("exponent overflow");
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = static_cast<std::uint16_t>(e);
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

bool Monomial::is_pure_power() const {
  return std::count_if(exps_.begin(), exps_.begin() + nvars_, [](auto e) { return e != 0; }) == 1;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  check_compatible(a, b);
  Monomial r(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) r.set(i, unsigned{a.exps_[i]} + b.exps_[i]);
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  check_compatible(a, b);
  if (!b.divides(a)) throw PreconditionError("monomial division is not exact");
  Monomial r(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) r.set(i, unsigned{a.exps_[i]} - b.exps_[i]);
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  check_compatible(a, b);
  Monomial r(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) r.set(i, std::max(a.exps_[i], b.exps_[i]));
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  check_compatible(a, b);
  Monomial r(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) r.set(i, std::min(a.exps_[i], b.exps_[i]));
  return r;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i);
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    h ^= m[i];
    h *= 1099511628211ull;
  }
  return h;
}

TermOrder TermOrder::parse(std::string_view text) {
  if (text == "grevlex") return grevlex();
  if (text == "lex") return lex();
  if (text.starts_with("elim:")) {
    std::size_t k = 0;
    auto digits = text.substr(5);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && k > 0) return elimination(k);
  }
  throw ParseError("unknown term order '" + std::string(text) + "'");
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  check_compatible(a, b);
  const std::size_t n = a.nvars();
  switch (kind_) {
    case Kind::kGrevlex:
      return grevlex_range(a, b, 0, n);
    case Kind::kLex:
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
      }
      return std::strong_ordering::equal;
    case Kind::kElimination: {
      std::size_t k = std::min(block_, n);
      auto first = grevlex_range(a, b, 0, k);
      if (first != 0) return first;
      return grevlex_range(a, b, k, n);
    }
  }
  return std::strong_ordering::equal;
}

std::string TermOrder::to_string() const {
  switch (kind_) {
    case Kind::kGrevlex: return "grevlex";
    case Kind::kLex: return "lex";
    case Kind::kElimination: return "elim:" + std::to_string(block_);
  }
  return "?";
}

}  // namespace gradus

#include "gradus/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "gradus/error.hpp"

namespace gradus {
namespace {

void check_same_ring(const Polynomial& f, const Polynomial& g) {
  if (!(f.ring() == g.ring())) throw MismatchError("polynomials from different rings");
}

// Merges two descending term lists into a + b, or a - b when subtract is set.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract,
                        const TermOrder& order) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto c = order.compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(subtract ? Term{b[j].monomial, -b[j].coeff} : b[j]);
      ++j;
    } else {
      Scalar s = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!s.is_zero()) out.push_back({a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(subtract ? Term{b[j].monomial, -b[j].coeff} : b[j]);
  return out;
}

void collect_monomials(std::size_t nvars, std::size_t var, unsigned remaining, Monomial& cur,
                       std::vector<Monomial>& out) {
  if (var + 1 == nvars) {
    cur.set(var, remaining);
    out.push_back(cur);
    cur.set(var, 0);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    cur.set(var, e);
    collect_monomials(nvars, var + 1, remaining - e, cur, out);
  }
  cur.set(var, 0);
}

class Parser {
 public:
  Parser(const RingSpec& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial run() {
    std::vector<Term> terms;
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Term t = parse_term();
      if (negative) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      first = false;
      skip_space();
    }
    return Polynomial(ring_, std::move(terms));
  }

 private:
  Term parse_term() {
    Term t{Monomial(ring_.nvars), Scalar::one(ring_.field)};
    parse_factor(t);
    skip_space();
    while (!at_end() && peek() == '*') {
      ++pos_;
      skip_space();
      parse_factor(t);
      skip_space();
    }
    return t;
  }

  void parse_factor(Term& t) {
    if (at_end()) fail("unexpected end of input");
    char c = peek();
    if (c == 'x') {
      ++pos_;
      std::size_t index = parse_digits("variable index");
      if (index >= ring_.nvars) {
        fail("variable x" + std::to_string(index) + " outside ring with " +
             std::to_string(ring_.nvars) + " variables");
      }
      unsigned exp = 1;
      skip_space();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_space();
        exp = static_cast<unsigned>(parse_digits("exponent"));
      }
      Monomial v(ring_.nvars);
      v.set(index, exp);
      t.monomial = t.monomial * v;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      parse_digits("coefficient");
      skip_space();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_space();
        parse_digits("denominator");
      }
      std::string literal;
      for (char ch : text_.substr(start, pos_ - start)) {
        if (!std::isspace(static_cast<unsigned char>(ch))) literal += ch;
      }
      t.coeff *= Scalar::parse(ring_.field, literal);
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
  }

  std::size_t parse_digits(const char* what) {
    std::size_t start = pos_;
    std::size_t value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      if (value > 100000000) fail(std::string(what) + " too large");
      value = value * 10 + static_cast<std::size_t>(peek() - '0');
      ++pos_;
    }
    if (pos_ == start) fail(std::string("expected ") + what);
    return value;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("malformed polynomial '" + std::string(text_) + "' at offset " +
                     std::to_string(pos_) + ": " + why);
  }

  const RingSpec& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RingSpec RingSpec::make(std::size_t nvars, FieldSpec field, TermOrder order) {
  if (nvars == 0 || nvars > kMaxVariables) {
    throw PreconditionError("ring needs between 1 and " + std::to_string(kMaxVariables) +
                            " variables");
  }
  return RingSpec{nvars, field, order};
}

Polynomial::Polynomial(RingSpec ring) : ring_(ring) {}

Polynomial::Polynomial(RingSpec ring, std::vector<Term> terms) : ring_(ring) {
  for (const auto& t : terms) {
    if (t.monomial.nvars() != ring_.nvars) throw MismatchError("term has wrong variable count");
    if (t.coeff.field() != ring_.field) throw MismatchError("term coefficient from another field");
  }
  const TermOrder order = ring_.order;
  std::sort(terms.begin(), terms.end(), [&order](const Term& a, const Term& b) {
    return order.compare(a.monomial, b.monomial) > 0;
  });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().monomial == t.monomial) {
      terms_.back().coeff += t.coeff;
      if (terms_.back().coeff.is_zero()) terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      terms_.push_back(std::move(t));
    }
  }
}

Polynomial Polynomial::from_canonical(RingSpec ring, std::vector<Term> terms) {
  Polynomial r(ring);
  r.terms_ = std::move(terms);
  return r;
}

Polynomial Polynomial::constant(const RingSpec& ring, const Scalar& c) {
  return Polynomial(ring, {Term{Monomial(ring.nvars), c}});
}

Polynomial Polynomial::term(const RingSpec& ring, const Monomial& m, const Scalar& c) {
  return Polynomial(ring, {Term{m, c}});
}

Polynomial Polynomial::variable(const RingSpec& ring, std::size_t index) {
  return term(ring, Monomial::variable(ring.nvars, index), Scalar::one(ring.field));
}

Polynomial Polynomial::parse(const RingSpec& ring, std::string_view text) {
  return Parser(ring, text).run();
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw PreconditionError("leading term of the zero polynomial");
  return terms_.front();
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.monomial.degree()));
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_) {
    if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
  }
  return true;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(leading_coefficient().inverse());
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.monomial, t.coeff * c});
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Scalar& c) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  // multiplication by a monomial preserves the order, so no re-sort
  for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, t.coeff * c});
  return r;
}

Polynomial Polynomial::with_order(TermOrder order) const {
  return Polynomial(ring_.with_order(order), terms_);
}

void Polynomial::subtract_multiple(const Scalar& c, const Monomial& m, const Polynomial& g) {
  check_same_ring(*this, g);
  if (c.is_zero() || g.is_zero()) return;
  terms_ = merge(terms_, g.times_term(m, c).terms_, true, ring_.order);
}

Scalar Polynomial::evaluate(std::span<const Scalar> point) const {
  if (point.size() != ring_.nvars) throw MismatchError("point has wrong number of coordinates");
  Scalar total = Scalar::zero(ring_.field);
  for (const auto& t : terms_) {
    Scalar v = t.coeff;
    for (std::size_t i = 0; i < ring_.nvars; ++i) {
      for (unsigned e = 0; e < t.monomial[i]; ++e) v *= point[i];
    }
    total += v;
  }
  return total;
}

Polynomial Polynomial::operator-() const { return scaled(-Scalar::one(ring_.field)); }

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  check_same_ring(f, g);
  Polynomial r(f.ring_);
  r.terms_ = merge(f.terms_, g.terms_, false, f.ring_.order);
  return r;
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) {
  check_same_ring(f, g);
  Polynomial r(f.ring_);
  r.terms_ = merge(f.terms_, g.terms_, true, f.ring_.order);
  return r;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  check_same_ring(f, g);
  std::vector<Term> products;
  products.reserve(f.size() * g.size());
  for (const auto& a : f.terms_) {
    for (const auto& b : g.terms_) products.push_back({a.monomial * b.monomial, a.coeff * b.coeff});
  }
  return Polynomial(f.ring_, std::move(products));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    bool negative = t.coeff.prints_negative();
    std::string mag = negative ? (-t.coeff).to_signed_string() : t.coeff.to_signed_string();
    if (negative) {
      out += '-';
    } else if (i > 0) {
      out += '+';
    }
    bool constant = t.monomial.degree() == 0;
    if (constant) {
      out += mag;
    } else {
      if (mag != "1") out += mag + "*";
      out += t.monomial.to_string();
    }
  }
  return out;
}

Polynomial poly_arith(const Polynomial& f, const Polynomial& g, PolyOp op) {
  switch (op) {
    case PolyOp::kAdd: return f + g;
    case PolyOp::kSub: return f - g;
    case PolyOp::kMul: return f * g;
  }
  throw PreconditionError("unknown polynomial operation");
}

std::pair<Monomial, Scalar> leading_term(const Polynomial& f) {
  const Term& t = f.leading_term();
  return {t.monomial, t.coeff};
}

std::vector<Monomial> monomials_of_degree(const RingSpec& ring, unsigned d) {
  std::vector<Monomial> out;
  out.reserve(static_cast<std::size_t>(binomial(ring.nvars - 1 + d, ring.nvars - 1)));
  Monomial cur(ring.nvars);
  collect_monomials(ring.nvars, 0, d, cur, out);
  const TermOrder order = ring.order;
  std::sort(out.begin(), out.end(), [&order](const Monomial& a, const Monomial& b) {
    return order.compare(a, b) > 0;
  });
  return out;
}

Matrix coefficient_matrix(std::span<const Polynomial> polys,
                          const std::vector<Monomial>& basis, FieldSpec field) {
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  Matrix m(field, polys.size(), basis.size());
  for (std::size_t r = 0; r < polys.size(); ++r) {
    for (const auto& t : polys[r].terms()) {
      auto it = index.find(t.monomial);
      if (it == index.end()) {
        throw PreconditionError("term " + t.monomial.to_string() + " outside the coordinate basis");
      }
      m(r, it->second) = t.coeff;
    }
  }
  return m;
}

Polynomial polynomial_from_coordinates(const RingSpec& ring, std::span<const Scalar> coords,
                                       const std::vector<Monomial>& basis) {
  if (coords.size() != basis.size()) throw MismatchError("coordinate vector has wrong length");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!coords[i].is_zero()) terms.push_back({basis[i], coords[i]});
  }
  return Polynomial(ring, std::move(terms));
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace gradus

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gradus/matrix.hpp"
#include "gradus/monomial.hpp"
#include "gradus/scalar.hpp"

namespace gradus {

/// k[x_0, ..., x_n] with deg(x_i) = 1 and a fixed monomial order.
struct RingSpec {
  std::size_t nvars = 3;
  FieldSpec field = FieldSpec::default_field();
  TermOrder order = TermOrder::grevlex();

  /// Validated constructor; nvars must lie in [1, kMaxVariables].
  static RingSpec make(std::size_t nvars, FieldSpec field,
                       TermOrder order = TermOrder::grevlex());

  /// Projective dimension n (= nvars - 1).
  std::size_t dimension() const { return nvars - 1; }
  RingSpec with_order(TermOrder o) const { return {nvars, field, o}; }

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

struct Term {
  Monomial monomial;
  Scalar coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial; terms are kept strictly descending in the ring order
/// with no zero coefficients.
class Polynomial {
 public:
  explicit Polynomial(RingSpec ring);
  /// Canonicalizes: sorts, merges equal monomials, drops zeros.
  Polynomial(RingSpec ring, std::vector<Term> terms);

  /// Trusted constructor: terms must already be strictly descending in the
  /// ring order with nonzero coefficients.
  static Polynomial from_canonical(RingSpec ring, std::vector<Term> terms);
  static Polynomial constant(const RingSpec& ring, const Scalar& c);
  static Polynomial term(const RingSpec& ring, const Monomial& m, const Scalar& c);
  static Polynomial variable(const RingSpec& ring, std::size_t index);
  /// Parses text such as "x0^2+x1*x2-3/2*x2^2". Throws ParseError.
  static Polynomial parse(const RingSpec& ring, std::string_view text);

  const RingSpec& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Order-maximal term; throws PreconditionError on the zero polynomial.
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const Scalar& leading_coefficient() const { return leading_term().coeff; }

  /// Largest total degree of a term; -1 for zero.
  int degree() const;
  bool is_homogeneous() const;

  Polynomial monic() const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial times_term(const Monomial& m, const Scalar& c) const;
  /// Same polynomial re-sorted under another order.
  Polynomial with_order(TermOrder order) const;

  /// In place: *this -= c * m * g. Both must share the ring.
  void subtract_multiple(const Scalar& c, const Monomial& m, const Polynomial& g);

  Scalar evaluate(std::span<const Scalar> point) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Inverse of parse(): no spaces, '*' between factors, '^' for powers.
  std::string to_string() const;

 private:
  RingSpec ring_;
  std::vector<Term> terms_;
};

enum class PolyOp { kAdd, kSub, kMul };

Polynomial poly_arith(const Polynomial& f, const Polynomial& g, PolyOp op);

/// Throws PreconditionError on zero.
std::pair<Monomial, Scalar> leading_term(const Polynomial& f);

/// All degree-d monomials of the ring, descending in the ring order.
std::vector<Monomial> monomials_of_degree(const RingSpec& ring, unsigned d);

/// Row r holds the coefficients of polys[r] against the monomial basis.
/// Throws PreconditionError if a term falls outside the basis.
Matrix coefficient_matrix(std::span<const Polynomial> polys, const std::vector<Monomial>& basis,
                          FieldSpec field);

Polynomial polynomial_from_coordinates(const RingSpec& ring, std::span<const Scalar> coords,
                                       const std::vector<Monomial>& basis);

/// Zero when k > n.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace gradus

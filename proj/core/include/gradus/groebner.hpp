#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gradus/polynomial.hpp"

namespace gradus {

struct Division {
  std::vector<Polynomial> quotients;  // one per divisor
  Polynomial remainder;
};

/// Multivariate division in the ring order of f. Among divisors whose
/// leading monomial divides the current leading term, the one with the
/// smallest index is used.
Division divide(const Polynomial& f, std::span<const Polynomial> divisors);

/// Remainder of divide(); no term of the result is divisible by a leading
/// monomial of `basis`.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis);
/// Same, after re-sorting f and basis under `order`. The result uses `order`.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis, TermOrder order);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Buchberger's algorithm (normal selection strategy, coprime and chain
/// criteria) followed by interreduction. The result is the unique reduced
/// monic Groebner basis in the generators' ring order, sorted by ascending
/// leading monomial. Empty for the zero ideal.
std::vector<Polynomial> reduced_groebner(std::span<const Polynomial> generators);

/// Buchberger certificate: every S-polynomial reduces to zero.
bool is_groebner_basis(std::span<const Polynomial> basis);

/// Homogeneous ideal of a polynomial ring. Its reduced Groebner basis in the
/// ring order is computed once, at construction, so an Ideal is immutable
/// and can be shared across threads.
class Ideal {
 public:
  /// The zero ideal.
  explicit Ideal(RingSpec ring);
  /// Zero generators are dropped. Throws PreconditionError on a
  /// non-homogeneous generator and MismatchError on a ring mismatch.
  Ideal(RingSpec ring, std::vector<Polynomial> generators);
  static Ideal parse(const RingSpec& ring, const std::vector<std::string>& generators);

  const RingSpec& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  const std::vector<Polynomial>& groebner_basis() const;

  bool is_zero() const;
  bool is_unit() const;
  bool contains(const Polynomial& f) const;
  Polynomial reduce(const Polynomial& f) const;

  std::vector<Monomial> leading_monomials() const;
  /// Smallest degree of a nonzero element; -1 for the zero ideal.
  int initial_degree() const;
  int max_basis_degree() const;

  /// A minimal homogeneous generating set drawn from the reduced basis,
  /// ascending by degree.
  std::vector<Polynomial> minimal_generators() const;

  /// Basis of the degree-d piece I_d, one element per leading monomial.
  std::vector<Polynomial> graded_piece(unsigned d) const;
  std::size_t dimension_in_degree(unsigned d) const;

  /// dim_k (R/I)_d, counted as standard monomials; memoized.
  std::size_t quotient_dimension(unsigned d) const;

  /// Same ring and same reduced Groebner basis.
  friend bool operator==(const Ideal& a, const Ideal& b);

 private:
  struct State;
  RingSpec ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<State> state_;
};

/// Reduced Groebner basis of I under an arbitrary order (not cached).
std::vector<Polynomial> reduced_groebner(const Ideal& ideal, TermOrder order);

bool ideal_membership(const Polynomial& f, const Ideal& ideal);
Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
/// Eliminates an auxiliary variable t from t*I + (1-t)*J.
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
/// (I : J) = {f : f*J in I}, as the intersection of (I : g) over generators
/// g of J, with (I : g) = (I intersect (g)) / g. Throws on J = (0).
Ideal ideal_quotient(const Ideal& a, const Ideal& b);

enum class LeadingTermSource { kGroebnerBasis, kGivenGenerators };

/// Monomial ideal of leading monomials under `order`, taken from the reduced
/// Groebner basis (the initial ideal) or from the given generators.
Ideal leading_term_ideal(const Ideal& ideal, TermOrder order,
                         LeadingTermSource source = LeadingTermSource::kGroebnerBasis);

}  // namespace gradus

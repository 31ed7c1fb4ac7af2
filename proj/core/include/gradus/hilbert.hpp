#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "gradus/error.hpp"
#include "gradus/groebner.hpp"
#include "gradus/points.hpp"

namespace gradus {

/// Polynomial in one variable d with rational coefficients, lowest degree
/// first. The zero polynomial has no coefficients and degree -1.
class HilbertPolynomial {
 public:
  HilbertPolynomial() = default;
  explicit HilbertPolynomial(std::vector<mpq_class> coefficients);

  const std::vector<mpq_class>& coefficients() const { return coefficients_; }
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  mpq_class operator()(long d) const;

  /// "0", "7", "1/2*d^2+3/2*d+1", ...
  std::string to_string() const;

  friend bool operator==(const HilbertPolynomial&, const HilbertPolynomial&) = default;

 private:
  std::vector<mpq_class> coefficients_;
};

struct HilbertFunction {
  std::vector<std::size_t> values;  // values[d] = dim_k (R/I)_d
  std::optional<unsigned> stable_from;
  std::optional<HilbertPolynomial> polynomial;
};

struct HilbertPolynomialResult {
  HilbertPolynomial polynomial;
  unsigned stable_from;  // first degree from which HF agrees with the polynomial
};

/// Raised when no stabilization is seen before the probe limit; carries the
/// values computed so far.
class StabilizationError : public ComputationError {
 public:
  StabilizationError(const std::string& what, std::vector<std::size_t> partial)
      : ComputationError(what), partial_(std::move(partial)) {}
  const std::vector<std::size_t>& partial_values() const { return partial_; }

 private:
  std::vector<std::size_t> partial_;
};

/// dim_k (R/I)_d as a count of standard monomials.
std::size_t hilbert_function(const Ideal& ideal, unsigned d);
std::vector<std::size_t> hilbert_values(const Ideal& ideal, unsigned max_degree);

/// dim_k (R/I)_d as binom(n+d, n) minus the rank of all products m*g with g
/// a given generator. Never consults the Groebner basis, so it is an
/// independent check of hilbert_function (Macaulay's theorem makes the two
/// agree).
std::size_t hilbert_function_by_rank(const Ideal& ideal, unsigned d);

/// Interpolates HF on n+2 consecutive degrees, sliding the window forward
/// until the interpolant also matches the next 3 degrees.
HilbertPolynomialResult hilbert_polynomial(const Ideal& ideal, unsigned probe_limit = 64);

/// Values through max_degree plus the Hilbert polynomial when it can be
/// certified within max(max_degree, 64).
HilbertFunction hilbert_data(const Ideal& ideal, unsigned max_degree);

struct ArtinianCertificate {
  bool pure_powers;     // in(I) holds a power of every variable
  bool eventual_zero;   // HF vanishes at probe_degree
  unsigned probe_degree;
};

/// Both Artinian criteria. Throws ComputationError if they disagree.
ArtinianCertificate artinian_certificate(const Ideal& ideal);
bool is_artinian(const Ideal& ideal);

struct SocleReport {
  bool artinian = false;
  std::optional<unsigned> socle_degree;  // top degree with HF != 0
  int initial_degree = -1;
};

/// Top nonzero degree of an Artinian quotient R/I. The initial degree is
/// read from `defining_part` when given (e.g. J in R/(I_X + J)), otherwise
/// from I. Throws PreconditionError for the unit ideal.
SocleReport socle_degree(const Ideal& ideal);
SocleReport socle_degree(const Ideal& ideal, const Ideal& defining_part);

/// Least degree where HF(R/I_X) reaches s = |X|.
unsigned delta_X(const PointSet& points);
/// Same, given an already computed vanishing ideal.
unsigned delta_X(const Ideal& vanishing, std::size_t s);

}  // namespace gradus

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "gradus/groebner.hpp"
#include "gradus/matrix.hpp"
#include "gradus/random.hpp"

namespace gradus {

/// Point of P^n, normalized so that its first nonzero coordinate is 1.
class ProjectivePoint {
 public:
  /// Throws PreconditionError on the zero vector, MismatchError on mixed fields.
  explicit ProjectivePoint(std::vector<Scalar> coords);

  const std::vector<Scalar>& coords() const { return coords_; }
  std::size_t dimension() const { return coords_.size() - 1; }
  FieldSpec field() const { return coords_.front().field(); }
  /// Index of the coordinate normalized to 1.
  std::size_t pivot() const;

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

 private:
  std::vector<Scalar> coords_;
};

/// Finite set of distinct points X in P^n.
class PointSet {
 public:
  /// Throws PreconditionError on an empty list, a repeated point or a
  /// dimension/field mismatch.
  PointSet(std::size_t n, FieldSpec field, std::vector<ProjectivePoint> points,
           std::optional<std::uint64_t> seed = std::nullopt);

  std::size_t dimension() const { return n_; }
  FieldSpec field() const { return field_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<ProjectivePoint>& points() const { return points_; }
  const ProjectivePoint& operator[](std::size_t i) const { return points_[i]; }
  std::optional<std::uint64_t> seed() const { return seed_; }

  RingSpec ring(TermOrder order = TermOrder::grevlex()) const {
    return RingSpec{n_ + 1, field_, order};
  }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::size_t n_;
  FieldSpec field_;
  std::vector<ProjectivePoint> points_;
  std::optional<std::uint64_t> seed_;
};

inline constexpr int kPointSamplingRetries = 100;

/// s distinct points of P^n drawn from `seed`, certified to be in general
/// position. Degenerate draws are discarded and redrawn from the same
/// stream; throws ComputationError once the retry budget is spent.
PointSet random_general_points(std::size_t s, std::size_t n, std::uint64_t seed, FieldSpec field);

/// Rank of every evaluation matrix equals min(binom(n+d, n), s).
bool is_general_position(const PointSet& points);

/// s x binom(n+d, n) matrix; entry (j, m) is monomial m at point j, with
/// monomials ordered as monomials_of_degree() under `order`.
Matrix evaluation_matrix(const PointSet& points, unsigned d,
                         TermOrder order = TermOrder::grevlex());

/// Least d whose evaluation matrix has rank s (the degree where the Hilbert
/// function of the points reaches s), computed by linear algebra alone.
unsigned interpolation_degree(const PointSet& points);

/// I_X from kernels of evaluation matrices in degrees up to delta_X + 1,
/// verified against evaluation ranks up to two degrees beyond the harvest
/// bound. Throws ComputationError when verification keeps failing.
Ideal vanishing_ideal(const PointSet& points, TermOrder order = TermOrder::grevlex());

/// Ideal of a single point: linear forms x_j - c_j x_k, k the pivot.
Ideal point_ideal(const ProjectivePoint& point, const RingSpec& ring);

/// I_X as the iterated intersection of the point ideals.
Ideal vanishing_ideal_oracle(const PointSet& points, TermOrder order = TermOrder::grevlex());

/// On the reduced ring R/I_X a form is a zero divisor exactly when it
/// vanishes at one of the points. False for g = 0.
bool is_nonzerodivisor(const Polynomial& g, const PointSet& points);

/// Homogeneous form of degree d with independent uniform coefficients.
Polynomial random_form(const RingSpec& ring, unsigned d, Rng& rng);

}  // namespace gradus

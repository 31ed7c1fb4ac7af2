#include "gradus/points.hpp"

#include <algorithm>

#include "gradus/error.hpp"

namespace gradus {

ProjectivePoint::ProjectivePoint(std::vector<Scalar> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw PreconditionError("point with no coordinates");
  for (const auto& c : coords_) {
    if (c.field() != coords_.front().field()) throw MismatchError("point coordinates from mixed fields");
  }
  auto first = std::find_if(coords_.begin(), coords_.end(), [](const Scalar& c) { return !c.is_zero(); });
  if (first == coords_.end()) throw PreconditionError("the zero vector is not a projective point");
  Scalar scale = first->inverse();
  for (auto& c : coords_) c *= scale;
}

std::size_t ProjectivePoint::pivot() const {
  return static_cast<std::size_t>(
      std::find_if(coords_.begin(), coords_.end(), [](const Scalar& c) { return !c.is_zero(); }) -
      coords_.begin());
}

PointSet::PointSet(std::size_t n, FieldSpec field, std::vector<ProjectivePoint> points,
                   std::optional<std::uint64_t> seed)
    : n_(n), field_(field), points_(std::move(points)), seed_(seed) {
  if (points_.empty()) throw PreconditionError("a point set needs at least one point");
  if (n_ + 1 > kMaxVariables) throw PreconditionError("projective dimension too large");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].dimension() != n_) throw PreconditionError("point of the wrong dimension");
    if (points_[i].field() != field_) throw MismatchError("point over a different field");
    for (std::size_t j = 0; j < i; ++j) {
      if (points_[i] == points_[j]) {
        throw PreconditionError("repeated point " + std::to_string(j) + " = " + std::to_string(i));
      }
    }
  }
}

Matrix evaluation_matrix(const PointSet& points, unsigned d, TermOrder order) {
  const auto monomials = monomials_of_degree(points.ring(order), d);
  Matrix m(points.field(), points.size(), monomials.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    const auto& coords = points[j].coords();
    for (std::size_t c = 0; c < monomials.size(); ++c) {
      Scalar v = Scalar::one(points.field());
      for (std::size_t i = 0; i < coords.size(); ++i) {
        for (unsigned e = 0; e < monomials[c][i]; ++e) v *= coords[i];
      }
      m(j, c) = std::move(v);
    }
  }
  return m;
}

bool is_general_position(const PointSet& points) {
  const std::size_t s = points.size();
  const std::size_t n = points.dimension();
  // Once the points are separated in degree d they stay separated in every
  // higher degree (multiply by a linear form missing all points), so the
  // scan stops one degree after the rank first reaches s.
  for (unsigned d = 0;; ++d) {
    std::size_t expected = std::min<std::size_t>(binomial(n + d, n), s);
    std::size_t r = rank(evaluation_matrix(points, d));
    if (r != expected) return false;
    if (r == s) return rank(evaluation_matrix(points, d + 1)) == s;
  }
}

unsigned interpolation_degree(const PointSet& points) {
  for (unsigned d = 0;; ++d) {
    if (rank(evaluation_matrix(points, d)) == points.size()) return d;
  }
}

PointSet random_general_points(std::size_t s, std::size_t n, std::uint64_t seed, FieldSpec field) {
  if (s == 0) throw PreconditionError("need at least one point");
  Rng rng(seed);
  for (int attempt = 0; attempt < kPointSamplingRetries; ++attempt) {
    std::vector<ProjectivePoint> pts;
    bool distinct = true;
    while (pts.size() < s && distinct) {
      std::vector<Scalar> coords;
      bool nonzero = false;
      for (std::size_t i = 0; i <= n; ++i) {
        coords.push_back(random_scalar(field, rng));
        nonzero = nonzero || !coords.back().is_zero();
      }
      if (!nonzero) continue;
      ProjectivePoint p(std::move(coords));
      distinct = std::find(pts.begin(), pts.end(), p) == pts.end();
      pts.push_back(std::move(p));
    }
    if (!distinct) continue;
    PointSet candidate(n, field, std::move(pts), seed);
    if (is_general_position(candidate)) return candidate;
  }
  throw ComputationError("could not draw " + std::to_string(s) + " points in general position in P^" +
                         std::to_string(n) + " over " + field.to_string() + " after " +
                         std::to_string(kPointSamplingRetries) + " attempts");
}

Ideal vanishing_ideal(const PointSet& points, TermOrder order) {
  const RingSpec ring = points.ring(order);
  const unsigned delta = interpolation_degree(points);
  for (unsigned bound = delta + 1; bound <= delta + 4; ++bound) {
    std::vector<Polynomial> gens;
    for (unsigned d = 0; d <= bound; ++d) {
      const auto monomials = monomials_of_degree(ring, d);
      for (const auto& v : kernel_basis(evaluation_matrix(points, d, order))) {
        gens.push_back(polynomial_from_coordinates(ring, v, monomials));
      }
    }
    Ideal ideal(ring, std::move(gens));
    bool verified = true;
    for (unsigned d = 0; d <= bound + 2 && verified; ++d) {
      verified = ideal.quotient_dimension(d) == rank(evaluation_matrix(points, d, order));
    }
    if (verified) return ideal;
  }
  throw ComputationError("vanishing ideal failed verification against evaluation ranks");
}

Ideal point_ideal(const ProjectivePoint& point, const RingSpec& ring) {
  if (point.dimension() + 1 != ring.nvars) throw MismatchError("point does not match the ring");
  const std::size_t k = point.pivot();
  std::vector<Polynomial> gens;
  for (std::size_t j = 0; j < ring.nvars; ++j) {
    if (j == k) continue;
    gens.push_back(Polynomial::variable(ring, j) -
                   Polynomial::variable(ring, k).scaled(point.coords()[j]));
  }
  return Ideal(ring, std::move(gens));
}

Ideal vanishing_ideal_oracle(const PointSet& points, TermOrder order) {
  const RingSpec ring = points.ring(order);
  Ideal result = point_ideal(points[0], ring);
  for (std::size_t j = 1; j < points.size(); ++j) {
    result = ideal_intersection(result, point_ideal(points[j], ring));
  }
  return result;
}

bool is_nonzerodivisor(const Polynomial& g, const PointSet& points) {
  if (g.is_zero()) return false;
  return std::none_of(points.points().begin(), points.points().end(),
                      [&g](const ProjectivePoint& p) { return g.evaluate(p.coords()).is_zero(); });
}

Polynomial random_form(const RingSpec& ring, unsigned d, Rng& rng) {
  std::vector<Term> terms;
  for (const auto& m : monomials_of_degree(ring, d)) terms.push_back({m, random_scalar(ring.field, rng)});
  return Polynomial(ring, std::move(terms));
}

}  // namespace gradus

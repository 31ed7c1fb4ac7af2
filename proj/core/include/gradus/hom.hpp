#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "gradus/groebner.hpp"
#include "gradus/points.hpp"

namespace gradus {

/// Inclusive range of internal degrees.
struct DegreeRange {
  int lo;
  int hi;
};

/// Graded dimensions of Hom_{R_X}(J, R_X).
struct HomProfile {
  std::map<int, std::size_t> dims;
  Polynomial witness;  // the non-zero-divisor g used for the embedding
  unsigned delta = 0;  // delta_X
  std::size_t s = 0;
};

/// Hom_{R_X}(J, R_X) is computed through phi -> phi(g) for a non-zero-divisor
/// g in J, which identifies Hom_i with ((I_X + gR) : J)_{i + deg g} / (I_X)_{i + deg g}.
/// J is given by lifts to R. The witness defaults to the first generator of J
/// that is a non-zero-divisor on R_X; throws PreconditionError when J has none
/// (or when an explicit witness is not a non-zero-divisor in I_X + J).
/// The default range is [0, delta_X + 3].
HomProfile hom_graded_dims(const Ideal& j_lifts, const PointSet& points,
                           std::optional<DegreeRange> range = std::nullopt,
                           std::optional<Polynomial> witness = std::nullopt);
/// Same, reusing a vanishing ideal computed by the caller.
HomProfile hom_graded_dims(const Ideal& j_lifts, const PointSet& points, const Ideal& vanishing,
                           std::optional<DegreeRange> range = std::nullopt,
                           std::optional<Polynomial> witness = std::nullopt);

struct ThetaReport {
  std::map<int, std::size_t> kernel_dims;  // degree i -> dim ker(theta_g) on Hom_i
  int probed_to = 0;

  /// Injectivity is only ever certified over the probed degrees.
  bool injective_up_to_probe() const;
  std::string summary() const;
};

/// Kernel of theta_g : Hom_{R_X}(J, R_X) -> R_X, phi -> phi(g), degree by
/// degree. Throws PreconditionError when g is not in I_X + J.
ThetaReport theta_kernel_dims(const Ideal& j_lifts, const Polynomial& g, const PointSet& points,
                              std::optional<DegreeRange> range = std::nullopt);
ThetaReport theta_kernel_dims(const Ideal& j_lifts, const Polynomial& g, const PointSet& points,
                              const Ideal& vanishing,
                              std::optional<DegreeRange> range = std::nullopt);

}  // namespace gradus

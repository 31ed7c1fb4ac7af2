#include "gradus/hom.hpp"

#include <algorithm>

#include "gradus/error.hpp"
#include "gradus/hilbert.hpp"

namespace gradus {
namespace {

Polynomial find_witness(const Ideal& j_lifts, const PointSet& points, const Ideal& vanishing,
                        const std::optional<Polynomial>& requested) {
  if (requested) {
    if (!is_nonzerodivisor(*requested, points)) {
      throw PreconditionError("witness " + requested->to_string() +
                              " is a zero divisor on the coordinate ring of the points");
    }
    if (!ideal_sum(vanishing, j_lifts).contains(*requested)) {
      throw PreconditionError("witness " + requested->to_string() + " does not lie in J");
    }
    return *requested;
  }
  for (const auto& g : j_lifts.generators()) {
    if (is_nonzerodivisor(g, points)) return g;
  }
  throw PreconditionError(
      "J must be a regular ideal: none of its generators is a non-zero-divisor on R_X");
}

// dim_k (K / I_X)_d for an ideal K containing I_X.
std::size_t relative_dim(const Ideal& vanishing, const Ideal& k, int d) {
  if (d < 0) return 0;
  return hilbert_function(vanishing, static_cast<unsigned>(d)) -
         hilbert_function(k, static_cast<unsigned>(d));
}

DegreeRange default_range(unsigned delta) { return {0, static_cast<int>(delta) + 3}; }

}  // namespace

HomProfile hom_graded_dims(const Ideal& j_lifts, const PointSet& points,
                           std::optional<DegreeRange> range, std::optional<Polynomial> witness) {
  return hom_graded_dims(j_lifts, points, vanishing_ideal(points, j_lifts.ring().order), range,
                         std::move(witness));
}

HomProfile hom_graded_dims(const Ideal& j_lifts, const PointSet& points, const Ideal& vanishing,
                           std::optional<DegreeRange> range, std::optional<Polynomial> witness) {
  if (j_lifts.is_zero()) throw PreconditionError("J must be nonzero");
  if (!(j_lifts.ring() == vanishing.ring())) throw MismatchError("J and I_X live in different rings");
  HomProfile profile{{}, find_witness(j_lifts, points, vanishing, witness), 0, points.size()};
  profile.delta = delta_X(vanishing, points.size());
  const DegreeRange r = range.value_or(default_range(profile.delta));

  const Ideal with_witness = ideal_sum(vanishing, Ideal(vanishing.ring(), {profile.witness}));
  const Ideal colon = ideal_quotient(with_witness, j_lifts);
  const int shift = profile.witness.degree();
  for (int i = r.lo; i <= r.hi; ++i) profile.dims[i] = relative_dim(vanishing, colon, i + shift);
  return profile;
}

bool ThetaReport::injective_up_to_probe() const {
  return std::all_of(kernel_dims.begin(), kernel_dims.end(),
                     [](const auto& entry) { return entry.second == 0; });
}

std::string ThetaReport::summary() const {
  if (injective_up_to_probe()) return "injective up to degree " + std::to_string(probed_to);
  auto first = std::find_if(kernel_dims.begin(), kernel_dims.end(),
                            [](const auto& entry) { return entry.second != 0; });
  return "not injective: kernel of dimension " + std::to_string(first->second) + " in degree " +
         std::to_string(first->first);
}

ThetaReport theta_kernel_dims(const Ideal& j_lifts, const Polynomial& g, const PointSet& points,
                              std::optional<DegreeRange> range) {
  return theta_kernel_dims(j_lifts, g, points, vanishing_ideal(points, j_lifts.ring().order), range);
}

ThetaReport theta_kernel_dims(const Ideal& j_lifts, const Polynomial& g, const PointSet& points,
                              const Ideal& vanishing, std::optional<DegreeRange> range) {
  if (!(j_lifts.ring() == vanishing.ring())) throw MismatchError("J and I_X live in different rings");
  if (!g.is_homogeneous() || g.is_zero()) throw PreconditionError("g must be a nonzero form");
  if (!ideal_sum(vanishing, j_lifts).contains(g)) {
    throw PreconditionError("g = " + g.to_string() + " does not lie in J");
  }
  const Polynomial w = find_witness(j_lifts, points, vanishing, std::nullopt);
  const unsigned delta = delta_X(vanishing, points.size());
  const DegreeRange r = range.value_or(default_range(delta));

  // Hom_i ~ C_{i + deg w} / I_X with C = (I_X + wR) : J, via phi -> phi(w).
  // theta_g(phi) = phi(w) g / w, which vanishes iff phi(w) g lies in I_X.
  const Ideal colon = ideal_quotient(ideal_sum(vanishing, Ideal(vanishing.ring(), {w})), j_lifts);
  const Ideal annihilated = ideal_quotient(vanishing, Ideal(vanishing.ring(), {g}));
  const Ideal kernel = ideal_intersection(colon, annihilated);

  ThetaReport report;
  report.probed_to = r.hi;
  const int shift = w.degree();
  for (int i = r.lo; i <= r.hi; ++i) report.kernel_dims[i] = relative_dim(vanishing, kernel, i + shift);
  return report;
}

}  // namespace gradus

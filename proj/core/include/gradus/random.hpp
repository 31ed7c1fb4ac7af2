#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

#include "gradus/scalar.hpp"

namespace gradus {

/// Seeded generator whose draws are identical on every platform (the
/// standard distributions are implementation-defined, so bounded draws use
/// rejection sampling on the raw 64-bit engine output).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

/// Uniform over F_p; over Q, a uniform integer in [-kRationalSampleBound, kRationalSampleBound].
inline constexpr std::int64_t kRationalSampleBound = 1000;
Scalar random_scalar(FieldSpec field, Rng& rng);

/// splitmix64-style mixing of a base seed with trial coordinates.
std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> parts);

}  // namespace gradus

#include "gradus/random.hpp"

#include "gradus/error.hpp"

namespace gradus {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw PreconditionError("empty sampling range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Scalar random_scalar(FieldSpec field, Rng& rng) {
  if (field.is_prime()) {
    return Scalar(field, static_cast<std::int64_t>(rng.below(field.characteristic())));
  }
  return Scalar(field, rng.between(-kRationalSampleBound, kRationalSampleBound));
}

std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> parts) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  std::uint64_t h = mix(base);
  for (auto p : parts) h = mix(h ^ p);
  return h;
}

}  // namespace gradus

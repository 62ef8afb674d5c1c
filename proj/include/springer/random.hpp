#ifndef SPRINGER_RANDOM_HPP
#define SPRINGER_RANDOM_HPP

// Reproducible sampling.
//
// Streams are std::mt19937_64 (fully specified by the C++ standard) seeded
// with a 64-bit key.  Keys for a verification case are FNV-1a-64 over the
// bytes of the suite name, then mixed with the run seed and case index:
//   key = fnv1a(name) ^ (seed * 0x9E3779B97F4A7C15) ^ (index * 0xC2B2AE3D27D4EB4F)
// Bounded integers use rejection sampling on the raw 64-bit output (never
// std::uniform_int_distribution, whose algorithm is implementation-defined).

#include <cstdint>
#include <random>
#include <string_view>

#include "springer/field.hpp"

namespace springer {

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::uint64_t case_key(std::uint64_t seed, std::string_view stream, std::uint64_t index) {
  return fnv1a64(stream) ^ (seed * 0x9E3779B97F4A7C15ULL) ^ (index * 0xC2B2AE3D27D4EB4FULL);
}

class Rng {
 public:
  explicit Rng(std::uint64_t key) : gen_(key) {}
  Rng(std::uint64_t seed, std::string_view stream, std::uint64_t index = 0)
      : gen_(case_key(seed, stream, index)) {}

  std::uint64_t next() { return gen_(); }

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do x = gen_(); while (x >= limit);
    return x % bound;
  }

  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  FieldScalar scalar(const Field& f) {
    Coords c{static_cast<std::uint32_t>(below(f.p())), 0};
    if (f.degree() == 2) c.c1 = static_cast<std::uint32_t>(below(f.p()));
    return {f, c};
  }

  FieldScalar nonzero_scalar(const Field& f) {
    for (;;) {
      auto s = scalar(f);
      if (!s.is_zero()) return s;
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace springer

#endif  // SPRINGER_RANDOM_HPP

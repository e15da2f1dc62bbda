#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace amr {

/// Seeded generator whose draws are identical on every platform: the
/// engine is fully specified by the standard and index draws use rejection
/// sampling instead of std::uniform_int_distribution.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, n); requires n > 0.
  std::size_t uniform_index(std::size_t n) {
    const std::uint64_t bound = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t draw = engine_();
    while (draw >= limit) draw = engine_();
    return static_cast<std::size_t>(draw % bound);
  }

  bool coin() { return uniform_index(2) == 1; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace amr

#ifndef HANKELKIT_DETAIL_RNG_HPP
#define HANKELKIT_DETAIL_RNG_HPP

#include <cstdint>
#include <random>

namespace hankelkit::detail {

/// std::mt19937_64 with a uniform draw defined here rather than by the
/// standard library's distributions, whose output differs between
/// implementations. Same seed, same stream, on every platform.
class SeededRng {
public:
  explicit SeededRng(std::uint64_t seed) : engine_(mix(seed)) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::mt19937_64 engine_;
};

} // namespace hankelkit::detail

#endif // HANKELKIT_DETAIL_RNG_HPP

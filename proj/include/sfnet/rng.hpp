#pragma once

#include <cstdint>
#include <random>

namespace sfnet {

/// splitmix64 finalizer. Used as the seed hash everywhere a stream has to be
/// derived from another one.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Split rule for derived streams: fold each component into the state with
/// splitmix64, then finalize. Order-sensitive, so derive_seed(s, a, b) and
/// derive_seed(s, b, a) are unrelated streams.
inline std::uint64_t derive_seed(std::uint64_t base) { return splitmix64(base); }

template <class... Rest>
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t head, Rest... rest) {
  return derive_seed(splitmix64(base ^ splitmix64(head ^ 0x5851f42d4c957f2dull)), rest...);
}

/// mt19937_64 with hand-rolled draw helpers. std::uniform_int_distribution is
/// implementation-defined, so bounded draws go through masked rejection to keep
/// outputs identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  /// Uniform integer in [0, n). n must be >= 1.
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t mask = n - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    std::uint64_t r;
    do {
      r = gen_() & mask;
    } while (r >= n);
    return r;
  }

  int below_int(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }

  /// Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return unit() < p; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace sfnet

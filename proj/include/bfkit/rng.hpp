#pragma once

#include <cstdint>
#include <random>

namespace bfkit {

// Deterministic random stream. Everything randomized in the library draws
// through this wrapper, so one seed pins an entire run; `below` uses
// rejection sampling instead of std::uniform_int_distribution because the
// latter's output is not pinned by the standard.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // uniform in [0, bound), bound > 0
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  int bit() { return static_cast<int>(next() >> 63); }

private:
  std::mt19937_64 engine_;
};

// splitmix64-style mix of (seed, index); used to hand each search trial or
// verification round its own independent stream.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace bfkit

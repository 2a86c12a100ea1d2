#pragma once

// Test-only reference implementations. Deliberately written as direct O(4^n)
// summations / subset scans so they share no code with the library's
// transform paths.

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "bfkit/rng.hpp"
#include "bfkit/truth_table.hpp"

namespace oracle {

inline std::vector<std::int64_t> walsh_brute(const bfkit::TruthTable& f) {
  const std::uint64_t size = f.size();
  std::vector<std::int64_t> out(size);
  for (std::uint64_t a = 0; a < size; ++a) {
    std::int64_t sum = 0;
    for (std::uint64_t x = 0; x < size; ++x) {
      const int e = f.get(x) ^ (std::popcount(a & x) & 1);
      sum += e ? -1 : 1;
    }
    out[a] = sum;
  }
  return out;
}

inline std::vector<std::int64_t> fourier_brute(const bfkit::TruthTable& f) {
  const std::uint64_t size = f.size();
  std::vector<std::int64_t> out(size);
  for (std::uint64_t a = 0; a < size; ++a) {
    std::int64_t sum = 0;
    for (std::uint64_t x = 0; x < size; ++x) {
      if (!f.get(x)) continue;
      sum += (std::popcount(a & x) & 1) ? -1 : 1;
    }
    out[a] = sum;
  }
  return out;
}

// monomial masks with coefficient 1, via the defining subset XOR (uses the
// library's covers() as the subset predicate)
inline std::vector<std::uint32_t> mobius_brute(const bfkit::TruthTable& f) {
  std::vector<std::uint32_t> out;
  const int n = f.n_vars();
  for (std::uint64_t m = 0; m < f.size(); ++m) {
    int c = 0;
    for (std::uint64_t x = 0; x < f.size(); ++x)
      if (bfkit::covers(static_cast<std::uint32_t>(x),
                        static_cast<std::uint32_t>(m), n))
        c ^= f.get(x);
    if (c) out.push_back(static_cast<std::uint32_t>(m));
  }
  return out;
}

// f, h with pointwise f*h == 0, drawn uniformly over the 3 admissible local
// combinations
inline std::pair<bfkit::TruthTable, bfkit::TruthTable> random_disjoint_pair(
    int n, bfkit::Rng& rng) {
  bfkit::TruthTable f(n), h(n);
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    switch (rng.below(3)) {
      case 1: f.set(x, 1); break;
      case 2: h.set(x, 1); break;
      default: break;
    }
  }
  return {f, h};
}

}  // namespace oracle

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bfkit/rng.hpp"

namespace bfkit {

// Index convention used everywhere: the point x = (x_1, ..., x_n) maps to
// idx(x) = sum_i x_i * 2^(n-i), i.e. x_1 is the most significant bit of the
// index. Concatenated domains (x, y) with |x| = s, |y| = t use
// idx(x, y) = idx(x) * 2^t + idx(y).
inline constexpr int kMaxVars = 30;

// Bit-packed truth table of an n-variable Boolean function, 0 <= n <= 30.
// Bit i of the table is f at the point with index i. Unused high bits of the
// last word are kept zero so tables compare with plain ==.
class TruthTable {
public:
  TruthTable() : TruthTable(0) {}
  explicit TruthTable(int n_vars);

  static TruthTable constant(int n_vars, int bit);
  static TruthTable variable(int n_vars, int i);  // x_i, 1-based
  static TruthTable from_bits(int n_vars, const std::vector<int>& bits);
  static TruthTable from_words(int n_vars, std::vector<std::uint64_t> words);
  // Hex format: 2^n bits, index 0 first, four bits per digit with index 0 as
  // the most significant bit of the first digit; max(1, 2^n/4) digits.
  static TruthTable from_hex(int n_vars, std::string_view hex);
  static TruthTable random(int n_vars, Rng& rng);

  int n_vars() const { return n_vars_; }
  std::uint64_t size() const { return std::uint64_t{1} << n_vars_; }

  int get(std::uint64_t idx) const {
    return static_cast<int>((words_[idx >> 6] >> (idx & 63)) & 1);
  }
  void set(std::uint64_t idx, int bit) {
    const std::uint64_t mask = std::uint64_t{1} << (idx & 63);
    if (bit)
      words_[idx >> 6] |= mask;
    else
      words_[idx >> 6] &= ~mask;
  }
  int operator()(std::uint64_t idx) const { return get(idx); }

  std::uint64_t weight() const;
  bool is_zero() const;

  TruthTable& operator^=(const TruthTable& o);
  TruthTable& operator&=(const TruthTable& o);
  TruthTable operator^(const TruthTable& o) const;
  TruthTable operator&(const TruthTable& o) const;
  TruthTable operator~() const;
  bool operator==(const TruthTable&) const = default;

  std::string to_hex() const;
  std::vector<int> bits() const;
  const std::vector<std::uint64_t>& words() const { return words_; }

private:
  int n_vars_ = 0;
  std::vector<std::uint64_t> words_;
};

// Helpers on index words viewed as bit vectors of length n; positions are
// 1-based like the variables, so position i is index bit (n - i).
std::vector<int> support(std::uint32_t x, int n);
int hamming_weight(std::uint32_t x);
bool covers(std::uint32_t x, std::uint32_t y, int n);  // support(x) subset of support(y)
int inner_product(std::uint32_t a, std::uint32_t x, int n);

}  // namespace bfkit

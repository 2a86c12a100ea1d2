#include "bfkit/truth_table.hpp"

#include <bit>
#include <stdexcept>

namespace bfkit {

namespace {

void check_n(int n_vars) {
  if (n_vars < 0 || n_vars > kMaxVars)
    throw std::invalid_argument("n_vars must be in [0, " +
                                std::to_string(kMaxVars) + "], got " +
                                std::to_string(n_vars));
}

std::size_t word_count(int n_vars) {
  return n_vars <= 6 ? 1 : std::size_t{1} << (n_vars - 6);
}

// mask of the bits actually used in the (single) word of a small table
std::uint64_t tail_mask(int n_vars) {
  return n_vars >= 6 ? ~std::uint64_t{0}
                     : (std::uint64_t{1} << (1u << n_vars)) - 1;
}

}  // namespace

TruthTable::TruthTable(int n_vars) : n_vars_(n_vars) {
  check_n(n_vars);
  words_.assign(word_count(n_vars), 0);
}

TruthTable TruthTable::constant(int n_vars, int bit) {
  TruthTable t(n_vars);
  if (bit)
    for (auto& w : t.words_) w = ~std::uint64_t{0};
  t.words_.back() &= tail_mask(n_vars);
  return t;
}

TruthTable TruthTable::variable(int n_vars, int i) {
  check_n(n_vars);
  if (i < 1 || i > n_vars)
    throw std::invalid_argument("variable index " + std::to_string(i) +
                                " out of range for n=" + std::to_string(n_vars));
  TruthTable t(n_vars);
  const int shift = n_vars - i;
  for (std::uint64_t x = 0; x < t.size(); ++x)
    if ((x >> shift) & 1) t.set(x, 1);
  return t;
}

TruthTable TruthTable::from_bits(int n_vars, const std::vector<int>& bits) {
  check_n(n_vars);
  if (bits.size() != (std::uint64_t{1} << n_vars))
    throw std::invalid_argument("expected " +
                                std::to_string(std::uint64_t{1} << n_vars) +
                                " bits, got " + std::to_string(bits.size()));
  TruthTable t(n_vars);
  for (std::uint64_t i = 0; i < bits.size(); ++i)
    if (bits[i]) t.set(i, 1);
  return t;
}

TruthTable TruthTable::from_words(int n_vars, std::vector<std::uint64_t> words) {
  check_n(n_vars);
  if (words.size() != word_count(n_vars))
    throw std::invalid_argument("wrong word count for n=" + std::to_string(n_vars));
  TruthTable t(n_vars);
  t.words_ = std::move(words);
  t.words_.back() &= tail_mask(n_vars);
  return t;
}

TruthTable TruthTable::from_hex(int n_vars, std::string_view hex) {
  check_n(n_vars);
  const std::uint64_t n_bits = std::uint64_t{1} << n_vars;
  const std::uint64_t digits = n_bits <= 4 ? 1 : n_bits / 4;
  if (hex.size() != digits)
    throw std::invalid_argument("hex table for n=" + std::to_string(n_vars) +
                                " needs " + std::to_string(digits) +
                                " digits, got " + std::to_string(hex.size()));
  TruthTable t(n_vars);
  for (std::uint64_t d = 0; d < digits; ++d) {
    const char c = hex[d];
    int v;
    if (c >= '0' && c <= '9')
      v = c - '0';
    else if (c >= 'a' && c <= 'f')
      v = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F')
      v = c - 'A' + 10;
    else
      throw std::invalid_argument(std::string("bad hex digit '") + c +
                                  "' at position " + std::to_string(d));
    for (int b = 0; b < 4; ++b) {
      const std::uint64_t idx = d * 4 + b;  // bit 3-b of the digit
      if (idx >= n_bits) break;
      if ((v >> (3 - b)) & 1) t.set(idx, 1);
    }
  }
  return t;
}

TruthTable TruthTable::random(int n_vars, Rng& rng) {
  check_n(n_vars);
  TruthTable t(n_vars);
  for (auto& w : t.words_) w = rng.next();
  t.words_.back() &= tail_mask(n_vars);
  return t;
}

std::uint64_t TruthTable::weight() const {
  std::uint64_t w = 0;
  for (const auto x : words_) w += std::popcount(x);
  return w;
}

bool TruthTable::is_zero() const {
  for (const auto x : words_)
    if (x) return false;
  return true;
}

namespace {
void check_same(const TruthTable& a, const TruthTable& b) {
  if (a.n_vars() != b.n_vars())
    throw std::invalid_argument("size mismatch: n=" + std::to_string(a.n_vars()) +
                                " vs n=" + std::to_string(b.n_vars()));
}
}  // namespace

TruthTable& TruthTable::operator^=(const TruthTable& o) {
  check_same(*this, o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

TruthTable& TruthTable::operator&=(const TruthTable& o) {
  check_same(*this, o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

TruthTable TruthTable::operator^(const TruthTable& o) const {
  TruthTable r = *this;
  r ^= o;
  return r;
}

TruthTable TruthTable::operator&(const TruthTable& o) const {
  TruthTable r = *this;
  r &= o;
  return r;
}

TruthTable TruthTable::operator~() const {
  TruthTable r = *this;
  for (auto& w : r.words_) w = ~w;
  r.words_.back() &= tail_mask(n_vars_);
  return r;
}

std::string TruthTable::to_hex() const {
  const std::uint64_t n_bits = size();
  const std::uint64_t digits = n_bits <= 4 ? 1 : n_bits / 4;
  std::string out(digits, '0');
  static const char* kDigits = "0123456789abcdef";
  for (std::uint64_t d = 0; d < digits; ++d) {
    int v = 0;
    for (int b = 0; b < 4; ++b) {
      const std::uint64_t idx = d * 4 + b;
      if (idx >= n_bits) break;
      v |= get(idx) << (3 - b);
    }
    out[d] = kDigits[v];
  }
  return out;
}

std::vector<int> TruthTable::bits() const {
  std::vector<int> out(size());
  for (std::uint64_t i = 0; i < size(); ++i) out[i] = get(i);
  return out;
}

namespace {
void check_word(std::uint32_t x, int n, const char* what) {
  if (n < 0 || n > kMaxVars)
    throw std::invalid_argument("bit-vector length out of range");
  if (n < 32 && (x >> n) != 0)
    throw std::invalid_argument(std::string(what) + " does not fit in " +
                                std::to_string(n) + " bits");
}
}  // namespace

std::vector<int> support(std::uint32_t x, int n) {
  check_word(x, n, "word");
  std::vector<int> out;
  for (int i = 1; i <= n; ++i)
    if ((x >> (n - i)) & 1) out.push_back(i);
  return out;
}

int hamming_weight(std::uint32_t x) { return std::popcount(x); }

bool covers(std::uint32_t x, std::uint32_t y, int n) {
  check_word(x, n, "first word");
  check_word(y, n, "second word");
  return (x & ~y) == 0;
}

int inner_product(std::uint32_t a, std::uint32_t x, int n) {
  check_word(a, n, "first word");
  check_word(x, n, "second word");
  return std::popcount(a & x) & 1;
}

}  // namespace bfkit

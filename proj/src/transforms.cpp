#include "bfkit/transforms.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace bfkit {

WalshSpectrum::WalshSpectrum(int n_vars, std::vector<std::int64_t> values)
    : n_vars_(n_vars), values_(std::move(values)) {
  if (n_vars < 0 || n_vars > kMaxVars)
    throw std::invalid_argument("spectrum n_vars out of range");
  if (values_.size() != (std::uint64_t{1} << n_vars))
    throw std::invalid_argument("spectrum needs 2^n values");
}

std::int64_t WalshSpectrum::max_abs() const {
  std::int64_t m = 0;
  for (const auto v : values_) m = std::max(m, v < 0 ? -v : v);
  return m;
}

void walsh_hadamard_inplace(std::vector<std::int64_t>& v) {
  const std::size_t len = v.size();
  for (std::size_t h = 1; h < len; h <<= 1) {
    for (std::size_t i = 0; i < len; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const std::int64_t a = v[j];
        const std::int64_t b = v[j + h];
        v[j] = a + b;
        v[j + h] = a - b;
      }
    }
  }
}

WalshSpectrum fwht(const TruthTable& f) {
  std::vector<std::int64_t> v(f.size());
  for (std::uint64_t i = 0; i < f.size(); ++i) v[i] = f.get(i) ? -1 : 1;
  walsh_hadamard_inplace(v);
  return WalshSpectrum(f.n_vars(), std::move(v));
}

std::int64_t walsh_at(const TruthTable& f, std::uint64_t a) {
  if (a >= f.size()) throw std::invalid_argument("walsh_at: point out of range");
  std::int64_t sum = 0;
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    const int s = f.get(x) ^ (std::popcount(a & x) & 1);
    sum += s ? -1 : 1;
  }
  return sum;
}

TruthTable fwht_inverse(const WalshSpectrum& w) {
  std::vector<std::int64_t> v = w.values();
  walsh_hadamard_inplace(v);
  // sum_a W(a)(-1)^(a.x) = 2^n (-1)^f(x); anything else is not realizable
  const std::int64_t full = std::int64_t{1} << w.n_vars();
  TruthTable t(w.n_vars());
  for (std::uint64_t x = 0; x < v.size(); ++x) {
    if (v[x] == full)
      continue;
    else if (v[x] == -full)
      t.set(x, 1);
    else
      throw std::invalid_argument(
          "values are not the spectrum of a Boolean function (point " +
          std::to_string(x) + ")");
  }
  return t;
}

FourierSpectrum fourier(const TruthTable& f) {
  std::vector<std::int64_t> v(f.size());
  for (std::uint64_t i = 0; i < f.size(); ++i) v[i] = f.get(i);
  walsh_hadamard_inplace(v);
  return FourierSpectrum{f.n_vars(), std::move(v)};
}

namespace {

// Binary Mobius transform on packed words: anf[m] = XOR of f over the points
// covered by m. Involution; strides below 64 run inside each word.
constexpr std::uint64_t kStrideMask[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0f0f0f0f0f0f0f0fULL,
    0x00ff00ff00ff00ffULL, 0x0000ffff0000ffffULL, 0x00000000ffffffffULL,
};

void mobius_inplace(std::vector<std::uint64_t>& words, int n_vars) {
  const int in_word = std::min(n_vars, 6);
  for (auto& w : words)
    for (int b = 0; b < in_word; ++b)
      w ^= (w & kStrideMask[b]) << (1u << b);
  for (std::size_t h = 1; h < words.size(); h <<= 1)
    for (std::size_t i = 0; i < words.size(); i += h << 1)
      for (std::size_t j = i; j < i + h; ++j) words[j + h] ^= words[j];
}

}  // namespace

Anf::Anf(int n_vars, std::vector<std::uint32_t> monomials)
    : n_vars_(n_vars), monomials_(std::move(monomials)) {
  if (n_vars < 0 || n_vars > kMaxVars)
    throw std::invalid_argument("anf n_vars out of range");
  std::sort(monomials_.begin(), monomials_.end());
  monomials_.erase(std::unique(monomials_.begin(), monomials_.end()),
                   monomials_.end());
  for (const auto m : monomials_)
    if (std::uint64_t{m} >= (std::uint64_t{1} << n_vars))
      throw std::invalid_argument("monomial mask out of range");
}

bool Anf::contains(std::uint32_t mask) const {
  return std::binary_search(monomials_.begin(), monomials_.end(), mask);
}

int Anf::degree() const {
  int d = -1;
  for (const auto m : monomials_) d = std::max(d, std::popcount(m));
  return d;
}

TruthTable Anf::to_table() const {
  TruthTable ind(n_vars_);
  for (const auto m : monomials_) ind.set(m, 1);
  std::vector<std::uint64_t> words = ind.words();
  mobius_inplace(words, n_vars_);
  return TruthTable::from_words(n_vars_, std::move(words));
}

Anf mobius(const TruthTable& f) {
  std::vector<std::uint64_t> words = f.words();
  mobius_inplace(words, f.n_vars());
  const TruthTable coeff = TruthTable::from_words(f.n_vars(), std::move(words));
  std::vector<std::uint32_t> monomials;
  for (std::uint64_t m = 0; m < coeff.size(); ++m)
    if (coeff.get(m)) monomials.push_back(static_cast<std::uint32_t>(m));
  return Anf(f.n_vars(), std::move(monomials));
}

int algebraic_degree(const TruthTable& f) { return mobius(f).degree(); }

}  // namespace bfkit

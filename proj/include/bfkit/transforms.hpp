#pragma once

#include <cstdint>
#include <vector>

#include "bfkit/truth_table.hpp"

namespace bfkit {

// Signed correlation spectrum W(a) = sum_x (-1)^(f(x) + a.x), one int64 per
// point a in index order.
class WalshSpectrum {
public:
  WalshSpectrum(int n_vars, std::vector<std::int64_t> values);

  int n_vars() const { return n_vars_; }
  std::uint64_t size() const { return std::uint64_t{1} << n_vars_; }
  std::int64_t operator[](std::uint64_t a) const { return values_[a]; }
  const std::vector<std::int64_t>& values() const { return values_; }
  std::int64_t max_abs() const;
  bool operator==(const WalshSpectrum&) const = default;

private:
  int n_vars_;
  std::vector<std::int64_t> values_;
};

// Unsigned character sum of the 0/1 table: h_hat(a) = sum_x h(x)(-1)^(a.x).
struct FourierSpectrum {
  int n_vars;
  std::vector<std::int64_t> values;
};

// Algebraic normal form as the set of monomial masks with coefficient 1; the
// mask packs variable i at index bit (n-i), mask 0 is the constant-1 monomial.
class Anf {
public:
  Anf(int n_vars, std::vector<std::uint32_t> monomials);  // sorted + deduped

  int n_vars() const { return n_vars_; }
  const std::vector<std::uint32_t>& monomials() const { return monomials_; }
  bool contains(std::uint32_t mask) const;
  int degree() const;  // -1 for the empty ANF (the zero function)
  TruthTable to_table() const;
  bool operator==(const Anf&) const = default;

private:
  int n_vars_;
  std::vector<std::uint32_t> monomials_;
};

// In-place length-preserving Walsh-Hadamard butterfly over the integers;
// v.size() must be a power of two. Shared by every transform below.
void walsh_hadamard_inplace(std::vector<std::int64_t>& v);

WalshSpectrum fwht(const TruthTable& f);
std::int64_t walsh_at(const TruthTable& f, std::uint64_t a);  // single point, O(2^n)
// Inverts a full spectrum back to the table; throws std::invalid_argument if
// the values are not the spectrum of any Boolean function.
TruthTable fwht_inverse(const WalshSpectrum& w);
FourierSpectrum fourier(const TruthTable& f);
Anf mobius(const TruthTable& f);
int algebraic_degree(const TruthTable& f);  // -1 for f == 0

}  // namespace bfkit

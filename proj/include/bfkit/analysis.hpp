#pragma once

#include <cstdint>
#include <optional>

#include "bfkit/transforms.hpp"

namespace bfkit {

struct PropertyReport {
  int n_vars = 0;
  std::int64_t nonlinearity = 0;
  bool is_bent = false;
  // the single magnitude lambda when the spectrum is {0, +-lambda}-valued
  std::optional<std::int64_t> plateaued_amplitude;
  int resiliency_order = -1;  // -1 when not even balanced
  bool is_balanced = false;
  int degree = -1;
  bool operator==(const PropertyReport&) const = default;
};

std::int64_t nonlinearity(const WalshSpectrum& w);  // n >= 1
std::int64_t nonlinearity(const TruthTable& f);
bool is_bent(const WalshSpectrum& w);
bool is_bent(const TruthTable& f);
std::optional<std::int64_t> plateaued_amplitude(const WalshSpectrum& w);
std::optional<std::int64_t> plateaued_amplitude(const TruthTable& f);
// the largest m such that W vanishes on all points of weight <= m; -1 if
// W(0) != 0
int resiliency_order(const WalshSpectrum& w);
int resiliency_order(const TruthTable& f);
bool is_balanced(const WalshSpectrum& w);
// f * h == 0 pointwise; both on the same variable count
bool is_annihilator_pair(const TruthTable& f, const TruthTable& h);

PropertyReport analyze(const TruthTable& f);
PropertyReport analyze(const TruthTable& f, const WalshSpectrum& w);

}  // namespace bfkit

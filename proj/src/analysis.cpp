#include "bfkit/analysis.hpp"

#include <bit>
#include <stdexcept>

namespace bfkit {

std::int64_t nonlinearity(const WalshSpectrum& w) {
  if (w.n_vars() < 1)
    throw std::invalid_argument("nonlinearity needs at least one variable");
  return (std::int64_t{1} << (w.n_vars() - 1)) - w.max_abs() / 2;
}

std::int64_t nonlinearity(const TruthTable& f) { return nonlinearity(fwht(f)); }

bool is_bent(const WalshSpectrum& w) {
  if (w.n_vars() < 2 || (w.n_vars() & 1)) return false;
  const std::int64_t flat = std::int64_t{1} << (w.n_vars() / 2);
  for (const auto v : w.values())
    if (v != flat && v != -flat) return false;
  return true;
}

bool is_bent(const TruthTable& f) { return is_bent(fwht(f)); }

std::optional<std::int64_t> plateaued_amplitude(const WalshSpectrum& w) {
  std::int64_t lambda = 0;
  for (const auto v : w.values()) {
    const std::int64_t m = v < 0 ? -v : v;
    if (m == 0) continue;
    if (lambda == 0)
      lambda = m;
    else if (m != lambda)
      return std::nullopt;
  }
  return lambda;  // never 0: the spectrum of a Boolean function is not all-zero
}

std::optional<std::int64_t> plateaued_amplitude(const TruthTable& f) {
  return plateaued_amplitude(fwht(f));
}

int resiliency_order(const WalshSpectrum& w) {
  if (w[0] != 0) return -1;
  // Parseval guarantees some nonzero point, so min_w always gets set here.
  int min_w = w.n_vars() + 1;
  for (std::uint64_t a = 1; a < w.size(); ++a)
    if (w[a] != 0) min_w = std::min(min_w, std::popcount(a));
  return min_w - 1;
}

int resiliency_order(const TruthTable& f) { return resiliency_order(fwht(f)); }

bool is_balanced(const WalshSpectrum& w) { return w[0] == 0; }

bool is_annihilator_pair(const TruthTable& f, const TruthTable& h) {
  if (f.n_vars() != h.n_vars())
    throw std::invalid_argument("annihilator check needs equal variable counts");
  return (f & h).is_zero();
}

PropertyReport analyze(const TruthTable& f, const WalshSpectrum& w) {
  if (f.n_vars() != w.n_vars())
    throw std::invalid_argument("table/spectrum variable counts differ");
  PropertyReport r;
  r.n_vars = f.n_vars();
  r.nonlinearity = nonlinearity(w);
  r.is_bent = is_bent(w);
  r.plateaued_amplitude = plateaued_amplitude(w);
  r.resiliency_order = resiliency_order(w);
  r.is_balanced = is_balanced(w);
  r.degree = algebraic_degree(f);
  return r;
}

PropertyReport analyze(const TruthTable& f) { return analyze(f, fwht(f)); }

}  // namespace bfkit

#include "bfkit/walsh_theory.hpp"

#include <array>
#include <bit>

namespace bfkit {

namespace {

struct SplitPoint {
  std::uint64_t ax;  // x-block component of a
  std::uint64_t ay;  // y-block component of a
};

SplitPoint split_point(int s, int t, std::uint64_t a) {
  if (a >= (std::uint64_t{1} << (s + t)))
    throw std::invalid_argument("spectrum point out of range");
  return {a >> t, a & ((std::uint64_t{1} << t) - 1)};
}

std::int64_t checked_scale(std::int64_t total, int k) {
  const std::int64_t denom = std::int64_t{1} << k;
  if (total % denom != 0)
    throw internal_inconsistency(
        "closed-form value not divisible by 2^" + std::to_string(k) +
        " (got " + std::to_string(total) + ")");
  return total / denom;
}

void check_triple(const TruthTable& g, const TruthTable& gp,
                  const TruthTable& gpp) {
  if (g.n_vars() != gp.n_vars() || g.n_vars() != gpp.n_vars())
    throw std::invalid_argument("functions must share one variable count");
}

void check_disjoint(const TruthTable& g, const TruthTable& gp,
                    const TruthTable& gpp) {
  const TruthTable overlap = (g ^ gp) & (g ^ gpp);
  if (!overlap.is_zero()) {
    std::uint64_t witness = 0;
    while (!overlap.get(witness)) ++witness;
    throw std::invalid_argument(
        "difference functions overlap, e.g. at point " +
        std::to_string(witness));
  }
}

}  // namespace

std::string_view formula_name(WalshFormula f) {
  switch (f) {
    case WalshFormula::Preimage: return "preimage";
    case WalshFormula::CharSum: return "charsum";
    case WalshFormula::Concat: return "concat";
    case WalshFormula::Product: return "product";
    case WalshFormula::Indirect: return "indirect";
    case WalshFormula::Size3Simple: return "size3_simple";
    case WalshFormula::Size3FourTerm: return "size3_fourterm";
    case WalshFormula::Size3Final: return "size3_final";
    case WalshFormula::Gen1FourTerm: return "gen1_fourterm";
    case WalshFormula::K2Concat: return "k2_concat";
    case WalshFormula::Gen1Concat: return "gen1_concat";
  }
  throw std::invalid_argument("unknown formula");
}

WalshFormula formula_from_name(std::string_view name) {
  for (const auto f :
       {WalshFormula::Preimage, WalshFormula::CharSum, WalshFormula::Concat,
        WalshFormula::Product, WalshFormula::Indirect, WalshFormula::Size3Simple,
        WalshFormula::Size3FourTerm, WalshFormula::Size3Final,
        WalshFormula::Gen1FourTerm, WalshFormula::K2Concat,
        WalshFormula::Gen1Concat})
    if (formula_name(f) == name) return f;
  throw std::invalid_argument("unknown formula name: " + std::string(name));
}

// W(a) = sum_u [sum_{x in F^-1(u)} (-1)^(g(x) + ax.x)] * W_{h_u}(ay)
std::int64_t predict_preimage(const GeneralInstance& inst, std::uint64_t a) {
  const auto [ax, ay] = split_point(inst.s(), inst.t(), a);
  std::vector<std::int64_t> fiber_sum(inst.H().member_count(), 0);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << inst.s()); ++x) {
    const int sign = inst.g().get(x) ^ (std::popcount(ax & x) & 1);
    fiber_sum[inst.F()(x)] += sign ? -1 : 1;
  }
  std::int64_t total = 0;
  for (std::uint32_t u = 0; u < fiber_sum.size(); ++u)
    if (fiber_sum[u] != 0)
      total += fiber_sum[u] * walsh_at(inst.H().member(u), ay);
  return total;
}

// W(a) = 2^-k sum_{u,v} (-1)^(v.u) W_{g + v.F}(ax) W_{h_u}(ay)
std::int64_t predict_charsum(const GeneralInstance& inst, std::uint64_t a) {
  const auto [ax, ay] = split_point(inst.s(), inst.t(), a);
  const std::uint32_t m = inst.H().member_count();
  std::vector<std::int64_t> wg(m), wh(m);
  for (std::uint32_t v = 0; v < m; ++v)
    wg[v] = walsh_at(inst.g() ^ component_select(inst.F(), v), ax);
  for (std::uint32_t u = 0; u < m; ++u)
    wh[u] = walsh_at(inst.H().member(u), ay);
  std::int64_t total = 0;
  for (std::uint32_t u = 0; u < m; ++u)
    for (std::uint32_t v = 0; v < m; ++v) {
      const std::int64_t term = wg[v] * wh[u];
      total += (std::popcount(v & u) & 1) ? -term : term;
    }
  return checked_scale(total, inst.k());
}

// W(a) = 2^-k sum_v W_{g + v.F}(ax) W_H(ay, v), with W_H the spectrum of the
// concatenated family evaluated at idx(ay) * 2^k + idx(v)
std::int64_t predict_concat(const GeneralInstance& inst, std::uint64_t a) {
  const auto [ax, ay] = split_point(inst.s(), inst.t(), a);
  const TruthTable cat = concat_family(inst.H());
  const std::uint32_t m = inst.H().member_count();
  std::int64_t total = 0;
  for (std::uint32_t v = 0; v < m; ++v)
    total += walsh_at(inst.g() ^ component_select(inst.F(), v), ax) *
             walsh_at(cat, (ay << inst.k()) | v);
  return checked_scale(total, inst.k());
}

PredictedSpectrum predict_spectrum(const GeneralInstance& inst, WalshFormula f) {
  const int s = inst.s(), t = inst.t(), k = inst.k();
  const std::uint64_t xs = std::uint64_t{1} << s;
  const std::uint64_t ys = std::uint64_t{1} << t;
  const std::uint32_t m = inst.H().member_count();
  std::vector<std::int64_t> out(std::uint64_t{1} << (s + t));

  switch (f) {
    case WalshFormula::Preimage: {
      // one signed fiber vector per u, transformed in place
      std::vector<std::vector<std::int64_t>> fiber(m);
      const auto values = inst.F().value_table();
      for (std::uint32_t u = 0; u < m; ++u) fiber[u].assign(xs, 0);
      for (std::uint64_t x = 0; x < xs; ++x)
        fiber[values[x]][x] = inst.g().get(x) ? -1 : 1;
      for (std::uint32_t u = 0; u < m; ++u) walsh_hadamard_inplace(fiber[u]);
      std::vector<WalshSpectrum> wh;
      wh.reserve(m);
      for (std::uint32_t u = 0; u < m; ++u) wh.push_back(fwht(inst.H().member(u)));
      for (std::uint64_t ax = 0; ax < xs; ++ax)
        for (std::uint64_t ay = 0; ay < ys; ++ay) {
          std::int64_t total = 0;
          for (std::uint32_t u = 0; u < m; ++u)
            total += fiber[u][ax] * wh[u][ay];
          out[(ax << t) | ay] = total;
        }
      break;
    }
    case WalshFormula::CharSum: {
      std::vector<WalshSpectrum> wh;
      wh.reserve(m);
      for (std::uint32_t u = 0; u < m; ++u) wh.push_back(fwht(inst.H().member(u)));
      std::vector<const WalshSpectrum*> refs;
      refs.reserve(m);
      for (const auto& w : wh) refs.push_back(&w);
      return PredictedSpectrum{
          charsum_spectrum_from_parts(inst.g(), inst.F(), refs), f};
    }
    case WalshFormula::Concat: {
      std::vector<WalshSpectrum> wg;
      wg.reserve(m);
      for (std::uint32_t v = 0; v < m; ++v)
        wg.push_back(fwht(inst.g() ^ component_select(inst.F(), v)));
      const WalshSpectrum wcat = fwht(concat_family(inst.H()));
      for (std::uint64_t ax = 0; ax < xs; ++ax)
        for (std::uint64_t ay = 0; ay < ys; ++ay) {
          std::int64_t total = 0;
          for (std::uint32_t v = 0; v < m; ++v)
            total += wg[v][ax] * wcat[(ay << k) | v];
          out[(ax << t) | ay] = checked_scale(total, k);
        }
      break;
    }
    default:
      throw std::invalid_argument(
          "full-spectrum prediction supports preimage, charsum and concat");
  }
  return PredictedSpectrum{WalshSpectrum(s + t, std::move(out)), f};
}

WalshSpectrum charsum_spectrum_from_parts(
    const TruthTable& g, const VectorialMap& F,
    const std::vector<const WalshSpectrum*>& member_spectra) {
  const int s = F.s(), k = F.k();
  if (g.n_vars() != s)
    throw std::invalid_argument("outer function and selector disagree on s");
  if (member_spectra.size() != (std::size_t{1} << k))
    throw std::invalid_argument("need one member spectrum per selector value");
  const int t = member_spectra[0]->n_vars();
  for (const auto* w : member_spectra)
    if (w->n_vars() != t)
      throw std::invalid_argument("member spectra disagree on t");

  const std::uint64_t xs = std::uint64_t{1} << s;
  const std::uint64_t ys = std::uint64_t{1} << t;
  const std::uint32_t m = std::uint32_t{1} << k;
  std::vector<WalshSpectrum> wg;
  wg.reserve(m);
  for (std::uint32_t v = 0; v < m; ++v)
    wg.push_back(fwht(g ^ component_select(F, v)));
  // fold the (-1)^(v.u) sign into per-ay transforms over u
  std::vector<std::int64_t> folded(m);
  std::vector<std::int64_t> out(std::uint64_t{1} << (s + t));
  for (std::uint64_t ay = 0; ay < ys; ++ay) {
    for (std::uint32_t u = 0; u < m; ++u) folded[u] = (*member_spectra[u])[ay];
    walsh_hadamard_inplace(folded);  // indexed by v afterwards
    for (std::uint64_t ax = 0; ax < xs; ++ax) {
      std::int64_t total = 0;
      for (std::uint32_t v = 0; v < m; ++v) total += wg[v][ax] * folded[v];
      out[(ax << t) | ay] = checked_scale(total, k);
    }
  }
  return WalshSpectrum(s + t, std::move(out));
}

std::int64_t product_walsh(const TruthTable& g, const TruthTable& h,
                           std::uint64_t a) {
  const auto [ax, ay] = split_point(g.n_vars(), h.n_vars(), a);
  return walsh_at(g, ax) * walsh_at(h, ay);
}

// W(a) = 1/2 [W_g(ax) (W_h0 + W_h1)(ay) + W_gp(ax) (W_h0 - W_h1)(ay)]
std::int64_t indirect_walsh(const TruthTable& g, const TruthTable& gp,
                            const TruthTable& h0, const TruthTable& h1,
                            std::uint64_t a) {
  check_triple(g, gp, gp);
  check_triple(h0, h1, h1);
  const auto [ax, ay] = split_point(g.n_vars(), h0.n_vars(), a);
  const std::int64_t wg = walsh_at(g, ax), wgp = walsh_at(gp, ax);
  const std::int64_t w0 = walsh_at(h0, ay), w1 = walsh_at(h1, ay);
  return checked_scale(wg * (w0 + w1) + wgp * (w0 - w1), 1);
}

// W(a) = 1/2 [W_h0 (W_g + W_gx) + W_h1 (W_g - W_gp) + W_h2 (W_g - W_gpp)](a)
// where gx = g ^ gp ^ gpp
std::int64_t size3_walsh_simple(const TruthTable& g, const TruthTable& gp,
                                const TruthTable& gpp, const TruthTable& h0,
                                const TruthTable& h1, const TruthTable& h2,
                                std::uint64_t a) {
  check_triple(g, gp, gpp);
  check_triple(h0, h1, h2);
  check_disjoint(g, gp, gpp);
  const auto [ax, ay] = split_point(g.n_vars(), h0.n_vars(), a);
  const std::int64_t wg = walsh_at(g, ax);
  const std::int64_t wgp = walsh_at(gp, ax);
  const std::int64_t wgpp = walsh_at(gpp, ax);
  const std::int64_t wgx = walsh_at(g ^ gp ^ gpp, ax);
  const std::int64_t w0 = walsh_at(h0, ay);
  const std::int64_t w1 = walsh_at(h1, ay);
  const std::int64_t w2 = walsh_at(h2, ay);
  return checked_scale(w0 * (wg + wgx) + w1 * (wg - wgp) + w2 * (wg - wgpp), 1);
}

// Redundant four-term form; under the disjointness precondition the h3
// coefficient (W_g - W_gp - W_gpp + W_gx) vanishes identically.
std::int64_t size3_walsh_fourterm(const TruthTable& g, const TruthTable& gp,
                                  const TruthTable& gpp, const TruthTable& h0,
                                  const TruthTable& h1, const TruthTable& h2,
                                  const TruthTable& h3, std::uint64_t a) {
  check_triple(g, gp, gpp);
  check_triple(h0, h1, h2);
  check_triple(h0, h3, h3);
  check_disjoint(g, gp, gpp);
  const auto [ax, ay] = split_point(g.n_vars(), h0.n_vars(), a);
  const std::int64_t wg = walsh_at(g, ax);
  const std::int64_t wgp = walsh_at(gp, ax);
  const std::int64_t wgpp = walsh_at(gpp, ax);
  const std::int64_t wgx = walsh_at(g ^ gp ^ gpp, ax);
  const std::int64_t w0 = walsh_at(h0, ay);
  const std::int64_t w1 = walsh_at(h1, ay);
  const std::int64_t w2 = walsh_at(h2, ay);
  const std::int64_t w3 = walsh_at(h3, ay);
  const std::int64_t total = wg * (w0 + w1 + w2 + w3) +
                             wgpp * (w0 + w1 - w2 - w3) +
                             wgp * (w0 - w1 + w2 - w3) +
                             wgx * (w0 - w1 - w2 + w3);
  return checked_scale(total, 2);
}

// W(a) = 1/2 [W_h0 (W_gp + W_gpp) + W_h1 (W_g - W_gp) + W_h2 (W_g - W_gpp)](a)
std::int64_t size3_walsh_final(const TruthTable& g, const TruthTable& gp,
                               const TruthTable& gpp, const TruthTable& h0,
                               const TruthTable& h1, const TruthTable& h2,
                               std::uint64_t a) {
  check_triple(g, gp, gpp);
  check_triple(h0, h1, h2);
  check_disjoint(g, gp, gpp);
  const auto [ax, ay] = split_point(g.n_vars(), h0.n_vars(), a);
  const std::int64_t wgp = walsh_at(gp, ax);
  const std::int64_t wgpp = walsh_at(gpp, ax);
  const std::int64_t wg = walsh_at(g, ax);
  const std::int64_t w0 = walsh_at(h0, ay);
  const std::int64_t w1 = walsh_at(h1, ay);
  const std::int64_t w2 = walsh_at(h2, ay);
  return checked_scale(w0 * (wgp + wgpp) + w1 * (wg - wgp) + w2 * (wg - wgpp), 1);
}

// W(a) = 1/4 [ W_h   (W_g + W_gp + W_gpp + W_gx)
//            + W_hp  (W_g - W_gp - W_gpp + W_gx)
//            + W_hpp (W_g - W_gp + W_gpp - W_gx)
//            + W_hx  (W_g + W_gp - W_gpp - W_gx) ](a)
// with gx = g ^ gp ^ gpp, hx = h ^ hp ^ hpp
std::int64_t gen1_walsh(const TruthTable& g, const TruthTable& gp,
                        const TruthTable& gpp, const TruthTable& h,
                        const TruthTable& hp, const TruthTable& hpp,
                        std::uint64_t a) {
  check_triple(g, gp, gpp);
  check_triple(h, hp, hpp);
  const auto [ax, ay] = split_point(g.n_vars(), h.n_vars(), a);
  const std::int64_t wg = walsh_at(g, ax);
  const std::int64_t wgp = walsh_at(gp, ax);
  const std::int64_t wgpp = walsh_at(gpp, ax);
  const std::int64_t wgx = walsh_at(g ^ gp ^ gpp, ax);
  const std::int64_t wh = walsh_at(h, ay);
  const std::int64_t whp = walsh_at(hp, ay);
  const std::int64_t whpp = walsh_at(hpp, ay);
  const std::int64_t whx = walsh_at(h ^ hp ^ hpp, ay);
  const std::int64_t total = wh * (wg + wgp + wgpp + wgx) +
                             whp * (wg - wgp - wgpp + wgx) +
                             whpp * (wg - wgp + wgpp - wgx) +
                             whx * (wg + wgp - wgpp - wgx);
  return checked_scale(total, 2);
}

std::int64_t gen1_concat_walsh(const TruthTable& g, const TruthTable& gp,
                               const TruthTable& gpp, const TruthTable& h,
                               const TruthTable& hp, const TruthTable& hpp,
                               std::uint64_t a) {
  check_triple(g, gp, gpp);
  check_triple(h, hp, hpp);
  const auto [ax, ay] = split_point(g.n_vars(), h.n_vars(), a);
  const TruthTable cat = concat_family(
      FunctionFamily(h.n_vars(), 2, {h, h ^ hp ^ hpp, hpp, hp}));
  const std::int64_t total =
      walsh_at(cat, (ay << 2) | 0) * walsh_at(g, ax) +
      walsh_at(cat, (ay << 2) | 1) * walsh_at(gpp, ax) +
      walsh_at(cat, (ay << 2) | 2) * walsh_at(gp, ax) +
      walsh_at(cat, (ay << 2) | 3) * walsh_at(g ^ gp ^ gpp, ax);
  return checked_scale(total, 2);
}

// W(a) = 1/4 [ W_H(ay,0) W_g + W_H(ay,1) W_{g+f2}
//            + W_H(ay,2) W_{g+f1} + W_H(ay,3) W_{g+f1+f2} ](ax)
std::int64_t k2_concat_walsh(const GeneralInstance& inst, std::uint64_t a) {
  if (inst.k() != 2)
    throw std::invalid_argument("this concatenated form needs k=2");
  const auto [ax, ay] = split_point(inst.s(), inst.t(), a);
  const TruthTable cat = concat_family(inst.H());
  const TruthTable& f1 = inst.F().coord(1);
  const TruthTable& f2 = inst.F().coord(2);
  const std::int64_t total =
      walsh_at(cat, (ay << 2) | 0) * walsh_at(inst.g(), ax) +
      walsh_at(cat, (ay << 2) | 1) * walsh_at(inst.g() ^ f2, ax) +
      walsh_at(cat, (ay << 2) | 2) * walsh_at(inst.g() ^ f1, ax) +
      walsh_at(cat, (ay << 2) | 3) * walsh_at(inst.g() ^ f1 ^ f2, ax);
  return checked_scale(total, 2);
}

bool annihilator_identity_pointwise(const TruthTable& g, const TruthTable& gp,
                                    const TruthTable& gpp) {
  check_triple(g, gp, gpp);
  check_disjoint(g, gp, gpp);
  const TruthTable gx = g ^ gp ^ gpp;
  for (std::uint64_t x = 0; x < g.size(); ++x) {
    const int sum = (g.get(x) ? -1 : 1) - (gp.get(x) ? -1 : 1) -
                    (gpp.get(x) ? -1 : 1) + (gx.get(x) ? -1 : 1);
    if (sum != 0) return false;
  }
  return true;
}

bool annihilator_identity_spectral(const TruthTable& g, const TruthTable& gp,
                                   const TruthTable& gpp) {
  check_triple(g, gp, gpp);
  check_disjoint(g, gp, gpp);
  const WalshSpectrum wg = fwht(g);
  const WalshSpectrum wgp = fwht(gp);
  const WalshSpectrum wgpp = fwht(gpp);
  const WalshSpectrum wgx = fwht(g ^ gp ^ gpp);
  for (std::uint64_t a = 0; a < wg.size(); ++a)
    if (wg[a] - wgp[a] - wgpp[a] + wgx[a] != 0) return false;
  return true;
}

}  // namespace bfkit

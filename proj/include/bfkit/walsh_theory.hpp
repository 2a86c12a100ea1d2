#pragma once

#include <stdexcept>
#include <string_view>

#include "bfkit/constructions.hpp"
#include "bfkit/transforms.hpp"

namespace bfkit {

// Raised when a closed-form prefactor fails its guaranteed divisibility; it
// means the theory code itself is broken, never the caller's input.
struct internal_inconsistency : std::logic_error {
  using std::logic_error::logic_error;
};

enum class WalshFormula {
  Preimage,       // fiber-restricted character sums against member spectra
  CharSum,        // 2^-k sum over (u, v) of signed component spectra products
  Concat,         // 2^-k sum over v against the concatenated family spectrum
  Product,        // two-block direct composition
  Indirect,       // two-fiber selector
  Size3Simple,    // three-fiber selector, three-term form
  Size3FourTerm,  // three-fiber selector, redundant four-term form
  Size3Final,     // three-fiber selector, rebalanced three-term form
  Gen1FourTerm,   // first correction-term composition, four-term form
  K2Concat,       // k=2 concatenated-family form
  Gen1Concat,     // first correction-term composition via a concatenated family
};
std::string_view formula_name(WalshFormula f);
WalshFormula formula_from_name(std::string_view name);

struct PredictedSpectrum {
  WalshSpectrum spectrum;
  WalshFormula formula;
};

// Per-point reference evaluators; a indexes the combined (s+t)-variable
// domain. Each runs the closed form directly from single-point character
// sums, independent of the batched spectrum path below.
std::int64_t predict_preimage(const GeneralInstance& inst, std::uint64_t a);
std::int64_t predict_charsum(const GeneralInstance& inst, std::uint64_t a);
std::int64_t predict_concat(const GeneralInstance& inst, std::uint64_t a);

// Full predicted spectrum via Preimage, CharSum or Concat.
PredictedSpectrum predict_spectrum(const GeneralInstance& inst, WalshFormula f);

// CharSum grid from already-computed member spectra (one per u, all on t
// variables); lets callers that reuse a fixed block pool skip the member
// transforms.
WalshSpectrum charsum_spectrum_from_parts(
    const TruthTable& g, const VectorialMap& F,
    const std::vector<const WalshSpectrum*>& member_spectra);

std::int64_t product_walsh(const TruthTable& g, const TruthTable& h,
                           std::uint64_t a);
std::int64_t indirect_walsh(const TruthTable& g, const TruthTable& gp,
                            const TruthTable& h0, const TruthTable& h1,
                            std::uint64_t a);
// The three size3 forms require (g^gp)(g^gpp) == 0, like size3_sum.
std::int64_t size3_walsh_simple(const TruthTable& g, const TruthTable& gp,
                                const TruthTable& gpp, const TruthTable& h0,
                                const TruthTable& h1, const TruthTable& h2,
                                std::uint64_t a);
// redundant form carrying an explicit fourth member table; its coefficient
// vanishes identically under the precondition, which tests pin down
std::int64_t size3_walsh_fourterm(const TruthTable& g, const TruthTable& gp,
                                  const TruthTable& gpp, const TruthTable& h0,
                                  const TruthTable& h1, const TruthTable& h2,
                                  const TruthTable& h3, std::uint64_t a);
std::int64_t size3_walsh_final(const TruthTable& g, const TruthTable& gp,
                               const TruthTable& gpp, const TruthTable& h0,
                               const TruthTable& h1, const TruthTable& h2,
                               std::uint64_t a);
// four-term closed form for gen1; no precondition
std::int64_t gen1_walsh(const TruthTable& g, const TruthTable& gp,
                        const TruthTable& gpp, const TruthTable& h,
                        const TruthTable& hp, const TruthTable& hpp,
                        std::uint64_t a);
// same prediction routed through the concatenated family (h, h^hp^hpp, hpp, hp)
std::int64_t gen1_concat_walsh(const TruthTable& g, const TruthTable& gp,
                               const TruthTable& gpp, const TruthTable& h,
                               const TruthTable& hp, const TruthTable& hpp,
                               std::uint64_t a);
// explicit k=2 concatenated-family form
std::int64_t k2_concat_walsh(const GeneralInstance& inst, std::uint64_t a);

// For gp = g ^ f, gpp = g ^ h with f*h == 0: pointwise
// (-1)^g - (-1)^gp - (-1)^gpp + (-1)^(g^gp^gpp) == 0, and the same alternating
// combination of the four spectra vanishes everywhere. Both check their
// precondition (std::invalid_argument with a witness point otherwise) and
// return true; false means the identity itself failed.
bool annihilator_identity_pointwise(const TruthTable& g, const TruthTable& gp,
                                    const TruthTable& gpp);
bool annihilator_identity_spectral(const TruthTable& g, const TruthTable& gp,
                                   const TruthTable& gpp);

}  // namespace bfkit

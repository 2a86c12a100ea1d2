#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "bfkit/analysis.hpp"
#include "bfkit/anf_parser.hpp"
#include "bfkit/walsh_theory.hpp"
#include "oracles.hpp"

using bfkit::FunctionFamily;
using bfkit::GeneralInstance;
using bfkit::TruthTable;
using bfkit::VectorialMap;
using bfkit::WalshFormula;
using bfkit::WalshSpectrum;

namespace {

TruthTable anf(const std::string& expr, int n) {
  return bfkit::table_from_string("anf:" + expr, n);
}

GeneralInstance random_instance(int s, int t, int k, bfkit::Rng& rng) {
  return GeneralInstance(TruthTable::random(s, rng),
                         VectorialMap::random(s, k, rng),
                         FunctionFamily::random(t, k, rng));
}

// disjoint-difference triple (g, g^f, g^h) with f*h == 0
struct SplitTriple {
  TruthTable g, gp, gpp;
};

SplitTriple random_split_triple(int n, bfkit::Rng& rng) {
  const auto [f, h] = oracle::random_disjoint_pair(n, rng);
  const TruthTable g = TruthTable::random(n, rng);
  return {g, g ^ f, g ^ h};
}

}  // namespace

TEST_CASE("the three point predictors reproduce the transform") {
  bfkit::Rng rng(70);
  for (int s = 1; s <= 3; ++s)
    for (int t = 1; t <= 3; ++t)
      for (int k = 1; k <= 3; ++k)
        for (int rep = 0; rep < 3; ++rep) {
          const GeneralInstance inst = random_instance(s, t, k, rng);
          const WalshSpectrum w = bfkit::fwht(bfkit::general_construct(inst));
          for (std::uint64_t a = 0; a < w.size(); ++a) {
            CAPTURE(s);
            CAPTURE(t);
            CAPTURE(k);
            CAPTURE(a);
            CHECK(bfkit::predict_preimage(inst, a) == w[a]);
            CHECK(bfkit::predict_charsum(inst, a) == w[a]);
            CHECK(bfkit::predict_concat(inst, a) == w[a]);
          }
        }
}

TEST_CASE("point predictors reject out-of-range points") {
  bfkit::Rng rng(71);
  const GeneralInstance inst = random_instance(2, 2, 1, rng);
  CHECK_THROWS_AS(bfkit::predict_preimage(inst, 16), std::invalid_argument);
  CHECK_THROWS_AS(bfkit::predict_charsum(inst, 16), std::invalid_argument);
  CHECK_THROWS_AS(bfkit::predict_concat(inst, 16), std::invalid_argument);
}

TEST_CASE("full-spectrum prediction agrees with the point forms") {
  bfkit::Rng rng(72);
  const WalshFormula kBatched[] = {WalshFormula::Preimage, WalshFormula::CharSum,
                                   WalshFormula::Concat};
  for (int rep = 0; rep < 8; ++rep) {
    const int s = 1 + static_cast<int>(rng.below(3));
    const int t = 1 + static_cast<int>(rng.below(3));
    const int k = 1 + static_cast<int>(rng.below(3));
    const GeneralInstance inst = random_instance(s, t, k, rng);
    const WalshSpectrum w = bfkit::fwht(bfkit::general_construct(inst));
    for (const WalshFormula f : kBatched) {
      const auto predicted = bfkit::predict_spectrum(inst, f);
      CHECK(predicted.formula == f);
      CHECK(predicted.spectrum == w);
    }
  }
  CHECK_THROWS_AS(
      bfkit::predict_spectrum(random_instance(2, 2, 1, rng), WalshFormula::Product),
      std::invalid_argument);
}

TEST_CASE("charsum grid from precomputed member spectra") {
  bfkit::Rng rng(73);
  for (int rep = 0; rep < 6; ++rep) {
    const GeneralInstance inst = random_instance(3, 2, 2, rng);
    std::vector<WalshSpectrum> owned;
    for (std::uint32_t u = 0; u < inst.H().member_count(); ++u)
      owned.push_back(bfkit::fwht(inst.H().member(u)));
    std::vector<const WalshSpectrum*> refs;
    for (const auto& w : owned) refs.push_back(&w);
    CHECK(bfkit::charsum_spectrum_from_parts(inst.g(), inst.F(), refs) ==
          bfkit::predict_spectrum(inst, WalshFormula::CharSum).spectrum);
  }
  // dimension mismatches are rejected up front
  const GeneralInstance inst = random_instance(2, 2, 1, rng);
  const WalshSpectrum w0 = bfkit::fwht(inst.H().member(0));
  CHECK_THROWS_AS(
      bfkit::charsum_spectrum_from_parts(inst.g(), inst.F(), {&w0}),
      std::invalid_argument);
}

TEST_CASE("two-block product form") {
  // frozen: W of x1 on one variable is (0, 2), so the product spectrum of
  // x1 ^ y1 is 4 exactly at a = (1, 1)
  const TruthTable g = anf("x1", 1);
  const TruthTable f = bfkit::direct_sum(g, g);
  const WalshSpectrum w = bfkit::fwht(f);
  CHECK(w.values() == std::vector<std::int64_t>{0, 0, 0, 4});
  for (std::uint64_t a = 0; a < 4; ++a)
    CHECK(bfkit::product_walsh(g, g, a) == w[a]);

  bfkit::Rng rng(74);
  for (int rep = 0; rep < 10; ++rep) {
    const TruthTable gr = TruthTable::random(3, rng);
    const TruthTable hr = TruthTable::random(2, rng);
    const WalshSpectrum wr = bfkit::fwht(bfkit::direct_sum(gr, hr));
    for (std::uint64_t a = 0; a < wr.size(); ++a)
      CHECK(bfkit::product_walsh(gr, hr, a) == wr[a]);
  }
}

TEST_CASE("two-fiber closed form") {
  bfkit::Rng rng(75);
  for (int rep = 0; rep < 10; ++rep) {
    const TruthTable g = TruthTable::random(3, rng);
    const TruthTable gp = TruthTable::random(3, rng);
    const TruthTable h0 = TruthTable::random(2, rng);
    const TruthTable h1 = TruthTable::random(2, rng);
    const WalshSpectrum w = bfkit::fwht(bfkit::indirect_sum(g, gp, h0, h1));
    for (std::uint64_t a = 0; a < w.size(); ++a)
      CHECK(bfkit::indirect_walsh(g, gp, h0, h1, a) == w[a]);
  }
}

TEST_CASE("three-fiber closed forms all match the transform and each other") {
  bfkit::Rng rng(76);
  for (int rep = 0; rep < 10; ++rep) {
    const auto [g, gp, gpp] = random_split_triple(3, rng);
    const TruthTable h0 = TruthTable::random(2, rng);
    const TruthTable h1 = TruthTable::random(2, rng);
    const TruthTable h2 = TruthTable::random(2, rng);
    const WalshSpectrum w =
        bfkit::fwht(bfkit::size3_sum(g, gp, gpp, h0, h1, h2));
    const TruthTable h3 = TruthTable::random(2, rng);
    for (std::uint64_t a = 0; a < w.size(); ++a) {
      CAPTURE(a);
      CHECK(bfkit::size3_walsh_simple(g, gp, gpp, h0, h1, h2, a) == w[a]);
      CHECK(bfkit::size3_walsh_fourterm(g, gp, gpp, h0, h1, h2, h3, a) == w[a]);
      CHECK(bfkit::size3_walsh_final(g, gp, gpp, h0, h1, h2, a) == w[a]);
    }
  }
}

TEST_CASE("the redundant fourth member never influences the four-term form") {
  bfkit::Rng rng(77);
  for (int rep = 0; rep < 5; ++rep) {
    const auto [g, gp, gpp] = random_split_triple(4, rng);
    const TruthTable h0 = TruthTable::random(3, rng);
    const TruthTable h1 = TruthTable::random(3, rng);
    const TruthTable h2 = TruthTable::random(3, rng);
    const std::uint64_t a = rng.below(std::uint64_t{1} << 7);
    const std::int64_t base =
        bfkit::size3_walsh_simple(g, gp, gpp, h0, h1, h2, a);
    for (int draw = 0; draw < 10; ++draw) {
      const TruthTable h3 = TruthTable::random(3, rng);
      CHECK(bfkit::size3_walsh_fourterm(g, gp, gpp, h0, h1, h2, h3, a) == base);
    }
  }
}

TEST_CASE("three-fiber forms enforce the partition precondition") {
  const TruthTable g(2);
  const TruthTable one = TruthTable::constant(2, 1);
  const TruthTable h(2);
  CHECK_THROWS_AS(bfkit::size3_walsh_simple(g, one, one, h, h, h, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(bfkit::size3_walsh_fourterm(g, one, one, h, h, h, h, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(bfkit::size3_walsh_final(g, one, one, h, h, h, 0),
                  std::invalid_argument);
}

TEST_CASE("first correction-term composition: four-term and concatenated forms") {
  bfkit::Rng rng(78);
  for (int rep = 0; rep < 10; ++rep) {
    const TruthTable g = TruthTable::random(3, rng);
    const TruthTable gp = TruthTable::random(3, rng);
    const TruthTable gpp = TruthTable::random(3, rng);
    const TruthTable h = TruthTable::random(2, rng);
    const TruthTable hp = TruthTable::random(2, rng);
    const TruthTable hpp = TruthTable::random(2, rng);
    const WalshSpectrum w = bfkit::fwht(bfkit::gen1(g, gp, gpp, h, hp, hpp));
    for (std::uint64_t a = 0; a < w.size(); ++a) {
      CHECK(bfkit::gen1_walsh(g, gp, gpp, h, hp, hpp, a) == w[a]);
      CHECK(bfkit::gen1_concat_walsh(g, gp, gpp, h, hp, hpp, a) == w[a]);
    }
  }
}

TEST_CASE("k=2 concatenated-family form") {
  bfkit::Rng rng(79);
  for (int rep = 0; rep < 10; ++rep) {
    const GeneralInstance inst = random_instance(3, 2, 2, rng);
    const WalshSpectrum w = bfkit::fwht(bfkit::general_construct(inst));
    for (std::uint64_t a = 0; a < w.size(); ++a)
      CHECK(bfkit::k2_concat_walsh(inst, a) == w[a]);
  }
  CHECK_THROWS_AS(bfkit::k2_concat_walsh(random_instance(2, 2, 3, rng), 0),
                  std::invalid_argument);
}

TEST_CASE("alternating identity for annihilator splits: frozen example") {
  const TruthTable g(2);
  const TruthTable gp = anf("x1*x2", 2);
  const TruthTable gpp = anf("x1*(1+x2)", 2);
  // spectra at a = 0: 4 - 2 - 2 + 0 = 0
  CHECK(bfkit::fwht(g)[0] == 4);
  CHECK(bfkit::fwht(gp)[0] == 2);
  CHECK(bfkit::fwht(gpp)[0] == 2);
  CHECK(bfkit::fwht(g ^ gp ^ gpp)[0] == 0);
  CHECK(bfkit::annihilator_identity_pointwise(g, gp, gpp));
  CHECK(bfkit::annihilator_identity_spectral(g, gp, gpp));
}

TEST_CASE("alternating identity holds for random annihilator splits") {
  bfkit::Rng rng(80);
  for (int n = 1; n <= 10; ++n)
    for (int rep = 0; rep < 8; ++rep) {
      const auto [g, gp, gpp] = random_split_triple(n, rng);
      CHECK(bfkit::annihilator_identity_pointwise(g, gp, gpp));
      CHECK(bfkit::annihilator_identity_spectral(g, gp, gpp));
    }
}

TEST_CASE("alternating identity restated through a disjoint function pair") {
  bfkit::Rng rng(81);
  for (int rep = 0; rep < 20; ++rep) {
    const auto [f, h] = oracle::random_disjoint_pair(6, rng);
    REQUIRE(bfkit::is_annihilator_pair(f, h));
    const TruthTable g = TruthTable::random(6, rng);
    CHECK(bfkit::annihilator_identity_pointwise(g, g ^ f, g ^ h));
    CHECK(bfkit::annihilator_identity_spectral(g, g ^ f, g ^ h));
  }
}

TEST_CASE("alternating identity rejects overlapping differences with a witness") {
  const TruthTable g(2);
  const TruthTable one = TruthTable::constant(2, 1);
  bool threw = false;
  try {
    bfkit::annihilator_identity_pointwise(g, one, one);
  } catch (const std::invalid_argument& e) {
    threw = true;
    CHECK(std::string(e.what()).find("point 0") != std::string::npos);
  }
  CHECK(threw);
  CHECK_THROWS_AS(bfkit::annihilator_identity_spectral(g, one, one),
                  std::invalid_argument);
}

TEST_CASE("formula names round-trip") {
  const WalshFormula all[] = {
      WalshFormula::Preimage,      WalshFormula::CharSum,
      WalshFormula::Concat,        WalshFormula::Product,
      WalshFormula::Indirect,      WalshFormula::Size3Simple,
      WalshFormula::Size3FourTerm, WalshFormula::Size3Final,
      WalshFormula::Gen1FourTerm,  WalshFormula::K2Concat,
      WalshFormula::Gen1Concat,
  };
  for (const WalshFormula f : all)
    CHECK(bfkit::formula_from_name(bfkit::formula_name(f)) == f);
  CHECK_THROWS_AS(bfkit::formula_from_name("fourier"), std::invalid_argument);
}

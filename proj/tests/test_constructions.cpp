#include <doctest.h>

#include <bit>
#include <stdexcept>
#include <utility>

#include "bfkit/analysis.hpp"
#include "bfkit/anf_parser.hpp"
#include "bfkit/constructions.hpp"

using bfkit::FunctionFamily;
using bfkit::GeneralInstance;
using bfkit::TruthTable;
using bfkit::VectorialMap;

namespace {

TruthTable anf(const std::string& expr, int n) {
  return bfkit::table_from_string("anf:" + expr, n);
}

// f(x, y) -> f(y, x), for comparing role-exchanged compositions
TruthTable transpose_blocks(const TruthTable& f, int s, int t) {
  TruthTable out(f.n_vars());
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << s); ++x)
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << t); ++y)
      out.set((y << s) | x, f.get((x << t) | y));
  return out;
}

GeneralInstance random_instance(int s, int t, int k, bfkit::Rng& rng) {
  return GeneralInstance(TruthTable::random(s, rng),
                         VectorialMap::random(s, k, rng),
                         FunctionFamily::random(t, k, rng));
}

}  // namespace

TEST_CASE("lift_x / lift_y") {
  const TruthTable g = anf("x1", 1);
  CHECK(bfkit::lift_x(g, 1).bits() == std::vector<int>{0, 0, 1, 1});
  CHECK(bfkit::lift_y(g, 1).bits() == std::vector<int>{0, 1, 0, 1});
  CHECK(bfkit::lift_x(g, 0) == g);
  CHECK(bfkit::lift_y(g, 0) == g);
}

TEST_CASE("direct_sum") {
  CHECK(bfkit::direct_sum(anf("x1", 1), anf("x1", 1)).bits() ==
        std::vector<int>{0, 1, 1, 0});
  // adding a constant block complements the other side pointwise
  CHECK(bfkit::direct_sum(TruthTable::constant(1, 1), anf("x1*x2", 2)) ==
        ~bfkit::direct_sum(TruthTable(1), anf("x1*x2", 2)));
  // both blocks bent -> the sum is bent
  const TruthTable f = bfkit::direct_sum(anf("x1*x2", 2), anf("x1*x2", 2));
  CHECK(f == anf("x1*x2 + x3*x4", 4));
  CHECK(bfkit::is_bent(f));
}

TEST_CASE("direct_sum stacks resiliency orders") {
  bfkit::Rng rng(51);
  for (int rep = 0; rep < 40; ++rep) {
    const int s = 2 + static_cast<int>(rng.below(3));
    const int t = 2 + static_cast<int>(rng.below(3));
    TruthTable g(s), h(t);
    if (rng.bit()) {
      // affine with prescribed support weight gives an exact resiliency order
      std::uint64_t b = 0;
      while (b == 0) b = rng.below(std::uint64_t{1} << s);
      for (std::uint64_t x = 0; x < g.size(); ++x)
        if (std::popcount(b & x) & 1) g.set(x, 1);
    } else {
      g = TruthTable::random(s, rng);
    }
    h = TruthTable::random(t, rng);
    const int rg = bfkit::resiliency_order(g);
    const int rh = bfkit::resiliency_order(h);
    if (rg < 0 || rh < 0) continue;
    CHECK(bfkit::resiliency_order(bfkit::direct_sum(g, h)) >= rg + rh + 1);
  }
}

TEST_CASE("indirect_sum") {
  bfkit::Rng rng(52);
  // equal primed blocks collapse onto the direct sum
  for (int rep = 0; rep < 10; ++rep) {
    const TruthTable g = TruthTable::random(3, rng);
    const TruthTable h = TruthTable::random(2, rng);
    CHECK(bfkit::indirect_sum(g, g, h, TruthTable::random(2, rng)) ==
          bfkit::direct_sum(g, h));
    CHECK(bfkit::indirect_sum(g, TruthTable::random(3, rng), h, h) ==
          bfkit::direct_sum(g, h));
  }
  // the classic bent pairing
  const TruthTable f = bfkit::indirect_sum(anf("x1*x2", 2), anf("x1*x2 + x1", 2),
                                           anf("x1*x2", 2), anf("x1*x2 + 1", 2));
  CHECK(bfkit::is_bent(f));
  CHECK_THROWS_AS(
      bfkit::indirect_sum(TruthTable(2), TruthTable(3), TruthTable(2), TruthTable(2)),
      std::invalid_argument);
}

TEST_CASE("indirect sums of bent pairs are bent") {
  bfkit::Rng rng(53);
  // quadratic bent blocks on 2 variables: x1*x2 plus any affine part
  auto bent2 = [&rng]() {
    TruthTable f = anf("x1*x2", 2);
    if (rng.bit()) f ^= TruthTable::variable(2, 1);
    if (rng.bit()) f ^= TruthTable::variable(2, 2);
    if (rng.bit()) f = ~f;
    return f;
  };
  for (int rep = 0; rep < 50; ++rep) {
    const TruthTable f =
        bfkit::indirect_sum(bent2(), bent2(), bent2(), bent2());
    CHECK(bfkit::is_bent(f));
  }
}

TEST_CASE("gen1 collapses and the exchange symmetry") {
  bfkit::Rng rng(54);
  for (int rep = 0; rep < 10; ++rep) {
    const TruthTable g = TruthTable::random(3, rng);
    const TruthTable gp = TruthTable::random(3, rng);
    const TruthTable h = TruthTable::random(3, rng);
    const TruthTable hp = TruthTable::random(3, rng);
    // third blocks equal to the second: back to the indirect sum
    CHECK(bfkit::gen1(g, gp, gp, h, hp, hp) == bfkit::indirect_sum(g, gp, h, hp));

    // exchanging the two sides transposes the blocks
    const TruthTable gpp = TruthTable::random(3, rng);
    const TruthTable hpp = TruthTable::random(3, rng);
    const TruthTable lhs = bfkit::gen1(g, gp, gpp, h, hp, hpp);
    const TruthTable rhs = bfkit::gen1(h, hp, hpp, g, gp, gpp);
    CHECK(rhs == transpose_blocks(lhs, 3, 3));
  }
}

TEST_CASE("gen2 collapses onto gen1") {
  bfkit::Rng rng(55);
  for (int rep = 0; rep < 10; ++rep) {
    const TruthTable g = TruthTable::random(2, rng);
    const TruthTable gp = TruthTable::random(2, rng);
    const TruthTable gpp = TruthTable::random(2, rng);
    const TruthTable h = TruthTable::random(3, rng);
    const TruthTable hp = TruthTable::random(3, rng);
    const TruthTable hpp = TruthTable::random(3, rng);
    // fourth blocks equal to the third: the extra term vanishes
    CHECK(bfkit::gen2(g, gp, gpp, gpp, h, hp, hpp, hpp) ==
          bfkit::gen1(g, gp, gpp, h, hp, hpp));
  }
}

TEST_CASE("size3_sum") {
  bfkit::Rng rng(56);
  const TruthTable g = TruthTable::random(3, rng);
  const TruthTable h0 = TruthTable::random(2, rng);
  const TruthTable h1 = TruthTable::random(2, rng);
  const TruthTable h2 = TruthTable::random(2, rng);

  // all members equal: plain direct sum
  CHECK(bfkit::size3_sum(g, g, g, h0, h0, h0) == bfkit::direct_sum(g, h0));

  // empty third fiber (gpp = g): the third member is never used
  const TruthTable gp = g ^ bfkit::table_from_string("anf:x1*x2*x3", 3);
  CHECK(bfkit::size3_sum(g, gp, g, h0, h1, h2) ==
        bfkit::indirect_sum(g, gp, h0, h1));

  // overlapping difference supports must be rejected
  CHECK_THROWS_AS(bfkit::size3_sum(g, ~g, ~g, h0, h1, h2),
                  std::invalid_argument);
}

TEST_CASE("general_construct degenerate selectors") {
  bfkit::Rng rng(57);
  for (int rep = 0; rep < 10; ++rep) {
    const int s = 2, t = 3, k = 2;
    const TruthTable g = TruthTable::random(s, rng);
    const FunctionFamily H = FunctionFamily::random(t, k, rng);

    // constant selector: direct sum with the selected member
    const std::uint32_t u0 = static_cast<std::uint32_t>(rng.below(4));
    CHECK(bfkit::general_construct(
              GeneralInstance(g, VectorialMap::constant(s, k, u0), H)) ==
          bfkit::direct_sum(g, H.member(u0)));

    // two-valued selector: the indirect-sum shape
    std::uint32_t u1 = u0;
    while (u1 == u0) u1 = static_cast<std::uint32_t>(rng.below(4));
    std::vector<std::uint32_t> words(4);
    for (auto& w : words) w = rng.bit() ? u1 : u0;
    words[0] = u0;  // pin the labeling
    words[1] = u1;
    const VectorialMap F = VectorialMap::from_words(s, k, words);
    const TruthTable gp = g ^ bfkit::preimage_indicator(F, u1);
    CHECK(bfkit::general_construct(GeneralInstance(g, F, H)) ==
          bfkit::indirect_sum(g, gp, H.member(u0), H.member(u1)));
  }
}

TEST_CASE("general_construct matches the size3 shape on three-fiber selectors") {
  bfkit::Rng rng(58);
  for (int rep = 0; rep < 10; ++rep) {
    const int s = 3, t = 2, k = 2;
    const TruthTable g = TruthTable::random(s, rng);
    const FunctionFamily H = FunctionFamily::random(t, k, rng);
    // three distinct selector values over a random 3-part split
    std::vector<std::uint32_t> words(8);
    for (auto& w : words) w = static_cast<std::uint32_t>(rng.below(3));
    words[0] = 0;
    words[1] = 1;
    words[2] = 2;
    const VectorialMap F = VectorialMap::from_words(s, k, words);
    const TruthTable gp = g ^ bfkit::preimage_indicator(F, 1);
    const TruthTable gpp = g ^ bfkit::preimage_indicator(F, 2);
    CHECK(bfkit::general_construct(GeneralInstance(g, F, H)) ==
          bfkit::size3_sum(g, gp, gpp, H.member(0), H.member(1), H.member(2)));
  }
}

TEST_CASE("expand_k2 / expand_k3 equal the pointwise composition") {
  bfkit::Rng rng(59);
  for (int rep = 0; rep < 15; ++rep) {
    const auto inst2 = random_instance(2, 3, 2, rng);
    CHECK(bfkit::expand_k2(inst2) == bfkit::general_construct(inst2));
    const auto inst3 = random_instance(3, 2, 3, rng);
    CHECK(bfkit::expand_k3(inst3) == bfkit::general_construct(inst3));
  }
  CHECK_THROWS_AS(bfkit::expand_k2(random_instance(2, 2, 3, rng)),
                  std::invalid_argument);
  CHECK_THROWS_AS(bfkit::expand_k3(random_instance(2, 2, 2, rng)),
                  std::invalid_argument);
}

TEST_CASE("gen1 equals the k=2 composition under the derived substitutions") {
  bfkit::Rng rng(60);
  for (int rep = 0; rep < 15; ++rep) {
    const TruthTable g = TruthTable::random(3, rng);
    const TruthTable gp = TruthTable::random(3, rng);
    const TruthTable gpp = TruthTable::random(3, rng);
    const TruthTable h = TruthTable::random(2, rng);
    const TruthTable hp = TruthTable::random(2, rng);
    const TruthTable hpp = TruthTable::random(2, rng);
    const VectorialMap F(3, 2, {g ^ gp, g ^ gpp});
    const FunctionFamily H(2, 2, {h, h ^ hp ^ hpp, hpp, hp});
    CHECK(bfkit::general_construct(GeneralInstance(g, F, H)) ==
          bfkit::gen1(g, gp, gpp, h, hp, hpp));
  }
}

TEST_CASE("gen2 equals the k=3 composition under the derived substitutions") {
  bfkit::Rng rng(61);
  for (int rep = 0; rep < 15; ++rep) {
    const TruthTable g = TruthTable::random(2, rng);
    const TruthTable gp = TruthTable::random(2, rng);
    const TruthTable gpp = TruthTable::random(2, rng);
    const TruthTable gppp = TruthTable::random(2, rng);
    const TruthTable h = TruthTable::random(3, rng);
    const TruthTable hp = TruthTable::random(3, rng);
    const TruthTable hpp = TruthTable::random(3, rng);
    const TruthTable hppp = TruthTable::random(3, rng);
    const VectorialMap F(2, 3, {g ^ gp, g ^ gpp, g ^ gppp});
    const FunctionFamily H(
        3, 3,
        {h, h ^ hpp ^ hppp, h ^ hp ^ hppp, h ^ hp ^ hpp, hpp, hppp,
         hp ^ hpp ^ hppp, hp});
    CHECK(bfkit::general_construct(GeneralInstance(g, F, H)) ==
          bfkit::gen2(g, gp, gpp, gppp, h, hp, hpp, hppp));
  }
}

TEST_CASE("size3 exchange is not symmetric: frozen witness") {
  // degenerate family h0 = h1 = h2 = h collapses the left side to a direct
  // sum; exchanging roles then produces h(x) ^ gpp(y), which differs from the
  // transposed original g(y) ^ h(x) whenever gpp != g
  const TruthTable g(2);                       // 0
  const TruthTable gp = anf("x1*x2", 2);       // disjoint difference supports
  const TruthTable gpp = anf("x1*(1+x2)", 2);  // (gp & gpp) == 0
  const TruthTable h = anf("x1", 2);

  const TruthTable lhs = bfkit::size3_sum(g, gp, gpp, h, h, h);
  CHECK(lhs == bfkit::direct_sum(g, h));
  // exchange pairs (g, h1), (gp, h2), (gpp, h0)
  const TruthTable rhs = bfkit::size3_sum(h, h, h, gpp, g, gp);
  CHECK(rhs == bfkit::direct_sum(h, gpp));
  CHECK(rhs != transpose_blocks(lhs, 2, 2));
}

TEST_CASE("absorb_outer") {
  bfkit::Rng rng(62);
  // identity selector on 2 bits
  const VectorialMap id(2, 2, {anf("x1", 2), anf("x2", 2)});
  for (int rep = 0; rep < 10; ++rep) {
    const TruthTable g = TruthTable::random(2, rng);
    const FunctionFamily H = FunctionFamily::random(3, 2, rng);
    const GeneralInstance inst(g, id, H);
    const GeneralInstance folded = bfkit::absorb_outer(inst);
    CHECK(folded.g().is_zero());
    CHECK(bfkit::general_construct(folded) == bfkit::general_construct(inst));
  }
  // random bijective selector via a value-table shuffle
  std::vector<std::uint32_t> perm{0, 1, 2, 3, 4, 5, 6, 7};
  for (std::size_t i = perm.size(); i > 1; --i)
    std::swap(perm[i - 1], perm[rng.below(i)]);
  const VectorialMap F = VectorialMap::from_words(3, 3, perm);
  const GeneralInstance inst(TruthTable::random(3, rng), F,
                             FunctionFamily::random(2, 3, rng));
  const GeneralInstance folded = bfkit::absorb_outer(inst);
  CHECK(bfkit::general_construct(folded) == bfkit::general_construct(inst));
  // zero outer part: nothing changes
  const GeneralInstance no_g(TruthTable(3), F, FunctionFamily::random(2, 3, rng));
  CHECK(bfkit::absorb_outer(no_g).H() == no_g.H());

  // non-bijective selectors are rejected
  const GeneralInstance bad(TruthTable::random(2, rng),
                            VectorialMap::constant(2, 2, 1),
                            FunctionFamily::random(2, 2, rng));
  CHECK_THROWS_AS(bfkit::absorb_outer(bad), std::invalid_argument);
}

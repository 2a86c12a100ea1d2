#include <doctest.h>

#include <stdexcept>

#include "bfkit/anf_parser.hpp"
#include "bfkit/vectorial.hpp"

using bfkit::FunctionFamily;
using bfkit::TruthTable;
using bfkit::VectorialMap;

namespace {
TruthTable anf(const std::string& expr, int n) {
  return bfkit::table_from_string("anf:" + expr, n);
}
}  // namespace

TEST_CASE("vectorial map basics") {
  // F = (x1, x2) is the identity on 2 bits
  const VectorialMap F(2, 2, {anf("x1", 2), anf("x2", 2)});
  CHECK(F.value_table() == std::vector<std::uint32_t>{0, 1, 2, 3});
  CHECK(F.is_bijective());
  CHECK(F(2) == 2);

  const VectorialMap C = VectorialMap::constant(3, 2, 1);
  CHECK_FALSE(C.is_bijective());
  CHECK(C.value_table() == std::vector<std::uint32_t>(8, 1));

  CHECK(VectorialMap::from_words(1, 2, {3, 0}).coord(1) == anf("x1 + 1", 1));
  CHECK_THROWS_AS(VectorialMap(2, 2, {anf("x1", 2)}), std::invalid_argument);
  CHECK_THROWS_AS(VectorialMap::from_words(1, 1, {2, 0}), std::invalid_argument);
}

TEST_CASE("image_set") {
  CHECK(bfkit::image_set(VectorialMap::constant(2, 3, 5)) ==
        std::set<std::uint32_t>{5});
  // F = (x1, x1): both outputs tied
  const VectorialMap F(2, 2, {anf("x1", 2), anf("x1", 2)});
  CHECK(bfkit::image_set(F) == std::set<std::uint32_t>{0, 3});
  const VectorialMap id(2, 2, {anf("x1", 2), anf("x2", 2)});
  CHECK(bfkit::image_set(id) == std::set<std::uint32_t>{0, 1, 2, 3});
}

TEST_CASE("preimage_indicator") {
  // F = (x1, x2), u = (1,0) -> exactly the point x = (1,0), index 2
  const VectorialMap F(2, 2, {anf("x1", 2), anf("x2", 2)});
  CHECK(bfkit::preimage_indicator(F, 2).bits() ==
        std::vector<int>{0, 0, 1, 0});
  // constant map: full/empty fibers
  const VectorialMap C = VectorialMap::constant(2, 2, 1);
  CHECK(bfkit::preimage_indicator(C, 1) == TruthTable::constant(2, 1));
  CHECK(bfkit::preimage_indicator(C, 0).is_zero());
  CHECK_THROWS_AS(bfkit::preimage_indicator(C, 4), std::invalid_argument);
}

TEST_CASE("preimage indicators partition the domain") {
  bfkit::Rng rng(11);
  for (int rep = 0; rep < 10; ++rep) {
    const int s = 1 + static_cast<int>(rng.below(6));
    const int k = 1 + static_cast<int>(rng.below(3));
    const VectorialMap F = VectorialMap::random(s, k, rng);
    TruthTable acc(s);
    std::uint64_t total = 0;
    for (std::uint32_t u = 0; u < (1u << k); ++u) {
      const TruthTable ind = bfkit::preimage_indicator(F, u);
      CHECK((acc & ind).is_zero());  // pairwise disjoint
      acc ^= ind;
      total += ind.weight();
    }
    CHECK(acc == TruthTable::constant(s, 1));
    CHECK(total == acc.size());
  }
}

TEST_CASE("component_select") {
  const VectorialMap F(2, 2, {anf("x1", 2), anf("x2", 2)});
  CHECK(bfkit::component_select(F, 0).is_zero());
  CHECK(bfkit::component_select(F, 2) == anf("x1", 2));   // v = (1,0)
  CHECK(bfkit::component_select(F, 1) == anf("x2", 2));   // v = (0,1)
  CHECK(bfkit::component_select(F, 3) == anf("x1 + x2", 2));
  CHECK_THROWS_AS(bfkit::component_select(F, 4), std::invalid_argument);
}

TEST_CASE("canonicalize_image") {
  // constant map collapses to width 1, value 0
  const auto c = bfkit::canonicalize_image(VectorialMap::constant(2, 3, 6));
  CHECK(c.map.k() == 1);
  CHECK(c.map.value_table() == std::vector<std::uint32_t>(4, 0));
  CHECK(c.relabeling ==
        std::vector<std::pair<std::uint32_t, std::uint32_t>>{{6, 0}});

  // first-occurrence relabeling: values 2,5,2,7 -> 0,1,0,2 over width 2
  const auto r =
      bfkit::canonicalize_image(VectorialMap::from_words(1, 3, {2, 5}));
  CHECK(r.map.k() == 1);
  CHECK(r.map.value_table() == std::vector<std::uint32_t>{0, 1});

  const auto q =
      bfkit::canonicalize_image(VectorialMap::from_words(2, 3, {2, 5, 2, 7}));
  CHECK(q.map.k() == 2);
  CHECK(q.map.value_table() == std::vector<std::uint32_t>{0, 1, 0, 2});
  CHECK(q.relabeling ==
        std::vector<std::pair<std::uint32_t, std::uint32_t>>{
            {2, 0}, {5, 1}, {7, 2}});

  // fibers are preserved exactly
  bfkit::Rng rng(12);
  for (int rep = 0; rep < 10; ++rep) {
    const VectorialMap F = VectorialMap::random(4, 3, rng);
    const auto canon = bfkit::canonicalize_image(F);
    for (const auto& [old_u, new_u] : canon.relabeling)
      CHECK(bfkit::preimage_indicator(F, old_u) ==
            bfkit::preimage_indicator(canon.map, new_u));
  }
}

TEST_CASE("function family") {
  const FunctionFamily H(2, 2, {anf("x1", 2), anf("x2", 2)});
  CHECK(H.member_count() == 4);
  CHECK(H.member(0) == anf("x1", 2));
  CHECK(H.member(2).is_zero());  // zero-filled
  CHECK(H.member(3).is_zero());
  CHECK_THROWS_AS(H.member(4), std::invalid_argument);
  CHECK_THROWS_AS(FunctionFamily(2, 1, {TruthTable(2), TruthTable(2), TruthTable(2)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(FunctionFamily(2, 1, {TruthTable(3)}), std::invalid_argument);
}

TEST_CASE("concat_family") {
  // t=1, k=1, members (0, y1): table 0,0,0,1
  const FunctionFamily H(1, 1, {TruthTable(1), anf("x1", 1)});
  CHECK(bfkit::concat_family(H).bits() == std::vector<int>{0, 0, 0, 1});

  // identical members make the result independent of u
  const FunctionFamily S(2, 2,
                         {anf("x1*x2", 2), anf("x1*x2", 2), anf("x1*x2", 2),
                          anf("x1*x2", 2)});
  const TruthTable cat = bfkit::concat_family(S);
  for (std::uint64_t y = 0; y < 4; ++y)
    for (std::uint32_t u = 0; u < 4; ++u)
      CHECK(cat.get((y << 2) | u) == anf("x1*x2", 2).get(y));

  // slicing the concatenation recovers each member
  bfkit::Rng rng(13);
  const FunctionFamily R = FunctionFamily::random(3, 2, rng);
  const TruthTable catr = bfkit::concat_family(R);
  for (std::uint32_t u = 0; u < 4; ++u)
    for (std::uint64_t y = 0; y < 8; ++y)
      CHECK(catr.get((y << 2) | u) == R.member(u).get(y));
}

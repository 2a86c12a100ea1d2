#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "bfkit/truth_table.hpp"

namespace bfkit {

// Families materialize all 2^k member tables, so k is capped well below
// kMaxVars; the cap also keeps downstream spectrum accumulators inside int64.
inline constexpr int kMaxOutputBits = 16;

// F: F_2^s -> F_2^k given by k coordinate tables; coordinate 1 is the most
// significant bit of the output word.
class VectorialMap {
public:
  VectorialMap(int s, int k, std::vector<TruthTable> coords);
  static VectorialMap from_words(int s, int k,
                                 const std::vector<std::uint32_t>& words);
  static VectorialMap constant(int s, int k, std::uint32_t u);
  static VectorialMap random(int s, int k, Rng& rng);

  int s() const { return s_; }
  int k() const { return k_; }
  const TruthTable& coord(int i) const;  // 1-based
  const std::vector<TruthTable>& coords() const { return coords_; }

  std::uint32_t operator()(std::uint64_t x) const;
  std::vector<std::uint32_t> value_table() const;
  bool is_bijective() const;
  bool operator==(const VectorialMap&) const = default;

private:
  int s_;
  int k_;
  std::vector<TruthTable> coords_;
};

std::set<std::uint32_t> image_set(const VectorialMap& F);
// 0/1 table of {x : F(x) = u} on s variables
TruthTable preimage_indicator(const VectorialMap& F, std::uint32_t u);
// v.F = XOR of the coordinates selected by v (v = 0 gives the zero function)
TruthTable component_select(const VectorialMap& F, std::uint32_t v);

// Relabels the image words to 0,1,2,... in first-occurrence order (scanning x
// ascending) and shrinks the output width to l = max(1, ceil(log2 |Im(F)|)).
// Fibers are preserved exactly.
struct CanonicalizedMap {
  VectorialMap map;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> relabeling;  // (old, new)
};
CanonicalizedMap canonicalize_image(const VectorialMap& F);

// The 2^k member functions h_u on t variables, indexed by the k-bit word u.
// Constructing from fewer than 2^k tables zero-fills the rest.
class FunctionFamily {
public:
  FunctionFamily(int t, int k, std::vector<TruthTable> members);
  static FunctionFamily random(int t, int k, Rng& rng);

  int t() const { return t_; }
  int k() const { return k_; }
  std::uint32_t member_count() const { return std::uint32_t{1} << k_; }
  const TruthTable& member(std::uint32_t u) const;
  const std::vector<TruthTable>& members() const { return members_; }
  bool operator==(const FunctionFamily&) const = default;

private:
  int t_;
  int k_;
  std::vector<TruthTable> members_;
};

// Single table on t+k variables with idx(y, u) = idx(y) * 2^k + idx(u), i.e.
// point (y, u) evaluates h_u(y).
TruthTable concat_family(const FunctionFamily& H);

}  // namespace bfkit

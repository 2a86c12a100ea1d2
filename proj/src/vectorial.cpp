#include "bfkit/vectorial.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>

namespace bfkit {

namespace {

void check_dims(int s, int k) {
  if (s < 0 || s > kMaxVars)
    throw std::invalid_argument("input dimension out of range");
  if (k < 1 || k > kMaxOutputBits)
    throw std::invalid_argument("output dimension must be in [1, " +
                                std::to_string(kMaxOutputBits) + "]");
}

void check_output_word(std::uint32_t u, int k, const char* what) {
  if (k < 32 && (u >> k) != 0)
    throw std::invalid_argument(std::string(what) + " does not fit in " +
                                std::to_string(k) + " output bits");
}

}  // namespace

VectorialMap::VectorialMap(int s, int k, std::vector<TruthTable> coords)
    : s_(s), k_(k), coords_(std::move(coords)) {
  check_dims(s, k);
  if (coords_.size() != static_cast<std::size_t>(k))
    throw std::invalid_argument("expected " + std::to_string(k) +
                                " coordinate tables, got " +
                                std::to_string(coords_.size()));
  for (const auto& c : coords_)
    if (c.n_vars() != s)
      throw std::invalid_argument("coordinate table has wrong variable count");
}

VectorialMap VectorialMap::from_words(int s, int k,
                                      const std::vector<std::uint32_t>& words) {
  check_dims(s, k);
  if (words.size() != (std::uint64_t{1} << s))
    throw std::invalid_argument("value table needs 2^s entries");
  std::vector<TruthTable> coords(k, TruthTable(s));
  for (std::uint64_t x = 0; x < words.size(); ++x) {
    check_output_word(words[x], k, "value");
    for (int i = 1; i <= k; ++i)
      if ((words[x] >> (k - i)) & 1) coords[i - 1].set(x, 1);
  }
  return VectorialMap(s, k, std::move(coords));
}

VectorialMap VectorialMap::constant(int s, int k, std::uint32_t u) {
  check_dims(s, k);
  check_output_word(u, k, "value");
  std::vector<TruthTable> coords;
  coords.reserve(k);
  for (int i = 1; i <= k; ++i)
    coords.push_back(TruthTable::constant(s, (u >> (k - i)) & 1));
  return VectorialMap(s, k, std::move(coords));
}

VectorialMap VectorialMap::random(int s, int k, Rng& rng) {
  check_dims(s, k);
  std::vector<TruthTable> coords;
  coords.reserve(k);
  for (int i = 0; i < k; ++i) coords.push_back(TruthTable::random(s, rng));
  return VectorialMap(s, k, std::move(coords));
}

const TruthTable& VectorialMap::coord(int i) const {
  if (i < 1 || i > k_)
    throw std::invalid_argument("coordinate index out of range");
  return coords_[i - 1];
}

std::uint32_t VectorialMap::operator()(std::uint64_t x) const {
  std::uint32_t u = 0;
  for (int i = 0; i < k_; ++i) u = (u << 1) | coords_[i].get(x);
  return u;
}

std::vector<std::uint32_t> VectorialMap::value_table() const {
  std::vector<std::uint32_t> out(std::uint64_t{1} << s_);
  for (std::uint64_t x = 0; x < out.size(); ++x) out[x] = (*this)(x);
  return out;
}

bool VectorialMap::is_bijective() const {
  if (s_ != k_) return false;
  std::vector<char> seen(std::uint64_t{1} << k_, 0);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << s_); ++x) {
    const std::uint32_t u = (*this)(x);
    if (seen[u]) return false;
    seen[u] = 1;
  }
  return true;
}

std::set<std::uint32_t> image_set(const VectorialMap& F) {
  std::set<std::uint32_t> out;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << F.s()); ++x)
    out.insert(F(x));
  return out;
}

TruthTable preimage_indicator(const VectorialMap& F, std::uint32_t u) {
  check_output_word(u, F.k(), "target word");
  TruthTable t(F.s());
  for (std::uint64_t x = 0; x < t.size(); ++x)
    if (F(x) == u) t.set(x, 1);
  return t;
}

TruthTable component_select(const VectorialMap& F, std::uint32_t v) {
  check_output_word(v, F.k(), "selector");
  TruthTable t(F.s());
  for (int i = 1; i <= F.k(); ++i)
    if ((v >> (F.k() - i)) & 1) t ^= F.coord(i);
  return t;
}

CanonicalizedMap canonicalize_image(const VectorialMap& F) {
  std::unordered_map<std::uint32_t, std::uint32_t> label;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> relabeling;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << F.s()); ++x) {
    const std::uint32_t u = F(x);
    if (!label.count(u)) {
      const auto next = static_cast<std::uint32_t>(label.size());
      label.emplace(u, next);
      relabeling.emplace_back(u, next);
    }
  }
  int l = 1;
  while ((std::uint64_t{1} << l) < label.size()) ++l;
  std::vector<std::uint32_t> words(std::uint64_t{1} << F.s());
  for (std::uint64_t x = 0; x < words.size(); ++x) words[x] = label.at(F(x));
  return CanonicalizedMap{VectorialMap::from_words(F.s(), l, words),
                          std::move(relabeling)};
}

FunctionFamily::FunctionFamily(int t, int k, std::vector<TruthTable> members)
    : t_(t), k_(k), members_(std::move(members)) {
  if (t < 0 || t > kMaxVars)
    throw std::invalid_argument("member dimension out of range");
  if (k < 1 || k > kMaxOutputBits)
    throw std::invalid_argument("family index width must be in [1, " +
                                std::to_string(kMaxOutputBits) + "]");
  const std::size_t full = std::size_t{1} << k;
  if (members_.size() > full)
    throw std::invalid_argument("family takes at most 2^k members");
  for (const auto& m : members_)
    if (m.n_vars() != t)
      throw std::invalid_argument("family member has wrong variable count");
  members_.resize(full, TruthTable(t));  // unspecified members default to 0
}

FunctionFamily FunctionFamily::random(int t, int k, Rng& rng) {
  std::vector<TruthTable> members;
  members.reserve(std::size_t{1} << k);
  for (std::size_t u = 0; u < (std::size_t{1} << k); ++u)
    members.push_back(TruthTable::random(t, rng));
  return FunctionFamily(t, k, std::move(members));
}

const TruthTable& FunctionFamily::member(std::uint32_t u) const {
  if (u >= member_count())
    throw std::invalid_argument("member index out of range");
  return members_[u];
}

TruthTable concat_family(const FunctionFamily& H) {
  if (H.t() + H.k() > kMaxVars)
    throw std::invalid_argument("concatenated family exceeds the variable cap");
  TruthTable out(H.t() + H.k());
  for (std::uint64_t y = 0; y < (std::uint64_t{1} << H.t()); ++y)
    for (std::uint32_t u = 0; u < H.member_count(); ++u)
      if (H.member(u).get(y)) out.set((y << H.k()) | u, 1);
  return out;
}

}  // namespace bfkit

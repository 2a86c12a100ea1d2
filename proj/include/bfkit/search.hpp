#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bfkit/analysis.hpp"
#include "bfkit/constructions.hpp"
#include "bfkit/walsh_theory.hpp"

namespace bfkit {

struct Target {
  enum class Kind { Bent, Plateaued, Resilient };
  Kind kind = Kind::Bent;
  std::int64_t amplitude = 0;  // Plateaued
  int order = 0;               // Resilient

  // "bent" | "plateaued:<lambda>" | "resilient:<order>"
  static Target parse(std::string_view text);
  std::string to_string() const;
  bool satisfied_by(const WalshSpectrum& w) const;
};

// Where candidate blocks come from. List entries are resolved at config-parse
// time; the named generators materialize when the search starts; Random draws
// a fresh table per use and is only valid under the random policy.
struct PoolSpec {
  enum class Source { BentQuadratics, Affine, All, Random, List };
  Source source = Source::Random;
  std::string payload;  // file path, or comma-joined table literals

  static PoolSpec parse(std::string_view text);
};

std::vector<TruthTable> materialize(const PoolSpec& spec, int n_vars);

// Named generators, in their deterministic enumeration order.
std::vector<TruthTable> bent_quadratic_pool(int n_vars);  // n in {2, 4}
std::vector<TruthTable> affine_pool(int n_vars);          // n <= 12
std::vector<TruthTable> all_functions_pool(int n_vars);   // n <= 4

// Text config, one `key = value` per line, '#' comments. Keys: s, t, k,
// target, policy (random|exhaustive), seed, trials, g_pool, h_pool,
// max_image (0 = unconstrained cap on |Im(F)|).
struct SearchConfig {
  int s = 0;
  int t = 0;
  int k = 1;
  Target target;
  enum class Policy { Random, Exhaustive } policy = Policy::Random;
  std::uint64_t seed = 0;
  std::uint64_t trials = 1000;
  PoolSpec g_pool;
  PoolSpec h_pool;
  int max_image = 0;

  static SearchConfig parse(std::string_view text);
  static SearchConfig load(const std::string& path);
};

struct SearchHit {
  std::uint64_t trial = 0;
  int s = 0, t = 0, k = 0;
  std::string g_hex;
  std::vector<std::string> coord_hex;   // selector coordinates, f1 first
  std::vector<std::string> member_hex;  // all 2^k members in index order
  std::string function_hex;             // the constructed function
  PropertyReport report;
  std::string formula;  // provenance tag of the predictor that filtered it
};

std::string to_json_line(const SearchHit& hit);

// Exact predicted-spectrum filter; every candidate that passes it also passes
// the full FWHT verification (the search re-checks and would report the
// discrepancy as an internal inconsistency).
bool fast_filter(const GeneralInstance& inst, const Target& target);

// Deterministic for a fixed (config, seed) regardless of jobs; hits come back
// ordered by trial index.
std::vector<SearchHit> run_search(const SearchConfig& config, int jobs = 1);

}  // namespace bfkit

#include "bfkit/search.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "bfkit/anf_parser.hpp"

namespace bfkit {

Target Target::parse(std::string_view text) {
  Target t;
  if (text == "bent") {
    t.kind = Kind::Bent;
    return t;
  }
  const auto colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  if (colon == std::string_view::npos || colon + 1 == text.size())
    throw std::invalid_argument("target '" + std::string(text) +
                                "' is not bent | plateaued:<amp> | "
                                "resilient:<order>");
  const std::string arg(text.substr(colon + 1));
  try {
    if (head == "plateaued") {
      t.kind = Kind::Plateaued;
      t.amplitude = std::stoll(arg);
      if (t.amplitude <= 0) throw std::invalid_argument("");
      return t;
    }
    if (head == "resilient") {
      t.kind = Kind::Resilient;
      t.order = std::stoi(arg);
      if (t.order < 0) throw std::invalid_argument("");
      return t;
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("bad target parameter '" + arg + "'");
  }
  throw std::invalid_argument("unknown target kind '" + std::string(head) + "'");
}

std::string Target::to_string() const {
  switch (kind) {
    case Kind::Bent: return "bent";
    case Kind::Plateaued: return "plateaued:" + std::to_string(amplitude);
    case Kind::Resilient: return "resilient:" + std::to_string(order);
  }
  return "?";
}

bool Target::satisfied_by(const WalshSpectrum& w) const {
  switch (kind) {
    case Kind::Bent: return is_bent(w);
    case Kind::Plateaued: return plateaued_amplitude(w) == amplitude;
    case Kind::Resilient: return resiliency_order(w) >= order;
  }
  return false;
}

PoolSpec PoolSpec::parse(std::string_view text) {
  PoolSpec p;
  if (text == "bent_quadratics") {
    p.source = Source::BentQuadratics;
  } else if (text == "affine") {
    p.source = Source::Affine;
  } else if (text == "all") {
    p.source = Source::All;
  } else if (text == "random") {
    p.source = Source::Random;
  } else if (text.substr(0, 5) == "file:" || text.substr(0, 4) == "hex:") {
    p.source = Source::List;
    p.payload = std::string(text);
  } else {
    throw std::invalid_argument("unknown pool '" + std::string(text) + "'");
  }
  return p;
}

namespace {

TruthTable linear_table(int n, std::uint64_t mask, int c) {
  TruthTable t(n);
  for (std::uint64_t x = 0; x < t.size(); ++x)
    if ((std::popcount(mask & x) & 1) ^ c) t.set(x, 1);
  return t;
}

}  // namespace

std::vector<TruthTable> bent_quadratic_pool(int n_vars) {
  if (n_vars != 2 && n_vars != 4)
    throw std::invalid_argument(
        "the quadratic bent pool is enumerated for n in {2, 4}");
  std::vector<std::uint32_t> quad_masks;
  for (std::uint32_t m = 0; m < (1u << n_vars); ++m)
    if (std::popcount(m) == 2) quad_masks.push_back(m);
  std::vector<TruthTable> out;
  for (std::uint64_t q = 0; q < (std::uint64_t{1} << quad_masks.size()); ++q) {
    std::vector<std::uint32_t> monomials;
    for (std::size_t i = 0; i < quad_masks.size(); ++i)
      if ((q >> i) & 1) monomials.push_back(quad_masks[i]);
    const TruthTable base = Anf(n_vars, std::move(monomials)).to_table();
    if (!is_bent(base)) continue;
    // affine offsets keep |W| pointwise up to permutation, hence bentness
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n_vars); ++b)
      for (int c = 0; c < 2; ++c) out.push_back(base ^ linear_table(n_vars, b, c));
  }
  return out;
}

std::vector<TruthTable> affine_pool(int n_vars) {
  if (n_vars < 1 || n_vars > 12)
    throw std::invalid_argument("the affine pool is enumerated for n <= 12");
  std::vector<TruthTable> out;
  out.reserve(std::size_t{1} << (n_vars + 1));
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n_vars); ++b)
    for (int c = 0; c < 2; ++c) out.push_back(linear_table(n_vars, b, c));
  return out;
}

std::vector<TruthTable> all_functions_pool(int n_vars) {
  if (n_vars < 0 || n_vars > 4)
    throw std::invalid_argument("the exhaustive pool is enumerated for n <= 4");
  const std::uint64_t bits = std::uint64_t{1} << n_vars;
  std::vector<TruthTable> out;
  out.reserve(std::uint64_t{1} << bits);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << bits); ++v) {
    TruthTable t(n_vars);
    for (std::uint64_t i = 0; i < bits; ++i)
      if ((v >> i) & 1) t.set(i, 1);
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<TruthTable> materialize(const PoolSpec& spec, int n_vars) {
  switch (spec.source) {
    case PoolSpec::Source::BentQuadratics: return bent_quadratic_pool(n_vars);
    case PoolSpec::Source::Affine: return affine_pool(n_vars);
    case PoolSpec::Source::All: return all_functions_pool(n_vars);
    case PoolSpec::Source::Random: return {};
    case PoolSpec::Source::List: break;
  }
  std::vector<TruthTable> out;
  if (spec.payload.substr(0, 5) == "file:") {
    const std::string path = spec.payload.substr(5);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open pool file " + path);
    std::string line;
    while (std::getline(in, line)) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      const auto last = line.find_last_not_of(" \t\r");
      out.push_back(table_from_string(line.substr(first, last - first + 1), n_vars));
    }
  } else {  // hex:a,b,c
    std::stringstream ss(spec.payload.substr(4));
    std::string token;
    while (std::getline(ss, token, ','))
      if (!token.empty()) out.push_back(table_from_string(token, n_vars));
  }
  return out;
}

SearchConfig SearchConfig::parse(std::string_view text) {
  SearchConfig cfg;
  std::set<std::string> seen;
  std::stringstream ss{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(ss, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": expected key = value");
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      if (a == std::string::npos) return std::string();
      const auto b = s.find_last_not_of(" \t\r");
      return s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": empty key or value");
    if (!seen.insert(key).second)
      throw std::invalid_argument("config key '" + key + "' given twice");
    try {
      if (key == "s")
        cfg.s = std::stoi(value);
      else if (key == "t")
        cfg.t = std::stoi(value);
      else if (key == "k")
        cfg.k = std::stoi(value);
      else if (key == "target")
        cfg.target = Target::parse(value);
      else if (key == "policy") {
        if (value == "random")
          cfg.policy = Policy::Random;
        else if (value == "exhaustive")
          cfg.policy = Policy::Exhaustive;
        else
          throw std::invalid_argument("policy must be random or exhaustive");
      } else if (key == "seed")
        cfg.seed = std::stoull(value);
      else if (key == "trials")
        cfg.trials = std::stoull(value);
      else if (key == "g_pool")
        cfg.g_pool = PoolSpec::parse(value);
      else if (key == "h_pool")
        cfg.h_pool = PoolSpec::parse(value);
      else if (key == "max_image")
        cfg.max_image = std::stoi(value);
      else
        throw std::invalid_argument("unknown config key '" + key + "'");
    } catch (const std::exception& e) {
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": " + e.what());
    }
  }
  for (const char* required : {"s", "t", "k", "target", "g_pool", "h_pool"})
    if (!seen.count(required))
      throw std::invalid_argument(std::string("config is missing '") +
                                  required + "'");
  if (cfg.s < 1 || cfg.t < 1 || cfg.s + cfg.t > 24)
    throw std::invalid_argument("need s >= 1, t >= 1 and s + t <= 24");
  if (cfg.k < 1 || cfg.k > 8)
    throw std::invalid_argument("need k in [1, 8]");
  if (cfg.max_image < 0 || (std::uint64_t)cfg.max_image > (std::uint64_t{1} << cfg.k))
    throw std::invalid_argument("max_image must be in [0, 2^k]");
  return cfg;
}

SearchConfig SearchConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string to_json_line(const SearchHit& hit) {
  nlohmann::ordered_json j;
  j["trial"] = hit.trial;
  j["n"] = hit.s + hit.t;
  j["s"] = hit.s;
  j["t"] = hit.t;
  j["k"] = hit.k;
  j["g"] = hit.g_hex;
  j["coords"] = hit.coord_hex;
  j["members"] = hit.member_hex;
  j["function"] = hit.function_hex;
  j["formula"] = hit.formula;
  nlohmann::ordered_json r;
  r["nonlinearity"] = hit.report.nonlinearity;
  r["bent"] = hit.report.is_bent;
  if (hit.report.plateaued_amplitude)
    r["plateaued_amplitude"] = *hit.report.plateaued_amplitude;
  else
    r["plateaued_amplitude"] = nullptr;
  r["resiliency"] = hit.report.resiliency_order;
  r["balanced"] = hit.report.is_balanced;
  r["degree"] = hit.report.degree;
  j["report"] = std::move(r);
  return j.dump();
}

bool fast_filter(const GeneralInstance& inst, const Target& target) {
  std::vector<WalshSpectrum> wh;
  wh.reserve(inst.H().member_count());
  for (std::uint32_t u = 0; u < inst.H().member_count(); ++u)
    wh.push_back(fwht(inst.H().member(u)));
  std::vector<const WalshSpectrum*> refs;
  refs.reserve(wh.size());
  for (const auto& w : wh) refs.push_back(&w);
  return target.satisfied_by(
      charsum_spectrum_from_parts(inst.g(), inst.F(), refs));
}

namespace {

struct PreparedPool {
  std::vector<TruthTable> entries;
  std::vector<WalshSpectrum> spectra;  // only filled for the member pool
  bool random_source = false;
};

struct SearchContext {
  const SearchConfig& cfg;
  PreparedPool g_pool;
  PreparedPool h_pool;
  std::uint64_t f_count = 0;      // exhaustive: number of selector tables
  std::uint64_t h_assign = 0;     // exhaustive: member assignments per instance
  std::uint64_t total_trials = 0;
};

// one candidate per trial; nullopt when the trial yields no admissible
// instance (exhaustive enumeration skipping an over-wide selector image)
std::optional<SearchHit> run_trial(const SearchContext& ctx, std::uint64_t trial) {
  const SearchConfig& cfg = ctx.cfg;
  const std::uint32_t words = std::uint32_t{1} << cfg.k;
  const std::uint64_t points = std::uint64_t{1} << cfg.s;

  TruthTable g(cfg.s);
  std::vector<std::uint32_t> f_words(points);
  std::vector<TruthTable> members;
  std::vector<WalshSpectrum> owned_spectra;  // for random-source members
  std::vector<const WalshSpectrum*> member_spectra(words);
  members.reserve(words);

  if (cfg.policy == SearchConfig::Policy::Random) {
    Rng rng(derive_seed(cfg.seed, trial));
    g = ctx.g_pool.random_source
            ? TruthTable::random(cfg.s, rng)
            : ctx.g_pool.entries[rng.below(ctx.g_pool.entries.size())];
    if (cfg.max_image == 0) {
      for (auto& w : f_words) w = static_cast<std::uint32_t>(rng.below(words));
    } else {
      std::vector<std::uint32_t> chosen;
      while (chosen.size() < static_cast<std::size_t>(cfg.max_image)) {
        const auto w = static_cast<std::uint32_t>(rng.below(words));
        if (std::find(chosen.begin(), chosen.end(), w) == chosen.end())
          chosen.push_back(w);
      }
      for (auto& w : f_words) w = chosen[rng.below(chosen.size())];
    }
    for (std::uint32_t u = 0; u < words; ++u) {
      if (ctx.h_pool.random_source) {
        members.push_back(TruthTable::random(cfg.t, rng));
        owned_spectra.push_back(fwht(members.back()));
        member_spectra[u] = &owned_spectra.back();
      } else {
        const auto idx = rng.below(ctx.h_pool.entries.size());
        members.push_back(ctx.h_pool.entries[idx]);
        member_spectra[u] = &ctx.h_pool.spectra[idx];
      }
    }
  } else {
    // mixed-radix decode: members innermost, then the selector, then g
    std::uint64_t rest = trial;
    std::uint64_t h_digits = rest % ctx.h_assign;
    rest /= ctx.h_assign;
    std::uint64_t f_digits = rest % ctx.f_count;
    const std::uint64_t g_index = rest / ctx.f_count;
    g = ctx.g_pool.entries[g_index];
    std::set<std::uint32_t> image;
    for (std::uint64_t x = 0; x < points; ++x) {
      f_words[x] = static_cast<std::uint32_t>(f_digits % words);
      f_digits /= words;
      image.insert(f_words[x]);
    }
    if (cfg.max_image > 0 &&
        image.size() > static_cast<std::size_t>(cfg.max_image))
      return std::nullopt;
    for (std::uint32_t u = 0; u < words; ++u) {
      const std::uint64_t idx = h_digits % ctx.h_pool.entries.size();
      h_digits /= ctx.h_pool.entries.size();
      members.push_back(ctx.h_pool.entries[idx]);
      member_spectra[u] = &ctx.h_pool.spectra[idx];
    }
  }

  // owned_spectra growth may have reallocated; refresh the pointers
  if (!owned_spectra.empty())
    for (std::uint32_t u = 0; u < words; ++u)
      member_spectra[u] = &owned_spectra[u];

  GeneralInstance inst(std::move(g), VectorialMap::from_words(cfg.s, cfg.k, f_words),
                       FunctionFamily(cfg.t, cfg.k, std::move(members)));
  const WalshSpectrum predicted =
      charsum_spectrum_from_parts(inst.g(), inst.F(), member_spectra);
  if (!cfg.target.satisfied_by(predicted)) return std::nullopt;

  // full verification from the constructed table
  const TruthTable f = general_construct(inst);
  const WalshSpectrum actual = fwht(f);
  if (actual != predicted)
    throw internal_inconsistency("filter spectrum disagrees with FWHT at trial " +
                                 std::to_string(trial));
  if (!cfg.target.satisfied_by(actual)) return std::nullopt;  // unreachable

  SearchHit hit;
  hit.trial = trial;
  hit.s = cfg.s;
  hit.t = cfg.t;
  hit.k = cfg.k;
  hit.g_hex = inst.g().to_hex();
  for (int i = 1; i <= cfg.k; ++i)
    hit.coord_hex.push_back(inst.F().coord(i).to_hex());
  for (std::uint32_t u = 0; u < words; ++u)
    hit.member_hex.push_back(inst.H().member(u).to_hex());
  hit.function_hex = f.to_hex();
  hit.report = analyze(f, actual);
  hit.formula = std::string(formula_name(WalshFormula::CharSum));
  return hit;
}

}  // namespace

std::vector<SearchHit> run_search(const SearchConfig& cfg, int jobs) {
  if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");

  SearchContext ctx{cfg, {}, {}, 0, 0, 0};
  ctx.g_pool.random_source = cfg.g_pool.source == PoolSpec::Source::Random;
  ctx.h_pool.random_source = cfg.h_pool.source == PoolSpec::Source::Random;
  ctx.g_pool.entries = materialize(cfg.g_pool, cfg.s);
  ctx.h_pool.entries = materialize(cfg.h_pool, cfg.t);
  if (!ctx.g_pool.random_source && ctx.g_pool.entries.empty())
    throw std::invalid_argument("outer pool is empty");
  if (!ctx.h_pool.random_source && ctx.h_pool.entries.empty())
    throw std::invalid_argument("member pool is empty");
  ctx.h_pool.spectra.reserve(ctx.h_pool.entries.size());
  for (const auto& e : ctx.h_pool.entries) ctx.h_pool.spectra.push_back(fwht(e));

  if (cfg.policy == SearchConfig::Policy::Random) {
    ctx.total_trials = cfg.trials;
  } else {
    if (ctx.g_pool.random_source || ctx.h_pool.random_source)
      throw std::invalid_argument("exhaustive policy needs materialized pools");
    // total = |g_pool| * (2^k)^(2^s) * |h_pool|^(2^k), guarded against blowup
    constexpr std::uint64_t kLimit = std::uint64_t{1} << 22;
    auto mul_guarded = [&](std::uint64_t a, std::uint64_t b) {
      if (b != 0 && a > kLimit / b + 1) return kLimit + 1;
      const std::uint64_t p = a * b;
      return p > kLimit ? kLimit + 1 : p;
    };
    std::uint64_t f_count = 1;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << cfg.s); ++x)
      f_count = mul_guarded(f_count, std::uint64_t{1} << cfg.k);
    std::uint64_t h_assign = 1;
    for (std::uint32_t u = 0; u < (std::uint32_t{1} << cfg.k); ++u)
      h_assign = mul_guarded(h_assign, ctx.h_pool.entries.size());
    const std::uint64_t total =
        mul_guarded(mul_guarded(ctx.g_pool.entries.size(), f_count), h_assign);
    if (total > kLimit)
      throw std::invalid_argument(
          "exhaustive search space exceeds 2^22 instances (dimension overflow)");
    ctx.f_count = f_count;
    ctx.h_assign = h_assign;
    ctx.total_trials = total;
  }

  std::vector<SearchHit> hits;
  if (ctx.total_trials == 0) return hits;

  const int workers =
      static_cast<int>(std::min<std::uint64_t>(jobs, ctx.total_trials));
  if (workers <= 1) {
    for (std::uint64_t trial = 0; trial < ctx.total_trials; ++trial)
      if (auto hit = run_trial(ctx, trial)) hits.push_back(std::move(*hit));
    return hits;
  }

  std::vector<std::vector<SearchHit>> partial(workers);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  const std::uint64_t chunk = (ctx.total_trials + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        const std::uint64_t begin = w * chunk;
        const std::uint64_t end = std::min(ctx.total_trials, begin + chunk);
        for (std::uint64_t trial = begin; trial < end; ++trial)
          if (auto hit = run_trial(ctx, trial))
            partial[w].push_back(std::move(*hit));
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : threads) th.join();
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);
  for (auto& part : partial)
    for (auto& hit : part) hits.push_back(std::move(hit));
  return hits;
}

}  // namespace bfkit

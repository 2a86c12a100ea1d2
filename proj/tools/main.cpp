#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bfkit/analysis.hpp"
#include "bfkit/anf_parser.hpp"
#include "bfkit/constructions.hpp"
#include "bfkit/search.hpp"
#include "bfkit/walsh_theory.hpp"

namespace {

using bfkit::FunctionFamily;
using bfkit::GeneralInstance;
using bfkit::PropertyReport;
using bfkit::TruthTable;
using bfkit::VectorialMap;
using bfkit::WalshSpectrum;
using json = nlohmann::ordered_json;

const char* bool_str(bool b) { return b ? "true" : "false"; }

std::string report_text(const PropertyReport& r) {
  std::string s = "nonlinearity=" + std::to_string(r.nonlinearity);
  s += " bent=";
  s += bool_str(r.is_bent);
  s += " plateaued_amplitude=";
  s += r.plateaued_amplitude ? std::to_string(*r.plateaued_amplitude) : "none";
  s += " resiliency=" + std::to_string(r.resiliency_order);
  s += " balanced=";
  s += bool_str(r.is_balanced);
  s += " degree=" + std::to_string(r.degree);
  return s;
}

void fill_report(json& j, const PropertyReport& r) {
  j["nonlinearity"] = r.nonlinearity;
  j["bent"] = r.is_bent;
  if (r.plateaued_amplitude)
    j["plateaued_amplitude"] = *r.plateaued_amplitude;
  else
    j["plateaued_amplitude"] = nullptr;
  j["resiliency"] = r.resiliency_order;
  j["balanced"] = r.is_balanced;
  j["degree"] = r.degree;
}

// single-table commands take one positional literal or --anf, never both
TruthTable single_input(int n, const std::string& positional,
                        const std::string& anf_expr) {
  if (!positional.empty() && !anf_expr.empty())
    throw std::invalid_argument("give either a table literal or --anf, not both");
  if (positional.empty() && anf_expr.empty())
    throw std::invalid_argument("need a table literal argument or --anf EXPR");
  return positional.empty() ? bfkit::table_from_string("anf:" + anf_expr, n)
                            : bfkit::table_from_string(positional, n);
}

std::vector<std::int64_t> parse_spectrum_values(const std::string& text) {
  std::string s = text;
  for (char& c : s)
    if (c == ',') c = ' ';
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (ss >> tok) {
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      pos = std::string::npos;
    }
    if (pos != tok.size())
      throw std::invalid_argument("bad spectrum value '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(tok);
  return out;
}

int default_jobs() {
  if (const char* env = std::getenv("BFKIT_JOBS")) {
    try {
      const int j = std::stoi(env);
      if (j >= 1) return j;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("BFKIT_JOBS must be a positive integer");
  }
  return 1;
}

int run_analyze(int n, const std::string& table, const std::string& anf_expr,
                bool as_json) {
  const TruthTable f = single_input(n, table, anf_expr);
  const PropertyReport r = bfkit::analyze(f);
  if (as_json) {
    json j;
    j["n"] = n;
    j["hex"] = f.to_hex();
    fill_report(j, r);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "n=" << n << " " << report_text(r) << "\n";
  }
  return 0;
}

int run_fwht(int n, const std::string& table, const std::string& anf_expr,
             bool inverse, const std::string& spectrum_text, bool as_json) {
  if (inverse) {
    if (spectrum_text.empty())
      throw std::invalid_argument("--inverse needs --spectrum VALUES");
    if (!table.empty() || !anf_expr.empty())
      throw std::invalid_argument("--inverse takes a spectrum, not a table");
    const WalshSpectrum w(n, parse_spectrum_values(spectrum_text));
    const TruthTable f = bfkit::fwht_inverse(w);
    if (as_json) {
      json j;
      j["n"] = n;
      j["hex"] = f.to_hex();
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "n=" << n << " hex=" << f.to_hex() << "\n";
    }
    return 0;
  }
  if (!spectrum_text.empty())
    throw std::invalid_argument("--spectrum is only meaningful with --inverse");
  const TruthTable f = single_input(n, table, anf_expr);
  const WalshSpectrum w = bfkit::fwht(f);
  if (as_json) {
    json j;
    j["n"] = n;
    j["spectrum"] = w.values();
    std::cout << j.dump() << "\n";
  } else {
    for (std::uint64_t a = 0; a < w.size(); ++a)
      std::cout << (a ? " " : "") << w[a];
    std::cout << "\n";
  }
  return 0;
}

int run_anf(int n, const std::string& table, const std::string& anf_expr,
            bool as_json) {
  const TruthTable f = single_input(n, table, anf_expr);
  const bfkit::Anf a = bfkit::mobius(f);
  if (as_json) {
    json j;
    j["n"] = n;
    j["anf"] = bfkit::to_string(a);
    j["degree"] = a.degree();
    j["monomials"] = a.monomials().size();
    std::cout << j.dump() << "\n";
  } else {
    std::cout << bfkit::to_string(a) << "\n";
  }
  return 0;
}

int emit_function(const TruthTable& f, bool with_report, bool as_json) {
  if (as_json) {
    json j;
    j["n"] = f.n_vars();
    j["hex"] = f.to_hex();
    if (with_report) {
      json r;
      fill_report(r, bfkit::analyze(f));
      j["report"] = std::move(r);
    }
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "n=" << f.n_vars() << " hex=" << f.to_hex();
    if (with_report) std::cout << " " << report_text(bfkit::analyze(f));
    std::cout << "\n";
  }
  return 0;
}

std::vector<TruthTable> family_from_file(const std::string& path, int t) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open family file " + path);
  std::vector<TruthTable> members;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    members.push_back(
        bfkit::table_from_string(line.substr(first, last - first + 1), t));
  }
  return members;
}

struct VerifyOutcome {
  bool failed = false;
  std::uint64_t trial = 0;
  std::uint64_t a = 0;
  std::int64_t expected = 0;
  std::int64_t got = 0;
};

int run_verify_theorem(int s, int t, int k, std::uint64_t trials,
                       std::uint64_t seed, bool inject_fault, bool as_json) {
  const std::array<bfkit::WalshFormula, 3> formulas = {
      bfkit::WalshFormula::Preimage, bfkit::WalshFormula::CharSum,
      bfkit::WalshFormula::Concat};
  std::array<VerifyOutcome, 3> outcome{};

  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    bfkit::Rng rng(bfkit::derive_seed(seed, trial));
    const GeneralInstance inst(TruthTable::random(s, rng),
                               VectorialMap::random(s, k, rng),
                               FunctionFamily::random(t, k, rng));
    const WalshSpectrum actual = bfkit::fwht(bfkit::general_construct(inst));
    bool all_failed = true;
    for (std::size_t i = 0; i < formulas.size(); ++i) {
      if (outcome[i].failed) continue;
      std::vector<std::int64_t> predicted =
          bfkit::predict_spectrum(inst, formulas[i]).spectrum.values();
      if (inject_fault && trial == 0) predicted[0] += 2;
      for (std::uint64_t a = 0; a < actual.size(); ++a) {
        if (predicted[a] == actual[a]) continue;
        outcome[i] = {true, trial, a, actual[a], predicted[a]};
        break;
      }
      if (!outcome[i].failed) all_failed = false;
    }
    if (all_failed) break;
  }

  bool any_failed = false;
  json results = json::array();
  for (std::size_t i = 0; i < formulas.size(); ++i) {
    const auto name = bfkit::formula_name(formulas[i]);
    const VerifyOutcome& o = outcome[i];
    any_failed = any_failed || o.failed;
    if (as_json) {
      json r;
      r["formula"] = std::string(name);
      r["pass"] = !o.failed;
      if (o.failed) {
        r["trial"] = o.trial;
        r["a"] = o.a;
        r["expected"] = o.expected;
        r["got"] = o.got;
      }
      results.push_back(std::move(r));
    } else if (o.failed) {
      std::cout << name << " FAIL (trial=" << o.trial << ", a=" << o.a
                << ", expected=" << o.expected << ", got=" << o.got << ")\n";
    } else {
      std::cout << name << " PASS (s=" << s << ", t=" << t << ", k=" << k
                << ", trials=" << trials << ")\n";
    }
  }
  if (as_json) {
    json j;
    j["s"] = s;
    j["t"] = t;
    j["k"] = k;
    j["trials"] = trials;
    j["seed"] = seed;
    j["results"] = std::move(results);
    j["pass"] = !any_failed;
    std::cout << j.dump() << "\n";
  }
  return any_failed ? 1 : 0;
}

int run_verify_lemma(int n, std::uint64_t trials, std::uint64_t seed,
                     bool as_json) {
  if (trials == 0)
    std::cerr << "warning: trials=0 exercises nothing; the pass is vacuous\n";
  VerifyOutcome pointwise{}, spectral{};
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    bfkit::Rng rng(bfkit::derive_seed(seed, trial));
    // split triple: gp = g ^ f, gpp = g ^ h with disjoint supports f, h
    TruthTable f(n), h(n);
    for (std::uint64_t x = 0; x < f.size(); ++x) {
      switch (rng.below(3)) {
        case 1: f.set(x, 1); break;
        case 2: h.set(x, 1); break;
        default: break;
      }
    }
    const TruthTable g = TruthTable::random(n, rng);
    if (!pointwise.failed &&
        !bfkit::annihilator_identity_pointwise(g, g ^ f, g ^ h))
      pointwise = {true, trial, 0, 0, 0};
    if (!spectral.failed && !bfkit::annihilator_identity_spectral(g, g ^ f, g ^ h))
      spectral = {true, trial, 0, 0, 0};
    if (pointwise.failed && spectral.failed) break;
  }

  const char* suffix = trials == 0 ? ", vacuous" : "";
  const std::array<std::pair<const char*, const VerifyOutcome*>, 2> rows = {
      std::make_pair("pointwise", &pointwise), std::make_pair("spectral", &spectral)};
  bool any_failed = false;
  json results = json::array();
  for (const auto& [name, o] : rows) {
    any_failed = any_failed || o->failed;
    if (as_json) {
      json r;
      r["identity"] = name;
      r["pass"] = !o->failed;
      if (o->failed) r["trial"] = o->trial;
      results.push_back(std::move(r));
    } else if (o->failed) {
      std::cout << name << " FAIL (trial=" << o->trial << ")\n";
    } else {
      std::cout << name << " PASS (n=" << n << ", trials=" << trials << suffix
                << ")\n";
    }
  }
  if (as_json) {
    json j;
    j["n"] = n;
    j["trials"] = trials;
    j["seed"] = seed;
    j["results"] = std::move(results);
    j["pass"] = !any_failed;
    std::cout << j.dump() << "\n";
  }
  return any_failed ? 1 : 0;
}

std::uint64_t planned_trials(const bfkit::SearchConfig& cfg) {
  if (cfg.policy == bfkit::SearchConfig::Policy::Random) return cfg.trials;
  // the run already succeeded, so the exhaustive grid fits the guard
  const std::uint64_t g_count = bfkit::materialize(cfg.g_pool, cfg.s).size();
  const std::uint64_t h_count = bfkit::materialize(cfg.h_pool, cfg.t).size();
  std::uint64_t total = g_count;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << cfg.s); ++x)
    total *= std::uint64_t{1} << cfg.k;
  for (std::uint32_t u = 0; u < (std::uint32_t{1} << cfg.k); ++u)
    total *= h_count;
  return total;
}

int run_search_cmd(const std::string& config_path, bool has_seed_override,
                   std::uint64_t seed_override, int jobs,
                   const std::string& out_path, bool allow_empty) {
  bfkit::SearchConfig cfg = bfkit::SearchConfig::load(config_path);
  if (has_seed_override) cfg.seed = seed_override;
  const auto hits = bfkit::run_search(cfg, jobs);

  if (out_path.empty()) {
    for (const auto& hit : hits) std::cout << bfkit::to_json_line(hit) << "\n";
  } else {
    std::ofstream out(out_path, std::ios::app);
    if (!out) throw std::invalid_argument("cannot open output file " + out_path);
    for (const auto& hit : hits) out << bfkit::to_json_line(hit) << "\n";
  }
  std::cerr << "trials=" << planned_trials(cfg) << " hits=" << hits.size()
            << "\n";
  return (hits.empty() && !allow_empty) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact construction, spectral analysis and search for Boolean functions"};
  // long-only help: the short -h would collide with the --h block option
  app.set_help_flag("--help", "print this help message and exit");
  app.require_subcommand(1);
  app.fallthrough(true);

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "structured"}));
  int g_jobs = 0;
  app.add_option("--jobs", g_jobs, "worker threads (default $BFKIT_JOBS or 1)")
      ->check(CLI::Range(1, 256));

  // ---- analyze ----
  auto* analyze = app.add_subcommand("analyze", "report spectral properties of one function");
  int an_n = 0;
  std::string an_table, an_anf;
  analyze->add_option("--n", an_n, "variable count")->required()->check(CLI::Range(0, 30));
  analyze->add_option("table", an_table, "truth table (hex, or anf:EXPR)");
  analyze->add_option("--anf", an_anf, "algebraic normal form expression");

  // ---- fwht ----
  auto* fwht_cmd = app.add_subcommand("fwht", "Walsh spectrum of a function, or its inverse");
  int fw_n = 0;
  std::string fw_table, fw_anf, fw_spectrum;
  bool fw_inverse = false;
  fwht_cmd->add_option("--n", fw_n, "variable count")->required()->check(CLI::Range(0, 30));
  fwht_cmd->add_option("table", fw_table, "truth table (hex, or anf:EXPR)");
  fwht_cmd->add_option("--anf", fw_anf, "algebraic normal form expression");
  fwht_cmd->add_flag("--inverse", fw_inverse, "reconstruct the table from a spectrum");
  fwht_cmd->add_option("--spectrum", fw_spectrum, "2^n signed values, comma or space separated");

  // ---- anf ----
  auto* anf_cmd = app.add_subcommand("anf", "canonical algebraic normal form of a function");
  int af_n = 0;
  std::string af_table, af_anf;
  anf_cmd->add_option("--n", af_n, "variable count")->required()->check(CLI::Range(0, 30));
  anf_cmd->add_option("table", af_table, "truth table (hex, or anf:EXPR)");
  anf_cmd->add_option("--anf", af_anf, "algebraic normal form expression");

  // ---- construct ----
  auto* construct = app.add_subcommand("construct", "compose functions from building blocks");
  construct->require_subcommand(1);
  construct->fallthrough(true);
  int c_s = 0, c_t = 0, c_k = 0;
  bool c_report = false;
  construct->add_option("--s", c_s, "x-side variable count")->required()->check(CLI::Range(1, 29));
  construct->add_option("--t", c_t, "y-side variable count")->required()->check(CLI::Range(1, 29));
  construct->add_flag("--report", c_report, "append the property report");
  std::string c_g, c_gp, c_gpp, c_gppp, c_h, c_hp, c_hpp, c_hppp;
  std::string c_h0, c_h1, c_h2, c_coords, c_members, c_family;

  auto* direct = construct->add_subcommand("direct", "g(x) ^ h(y)");
  direct->add_option("--g", c_g)->required();
  direct->add_option("--h", c_h)->required();

  auto* indirect = construct->add_subcommand("indirect", "two-fiber composition");
  indirect->add_option("--g", c_g)->required();
  indirect->add_option("--gp", c_gp)->required();
  indirect->add_option("--h", c_h)->required();
  indirect->add_option("--hp", c_hp)->required();

  auto* gen1 = construct->add_subcommand("gen1", "one correction term past the two-fiber form");
  gen1->add_option("--g", c_g)->required();
  gen1->add_option("--gp", c_gp)->required();
  gen1->add_option("--gpp", c_gpp)->required();
  gen1->add_option("--h", c_h)->required();
  gen1->add_option("--hp", c_hp)->required();
  gen1->add_option("--hpp", c_hpp)->required();

  auto* gen2 = construct->add_subcommand("gen2", "two correction terms past the two-fiber form");
  gen2->add_option("--g", c_g)->required();
  gen2->add_option("--gp", c_gp)->required();
  gen2->add_option("--gpp", c_gpp)->required();
  gen2->add_option("--gppp", c_gppp)->required();
  gen2->add_option("--h", c_h)->required();
  gen2->add_option("--hp", c_hp)->required();
  gen2->add_option("--hpp", c_hpp)->required();
  gen2->add_option("--hppp", c_hppp)->required();

  auto* size3 = construct->add_subcommand("size3", "three-fiber composition");
  size3->add_option("--g", c_g)->required();
  size3->add_option("--gp", c_gp)->required();
  size3->add_option("--gpp", c_gpp)->required();
  size3->add_option("--h0", c_h0)->required();
  size3->add_option("--h1", c_h1)->required();
  size3->add_option("--h2", c_h2)->required();

  auto* general = construct->add_subcommand("general", "selector-driven member composition");
  general->add_option("--k", c_k, "selector output bits")->required()->check(CLI::Range(1, 16));
  general->add_option("--g", c_g)->required();
  general->add_option("--coords", c_coords, "k selector coordinate tables, comma separated")->required();
  general->add_option("--members", c_members, "member tables in index order, comma separated");
  general->add_option("--family", c_family, "file with one member table per line");

  // ---- verify-theorem ----
  auto* verify_theorem = app.add_subcommand(
      "verify-theorem", "check every spectrum predictor against the transform");
  int vt_s = 0, vt_t = 0, vt_k = 0;
  std::uint64_t vt_trials = 100, vt_seed = 1;
  bool vt_inject = false;
  verify_theorem->add_option("--s", vt_s)->required()->check(CLI::Range(1, 12));
  verify_theorem->add_option("--t", vt_t)->required()->check(CLI::Range(1, 12));
  verify_theorem->add_option("--k", vt_k)->required()->check(CLI::Range(1, 8));
  verify_theorem->add_option("--trials", vt_trials);
  verify_theorem->add_option("--seed", vt_seed);
  verify_theorem->add_flag("--inject-fault", vt_inject)->group("");

  // ---- verify-lemma ----
  auto* verify_lemma = app.add_subcommand(
      "verify-lemma", "check the alternating identity on random annihilator splits");
  int vl_n = 0;
  std::uint64_t vl_trials = 1000, vl_seed = 1;
  verify_lemma->add_option("--n", vl_n)->required()->check(CLI::Range(1, 16));
  verify_lemma->add_option("--trials", vl_trials);
  verify_lemma->add_option("--seed", vl_seed);

  // ---- search ----
  auto* search = app.add_subcommand("search", "seeded search over building-block pools");
  std::string se_config, se_out;
  std::uint64_t se_seed_override = 0;
  bool se_allow_empty = false;
  search->add_option("--config", se_config, "search config file")->required();
  auto* se_seed_opt =
      search->add_option("--seed", se_seed_override, "replace the config seed");
  search->add_option("--out", se_out, "append hit records to this file instead of stdout");
  search->add_flag("--allow-empty", se_allow_empty, "exit 0 even with no hits");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const bool as_json = format != "text";
  try {
    if (*analyze) return run_analyze(an_n, an_table, an_anf, as_json);
    if (*fwht_cmd)
      return run_fwht(fw_n, fw_table, fw_anf, fw_inverse, fw_spectrum, as_json);
    if (*anf_cmd) return run_anf(af_n, af_table, af_anf, as_json);
    if (*construct) {
      auto gx = [&](const std::string& text) {
        return bfkit::table_from_string(text, c_s);
      };
      auto hy = [&](const std::string& text) {
        return bfkit::table_from_string(text, c_t);
      };
      TruthTable f;
      if (*direct) {
        f = bfkit::direct_sum(gx(c_g), hy(c_h));
      } else if (*indirect) {
        f = bfkit::indirect_sum(gx(c_g), gx(c_gp), hy(c_h), hy(c_hp));
      } else if (*gen1) {
        f = bfkit::gen1(gx(c_g), gx(c_gp), gx(c_gpp), hy(c_h), hy(c_hp), hy(c_hpp));
      } else if (*gen2) {
        f = bfkit::gen2(gx(c_g), gx(c_gp), gx(c_gpp), gx(c_gppp), hy(c_h),
                        hy(c_hp), hy(c_hpp), hy(c_hppp));
      } else if (*size3) {
        f = bfkit::size3_sum(gx(c_g), gx(c_gp), gx(c_gpp), hy(c_h0), hy(c_h1),
                             hy(c_h2));
      } else {
        if (c_members.empty() == c_family.empty())
          throw std::invalid_argument("give exactly one of --members or --family");
        std::vector<TruthTable> coords;
        for (const auto& text : split_list(c_coords)) coords.push_back(gx(text));
        std::vector<TruthTable> members;
        if (!c_family.empty()) {
          members = family_from_file(c_family, c_t);
        } else {
          for (const auto& text : split_list(c_members)) members.push_back(hy(text));
        }
        const GeneralInstance inst(gx(c_g), VectorialMap(c_s, c_k, std::move(coords)),
                                   FunctionFamily(c_t, c_k, std::move(members)));
        f = bfkit::general_construct(inst);
      }
      return emit_function(f, c_report, as_json);
    }
    if (*verify_theorem)
      return run_verify_theorem(vt_s, vt_t, vt_k, vt_trials, vt_seed, vt_inject,
                                as_json);
    if (*verify_lemma)
      return run_verify_lemma(vl_n, vl_trials, vl_seed, as_json);
    if (*search) {
      const int jobs = g_jobs > 0 ? g_jobs : default_jobs();
      return run_search_cmd(se_config, se_seed_opt->count() > 0,
                            se_seed_override, jobs, se_out, se_allow_empty);
    }
  } catch (const bfkit::internal_inconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

// entax: decides LOCC convertibility questions on Schmidt spectra from the
// command line and emits reproducible JSON/CSV reports.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "entax/asymptotic.hpp"
#include "entax/axioms.hpp"
#include "entax/catalysis.hpp"
#include "entax/digest.hpp"
#include "entax/io.hpp"
#include "entax/majorization.hpp"
#include "entax/multipartite.hpp"

namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitDomainNegative = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

struct CommonOpts {
  std::string out_path;
  std::string manifest_path;
  std::uint64_t seed = 0;
  int threads = 1;
};

std::size_t class_budget_from_env() {
  if (const char* env = std::getenv("ENTAX_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    throw entax::ParseError("ENTAX_BUDGET must be a positive integer");
  }
  return entax::kDefaultClassBudget;
}

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--out", opts.out_path, "write primary output here instead of stdout");
  cmd->add_option("--manifest", opts.manifest_path, "write a run manifest (JSON) here");
  cmd->add_option("--seed", opts.seed, "master RNG seed")->default_val(0);
  cmd->add_option("--threads", opts.threads, "parallelism cap")->default_val(1);
}

void emit(const CommonOpts& opts, const std::string& text) {
  if (opts.out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream out(opts.out_path);
    if (!out) throw entax::ParseError("cannot write '" + opts.out_path + "'");
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
  }
}

void write_manifest(const CommonOpts& opts, const std::string& subcommand,
                    const json& parameters,
                    const std::vector<std::string>& input_files,
                    double wall_seconds) {
  if (opts.manifest_path.empty()) return;
  json inputs = json::object();
  for (const auto& path : input_files) {
    inputs[path] = entax::sha256_file(path);
  }
  const json manifest{{"subcommand", subcommand},
                      {"parameters", parameters},
                      {"seed", opts.seed},
                      {"threads", opts.threads},
                      {"version", kVersion},
                      {"class_budget", class_budget_from_env()},
                      {"wall_clock_seconds", wall_seconds},
                      {"inputs", inputs}};
  std::ofstream out(opts.manifest_path);
  if (!out) throw entax::ParseError("cannot write '" + opts.manifest_path + "'");
  out << manifest.dump(2) << "\n";
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LOCC convertibility verification engine"};
  app.require_subcommand(1);
  int exit_code = kExitOk;

  // convert-check ------------------------------------------------------
  CommonOpts cc_opts;
  std::string cc_a, cc_b, cc_catalyst;
  double cc_tol = entax::kDefaultTol;
  auto* cc = app.add_subcommand("convert-check",
                                "single-copy (optionally catalyzed) a -> b verdict");
  cc->add_option("a", cc_a, "source state file")->required();
  cc->add_option("b", cc_b, "target state file")->required();
  cc->add_option("--catalyst", cc_catalyst, "catalyst state file");
  cc->add_option("--tol", cc_tol, "prefix-sum tolerance")->default_val(entax::kDefaultTol);
  add_common(cc, cc_opts);
  cc->callback([&] {
    Timer timer;
    const entax::SchmidtVector a = entax::load_state(cc_a);
    const entax::SchmidtVector b = entax::load_state(cc_b);
    entax::ConvertibilityVerdict verdict;
    if (cc_catalyst.empty()) {
      verdict = entax::convertible_single_copy(a, b, cc_tol);
    } else {
      const entax::Catalyst cat{entax::load_state(cc_catalyst),
                                entax::CatalystProvenance::kUserSupplied};
      verdict = entax::convertible_with_catalyst(a, b, cat, cc_tol);
    }
    emit(cc_opts, entax::verdict_to_json(verdict).dump(2));
    std::vector<std::string> inputs{cc_a, cc_b};
    if (!cc_catalyst.empty()) inputs.push_back(cc_catalyst);
    write_manifest(cc_opts, "convert-check",
                   {{"a", cc_a}, {"b", cc_b}, {"catalyst", cc_catalyst}, {"tol", cc_tol}},
                   inputs, timer.seconds());
    if (!verdict.convertible) exit_code = kExitDomainNegative;
  });

  // catalyst-search ------------------------------------------------------
  CommonOpts cs_opts;
  std::string cs_a, cs_b;
  entax::CatalystSearchOptions cs_search;
  auto* cs = app.add_subcommand("catalyst-search",
                                "grid + refinement search for a working catalyst");
  cs->add_option("a", cs_a)->required();
  cs->add_option("b", cs_b)->required();
  cs->add_option("--max-dim", cs_search.max_dim)->default_val(4);
  cs->add_option("--grid-points", cs_search.grid_points)->default_val(51);
  cs->add_option("--refine-iters", cs_search.refine_iters)->default_val(64);
  cs->add_option("--tol", cs_search.tol)->default_val(entax::kDefaultTol);
  add_common(cs, cs_opts);
  cs->callback([&] {
    Timer timer;
    cs_search.threads = cs_opts.threads;
    const auto result = entax::search_catalyst(entax::load_state(cs_a),
                                               entax::load_state(cs_b), cs_search);
    emit(cs_opts, entax::catalyst_search_to_json(result).dump(2));
    write_manifest(cs_opts, "catalyst-search",
                   {{"a", cs_a},
                    {"b", cs_b},
                    {"max_dim", cs_search.max_dim},
                    {"grid_points", cs_search.grid_points},
                    {"refine_iters", cs_search.refine_iters},
                    {"tol", cs_search.tol}},
                   {cs_a, cs_b}, timer.seconds());
    if (!result.catalyst) exit_code = kExitDomainNegative;
  });

  // rate-frontier ------------------------------------------------------
  CommonOpts rf_opts;
  std::string rf_a, rf_e, rf_direction = "dilution";
  int rf_nmax = 16;
  double rf_eps = 0.0;
  auto* rf = app.add_subcommand("rate-frontier",
                                "threshold yardstick count m per copy count n");
  rf->add_option("--a", rf_a, "target state file")->required();
  rf->add_option("--e", rf_e, "yardstick state file")->required();
  rf->add_option("--nmax", rf_nmax)->default_val(16);
  rf->add_option("--eps", rf_eps, "smoothing mass")->default_val(0.0);
  rf->add_option("--direction", rf_direction)
      ->check(CLI::IsMember({"dilution", "distillation"}));
  add_common(rf, rf_opts);
  rf->callback([&] {
    Timer timer;
    const auto direction = rf_direction == "dilution"
                               ? entax::RateDirection::kDilution
                               : entax::RateDirection::kDistillation;
    const auto frontier = entax::rate_frontier(
        entax::load_state(rf_a), entax::load_state(rf_e), rf_nmax, rf_eps,
        direction, class_budget_from_env(), rf_opts.threads);
    std::ostringstream csv;
    entax::frontier_to_csv(frontier, csv);
    emit(rf_opts, csv.str());
    write_manifest(rf_opts, "rate-frontier",
                   {{"a", rf_a},
                    {"e", rf_e},
                    {"nmax", rf_nmax},
                    {"eps", rf_eps},
                    {"direction", rf_direction}},
                   {rf_a, rf_e}, timer.seconds());
  });

  // estimate-e ------------------------------------------------------
  CommonOpts ee_opts;
  std::string ee_a, ee_e;
  int ee_n = 16;
  double ee_eps = 0.0;
  auto* ee = app.add_subcommand("estimate-e",
                                "best dilution m/n up to n copies of the target");
  ee->add_option("--a", ee_a)->required();
  ee->add_option("--e", ee_e)->required();
  ee->add_option("--n", ee_n)->default_val(16);
  ee->add_option("--eps", ee_eps)->default_val(0.0);
  add_common(ee, ee_opts);
  ee->callback([&] {
    Timer timer;
    const auto estimate = entax::estimate_rate(
        entax::load_state(ee_a), entax::load_state(ee_e), ee_eps, ee_n,
        class_budget_from_env(), ee_opts.threads);
    if (estimate) {
      emit(ee_opts, entax::rate_estimate_to_json(*estimate).dump(2));
    } else {
      emit(ee_opts, json{{"feasible", false}}.dump(2));
      exit_code = kExitDomainNegative;
    }
    write_manifest(ee_opts, "estimate-e",
                   {{"a", ee_a}, {"e", ee_e}, {"n", ee_n}, {"eps", ee_eps}},
                   {ee_a, ee_e}, timer.seconds());
  });

  // axiom-suite ------------------------------------------------------
  CommonOpts as_opts;
  entax::HarnessConfig harness;
  auto* as = app.add_subcommand("axiom-suite",
                                "randomized property battery over the axioms");
  as->add_option("--samples", harness.samples_per_axiom)->default_val(1000);
  as->add_option("--dims", harness.max_dim, "largest sampled dimension")->default_val(6);
  as->add_option("--tol", harness.tol)->default_val(1e-9);
  as->add_option("--epsilon", harness.epsilon)->default_val(0.05);
  as->add_option("--n", harness.asymptotic_n)->default_val(32);
  as->add_option("--asymptotic-samples", harness.asymptotic_samples)->default_val(40);
  as->add_option("--spectator-samples", harness.spectator_samples)->default_val(8);
  as->add_option("--schur-pairs", harness.schur_pairs)->default_val(10000);
  add_common(as, as_opts);
  as->callback([&] {
    Timer timer;
    harness.seed = as_opts.seed != 0 ? as_opts.seed : 42;
    harness.class_budget = class_budget_from_env();
    const auto reports = entax::run_axiom_suite(harness);
    json out = json::array();
    bool must_pass_clean = true;
    for (const auto& r : reports) {
      out.push_back(r.to_json());
      if (r.must_pass && !r.passed) must_pass_clean = false;
    }
    const json summary{{"reports", out},
                       {"must_pass_clean", must_pass_clean},
                       {"all_passed", entax::suite_clean(reports)}};
    emit(as_opts, summary.dump(2));
    write_manifest(as_opts, "axiom-suite",
                   {{"samples", harness.samples_per_axiom},
                    {"dims", harness.max_dim},
                    {"tol", harness.tol},
                    {"epsilon", harness.epsilon},
                    {"n", harness.asymptotic_n},
                    {"asymptotic_samples", harness.asymptotic_samples},
                    {"spectator_samples", harness.spectator_samples},
                    {"schur_pairs", harness.schur_pairs},
                    {"effective_seed", harness.seed}},
                   {}, timer.seconds());
    if (!must_pass_clean) exit_code = kExitDomainNegative;
  });

  // multipartite-demo ------------------------------------------------------
  CommonOpts md_opts;
  std::vector<double> md_psi1{1.0, 0.0, 0.0, 0.0};
  std::vector<double> md_psi3{1.0, 0.0, 0.0, 0.0};
  auto* md = app.add_subcommand(
      "multipartite-demo",
      "three-party incomparability report (cut obstructions)");
  md->add_option("--psi1", md_psi1,
                 "party-1 qubit as re0 im0 re1 im1 (default |0>)")
      ->expected(4);
  md->add_option("--psi3", md_psi3,
                 "party-3 qubit as re0 im0 re1 im1 (default |0>)")
      ->expected(4);
  add_common(md, md_opts);
  md->callback([&] {
    Timer timer;
    auto to_qubit = [](const std::vector<double>& v) {
      return std::array<std::complex<double>, 2>{
          std::complex<double>{v[0], v[1]}, std::complex<double>{v[2], v[3]}};
    };
    const auto report = entax::tripartite_incomparability_report(
        to_qubit(md_psi1), to_qubit(md_psi3));
    emit(md_opts, entax::tripartite_report_to_json(report).dump(2));
    write_manifest(md_opts, "multipartite-demo",
                   {{"psi1", md_psi1}, {"psi3", md_psi3}}, {}, timer.seconds());
  });

  // internal-check ------------------------------------------------------
  CommonOpts ic_opts;
  std::string ic_e, ic_x;
  int ic_nmax = 16;
  auto* ic = app.add_subcommand("internal-check",
                                "least n with one copy of x derivable from n copies of e");
  ic->add_option("--e", ic_e, "yardstick state file")->required();
  ic->add_option("--x", ic_x, "contained state file")->required();
  ic->add_option("--nmax", ic_nmax)->default_val(16);
  add_common(ic, ic_opts);
  ic->callback([&] {
    Timer timer;
    const auto result = entax::check_internal_state(
        entax::load_state(ic_e), entax::load_state(ic_x), ic_nmax,
        class_budget_from_env());
    emit(ic_opts, json{{"contained", result.contained},
                       {"minimal_n", result.contained ? json(result.minimal_n)
                                                      : json(nullptr)}}
                      .dump(2));
    write_manifest(ic_opts, "internal-check",
                   {{"e", ic_e}, {"x", ic_x}, {"nmax", ic_nmax}},
                   {ic_e, ic_x}, timer.seconds());
    if (!result.contained) exit_code = kExitDomainNegative;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitInputError;
  } catch (const entax::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const entax::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return exit_code;
}

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qchan/sweep.hpp"
#include "qchan/verify.hpp"

namespace {

void add_optimizer_options(CLI::App* cmd, qchan::OptimizerConfig& cfg) {
  cmd->add_option("--grid-points", cfg.coarse_grid_points,
                  "Coarse 1-D scan resolution")
      ->capture_default_str();
  cmd->add_option("--refine-tol", cfg.refine_tol,
                  "Golden-section bracket width target")
      ->capture_default_str();
  cmd->add_option("--multistarts", cfg.multistart_count,
                  "Random starts of the generic optimizer")
      ->capture_default_str();
  cmd->add_option("--seed", cfg.seed, "Random seed recorded in results")
      ->capture_default_str();
  cmd->add_option("--pos-threshold", cfg.pos_threshold,
                  "Positivity detection threshold in bits")
      ->capture_default_str();
}

int finish_sweep(const qchan::SweepRequest& req) {
  const qchan::SweepOutcome out = qchan::run_sweep(req);
  if (out.exit_code == 2) {
    std::fprintf(stderr, "error: %s\n", out.message.c_str());
    return 2;
  }
  std::printf("wrote %d rows to %s (%d failed)\n", out.rows,
              req.output_path.c_str(), out.failed);
  return out.exit_code;
}

int run_verify(const std::string& suite, std::uint64_t seed, int instances) {
  std::vector<std::string> suites;
  if (suite == "all")
    suites = qchan::verify_suite_names();
  else
    suites.push_back(suite);
  int failures = 0;
  for (const std::string& name : suites) {
    const std::vector<qchan::CheckResult> results =
        qchan::verify_suite(name, seed, instances);
    std::printf("[suite %s]\n", name.c_str());
    for (const qchan::CheckResult& r : results) {
      std::printf("  %s  %-52s residual %9.3e  (tol %7.1e, %d instances)\n",
                  r.pass ? "PASS" : "FAIL", r.name.c_str(), r.residual,
                  r.tolerance, r.instances);
      if (!r.pass) ++failures;
    }
  }
  if (failures > 0) {
    std::printf("%d check(s) failed\n", failures);
    return 1;
  }
  std::printf("all checks passed\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Complementary channel-pair toolkit: coherent-information sweeps, "
      "nonadditivity windows, and structural verification"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Key=value config file; flags take precedence");

  qchan::SweepRequest req;
  std::string model = "amplitude";
  std::string quantity = "q1B";
  std::string p_spec, lambda_spec;

  CLI::App* sweep = app.add_subcommand("sweep", "Grid sweep over (p, lambda)");
  sweep->add_option("--model", model, "amplitude or dephrasure")
      ->check(CLI::IsMember({"amplitude", "dephrasure"}))
      ->capture_default_str();
  sweep->add_option("--quantity", quantity,
                    "q1B, q1C, delta2, delta2star, boundaries, asym-compare")
      ->check(CLI::IsMember({"q1B", "q1C", "delta2", "delta2star", "boundaries",
                             "asym-compare"}))
      ->capture_default_str();
  sweep->add_option("--p", p_spec, "p grid: lo:hi:step or comma list")
      ->required();
  sweep->add_option("--lambda", lambda_spec,
                    "lambda grid (q1B/q1C) or distance below the positivity "
                    "boundary (delta2/delta2star/asym-compare)");
  sweep->add_option("--out", req.output_path, "Output CSV path")->required();
  sweep->add_option("--jobs", req.parallelism, "Worker count; 0 = all cores")
      ->capture_default_str();
  add_optimizer_options(sweep, req.optimizer);

  std::string b_p_spec;
  CLI::App* bounds = app.add_subcommand(
      "boundaries", "Positivity and nonadditivity boundary curves");
  bounds->add_option("--model", model, "amplitude or dephrasure")
      ->check(CLI::IsMember({"amplitude", "dephrasure"}))
      ->capture_default_str();
  bounds->add_option("--p", b_p_spec, "p grid: lo:hi:step or comma list")
      ->required();
  bounds->add_option("--out", req.output_path, "Output CSV path")->required();
  bounds->add_option("--jobs", req.parallelism, "Worker count; 0 = all cores")
      ->capture_default_str();
  add_optimizer_options(bounds, req.optimizer);

  std::string a_p_spec, a_dl_spec;
  CLI::App* asym = app.add_subcommand(
      "asym-compare", "Numeric Q1 against the small-offset asymptote");
  asym->add_option("--model", model, "amplitude or dephrasure")
      ->check(CLI::IsMember({"amplitude", "dephrasure"}))
      ->capture_default_str();
  asym->add_option("--p", a_p_spec, "p grid: lo:hi:step or comma list")
      ->required();
  asym->add_option("--delta-lambda", a_dl_spec,
                   "Distance-below-boundary grid: lo:hi:step or comma list")
      ->required();
  asym->add_option("--out", req.output_path, "Output CSV path")->required();
  asym->add_option("--jobs", req.parallelism, "Worker count; 0 = all cores")
      ->capture_default_str();
  add_optimizer_options(asym, req.optimizer);

  std::string suite = "all";
  std::uint64_t verify_seed = 20250822;
  int instances = 100;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run the randomized structural property suites");
  verify->add_option("suite", suite, "Suite name or 'all'")
      ->capture_default_str();
  verify->add_option("--seed", verify_seed, "Base seed")->capture_default_str();
  verify->add_option("--instances", instances, "Random instances per check")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sweep->parsed()) {
      req.model = qchan::parse_model(model);
      req.quantity = qchan::parse_quantity(quantity);
      req.p_grid = qchan::GridSpec::parse(p_spec);
      req.lambda_grid = qchan::GridSpec::parse(lambda_spec);
      return finish_sweep(req);
    }
    if (bounds->parsed()) {
      req.model = qchan::parse_model(model);
      req.quantity = qchan::SweepQuantity::boundaries;
      req.p_grid = qchan::GridSpec::parse(b_p_spec);
      return finish_sweep(req);
    }
    if (asym->parsed()) {
      req.model = qchan::parse_model(model);
      req.quantity = qchan::SweepQuantity::asym_compare;
      req.p_grid = qchan::GridSpec::parse(a_p_spec);
      req.lambda_grid = qchan::GridSpec::parse(a_dl_spec);
      return finish_sweep(req);
    }
    if (verify->parsed()) return run_verify(suite, verify_seed, instances);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}

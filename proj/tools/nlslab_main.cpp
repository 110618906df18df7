#include <cstdio>
#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "nlslab/checks.hpp"
#include "nlslab/config.hpp"
#include "nlslab/kernel.hpp"
#include "nlslab/report.hpp"
#include "nlslab/traj_io.hpp"

namespace fs = std::filesystem;
using namespace nlslab;

namespace {

struct CommonArgs {
  std::string config_path;
  std::string out_dir = ".";
  std::uint64_t seed_override = 0;
  bool has_seed_override = false;
  bool quiet = false;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool needs_config) {
  auto* c = cmd->add_option("--config", args.config_path, "run configuration");
  if (needs_config) c->required();
  cmd->add_option("--out", args.out_dir, "output directory");
  cmd->add_option("--seed", args.seed_override, "seed override")
      ->each([&args](const std::string&) { args.has_seed_override = true; });
  cmd->add_flag("--quiet", args.quiet, "suppress progress output");
}

RunConfig load(const CommonArgs& args) {
  RunConfig cfg = load_config_file(args.config_path);
  if (args.has_seed_override) cfg.seed = args.seed_override;
  return cfg;
}

std::string joined(const CommonArgs& args, const std::string& name) {
  fs::create_directories(args.out_dir);
  return (fs::path(args.out_dir) / name).string();
}

int emit_and_report(const CommonArgs& args, ExperimentReport rep,
                    const RunConfig& cfg) {
  rep.config_hash = fnv1a_hex(cfg.raw);
  rep.seed = cfg.seed;
  emit_report(rep, joined(args, cfg.out_csv), joined(args, cfg.out_json));
  if (!args.quiet) {
    for (const auto& [name, ok] : rep.verdicts)
      std::printf("%-34s %s\n", name.c_str(), ok ? "pass" : "FAIL");
  }
  return rep.passed() ? 0 : 1;
}

int run_simulate(const CommonArgs& args) {
  const RunConfig cfg = load(args);
  const TorusGrid grid = make_grid(cfg.length, cfg.points);
  SpectralField u0 = cfg.init_from_file
                         ? load_trajectory(cfg.init_file).at(0)
                         : make_init(grid, cfg.init);
  if (cfg.init_from_file && !(u0.grid == grid))
    throw ConfigError("init.path: trajectory grid differs from config grid");
  const StepScheme scheme = cfg.model.pointwise()
                                ? StepScheme::strang(cfg.dt)
                                : StepScheme::lawson(cfg.dt);
  const Trajectory traj =
      evolve(cfg.model, u0, cfg.T, scheme, cfg.sample_stride);
  save_trajectory(traj, joined(args, cfg.out_trajectory));

  nlohmann::ordered_json j;
  j["model"] = traj.model_label;
  j["scheme"] = traj.scheme_id;
  j["dt_used"] = traj.dt_used;
  j["samples"] = traj.size();
  j["mass_drift"] = relative_mass_drift(traj);
  j["energy_drift"] = relative_energy_drift(traj, cfg.model);
  j["config_hash"] = fnv1a_hex(cfg.raw);
  j["tool_version"] = kToolVersion;
  std::ofstream out(joined(args, cfg.out_json), std::ios::binary);
  out << j.dump(2) << "\n";
  if (!args.quiet)
    std::printf("simulate: %d samples, mass drift %.3e\n", traj.size(),
                relative_mass_drift(traj));
  return 0;
}

int run_kernel_cmd(const CommonArgs& args) {
  RunConfig cfg = load(args);
  if (!cfg.kernel) throw ConfigError("kernel: experiment.kind must be kernel");
  const auto k = *cfg.kernel;
  ExperimentReport rep;
  rep.kind = "kernel";
  rep.sweep_key = "L";
  rep.columns = {"dispersive_constant", "argmax_t", "argmax_x"};
  double base = 0.0;
  for (int i = 0; i < 2; ++i) {
    const double L = k.L * (i + 1 == 1 ? 1.0 : 2.0);
    const NormReport r = kernel_dispersive_constant(L, k.N, k.T, k.t_min,
                                                    k.x_samples, k.t_samples);
    double argt = 0, argx = 0;
    for (const auto& [key, v] : r.params) {
      if (key == "argmax_t") argt = v;
      if (key == "argmax_x") argx = v;
    }
    rep.rows.push_back({L, {r.value, argt, argx}});
    if (i == 0) base = r.value;
  }
  const double other = rep.rows[1].values[0];
  rep.provenance = {{"N", k.N}, {"T", k.T}, {"t_min", k.t_min},
                    {"rel_change", std::abs(other - base) / base}};
  rep.add_verdict("stable_under_L_doubling",
                  std::abs(other - base) <= k.stability_tol * base);
  return emit_and_report(args, rep, cfg);
}

int run_check(const CommonArgs& args) {
  fs::path scratch = args.out_dir.empty() || args.out_dir == "."
                         ? fs::temp_directory_path() / "nlslab_check"
                         : fs::path(args.out_dir);
  fs::create_directories(scratch);
  const auto results = run_invariant_suite(scratch.string());
  bool all = true;
  for (const auto& r : results) {
    all = all && r.ok;
    if (!args.quiet || !r.ok)
      std::printf("%-52s %s%s%s\n", r.name.c_str(), r.ok ? "pass" : "FAIL",
                  r.ok || r.detail.empty() ? "" : "  -- ",
                  r.ok ? "" : r.detail.c_str());
  }
  if (!args.quiet)
    std::printf("check: %zu checks, %s\n", results.size(),
                all ? "all passed" : "FAILURES present");
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-dimensional truncations of the 1D quintic Schrodinger "
               "equation: solvers, estimates, experiments"};
  app.require_subcommand(1);

  CommonArgs simulate_args, kernel_args, homog_args, torus_args, weak_args,
      nonsq_args, stab_args, check_args;

  auto* c_simulate = app.add_subcommand("simulate", "evolve one model");
  add_common(c_simulate, simulate_args, true);
  auto* c_kernel = app.add_subcommand("kernel", "dispersive-constant sweep");
  add_common(c_kernel, kernel_args, true);
  auto* c_homog = app.add_subcommand("homogenize", "oscillatory-coefficient "
                                                   "convergence study");
  add_common(c_homog, homog_args, true);
  auto* c_torus = app.add_subcommand("torus-approx", "line-vs-torus study");
  add_common(c_torus, torus_args, true);
  auto* c_weak = app.add_subcommand("weak-limit", "weak-topology study");
  add_common(c_weak, weak_args, true);
  auto* c_nonsq = app.add_subcommand("nonsqueeze", "non-squeezing probe");
  add_common(c_nonsq, nonsq_args, true);
  auto* c_stab = app.add_subcommand("stability", "perturbation response");
  add_common(c_stab, stab_args, true);
  auto* c_check = app.add_subcommand("check", "run the invariant suite");
  add_common(c_check, check_args, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_simulate->parsed()) return run_simulate(simulate_args);
    if (c_kernel->parsed()) return run_kernel_cmd(kernel_args);
    if (c_homog->parsed()) {
      RunConfig cfg = load(homog_args);
      if (!cfg.homogenization)
        throw ConfigError("homogenize: experiment.kind must be homogenization");
      auto spec = *cfg.homogenization;
      spec.seed = cfg.seed;
      return emit_and_report(homog_args, run_homogenization(spec), cfg);
    }
    if (c_torus->parsed()) {
      RunConfig cfg = load(torus_args);
      if (!cfg.torus_approx)
        throw ConfigError("torus-approx: experiment.kind must be torus_approx");
      auto spec = *cfg.torus_approx;
      spec.seed = cfg.seed;
      return emit_and_report(torus_args, run_torus_approx(spec), cfg);
    }
    if (c_weak->parsed()) {
      RunConfig cfg = load(weak_args);
      if (!cfg.weak_convergence)
        throw ConfigError(
            "weak-limit: experiment.kind must be weak_convergence");
      auto spec = *cfg.weak_convergence;
      spec.seed = cfg.seed;
      return emit_and_report(weak_args, run_weak_convergence(spec), cfg);
    }
    if (c_nonsq->parsed()) {
      RunConfig cfg = load(nonsq_args);
      if (!cfg.nonsqueezing)
        throw ConfigError("nonsqueeze: experiment.kind must be nonsqueezing");
      auto spec = *cfg.nonsqueezing;
      spec.seed = cfg.seed;
      return emit_and_report(nonsq_args, run_nonsqueezing_probe(spec), cfg);
    }
    if (c_stab->parsed()) {
      RunConfig cfg = load(stab_args);
      if (!cfg.stability)
        throw ConfigError("stability: experiment.kind must be stability");
      auto spec = *cfg.stability;
      spec.seed = cfg.seed;
      return emit_and_report(stab_args, run_stability_check(spec), cfg);
    }
    if (c_check->parsed()) return run_check(check_args);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "nlslab/experiments.hpp"

namespace nlslab {

// Parsed, validated run configuration.  Unknown keys are rejected;
// validation errors name the offending field.
struct RunConfig {
  ModelSpec model = ModelSpec::quintic(1.0);
  double length = 64.0;
  int points = 2048;
  double T = 1.0;
  double dt = 0.0;  // 0 -> default rule
  int sample_stride = 64;
  InitSpec init;
  std::string init_file;  // when init.kind comes from a trajectory file
  bool init_from_file = false;
  std::uint64_t seed = 1;

  // experiment blocks (present per subcommand)
  std::optional<HomogenizationSpec> homogenization;
  std::optional<TorusApproxSpec> torus_approx;
  std::optional<WeakConvergenceSpec> weak_convergence;
  std::optional<NonsqueezingSpec> nonsqueezing;
  std::optional<StabilitySpec> stability;
  struct KernelBlock {
    double L = 512.0;
    double N = 4.0;
    double T = 10.0;
    double t_min = 0.0;  // 0 -> default 0.05 T
    int x_samples = 8192;
    int t_samples = 64;
    double stability_tol = 0.10;  // verdict: change under L-doubling
  };
  std::optional<KernelBlock> kernel;

  // output file names, always joined under --out
  std::string out_trajectory = "trajectory.nlst";
  std::string out_csv = "report.csv";
  std::string out_json = "report.json";

  std::string raw;  // original config bytes (hash provenance)
};

// Throws ConfigError with a position-bearing message on syntax errors and
// a field-naming message on validation errors.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

RunConfig parse_config(const std::string& text);
RunConfig load_config_file(const std::string& path);

}  // namespace nlslab

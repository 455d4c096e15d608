// Copyright 2026 The varbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// varbound: sweeps, validity audits and single-point bound reports.
//
// Exit status: 0 success, 1 usage error, 2 validation or audit failure,
// 3 I/O error.

#include <cstdint>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "varbound/error.hpp"
#include "varbound/runner.hpp"
#include "varbound/version.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;

struct GridFlags {
  int min_exp = -6;
  int max_exp = 6;
  int density = 20;
  bool refine = false;

  void attach(CLI::App* app) {
    app->add_option("--grid-min-exp", min_exp, "smallest grid exponent (base 2)")
        ->capture_default_str();
    app->add_option("--grid-max-exp", max_exp, "largest grid exponent (base 2)")
        ->capture_default_str();
    app->add_option("--grid-density", density, "grid points per octave")
        ->capture_default_str();
    app->add_flag("--refine", refine, "golden-section refinement around the best grid point");
  }

  varbound::GridSpec spec() const {
    return {.min_exponent = min_exp,
            .max_exponent = max_exp,
            .points_per_octave = density,
            .refine = refine};
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Variance-based sum uncertainty bounds: sweeps, audits and reports"};
  app.set_version_flag("--version", std::string(varbound::kVersion));
  app.require_subcommand(1);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "sample an example's state family and write CSV");
  varbound::SweepOptions sweep_opts;
  GridFlags sweep_grid;
  std::optional<double> theta_min, theta_max, phi, alpha;
  std::optional<int> steps;
  std::string sweep_output;
  sweep->add_option("--example", sweep_opts.example, "example id (1, 2 or 3)")->required();
  sweep->add_option("--theta-min", theta_min, "first theta (default: start of range)");
  sweep->add_option("--theta-max", theta_max, "last theta (default: end of range)");
  sweep->add_option("--steps", steps, "number of theta samples (>= 2)");
  sweep->add_option("--phi", phi, "fixed phi for example 3 (default pi/2)");
  sweep->add_option("--alpha", alpha, "also report LB1 at this fixed alpha");
  sweep->add_flag("--permutations", sweep_opts.permutations, "include the permutation bound");
  sweep->add_option("--output", sweep_output, "CSV path; manifest goes to <path>.manifest.json")
      ->required();
  sweep_grid.attach(sweep);

  // audit
  auto* audit = app.add_subcommand("audit", "check every bound on random instances");
  varbound::AuditOptions audit_opts;
  GridFlags audit_grid;
  std::uint64_t audit_seed = 0;
  std::string audit_output;
  audit->add_option("--dims", audit_opts.dims, "Hilbert space dimensions")
      ->delimiter(',')
      ->capture_default_str();
  audit->add_option("--nobs", audit_opts.n_obs, "observable counts")
      ->delimiter(',')
      ->capture_default_str();
  audit->add_option("--trials", audit_opts.trials, "number of random instances")
      ->capture_default_str();
  audit->add_option("--seed", audit_seed, "base seed")->capture_default_str();
  audit->add_option("--output", audit_output, "JSON report path (default: stdout)");
  audit_grid.attach(audit);

  // bounds
  auto* bounds = app.add_subcommand("bounds", "compare all bounds at one example point");
  int bounds_example = 1;
  double bounds_theta = 0.0;
  double bounds_phi = std::numbers::pi / 2.0;
  std::optional<double> bounds_alpha;
  bool bounds_perms = false;
  GridFlags bounds_grid;
  bounds->add_option("--example", bounds_example, "example id (1, 2 or 3)")->required();
  bounds->add_option("--theta", bounds_theta, "state parameter")->capture_default_str();
  bounds->add_option("--phi", bounds_phi, "second angle for example 3")->capture_default_str();
  bounds->add_option("--alpha", bounds_alpha, "also report LB1 at this fixed alpha");
  bounds->add_flag("--permutations", bounds_perms, "include the permutation bound");
  bounds_grid.attach(bounds);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*sweep) {
      sweep_opts.theta_min = theta_min;
      sweep_opts.theta_max = theta_max;
      sweep_opts.steps = steps;
      sweep_opts.phi = phi;
      sweep_opts.alpha_fixed = alpha;
      sweep_opts.grid = sweep_grid.spec();
      const varbound::SweepResult result = varbound::run_sweep(sweep_opts);
      varbound::write_sweep_files(result, sweep_output);
      std::cerr << "wrote " << result.rows.size() << " rows to " << sweep_output << "\n";
      return 0;
    }
    if (*audit) {
      audit_opts.seed = audit_seed;
      audit_opts.grid = audit_grid.spec();
      const varbound::AuditReport report = varbound::run_audit(audit_opts);
      const auto j = varbound::audit_report_json(report);
      if (audit_output.empty()) {
        std::cout << j.dump(2) << "\n";
      } else {
        varbound::write_json_file(j, audit_output);
      }
      std::cerr << report.trials << " trials, " << report.violations
                << " violations, worst margin " << varbound::format_real(report.worst_margin)
                << "\n";
      return report.violations > 0 ? kExitValidation : 0;
    }
    if (*bounds) {
      const auto j = varbound::bounds_report_json(
          {.id = bounds_example, .theta = bounds_theta, .phi = bounds_phi},
          bounds_grid.spec(), bounds_perms, bounds_alpha);
      std::cout << j.dump(2) << "\n";
      return 0;
    }
  } catch (const varbound::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case varbound::ErrorKind::kIoError: return kExitIo;
      case varbound::ErrorKind::kInvalidGrid:
      case varbound::ErrorKind::kInvalidArgument:
      case varbound::ErrorKind::kUnknownExample:
        return kExitUsage;
      default: return kExitValidation;
    }
  }
  return kExitUsage;
}

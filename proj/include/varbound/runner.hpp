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

// Batch drivers behind the command-line tool: example sweeps, random
// validity audits and single-point reports. Output is deterministic:
// rows come out in parameter order whatever the worker count, and reals
// are written with 12 significant digits independent of locale.

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "varbound/catalog.hpp"
#include "varbound/optimizer.hpp"

namespace varbound {

/// Bounds may exceed the variance sum by at most this much before a row or
/// trial counts as a violation.
inline constexpr double kValiditySlack = 1e-9;

/// Shortest-form %.12g rendering with '.' as decimal separator.
std::string format_real(double v);

struct SweepOptions {
  int example = 1;
  std::optional<double> theta_min;  // default: start of the example's range
  std::optional<double> theta_max;  // default: end of the example's range
  std::optional<int> steps;         // default: 201 / 101 / 181 for ids 1 / 2 / 3
  std::optional<double> phi;        // example 3 only, default pi/2
  std::optional<double> alpha_fixed;
  GridSpec grid;
  bool permutations = false;
};

struct SweepRow {
  double theta = 0.0;
  std::optional<double> phi;
  double sum = 0.0;
  double song = 0.0;
  double zhang = 0.0;
  double lb1_opt = 0.0;
  double lb1_alpha = 0.0;
  double lb2_opt = 0.0;
  double lb2_t = 0.0;
  std::optional<double> lb1_fixed;
  std::optional<double> lb1_pi_opt;
};

struct SweepResult {
  SweepOptions options;  // with every default filled in
  std::vector<SweepRow> rows;

  std::vector<std::string> header() const;
};

/// threads == 0 picks the hardware concurrency.
SweepResult run_sweep(const SweepOptions& options, unsigned threads = 0);

void write_sweep_csv(std::ostream& out, const SweepResult& result);

nlohmann::json sweep_manifest(const SweepResult& result);

/// Writes the CSV to `csv_path` and the manifest to `<csv_path>.manifest.json`.
void write_sweep_files(const SweepResult& result, const std::filesystem::path& csv_path);

struct AuditOptions {
  std::vector<int> dims{2, 3, 4};
  std::vector<int> n_obs{2, 3, 4};
  int trials = 1000;
  std::uint64_t seed = 0;
  GridSpec grid;
};

struct AuditReport {
  int trials = 0;
  int violations = 0;
  double worst_margin = 0.0;  // min over trials and families of sum - bound
  std::string worst_family;
  std::uint64_t seed = 0;
  std::vector<int> dims;
  std::vector<int> n_obs;
};

/// Trial t draws random_instance(dims[t % |dims|],
/// n_obs[(t / |dims|) % |n_obs|], splitmix64(seed + t)) and checks SONG,
/// ZHANG and the grid-optimized LB1, LB2 and LB1_PI against the sum of
/// variances.
AuditReport run_audit(const AuditOptions& options, unsigned threads = 0);

nlohmann::json audit_report_json(const AuditReport& report);

/// compare_report at one example point as a flat object, plus lb1 at
/// alpha_fixed when given.
nlohmann::json bounds_report_json(const ExampleSpec& spec, const GridSpec& grid,
                                  bool permutations,
                                  std::optional<double> alpha_fixed);

/// Serialized with two-space indentation and a trailing newline.
void write_json_file(const nlohmann::json& j, const std::filesystem::path& path);

}  // namespace varbound

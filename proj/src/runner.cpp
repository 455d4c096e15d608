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

#include "varbound/runner.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <functional>
#include <limits>
#include <mutex>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>

#include "varbound/bounds.hpp"
#include "varbound/version.hpp"

namespace varbound {
namespace {

// Runs body(i) for i in [0, n) on up to `threads` workers. Each index is
// handled exactly once; the first exception is rethrown after all workers
// finish.
void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(std::size_t)>& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::mutex mu;
  std::size_t next = 0;
  std::exception_ptr error;
  auto worker = [&] {
    for (;;) {
      std::size_t i;
      {
        std::lock_guard lock(mu);
        if (next >= n || error) return;
        i = next++;
      }
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();  // joins
  if (error) std::rethrow_exception(error);
}

SweepOptions resolve(const SweepOptions& in) {
  SweepOptions o = in;
  double lo = 0.0;
  double hi = 0.0;
  int steps = 0;
  switch (o.example) {
    case 1: hi = 2.0 * std::numbers::pi; steps = 201; break;
    case 2: hi = 1.0; steps = 101; break;
    case 3: hi = std::numbers::pi; steps = 181; break;
    default:
      throw Error(ErrorKind::kUnknownExample,
                  "example id must be 1, 2 or 3, got " + std::to_string(o.example),
                  o.example);
  }
  if (!o.theta_min) o.theta_min = lo;
  if (!o.theta_max) o.theta_max = hi;
  if (!o.steps) o.steps = steps;
  if (o.example == 3) {
    if (!o.phi) o.phi = std::numbers::pi / 2.0;
  } else {
    o.phi.reset();
  }
  if (*o.steps < 2) {
    throw Error(ErrorKind::kInvalidArgument,
                "a sweep needs at least 2 steps, got " + std::to_string(*o.steps),
                *o.steps);
  }
  if (!(*o.theta_min <= *o.theta_max)) {
    throw Error(ErrorKind::kInvalidArgument, "theta_min must not exceed theta_max");
  }
  o.grid.validate();
  return o;
}

void check_row(const SweepRow& r) {
  const double limit = r.sum + kValiditySlack;
  for (double b : {r.song, r.zhang, r.lb1_opt, r.lb2_opt}) {
    if (b > limit) {
      throw Error(ErrorKind::kInternalConsistency,
                  "bound " + format_real(b) + " exceeds variance sum " +
                      format_real(r.sum) + " at theta " + format_real(r.theta),
                  b - r.sum);
    }
  }
  for (const auto& b : {r.lb1_fixed, r.lb1_pi_opt}) {
    if (b && *b > limit) {
      throw Error(ErrorKind::kInternalConsistency,
                  "bound " + format_real(*b) + " exceeds variance sum " +
                      format_real(r.sum) + " at theta " + format_real(r.theta),
                  *b - r.sum);
    }
  }
}

}  // namespace

std::string format_real(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of negative zero
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

std::vector<std::string> SweepResult::header() const {
  std::vector<std::string> h{"theta"};
  if (options.phi) h.emplace_back("phi");
  for (const char* c : {"sum", "song", "zhang", "lb1_opt", "lb1_alpha", "lb2_opt", "lb2_t"}) {
    h.emplace_back(c);
  }
  if (options.alpha_fixed) h.emplace_back("lb1_fixed");
  if (options.permutations) h.emplace_back("lb1_pi_opt");
  return h;
}

SweepResult run_sweep(const SweepOptions& options, unsigned threads) {
  SweepResult result;
  result.options = resolve(options);
  const SweepOptions& o = result.options;
  const ObservableSet set = example_set(o.example);
  const int steps = *o.steps;
  result.rows.resize(static_cast<std::size_t>(steps));

  parallel_for(result.rows.size(), threads, [&](std::size_t k) {
    SweepRow row;
    row.theta = (static_cast<int>(k) == steps - 1)
                    ? *o.theta_max
                    : *o.theta_min + (*o.theta_max - *o.theta_min) *
                                         static_cast<double>(k) / (steps - 1);
    row.phi = o.phi;
    const DensityMatrix rho =
        example_state({.id = o.example, .theta = row.theta, .phi = o.phi.value_or(0.0)});

    const std::vector<BoundEvaluation> rep = compare_report(rho, set, o.grid, o.permutations);
    row.sum = rep[0].value;
    row.song = rep[1].value;
    row.zhang = rep[2].value;
    row.lb1_opt = rep[3].value;
    row.lb1_alpha = rep[3].alpha.value_or(0.0);
    row.lb2_opt = rep[4].value;
    row.lb2_t = rep[4].alpha.value_or(0.0);
    if (o.permutations) row.lb1_pi_opt = rep[5].value;
    if (o.alpha_fixed) row.lb1_fixed = lb1(rho, set, *o.alpha_fixed).value;
    check_row(row);
    result.rows[k] = row;
  });
  return result;
}

void write_sweep_csv(std::ostream& out, const SweepResult& result) {
  const auto header = result.header();
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << '\n';
  for (const SweepRow& r : result.rows) {
    std::vector<double> cells{r.theta};
    if (r.phi) cells.push_back(*r.phi);
    cells.insert(cells.end(),
                 {r.sum, r.song, r.zhang, r.lb1_opt, r.lb1_alpha, r.lb2_opt, r.lb2_t});
    if (r.lb1_fixed) cells.push_back(*r.lb1_fixed);
    if (r.lb1_pi_opt) cells.push_back(*r.lb1_pi_opt);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out << (i ? "," : "") << format_real(cells[i]);
    }
    out << '\n';
  }
}

nlohmann::json sweep_manifest(const SweepResult& result) {
  const SweepOptions& o = result.options;
  std::string columns;
  for (const auto& c : result.header()) columns += (columns.empty() ? "" : ",") + c;
  nlohmann::json j;
  j["tool"] = "varbound";
  j["tool_version"] = kVersion;
  j["example"] = o.example;
  j["theta_min"] = *o.theta_min;
  j["theta_max"] = *o.theta_max;
  j["steps"] = *o.steps;
  j["phi"] = o.phi ? nlohmann::json(*o.phi) : nlohmann::json(nullptr);
  j["alpha_fixed"] = o.alpha_fixed ? nlohmann::json(*o.alpha_fixed) : nlohmann::json(nullptr);
  j["grid_min_exponent"] = o.grid.min_exponent;
  j["grid_max_exponent"] = o.grid.max_exponent;
  j["grid_points_per_octave"] = o.grid.points_per_octave;
  j["grid_refine"] = o.grid.refine;
  j["permutations"] = o.permutations;
  j["rows"] = result.rows.size();
  j["columns"] = columns;
  return j;
}

void write_sweep_files(const SweepResult& result, const std::filesystem::path& csv_path) {
  std::ofstream out(csv_path, std::ios::binary);
  if (!out) {
    throw Error(ErrorKind::kIoError, "cannot open '" + csv_path.string() + "' for writing");
  }
  write_sweep_csv(out, result);
  out.close();
  if (!out) throw Error(ErrorKind::kIoError, "failed writing '" + csv_path.string() + "'");
  write_json_file(sweep_manifest(result), csv_path.string() + ".manifest.json");
}

AuditReport run_audit(const AuditOptions& options, unsigned threads) {
  if (options.trials < 1) {
    throw Error(ErrorKind::kInvalidArgument,
                "trials must be positive, got " + std::to_string(options.trials),
                options.trials);
  }
  if (options.dims.empty() || options.n_obs.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "dims and n_obs must be non-empty");
  }
  options.grid.validate();

  struct TrialOutcome {
    double margin = std::numeric_limits<double>::infinity();
    std::string family;
  };
  std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(options.trials));

  parallel_for(outcomes.size(), threads, [&](std::size_t t) {
    const int dim = options.dims[t % options.dims.size()];
    const int n = options.n_obs[(t / options.dims.size()) % options.n_obs.size()];
    const RandomInstance inst = random_instance(dim, n, splitmix64(options.seed + t));

    std::vector<BoundEvaluation> rows = compare_report(
        inst.rho, inst.set, options.grid,
        inst.set.size() <= kPermutationMax);
    const double sum = rows[0].value;
    TrialOutcome out;
    for (std::size_t k = 1; k < rows.size(); ++k) {
      const double margin = sum - rows[k].value;
      if (margin < out.margin) {
        out.margin = margin;
        out.family = std::string(family_name(rows[k].family));
      }
    }
    outcomes[t] = std::move(out);
  });

  AuditReport report{.trials = options.trials,
                     .seed = options.seed,
                     .dims = options.dims,
                     .n_obs = options.n_obs};
  report.worst_margin = std::numeric_limits<double>::infinity();
  for (const auto& o : outcomes) {
    if (o.margin < -kValiditySlack) ++report.violations;
    if (o.margin < report.worst_margin) {
      report.worst_margin = o.margin;
      report.worst_family = o.family;
    }
  }
  return report;
}

nlohmann::json audit_report_json(const AuditReport& r) {
  nlohmann::json j;
  j["tool"] = "varbound";
  j["tool_version"] = kVersion;
  j["trials"] = r.trials;
  j["violations"] = r.violations;
  j["worst_margin"] = r.worst_margin;
  j["worst_family"] = r.worst_family;
  j["seed"] = r.seed;
  j["dims"] = r.dims;
  j["n_obs"] = r.n_obs;
  j["slack"] = kValiditySlack;
  return j;
}

nlohmann::json bounds_report_json(const ExampleSpec& spec, const GridSpec& grid,
                                  bool permutations,
                                  std::optional<double> alpha_fixed) {
  const DensityMatrix rho = example_state(spec);
  const ObservableSet set = example_set(spec.id);
  const std::vector<BoundEvaluation> rows = compare_report(rho, set, grid, permutations);

  nlohmann::json j;
  j["example"] = spec.id;
  j["theta"] = spec.theta;
  if (spec.id == 3) j["phi"] = spec.phi;
  j["sum"] = rows[0].value;
  j["song"] = rows[1].value;
  j["zhang"] = rows[2].value;
  j["zhang_x"] = rows[2].branch->x;
  j["lb1_opt"] = rows[3].value;
  j["lb1_alpha"] = *rows[3].alpha;
  j["lb1_x"] = rows[3].branch->x;
  j["lb1_y"] = rows[3].branch->y;
  j["lb2_opt"] = rows[4].value;
  j["lb2_t"] = *rows[4].alpha;
  j["lb2_member"] = std::string(family_name(*rows[4].lb2_member));
  if (permutations) {
    j["lb1_pi_opt"] = rows[5].value;
    j["lb1_pi_alpha"] = *rows[5].alpha;
    std::string perm;
    for (std::size_t p : *rows[5].permutation) perm += (perm.empty() ? "" : " ") + std::to_string(p);
    j["lb1_pi_permutation"] = perm;
  }
  if (alpha_fixed) {
    j["alpha_fixed"] = *alpha_fixed;
    j["lb1_fixed"] = lb1(rho, set, *alpha_fixed).value;
  }
  return j;
}

void write_json_file(const nlohmann::json& j, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIoError, "cannot open '" + path.string() + "' for writing");
  out << j.dump(2) << '\n';
  out.close();
  if (!out) throw Error(ErrorKind::kIoError, "failed writing '" + path.string() + "'");
}

}  // namespace varbound

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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.
//
// usage: varbound_acceptance [work_dir] [cli_path]

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <Eigen/Dense>

#include "test_support.hpp"
#include "varbound/bounds.hpp"
#include "varbound/catalog.hpp"
#include "varbound/norm_identities.hpp"
#include "varbound/optimizer.hpp"
#include "varbound/runner.hpp"
#include "varbound/variance.hpp"

namespace {

using namespace varbound;
namespace fs = std::filesystem;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

struct Instance {
  DensityMatrix rho;
  ObservableSet set;
};

Instance random_test_instance(int d, int n, std::mt19937& rng) {
  std::vector<Observable> obs;
  for (int k = 0; k < n; ++k) obs.push_back(validate_observable(testing::random_hermitian(d, rng)));
  return {validate_density(testing::random_density_matrix(d, rng)), ObservableSet(std::move(obs))};
}

// |lhs - rhs| relative to the larger side, floored at the natural scale sum |a_i|^2
// so identities whose coefficient vanishes (e.g. alpha N + (N-2) beta = 0) are still measured.
double identity_error(identities::Sides s, double scale) {
  const double denom = std::max({std::abs(s.first), std::abs(s.second), scale});
  return denom == 0.0 ? 0.0 : std::abs(s.first - s.second) / denom;
}

// 1. parallelogram, parameterized parallelogram, three-term identity
Outcome identity_suite() {
  std::mt19937 rng(101);
  std::normal_distribution<double> normal(0.0, 1.0);
  double worst = 0.0;
  int checks = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int dim = 1 + static_cast<int>(rng() % 10);
    const int n = 2 + static_cast<int>(rng() % 4);
    std::vector<Eigen::VectorXd> vecs;
    double scale = 0.0;
    for (int k = 0; k < n; ++k) {
      Eigen::VectorXd v(dim);
      for (int i = 0; i < dim; ++i) v(i) = normal(rng);
      scale += v.squaredNorm();
      vecs.push_back(std::move(v));
    }
    const std::span<const Eigen::VectorXd> a(vecs);
    auto record = [&](identities::Sides s) {
      worst = std::max(worst, identity_error(s, scale));
      ++checks;
    };
    record(identities::parallelogram(a));
    record(identities::pair_sum_identity(a));
    record(identities::pair_difference_identity(a));
    for (double alpha : {0.0, 0.5, 1.0, 2.0, 5.0}) {
      for (int x : {0, 1}) {
        for (int y : {0, 1}) {
          record(identities::parameterized_parallelogram(a, alpha, BranchChoice{x, y}));
        }
      }
    }
    for (auto [al, be] : {std::pair{2.0, 1.0}, std::pair{1.0, 2.0}, std::pair{-1.0, 3.0}}) {
      record(identities::weighted_parallelogram(a, al, be));
    }
  }
  return {worst <= 1e-10,
          std::to_string(checks) + " checks, max rel err " + fmt(worst) + " (tol 1e-10)"};
}

// 2. trace formula vs vectorization route
Outcome oracle_equivalence() {
  std::mt19937 rng(202);
  double worst = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const int d = 2 + trial % 3;
    const DensityMatrix rho = validate_density(testing::random_density_matrix(d, rng));
    const Observable a = validate_observable(testing::random_hermitian(d, rng));
    worst = std::max(worst, std::abs(variance(rho, a) - variance_via_vectorization(rho, a)));
  }
  return {worst <= 1e-9, "500 instances, max abs diff " + fmt(worst) + " (tol 1e-9)"};
}

// 3. random validity audit
Outcome validity_audit() {
  const AuditReport r = run_audit({.dims = {2, 3, 4}, .n_obs = {2, 3, 4}, .trials = 1000});
  return {r.violations == 0,
          std::to_string(r.trials) + " trials, " + std::to_string(r.violations) +
              " violations, worst margin " + fmt(r.worst_margin) + " (" + r.worst_family + ")"};
}

// 4. specializations and reduced closed forms
Outcome specializations() {
  std::mt19937 rng(404);
  double worst_lb1 = 0.0;
  double worst_xy = 0.0;
  double worst_closed = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const Instance in = random_test_instance(2 + trial % 3, 2 + (trial / 3) % 4, rng);
    const double zhang = zhang_bound(in.rho, in.set).value;
    worst_lb1 = std::max(worst_lb1, std::abs(lb1(in.rho, in.set, 1.0).value - zhang));
    for (double w : {0.3, 1.0, 2.5}) {
      const Thm2Bounds t = thm2_bounds(in.rho, in.set, w, w);
      worst_xy = std::max(worst_xy, std::abs(std::max(t.x.value, t.y.value) - zhang));
    }
    const testing::ReducedForms f = testing::reduced_forms(in.rho, in.set);
    const Thm2Bounds a = thm2_bounds(in.rho, in.set, 2.0, 1.0);
    const Thm2Bounds b = thm2_bounds(in.rho, in.set, 1.0, 2.0);
    worst_closed = std::max({worst_closed, std::abs(a.x.value - f.x21),
                             std::abs(b.y.value - f.y12), std::abs(b.z->value - f.z12)});
  }
  const bool ok = worst_lb1 <= 1e-12 && worst_xy <= 1e-12 && worst_closed <= 1e-12;
  return {ok, "lb1(1)-zhang " + fmt(worst_lb1) + ", max(X,Y)|a=b - zhang " + fmt(worst_xy) +
                  ", closed forms " + fmt(worst_closed) + " (tol 1e-12)"};
}

// 5. inversion symmetry and weight scaling
Outcome symmetries() {
  std::mt19937 rng(505);
  double worst_inv = 0.0;
  double worst_scale = 0.0;
  for (int trial = 0; trial < 300; ++trial) {
    const Instance in = random_test_instance(2 + trial % 3, 2 + (trial / 3) % 4, rng);
    for (double a : {0.1, 0.5, 2.0, 3.7}) {
      worst_inv = std::max(worst_inv, testing::rel_err(lb1(in.rho, in.set, a).value,
                                                       lb1(in.rho, in.set, 1.0 / a).value));
    }
    for (auto [al, be] : {std::pair{2.0, 1.0}, std::pair{0.8, 1.9}}) {
      const Thm2Bounds base = thm2_bounds(in.rho, in.set, al, be);
      for (double c : {0.1, 7.0}) {
        const Thm2Bounds s = thm2_bounds(in.rho, in.set, c * al, c * be);
        worst_scale = std::max({worst_scale, testing::rel_err(s.x.value, base.x.value),
                                testing::rel_err(s.y.value, base.y.value)});
        if (base.z) worst_scale = std::max(worst_scale, testing::rel_err(s.z->value, base.z->value));
      }
    }
  }
  const bool ok = worst_inv <= 1e-10 && worst_scale <= 1e-10;
  return {ok, "lb1(a) vs lb1(1/a) " + fmt(worst_inv) + ", X/Y/Z scaling " + fmt(worst_scale) +
                  " (tol 1e-10 relative)"};
}

// 6. zero law on common eigenvectors, nonzero LB1 for example 1
Outcome zero_law() {
  std::mt19937 rng(606);
  const GridSpec grid;
  double worst = 0.0;
  int states = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 2 + trial % 3;
    const int n = 2 + (trial / 3) % 3;
    const Eigen::HouseholderQR<ComplexMatrix> qr(testing::random_complex(d, d, rng));
    const ComplexMatrix u = qr.householderQ();
    std::uniform_real_distribution<double> eig(-3.0, 3.0);
    std::vector<Observable> obs;
    for (int k = 0; k < n; ++k) {
      Eigen::VectorXcd diag(d);
      for (int i = 0; i < d; ++i) diag(i) = eig(rng);
      const ComplexMatrix m = u * diag.asDiagonal() * u.adjoint();
      obs.push_back(validate_observable(0.5 * (m + m.adjoint())));
    }
    const ObservableSet set(std::move(obs));
    for (int j = 0; j < d; ++j) {
      const ComplexVector psi = u.col(j);
      if (!is_common_eigenvector(set, psi)) return {false, "constructed vector is not a common eigenvector"};
      const DensityMatrix rho = pure_state(psi);
      std::vector<double> values{sum_variances(rho, set), song_bound(rho, set).value,
                                 zhang_bound(rho, set).value,
                                 optimize_lb1(rho, set, grid).best.value,
                                 optimize_lb1_permuted(rho, set, grid).best.value,
                                 optimize_lb2(rho, set, grid).best.value};
      for (auto [al, be] : {std::pair{2.0, 1.0}, std::pair{1.0, 2.0}}) {
        const Thm2Bounds t = thm2_bounds(rho, set, al, be);
        values.push_back(t.x.value);
        values.push_back(t.y.value);
        if (t.z) values.push_back(t.z->value);
      }
      for (double v : values) worst = std::max(worst, std::abs(v));
      ++states;
    }
  }
  const double ex1 =
      optimize_lb1(example_state({.id = 1, .theta = std::numbers::pi / 4}), example_set(1), grid)
          .best.value;
  const bool ok = worst <= 1e-10 && ex1 >= 1e-3;
  return {ok, std::to_string(states) + " common eigenstates, max |bound| " + fmt(worst) +
                  " (tol 1e-10); example 1 at pi/4 LB1opt " + fmt(ex1) + " (>= 1e-3)"};
}

// 7. example 1 at theta = 0 against the independent oracle
Outcome example_one_fixtures() {
  // independent NumPy oracle (tests/oracle/reference_values.py)
  constexpr double kSong = 3.93365590382434;
  constexpr double kZhang = 4.012741927868257;
  const DensityMatrix rho = example_state({.id = 1, .theta = 0.0});
  const ObservableSet set = example_set(1);
  const double sum = sum_variances(rho, set);
  const double song = song_bound(rho, set).value;
  const double zhang = zhang_bound(rho, set).value;
  const bool ok = std::abs(sum - 4.25) <= 1e-12 && std::abs(song - kSong) <= 1e-3 &&
                  std::abs(zhang - kZhang) <= 1e-3;
  return {ok, "sum " + format_real(sum) + " (4.25 +- 1e-12), song " + format_real(song) +
                  ", zhang " + format_real(zhang) + " (oracle +- 1e-3)"};
}

// 8. tightness along the example sweeps and at the spot checks
Outcome tightness() {
  double min_lb1_zhang = std::numeric_limits<double>::infinity();
  double min_lb2_zhang = min_lb1_zhang;
  double min_zhang = min_lb1_zhang;
  double min_lb1_song = min_lb1_zhang;
  std::size_t rows = 0;
  for (auto [id, steps] : {std::pair{1, 201}, std::pair{2, 101}}) {
    const SweepResult r = run_sweep({.example = id, .steps = steps});
    rows += r.rows.size();
    for (const SweepRow& row : r.rows) {
      min_lb1_zhang = std::min(min_lb1_zhang, row.lb1_opt - row.zhang);
      min_lb2_zhang = std::min(min_lb2_zhang, row.lb2_opt - row.zhang);
      min_zhang = std::min(min_zhang, row.zhang);
      min_lb1_song = std::min(min_lb1_song, row.lb1_opt - row.song);
    }
  }
  double min_spot = std::numeric_limits<double>::infinity();
  for (double theta : {std::numbers::pi / 4, std::numbers::pi / 2}) {
    const DensityMatrix rho = example_state({.id = 1, .theta = theta});
    const ObservableSet set = example_set(1);
    const double l = lb1(rho, set, 0.5).value;
    min_spot = std::min({min_spot, l - song_bound(rho, set).value, l - zhang_bound(rho, set).value});
  }
  const bool ok = rows == 302 && min_lb1_zhang >= 0.0 && min_lb2_zhang >= 0.0 &&
                  min_zhang >= 0.0 && min_lb1_song >= -1e-9 && min_spot > 0.0;
  return {ok, std::to_string(rows) + " rows, min(LB1-zhang) " + fmt(min_lb1_zhang) +
                  ", min(LB2-zhang) " + fmt(min_lb2_zhang) + ", min zhang " + fmt(min_zhang) +
                  ", min(LB1-song) " + fmt(min_lb1_song) + " (>= -1e-9), spot margin " +
                  fmt(min_spot) + " (> 0)"};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool same_files(const fs::path& a, const fs::path& b) {
  return fs::exists(a) && fs::exists(b) && slurp(a) == slurp(b);
}

int run_cli(const std::string& cli, const std::string& args) {
  const std::string cmd = "\"" + cli + "\" " + args + " > /dev/null 2>&1";
  return std::system(cmd.c_str());
}

// 9. byte-identical outputs across repeated runs
Outcome determinism(const fs::path& work, const std::string& cli) {
  fs::create_directories(work);
  const unsigned hw = std::max(2u, std::thread::hardware_concurrency());
  int compared = 0;
  bool ok = true;

  const SweepOptions sweep{.example = 2, .alpha_fixed = 5.0, .permutations = true};
  write_sweep_files(run_sweep(sweep, 1), work / "lib_a.csv");
  write_sweep_files(run_sweep(sweep, hw), work / "lib_b.csv");
  ok &= same_files(work / "lib_a.csv", work / "lib_b.csv");
  ok &= same_files(work / "lib_a.csv.manifest.json", work / "lib_b.csv.manifest.json");
  const AuditOptions audit{.trials = 200, .seed = 42};
  write_json_file(audit_report_json(run_audit(audit, 1)), work / "lib_audit_a.json");
  write_json_file(audit_report_json(run_audit(audit, hw)), work / "lib_audit_b.json");
  ok &= same_files(work / "lib_audit_a.json", work / "lib_audit_b.json");
  compared += 3;

  if (!cli.empty()) {
    for (const char* run : {"a", "b"}) {
      const std::string tag = run;
      ok &= run_cli(cli, "sweep --example 1 --alpha 0.5 --output \"" +
                             (work / ("cli_" + tag + ".csv")).string() + "\"") == 0;
      ok &= run_cli(cli, "audit --trials 100 --seed 9 --output \"" +
                             (work / ("cli_audit_" + tag + ".json")).string() + "\"") == 0;
    }
    ok &= same_files(work / "cli_a.csv", work / "cli_b.csv");
    ok &= same_files(work / "cli_a.csv.manifest.json", work / "cli_b.csv.manifest.json");
    ok &= same_files(work / "cli_audit_a.json", work / "cli_audit_b.json");
    compared += 3;
  }
  return {ok, std::to_string(compared) + " file pairs compared byte-for-byte" +
                  (cli.empty() ? " (library only)" : " (library and CLI)")};
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path work =
      argc > 1 ? fs::path(argv[1]) : fs::temp_directory_path() / "varbound_acceptance";
  const std::string cli = argc > 2 ? argv[2] : "";

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 norm identities", identity_suite},
      {"AC2 trace vs vectorization", oracle_equivalence},
      {"AC3 validity audit", validity_audit},
      {"AC4 specializations", specializations},
      {"AC5 symmetries", symmetries},
      {"AC6 zero law", zero_law},
      {"AC7 example 1 fixtures", example_one_fixtures},
      {"AC8 tightness", tightness},
      {"AC9 determinism", [&] { return determinism(work, cli); }},
  };

  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}

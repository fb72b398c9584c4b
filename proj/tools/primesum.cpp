// Copyright 2026 The primesum Authors
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

// primesum: weighted prime sums S(x), M(x), E(x) with verification reports.
//
//   primesum compute --x-max 1e6 --out run/
//   primesum verify  --x-max 1e6 --out run/
//   primesum report  run/checkpoints.dat --out run/

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "primesum/checkpoint_io.hpp"
#include "primesum/error.hpp"
#include "primesum/pipeline.hpp"
#include "primesum/report.hpp"

namespace fs = std::filesystem;
using namespace primesum;

namespace {

enum ExitCode : int {
  kOk = 0,
  kChecksFailed = 1,
  kUsage = 2,
  kIo = 3,
  kNumeric = 4,
};

constexpr const char* kCheckpointName = "checkpoints.dat";
constexpr const char* kCsvName = "checkpoints.csv";
constexpr const char* kVerificationName = "verification.csv";

struct CliOptions {
  RunConfig cfg;
  double x_max = 0.0;  // accepts 1e6 style input
  std::vector<double> lambdas;
  std::vector<std::string> tols;
  std::string out = ".";
  std::string resume;
  std::string checkpoint;  // report input
};

void add_run_options(CLI::App* app, CliOptions& o, bool need_x_max) {
  auto* xm = app->add_option("--x-max", o.x_max, "Upper limit of the prime sums");
  if (need_x_max) xm->required();
  app->add_option("--grid-start", o.cfg.grid_start, "First checkpoint x (default 100)");
  app->add_option("--grid-ratio", o.cfg.grid_ratio,
                  "Checkpoint spacing ratio (default 2^(1/4))");
  app->add_option("--segment-size", o.cfg.segment_size,
                  "Odd numbers per sieve segment (default 2^20)");
  app->add_option("--A", o.cfg.A, "Block ratio of the lower-bound check (default 8)");
  app->add_option("--lambda", o.lambdas, "Block ratio for the sandwich check (repeatable)")
      ->take_all()
      ->allow_extra_args(false);
  app->add_option("--tol", o.tols, "Tolerance override <check_id>=<value> (repeatable)")
      ->allow_extra_args(false);
  app->add_option("--out", o.out, "Output directory (default .)");
  app->add_option("--resume", o.resume, "Checkpoint file to continue from");
  app->add_option("--threads", o.cfg.threads, "Sieve and verification threads");
}

void finalize(CliOptions& o) {
  if (o.x_max > 0.0) {
    if (o.x_max != std::floor(o.x_max) || o.x_max > 9.2e18) {
      throw ConfigError(fmt::format("--x-max must be an integer (got {})", o.x_max));
    }
    o.cfg.x_max = static_cast<std::uint64_t>(o.x_max);
  }
  if (!o.lambdas.empty()) o.cfg.lambdas = o.lambdas;
  for (const auto& t : o.tols) {
    const auto eq = t.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ConfigError("--tol expects <check_id>=<value>, got '" + t + "'");
    }
    try {
      std::size_t used = 0;
      const std::string value = t.substr(eq + 1);
      const double v = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
      o.cfg.tolerances[t.substr(0, eq)] = v;
    } catch (const std::exception&) {
      throw ConfigError("--tol value is not a number in '" + t + "'");
    }
  }
  o.cfg.out_dir = o.out;
  if (!o.resume.empty()) o.cfg.resume_from = o.resume;
  std::error_code ec;
  fs::create_directories(o.cfg.out_dir, ec);
  if (ec || !fs::is_directory(o.cfg.out_dir)) {
    throw IoError("cannot create output directory " + o.cfg.out_dir.string());
  }
}

RunData compute_data(const RunConfig& cfg) {
  cfg.validate();
  std::optional<RunData> resumed;
  if (cfg.resume_from) resumed = resume(*cfg.resume_from, cfg);
  return run_compute(cfg, std::move(resumed));
}

int cmd_compute(const RunConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  const RunData data = compute_data(cfg);
  write_checkpoint_file(cfg.out_dir / kCheckpointName, cfg, data);
  write_checkpoint_csv_file(cfg.out_dir / kCsvName, data.grid_checkpoints());
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const auto& s = data.state.sums;
  std::cout << fmt::format("pi({}) = {}  S = {:.12g}  M = {:.12g}  E = {:.12g}\n",
                           data.x_max, s.n(), s.S(), s.M(), s.E());
  std::cout << fmt::format("{} checkpoints -> {} ({:.3f} s)\n",
                           data.grid_checkpoints().size(),
                           (cfg.out_dir / kCsvName).string(), secs);
  return kOk;
}

int cmd_verify(const RunConfig& cfg) {
  const RunData data = compute_data(cfg);
  const auto records = run_verification(cfg, data);
  {
    const auto path = cfg.out_dir / kVerificationName;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    write_verification_csv(out, records);
  }

  // one summary line per check_id, in first-seen order
  std::vector<std::string> order;
  std::map<std::string, std::tuple<std::size_t, std::size_t, double>> summary;
  for (const auto& r : records) {
    auto [it, fresh] = summary.try_emplace(r.check_id, 0, 0, 0.0);
    if (fresh) order.push_back(r.check_id);
    auto& [n, failed, worst] = it->second;
    ++n;
    if (!r.pass) ++failed;
    worst = std::max(worst, r.residual);
  }
  for (const auto& id : order) {
    const auto& [n, failed, worst] = summary[id];
    std::cout << fmt::format("{:<22} {:>5} records  max residual {:<12.3g} {}\n", id, n,
                             worst, failed == 0 ? "PASS" : fmt::format("FAIL ({})", failed));
  }
  const bool ok = all_pass(records);
  std::cout << (ok ? "all checks passed\n" : "verification FAILED\n");
  return ok ? kOk : kChecksFailed;
}

int cmd_report(const RunConfig& cfg, const std::string& checkpoint) {
  const auto file = read_checkpoint_file(checkpoint);
  const auto bundle = build_report(cfg, file);
  write_report(cfg.out_dir, bundle);
  std::cout << fmt::format("report for x_max = {} ({} checkpoints) -> {}\n",
                           bundle.config.x_max, bundle.points.size(),
                           (cfg.out_dir / "report.json").string());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted prime sums S(x), M(x), E(x) and their verification"};
  app.require_subcommand(1);

  CliOptions compute_opts, verify_opts, report_opts;
  auto* compute = app.add_subcommand("compute", "Sieve, accumulate and write checkpoints");
  add_run_options(compute, compute_opts, true);
  auto* verify = app.add_subcommand("verify", "Run every identity and inequality check");
  add_run_options(verify, verify_opts, true);
  auto* report = app.add_subcommand("report", "Emit JSON bundle and plot-ready CSVs");
  add_run_options(report, report_opts, false);
  report->add_option("checkpoint", report_opts.checkpoint, "Checkpoint file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*compute) {
      finalize(compute_opts);
      return cmd_compute(compute_opts.cfg);
    }
    if (*verify) {
      finalize(verify_opts);
      return cmd_verify(verify_opts.cfg);
    }
    finalize(report_opts);
    return cmd_report(report_opts.cfg, report_opts.checkpoint);
  } catch (const ConfigError& e) {
    std::cerr << "primesum: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "primesum: " << e.what() << '\n';
    return kIo;
  } catch (const Error& e) {
    std::cerr << "primesum: " << e.what() << '\n';
    return kNumeric;
  }
}

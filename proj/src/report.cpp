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

#include "primesum/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <future>
#include <numbers>
#include <ostream>

#include <fmt/format.h>

#include "primesum/asymptotics.hpp"
#include "primesum/calculus.hpp"
#include "primesum/error.hpp"

namespace primesum {

namespace {

using Axis = VerificationRecord::Axis;

VerificationRecord with_axis(VerificationRecord r, Axis axis) {
  r.axis = axis;
  return r;
}

const char* axis_name(Axis a) {
  switch (a) {
    case Axis::kIndex: return "n";
    case Axis::kX: return "x";
    case Axis::kT: return "t";
    case Axis::kNone: break;
  }
  return "none";
}

const char* kind_name(VerificationRecord::Kind k) {
  switch (k) {
    case VerificationRecord::Kind::kLowerBound: return "lower_bound";
    case VerificationRecord::Kind::kRelative: return "relative";
    case VerificationRecord::Kind::kEquality: break;
  }
  return "equality";
}

double central_difference(const std::function<double(double)>& f, double t) {
  const double d = t * 1e-5;
  return (f(t + d) - f(t - d)) / (2.0 * d);
}

}  // namespace

std::vector<VerificationRecord> derivative_checks(const RunConfig& cfg) {
  std::vector<VerificationRecord> out;
  const double tol_w = cfg.tolerance("derivative_fd_w", kDerivativeTolerance);
  const double tol_h = cfg.tolerance("derivative_fd_h", kDerivativeTolerance);
  for (double t : {3.0, 10.0, 1e3, 1e6}) {
    out.push_back(with_axis(
        make_relative_record("derivative_fd_w", t, central_difference(eval_w, t),
                             eval_w_prime(t), tol_w),
        Axis::kT));
    out.push_back(with_axis(
        make_relative_record("derivative_fd_h", t, central_difference(eval_h, t),
                             eval_h_prime(t), tol_h),
        Axis::kT));
  }

  const double e = std::numbers::e;
  out.push_back(with_axis(
      make_equality_record("derivative_zero_at_e", e,
                           std::fabs(eval_w_prime(e)) + std::fabs(eval_h_prime(e)),
                           0.0, cfg.tolerance("derivative_zero_at_e", 0.0)),
      Axis::kT));

  // 100 log-spaced points on (1, 1e9]: t = exp(log(1e9) * k / 100)
  std::uint64_t bad = 0;
  double first_bad = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double t = std::exp(std::log(1e9) * k / 100.0);
    const double wp = eval_w_prime(t);
    const double hp = eval_h_prime(t);
    const bool ok = t > e ? (wp < 0.0 && hp > 0.0) : (t < e ? hp < 0.0 && wp > 0.0 : true);
    if (!ok && bad++ == 0) first_bad = t;
  }
  auto sign = make_count_record("derivative_sign", first_bad, bad);
  sign.axis = bad > 0 ? Axis::kT : Axis::kNone;
  out.push_back(sign);
  return out;
}

std::vector<VerificationRecord> table_checks(const RunConfig& cfg, const RunData& data) {
  std::vector<VerificationRecord> out;
  const auto all = data.all_checkpoints();
  const auto grid = data.grid_checkpoints();

  auto mono = check_E_monotone(all);
  mono.tolerance = cfg.tolerance("E_monotone", 0.0);
  mono.pass = mono.residual <= mono.tolerance;
  out.push_back(mono);

  const double abel_tol = cfg.tolerance("abel_decomposition", kAbelTolerance);
  for (const auto& p : data.points) {
    out.push_back(with_axis(
        make_equality_record("abel_decomposition", p.cp.x, p.abel.direct_S,
                             p.abel.boundary_term - p.abel.integral_term, abel_tol),
        Axis::kX));
  }

  if (!all.empty()) {
    const SumTable table(all);
    const double floor_x = table.checkpoints().front().x;
    const double lb_tol = cfg.tolerance("lower_bound_A", kBoundSlack);
    for (const auto& cp : grid) {
      if (cp.x / cfg.A >= std::max(3.0, floor_x)) {
        out.push_back(lower_bound_check(cp.x, cfg.A, table, lb_tol));
      }
    }
    const double lo_tol = cfg.tolerance("block_sandwich_lower", kBoundSlack);
    const double hi_tol = cfg.tolerance("block_sandwich_upper", kBoundSlack);
    for (double lambda : cfg.lambdas) {
      for (const auto& cp : grid) {
        if (cp.x / lambda < std::max(3.0, floor_x)) continue;
        auto recs = sandwich_records(block_sandwich(cp.x, lambda, table));
        recs[0].tolerance = lo_tol;
        recs[0].pass = recs[0].residual <= lo_tol;
        recs[1].tolerance = hi_tol;
        recs[1].pass = recs[1].residual <= hi_tol;
        out.insert(out.end(), recs.begin(), recs.end());
      }
    }
  }

  out.push_back(check_ratios_positive(grid, data.state.an_sn.samples()));
  if (auto mc = check_mertens_contraction(grid)) out.push_back(*mc);
  return out;
}

std::vector<VerificationRecord> run_verification(const RunConfig& cfg, const RunData& data) {
  const auto x_max = static_cast<double>(data.x_max);
  const double stream_x = std::min(x_max, kMaxJumpCheckX);
  const auto pi_max = data.state.sums.n();
  const std::size_t pair_n = std::min<std::size_t>(kPairCheckTerms, pi_max);

  const auto launch = cfg.threads > 1 ? std::launch::async : std::launch::deferred;
  auto pair = std::async(launch, [&] {
    return check_pair_identity(pair_n, std::nullopt,
                               cfg.tolerance("pair_identity", kPairTolerance));
  });
  auto jump = std::async(launch, [&] {
    return check_jump_identity(stream_x, std::nullopt,
                               cfg.tolerance("jump_identity", kJumpTolerance),
                               cfg.threads);
  });
  auto weights = std::async(launch, [&] {
    auto r = check_weight_monotone(stream_x, cfg.threads);
    r.tolerance = cfg.tolerance("weight_monotone", 0.0);
    r.pass = r.residual <= r.tolerance;
    return r;
  });
  auto main_terms = std::async(launch, [&] {
    std::vector<VerificationRecord> out;
    const double rec_tol = cfg.tolerance("main_term_identity", kMainTermTolerance);
    const double quad_tol = std::max(rec_tol / 10.0, 1e-12);
    std::vector<double> xs;
    for (double x : {1e3, 1e6}) {
      if (x <= x_max) xs.push_back(x);
    }
    if (xs.empty() || xs.back() != x_max) xs.push_back(x_max);
    for (double x : xs) {
      auto r = main_term_identity(x, quad_tol);
      r.tolerance = rec_tol;
      r.pass = r.residual <= rec_tol;
      r.axis = Axis::kT;
      out.push_back(r);
    }
    return out;
  });

  std::vector<VerificationRecord> out = table_checks(cfg, data);
  for (auto& r : pair.get()) out.push_back(std::move(r));
  out.push_back(jump.get());
  out.push_back(weights.get());
  for (auto& r : main_terms.get()) out.push_back(std::move(r));
  for (auto& r : derivative_checks(cfg)) out.push_back(std::move(r));
  return out;
}

bool all_pass(std::span<const VerificationRecord> records) {
  return std::all_of(records.begin(), records.end(),
                     [](const VerificationRecord& r) { return r.pass; });
}

void write_verification_csv(std::ostream& out, std::span<const VerificationRecord> records) {
  out << "check_id,axis,location,lhs,rhs,residual,tolerance,pass\n";
  for (const auto& r : records) {
    out << fmt::format("{},{},{},{},{},{},{},{}\n", r.check_id, axis_name(r.axis),
                       format_real(r.location), format_real(r.lhs), format_real(r.rhs),
                       format_real(r.residual), format_real(r.tolerance),
                       r.pass ? "true" : "false");
  }
}

ReportBundle build_report(const RunConfig& cfg_in, const CheckpointFile& file) {
  const auto started = std::chrono::steady_clock::now();
  ReportBundle b;
  b.config = cfg_in;
  b.config.grid_start = file.header.grid_start;
  b.config.grid_ratio = file.header.grid_ratio;
  b.config.x_max = file.data.x_max;
  b.points = file.data.points;
  b.records = table_checks(b.config, file.data);

  const auto grid = file.data.grid_checkpoints();
  const auto x_max = static_cast<double>(file.data.x_max);
  if (!grid.empty()) {
    auto add_bands = [&](double lo, double hi) {
      try {
        for (auto& band : empirical_constants(grid, lo, hi)) b.bands.push_back(band);
      } catch (const ConfigError&) {
        // window not covered by this run
      }
    };
    add_bands(1e3, x_max);
    for (double lo = 1e2; lo < x_max; lo *= 100.0) add_bands(lo, lo * 100.0);
  }
  b.an_sn = file.data.state.an_sn.samples();
  try {
    b.bands.push_back(an_Sn_band(b.an_sn, 1e3, x_max));
  } catch (const ConfigError&) {
  }

  const auto all = file.data.all_checkpoints();
  if (!all.empty()) {
    const SumTable table(all);
    const double floor_x = table.checkpoints().front().x;
    for (double lambda : b.config.lambdas) {
      for (const auto& cp : grid) {
        if (cp.x / lambda >= std::max(3.0, floor_x)) {
          b.blocks.push_back(block_sandwich(cp.x, lambda, table));
        }
      }
    }
  }
  for (const auto& cp : grid) {
    if (cp.x > 2.0) b.main_term_growth.emplace_back(cp.x, main_term_growth(cp.x));
  }

  b.metadata.created = file.header.created;
  b.metadata.prime_count = file.data.state.sums.n();
  b.metadata.last_prime = file.data.state.sums.last_prime();
  b.metadata.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return b;
}

nlohmann::json to_json(const ReportBundle& b) {
  using nlohmann::json;
  json j;
  j["schema"] = "primesum-report";
  j["schema_version"] = 1;

  const auto& c = b.config;
  j["config"] = {{"x_max", c.x_max},          {"grid_start", c.grid_start},
                 {"grid_ratio", c.grid_ratio}, {"segment_size", c.segment_size},
                 {"A", c.A},                   {"lambdas", c.lambdas},
                 {"tolerances", c.tolerances}, {"threads", c.threads}};

  j["checkpoints"] = json::array();
  for (const auto& p : b.points) {
    const auto& cp = p.cp;
    j["checkpoints"].push_back({{"x", cp.x},
                                {"pi", cp.pi},
                                {"S", cp.S},
                                {"M", cp.M},
                                {"E", cp.E},
                                {"r_S", cp.r_S},
                                {"r_E_pi", cp.r_E_pi},
                                {"r_E_x", cp.r_E_x},
                                {"mertens_remainder", cp.mertens_remainder},
                                {"on_grid", p.on_grid}});
  }

  j["verification"] = json::array();
  for (const auto& r : b.records) {
    j["verification"].push_back({{"check_id", r.check_id},
                                 {"kind", kind_name(r.kind)},
                                 {"axis", axis_name(r.axis)},
                                 {"location", r.location},
                                 {"lhs", r.lhs},
                                 {"rhs", r.rhs},
                                 {"residual", r.residual},
                                 {"tolerance", r.tolerance},
                                 {"pass", r.pass}});
  }
  j["all_pass"] = all_pass(b.records);

  j["ratio_bands"] = json::array();
  for (const auto& r : b.bands) {
    j["ratio_bands"].push_back({{"name", r.name},
                                {"x_min", r.x_min},
                                {"x_max", r.x_max},
                                {"inf_value", r.inf_value},
                                {"inf_at", r.inf_at},
                                {"sup_value", r.sup_value},
                                {"sup_at", r.sup_at}});
  }

  j["block_stats"] = json::array();
  for (const auto& s : b.blocks) {
    j["block_stats"].push_back({{"x", s.x},
                                {"x_lo", s.x_lo},
                                {"lambda", s.lambda},
                                {"delta_S", s.delta_S},
                                {"delta_pi", s.delta_pi},
                                {"lower", s.lower},
                                {"upper", s.upper}});
  }

  j["abel"] = json::array();
  for (const auto& p : b.points) {
    j["abel"].push_back({{"x", p.abel.x},
                         {"direct_S", p.abel.direct_S},
                         {"boundary_term", p.abel.boundary_term},
                         {"integral_term", p.abel.integral_term},
                         {"residual", p.abel.residual}});
  }

  j["an_sn"] = json::array();
  for (const auto& s : b.an_sn) {
    j["an_sn"].push_back({{"n", s.n}, {"prime", s.prime}, {"value", s.value}});
  }

  j["main_term_growth"] = json::array();
  for (const auto& [x, g] : b.main_term_growth) {
    j["main_term_growth"].push_back({{"x", x}, {"ratio", g}});
  }

  j["metadata"] = {{"library_version", b.metadata.library_version},
                   {"created", b.metadata.created},
                   {"wall_time_s", b.metadata.wall_time_s},
                   {"prime_count", b.metadata.prime_count},
                   {"last_prime", b.metadata.last_prime}};
  return j;
}

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

}  // namespace

void write_report(const std::filesystem::path& out_dir, const ReportBundle& b) {
  {
    auto out = open_out(out_dir / "report.json");
    out << to_json(b).dump(2) << '\n';
  }
  const std::pair<const char*, double Checkpoint::*> series[] = {
      {"r_S", &Checkpoint::r_S},
      {"r_E_pi", &Checkpoint::r_E_pi},
      {"r_E_x", &Checkpoint::r_E_x},
      {"mertens_remainder", &Checkpoint::mertens_remainder},
  };
  for (const auto& [name, field] : series) {
    auto out = open_out(out_dir / fmt::format("series_{}.csv", name));
    out << "x,value\n";
    for (const auto& p : b.points) {
      if (p.on_grid) out << format_real(p.cp.x) << ',' << format_real(p.cp.*field) << '\n';
    }
  }
  {
    auto out = open_out(out_dir / "series_main_term_growth.csv");
    out << "x,value\n";
    for (const auto& [x, g] : b.main_term_growth) {
      out << format_real(x) << ',' << format_real(g) << '\n';
    }
  }
  {
    auto out = open_out(out_dir / "an_sn.csv");
    out << "n,prime,value\n";
    for (const auto& s : b.an_sn) {
      out << s.n << ',' << s.prime << ',' << format_real(s.value) << '\n';
    }
  }
  {
    auto out = open_out(out_dir / "blocks.csv");
    out << "x,x_lo,lambda,delta_S,delta_pi,lower,upper\n";
    for (const auto& s : b.blocks) {
      out << fmt::format("{},{},{},{},{},{},{}\n", format_real(s.x), format_real(s.x_lo),
                         format_real(s.lambda), format_real(s.delta_S), s.delta_pi,
                         format_real(s.lower), format_real(s.upper));
    }
  }
  {
    auto out = open_out(out_dir / "abel.csv");
    out << "x,direct_S,boundary_term,integral_term,residual\n";
    for (const auto& p : b.points) {
      out << fmt::format("{},{},{},{},{}\n", format_real(p.abel.x),
                         format_real(p.abel.direct_S), format_real(p.abel.boundary_term),
                         format_real(p.abel.integral_term), format_real(p.abel.residual));
    }
  }
}

}  // namespace primesum

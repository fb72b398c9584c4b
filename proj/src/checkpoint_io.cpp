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

#include "primesum/checkpoint_io.hpp"

#include <charconv>
#include <chrono>
#include <fstream>
#include <sstream>
#include <vector>

#include <fmt/chrono.h>
#include <fmt/format.h>

#include "primesum/error.hpp"

namespace primesum {

std::string format_real(double v) { return fmt::format("{:.17g}", v); }

namespace {

constexpr const char* kColumns =
    "x pi S M E r_S r_E_pi r_E_x mertens_remainder abel_direct_S "
    "abel_boundary abel_integral abel_residual on_grid";
constexpr std::size_t kRowFields = 14;

std::string utc_now() {
  return fmt::format("{:%Y-%m-%dT%H:%M:%SZ}",
                     fmt::gmtime(std::chrono::system_clock::to_time_t(
                         std::chrono::system_clock::now())));
}

std::string sample_fields(const AnSnSample& s) {
  return fmt::format("{} {} {}", s.n, s.prime, format_real(s.value));
}

// Splits a line into whitespace-separated tokens.
std::vector<std::string> tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::vector<std::string> next(const char* expected_key, std::size_t fields) {
    auto t = next_any();
    if (t.empty() || t[0] != expected_key) {
      fail(fmt::format("expected '{}'", expected_key));
    }
    if (t.size() != fields + 1) {
      fail(fmt::format("'{}' needs {} fields, found {}", expected_key, fields,
                       t.size() - 1));
    }
    return t;
  }

  std::vector<std::string> next_any() {
    std::string line;
    if (!std::getline(in_, line)) fail("unexpected end of file");
    ++line_no_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return tokens(line);
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw FormatError(fmt::format("checkpoint line {}: {}", line_no_, what));
  }

  double real(const std::string& s) const {
    double v = 0.0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) fail("bad real '" + s + "'");
    return v;
  }

  std::uint64_t integer(const std::string& s, int base = 10) const {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v, base);
    if (ec != std::errc{} || p != s.data() + s.size()) fail("bad integer '" + s + "'");
    return v;
  }

  AnSnSample sample(const std::vector<std::string>& t) const {
    return {integer(t[1]), integer(t[2]), real(t[3])};
  }

 private:
  std::istream& in_;
  int line_no_ = 0;
};

}  // namespace

void write_checkpoint(std::ostream& out, const RunConfig& cfg, const RunData& data,
                      const std::string& created) {
  const auto& st = data.state;
  out << kCheckpointMagic << ' ' << kCheckpointFormatVersion << '\n';
  out << fmt::format("config_hash {:016x}\n", config_hash(cfg));
  out << "grid_start " << format_real(cfg.grid_start) << '\n';
  out << "grid_ratio " << format_real(cfg.grid_ratio) << '\n';
  out << "x_max " << data.x_max << '\n';
  out << "created " << created << '\n';
  out << fmt::format("state {} {} {} {} {} {} {} {} {} {} {} {}\n", st.sums.n(),
                     st.sums.last_prime(), format_real(st.sums.S_sum().raw_sum()),
                     format_real(st.sums.S_sum().residue()),
                     format_real(st.sums.M_sum().raw_sum()),
                     format_real(st.sums.M_sum().residue()),
                     format_real(st.sums.E_sum().raw_sum()),
                     format_real(st.sums.E_sum().residue()),
                     format_real(st.abel.integral().raw_sum()),
                     format_real(st.abel.integral().residue()),
                     format_real(st.abel.last_h()), format_real(st.x_done));
  out << "an_sn_min " << sample_fields(st.an_sn.min()) << '\n';
  out << "an_sn_max " << sample_fields(st.an_sn.max()) << '\n';
  out << "an_sn_last " << sample_fields(st.an_sn.last()) << '\n';
  out << "an_sn_samples " << st.an_sn.stored_samples().size() << '\n';
  for (const auto& s : st.an_sn.stored_samples()) {
    out << "an_sn_sample " << sample_fields(s) << '\n';
  }
  out << "columns " << kColumns << '\n';
  out << "rows " << data.points.size() << '\n';
  for (const auto& p : data.points) {
    const auto& c = p.cp;
    out << fmt::format("row {} {} {} {} {} {} {} {} {} {} {} {} {} {}\n",
                       format_real(c.x), c.pi, format_real(c.S), format_real(c.M),
                       format_real(c.E), format_real(c.r_S), format_real(c.r_E_pi),
                       format_real(c.r_E_x), format_real(c.mertens_remainder),
                       format_real(p.abel.direct_S), format_real(p.abel.boundary_term),
                       format_real(p.abel.integral_term), format_real(p.abel.residual),
                       p.on_grid ? 1 : 0);
  }
  out << "end\n";
}

void write_checkpoint_file(const std::filesystem::path& path, const RunConfig& cfg,
                           const RunData& data) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    write_checkpoint(out, cfg, data, utc_now());
    out.flush();
    if (!out) throw IoError("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cannot move checkpoint into place at " + path.string());
}

CheckpointFile read_checkpoint(std::istream& in) {
  LineReader rd(in);
  CheckpointFile f;
  auto& h = f.header;

  if (in.peek() == std::char_traits<char>::eof()) {
    throw FormatError("empty checkpoint file");
  }
  const auto magic = rd.next_any();
  if (magic.size() != 2 || magic[0] != kCheckpointMagic) {
    throw FormatError("not a checkpoint file (missing '" +
                      std::string(kCheckpointMagic) + "' header)");
  }
  h.version = static_cast<int>(rd.integer(magic[1]));
  if (h.version != kCheckpointFormatVersion) {
    throw FormatError(fmt::format("checkpoint format version {} is not supported (expected {})",
                                  h.version, kCheckpointFormatVersion));
  }
  h.config_hash = rd.integer(rd.next("config_hash", 1)[1], 16);
  h.grid_start = rd.real(rd.next("grid_start", 1)[1]);
  h.grid_ratio = rd.real(rd.next("grid_ratio", 1)[1]);
  h.x_max = rd.integer(rd.next("x_max", 1)[1]);
  h.created = rd.next("created", 1)[1];

  auto s = rd.next("state", 12);
  auto& st = f.data.state;
  st.sums = SumState::restore(rd.integer(s[1]), rd.integer(s[2]),
                              NeumaierSum(rd.real(s[3]), rd.real(s[4])),
                              NeumaierSum(rd.real(s[5]), rd.real(s[6])),
                              NeumaierSum(rd.real(s[7]), rd.real(s[8])));
  st.abel = AbelAccumulator::restore(NeumaierSum(rd.real(s[9]), rd.real(s[10])),
                                     rd.real(s[11]));
  st.x_done = rd.real(s[12]);

  const auto mn = rd.sample(rd.next("an_sn_min", 3));
  const auto mx = rd.sample(rd.next("an_sn_max", 3));
  const auto last = rd.sample(rd.next("an_sn_last", 3));
  const auto n_samples = rd.integer(rd.next("an_sn_samples", 1)[1]);
  std::vector<AnSnSample> samples;
  for (std::uint64_t i = 0; i < n_samples; ++i) {
    samples.push_back(rd.sample(rd.next("an_sn_sample", 3)));
  }
  st.an_sn = AnSnTracker::restore(std::move(samples), mn, mx, last);

  const auto cols = rd.next_any();
  if (cols.empty() || cols[0] != "columns" ||
      tokens(kColumns) != std::vector<std::string>(cols.begin() + 1, cols.end())) {
    rd.fail("unexpected column layout");
  }
  const auto n_rows = rd.integer(rd.next("rows", 1)[1]);
  f.data.x_max = h.x_max;
  double prev_x = -1.0;
  for (std::uint64_t i = 0; i < n_rows; ++i) {
    const auto r = rd.next("row", kRowFields);
    RecordedPoint p;
    p.cp.x = rd.real(r[1]);
    p.cp.pi = rd.integer(r[2]);
    p.cp.S = rd.real(r[3]);
    p.cp.M = rd.real(r[4]);
    p.cp.E = rd.real(r[5]);
    p.cp.r_S = rd.real(r[6]);
    p.cp.r_E_pi = rd.real(r[7]);
    p.cp.r_E_x = rd.real(r[8]);
    p.cp.mertens_remainder = rd.real(r[9]);
    p.abel.x = p.cp.x;
    p.abel.direct_S = rd.real(r[10]);
    p.abel.boundary_term = rd.real(r[11]);
    p.abel.integral_term = rd.real(r[12]);
    p.abel.residual = rd.real(r[13]);
    const auto flag = rd.integer(r[14]);
    if (flag > 1) rd.fail("on_grid must be 0 or 1");
    p.on_grid = flag == 1;
    if (!(p.cp.x > prev_x)) rd.fail("rows are not ascending in x");
    prev_x = p.cp.x;
    f.data.points.push_back(p);
  }
  rd.next("end", 0);
  return f;
}

CheckpointFile read_checkpoint_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open checkpoint file " + path.string());
  return read_checkpoint(in);
}

RunData resume(const std::filesystem::path& path, const RunConfig& cfg) {
  auto file = read_checkpoint_file(path);
  const auto want = config_hash(cfg);
  if (file.header.config_hash != want) {
    throw ConfigError(fmt::format(
        "refusing to resume from {}: its grid (start {}, ratio {}, hash {:016x}) "
        "differs from the requested grid (start {}, ratio {}, hash {:016x}); "
        "continuing would mix two grids in one table",
        path.string(), format_real(file.header.grid_start),
        format_real(file.header.grid_ratio), file.header.config_hash,
        format_real(cfg.grid_start), format_real(cfg.grid_ratio), want));
  }
  return std::move(file.data);
}

void write_checkpoint_csv(std::ostream& out, std::span<const Checkpoint> checkpoints) {
  out << "x,pi,S,M,E,r_S,r_E_pi,r_E_x,mertens_remainder\n";
  for (const auto& c : checkpoints) {
    out << fmt::format("{},{},{},{},{},{},{},{},{}\n", format_real(c.x), c.pi,
                       format_real(c.S), format_real(c.M), format_real(c.E),
                       format_real(c.r_S), format_real(c.r_E_pi),
                       format_real(c.r_E_x), format_real(c.mertens_remainder));
  }
}

void write_checkpoint_csv_file(const std::filesystem::path& path,
                               std::span<const Checkpoint> checkpoints) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  write_checkpoint_csv(out, checkpoints);
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace primesum

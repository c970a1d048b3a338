// Copyright 2026 The labelsat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// labelsat command line: generation, verification, export, rendering and
// throughput measurement.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or config error.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "labelsat/labelsat.hpp"

namespace fs = std::filesystem;
using namespace labelsat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

// Option id written for records whose generator is unknown (imported DIMACS).
constexpr std::uint8_t kUnknownOption = 0xFF;

struct Common {
  std::uint64_t seed = 0;
  std::string config;
  unsigned n = 0;
  std::size_t m = 0;
  std::size_t count = 1;
  std::string out;
  unsigned workers = 1;
  std::string format;
  std::size_t max_vars = 0;
  std::size_t max_clauses = 0;
};

ExportFormat parse_format(const std::string& s) {
  if (s == "dimacs-dir") return ExportFormat::DimacsDir;
  if (s == "packed") return ExportFormat::Packed;
  throw ConfigError("unknown format '" + s + "' (expected dimacs-dir or packed)");
}

GeneratorMixConfig load_config(const Common& c) { return c.config.empty() ? default_mix() : load_mix(c.config); }

void add_generation_flags(CLI::App* cmd, Common& c, const char* default_format) {
  c.format = default_format;
  cmd->add_option("--seed", c.seed, "Base seed; record i uses stream i");
  cmd->add_option("--config", c.config, "Mix configuration (JSON)")->check(CLI::ExistingFile);
  cmd->add_option("--n", c.n, "Variable count (default: drawn from the config range)")->check(CLI::PositiveNumber);
  cmd->add_option("--m", c.m, "Clause count (default: drawn from the clause-ratio table)")->check(CLI::PositiveNumber);
  cmd->add_option("--count", c.count, "Number of problems");
  cmd->add_option("--out", c.out, "Output directory (dimacs-dir) or file (packed)")->required();
  cmd->add_option("--workers", c.workers, "Generator threads")->check(CLI::PositiveNumber);
  cmd->add_option("--format", c.format, "dimacs-dir or packed")->check(CLI::IsMember({"dimacs-dir", "packed"}));
  cmd->add_option("--max-vars", c.max_vars, "Skip records with more variables (0 = no cap)");
  cmd->add_option("--max-clauses", c.max_clauses, "Skip records with more clauses (0 = no cap)");
}

int generate(const Common& c, GeneratorMixConfig mix) {
  const auto hash = config_hash(mix);
  std::vector<DatasetRecord> records;
  if (c.n != 0 && c.m != 0) {
    records = generate_records_at(mix, c.n, c.m, c.seed, c.count, c.workers);
  } else {
    if (c.n != 0) mix.min_vars = mix.max_vars = c.n;
    if (c.m != 0) throw ConfigError("--m requires --n");
    records = generate_records(mix, c.seed, c.count, c.workers);
  }
  BatchSpec caps;
  caps.max_vars = c.max_vars;
  caps.max_clauses = c.max_clauses;
  const auto manifest = export_dataset(records, c.out, parse_format(c.format), caps, c.seed, hash);
  std::cout << "wrote " << manifest.records << " records to " << c.out;
  if (manifest.skipped) std::cout << " (" << manifest.skipped << " skipped over cap)";
  std::cout << "\n";
  return kExitOk;
}

struct LoadedRecord {
  std::string name;
  Cnf cnf;
  Label label;
};

std::vector<LoadedRecord> load_any(const fs::path& path) {
  std::vector<LoadedRecord> out;
  if (fs::is_directory(path)) {
    for (const auto& e : read_labels(path / "labels.tsv"))
      out.push_back({e.filename, read_dimacs_file((path / e.filename).string()), e.label});
  } else {
    if (!looks_packed(path)) throw FormatError(path.string() + ": not a packed dataset or a dataset directory");
    const auto recs = read_packed(path);
    for (std::size_t i = 0; i < recs.size(); ++i)
      out.push_back({"record " + std::to_string(i), from_dense(recs[i].encoding), recs[i].label});
  }
  return out;
}

int verify(const std::string& input, Var cap) {
  if (cap > kBruteForceMaxVars)
    throw ConfigError("--max-vars above the brute-force cap of " + std::to_string(kBruteForceMaxVars));
  const auto records = load_any(input);
  std::size_t checked = 0, agree = 0, skipped = 0;
  for (const auto& r : records) {
    if (r.cnf.num_vars() > cap) {
      ++skipped;
      continue;
    }
    ++checked;
    const bool sat = is_satisfiable(r.cnf);
    if (sat == (r.label == Label::Sat)) ++agree;
    else
      std::cout << "MISMATCH " << r.name << ": labeled " << to_string(r.label) << ", oracle says "
                << (sat ? "SAT" : "UNSAT") << "\n";
  }
  std::cout << "checked " << checked << " of " << records.size() << " records";
  if (skipped) std::cout << " (" << skipped << " above " << cap << " variables skipped)";
  std::cout << "\n";
  if (checked == 0) {
    std::cout << "nothing to verify\n";
    return kExitOk;
  }
  const double pct = 100.0 * static_cast<double>(agree) / static_cast<double>(checked);
  if (agree == checked) {
    std::cout << "100% agreement\n";
    return kExitOk;
  }
  std::printf("%.2f%% agreement (%zu mismatches)\n", pct, checked - agree);
  return kExitMismatch;
}

int convert(const std::string& input, const Common& c) {
  const auto loaded = load_any(input);
  std::vector<DatasetRecord> records;
  records.reserve(loaded.size());
  std::optional<std::vector<DatasetRecord>> packed;
  if (!fs::is_directory(input)) packed = read_packed(input);
  for (std::size_t i = 0; i < loaded.size(); ++i) {
    const auto option = packed ? (*packed)[i].option : kUnknownOption;
    records.push_back({to_dense(loaded[i].cnf), loaded[i].label, option, 0, 0});
  }
  BatchSpec caps;
  caps.max_vars = c.max_vars;
  caps.max_clauses = c.max_clauses;
  const auto manifest = export_dataset(records, c.out, parse_format(c.format), caps);
  std::cout << "wrote " << manifest.records << " records to " << c.out << "\n";
  return kExitOk;
}

int render(const std::string& input, const std::string& out, unsigned scale) {
  const auto cnf = read_dimacs_file(input, DimacsMode::Lenient);
  const auto img = render_image(to_dense(cnf), Palette{}, scale);
  write_ppm(out, img);
  std::cout << "wrote " << img.width << "x" << img.height << " image to " << out << "\n";
  return kExitOk;
}

int bench(const Common& c, double seconds) {
  const auto mix = load_config(c);
  const Var n = c.n ? c.n : 15;
  const std::size_t m = c.m ? c.m : static_cast<std::size_t>(std::llround(4.27 * n));
  const auto report = benchmark_throughput(mix, n, m, std::chrono::duration<double>(seconds), c.workers, c.seed);
  std::cout << report.to_json().dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Labeled CNF generation, verification and export"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "labelsat 1.0.0");

  Common sat, unsat, mixed, conv, bench_opts;
  bool deep = false;
  auto* gen_sat = app.add_subcommand("gen-sat", "Generate satisfiable problems with witnesses");
  add_generation_flags(gen_sat, sat, "dimacs-dir");
  auto* gen_unsat = app.add_subcommand("gen-unsat", "Generate unsatisfiable problems by blooming");
  add_generation_flags(gen_unsat, unsat, "dimacs-dir");
  gen_unsat->add_flag("--deep", deep, "Use the deep bloom preset instead of the shallow one");
  auto* gen_mix = app.add_subcommand("gen-mix", "Generate a labeled mix of problems");
  add_generation_flags(gen_mix, mixed, "packed");

  std::string verify_in;
  unsigned verify_cap = kBruteForceMaxVars;
  auto* ver = app.add_subcommand("verify", "Check labels against the brute-force oracle");
  ver->add_option("input", verify_in, "Dataset directory (with labels.tsv) or packed file")->required();
  ver->add_option("--max-vars", verify_cap, "Skip problems with more variables");

  double duration = 5.0;
  auto* ben = app.add_subcommand("bench", "Measure generation throughput");
  ben->add_option("--n", bench_opts.n, "Variable count (default 15)")->check(CLI::PositiveNumber);
  ben->add_option("--m", bench_opts.m, "Clause count (default round(4.27 n))")->check(CLI::PositiveNumber);
  ben->add_option("--duration", duration, "Seconds to run");
  ben->add_option("--workers", bench_opts.workers, "Generator threads")->check(CLI::PositiveNumber);
  ben->add_option("--seed", bench_opts.seed, "Seed");
  ben->add_option("--config", bench_opts.config, "Mix configuration (JSON)")->check(CLI::ExistingFile);

  std::string render_in, render_out;
  unsigned scale = 1;
  auto* ren = app.add_subcommand("render", "Render a DIMACS file as a PPM image");
  ren->add_option("input", render_in, "DIMACS file")->required()->check(CLI::ExistingFile);
  ren->add_option("--out", render_out, "Output PPM path")->required();
  ren->add_option("--scale", scale, "Pixels per cell")->check(CLI::PositiveNumber);

  std::string conv_in;
  conv.format = "packed";
  auto* exp = app.add_subcommand("export", "Convert between dimacs-dir and packed datasets");
  exp->add_option("input", conv_in, "Dataset directory or packed file")->required();
  exp->add_option("--out", conv.out, "Output path")->required();
  exp->add_option("--format", conv.format, "dimacs-dir or packed")->check(CLI::IsMember({"dimacs-dir", "packed"}));
  exp->add_option("--max-vars", conv.max_vars, "Skip records with more variables (0 = no cap)");
  exp->add_option("--max-clauses", conv.max_clauses, "Skip records with more clauses (0 = no cap)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_sat) return generate(sat, single_option_mix(GeneratorOption::SatUniformBias, load_config(sat)));
    if (*gen_unsat)
      return generate(unsat, single_option_mix(deep ? GeneratorOption::UnsatDeep : GeneratorOption::UnsatShallow,
                                               load_config(unsat)));
    if (*gen_mix) return generate(mixed, load_config(mixed));
    if (*ver) return verify(verify_in, verify_cap);
    if (*ben) return bench(bench_opts, duration);
    if (*ren) return render(render_in, render_out, scale);
    if (*exp) return convert(conv_in, conv);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

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

#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "labelsat/dense.hpp"
#include "labelsat/mix.hpp"
#include "labelsat/rng.hpp"

namespace labelsat {

// Published GPU figures for context only; not targets for this hardware.
struct ReferenceThroughput {
  Var n;
  std::size_t m;
  double problems_per_sec;
};

inline constexpr ReferenceThroughput kReferenceThroughput[] = {
    {15, 64, 530.0},
    {1500, 16500, 128.0},
};

struct BenchReport {
  Var n = 0;
  std::size_t m = 0;
  unsigned workers = 0;
  double seconds = 0;
  std::uint64_t problems = 0;
  std::uint64_t cells = 0;
  double problems_per_sec = 0;
  double cells_per_sec = 0;

  nlohmann::json to_json() const {
    nlohmann::json refs = nlohmann::json::array();
    for (const auto& r : kReferenceThroughput)
      refs.push_back({{"n", r.n}, {"m", r.m}, {"problems_per_sec", r.problems_per_sec},
                      {"hardware", "reference GPU, not this machine"}});
    return {{"n", n},
            {"m", m},
            {"workers", workers},
            {"seconds", seconds},
            {"problems", problems},
            {"cells", cells},
            {"problems_per_sec", problems_per_sec},
            {"cells_per_sec", cells_per_sec},
            {"reference", refs}};
  }
};

// Generates problems of shape (n, m) from the mix, including the dense
// encoding, on `workers` threads until `duration` elapses. Nothing is exported.
inline BenchReport benchmark_throughput(const GeneratorMixConfig& mix, Var n, std::size_t m,
                                        std::chrono::duration<double> duration, unsigned workers = 1,
                                        std::uint64_t seed = 0) {
  BenchReport report;
  report.n = n;
  report.m = m;
  report.workers = std::max(1u, workers);
  if (duration.count() <= 0) return report;

  std::atomic<std::uint64_t> problems{0}, cells{0};
  const auto start = std::chrono::steady_clock::now();
  const auto deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(duration);
  auto work = [&](unsigned w) {
    RngState rng(seed, w);
    std::uint64_t local_p = 0, local_c = 0;
    do {
      const auto s = sample_problem_at(mix, n, m, rng);
      const auto enc = to_dense(s.problem.cnf);
      ++local_p;
      local_c += enc.rows() * enc.cols();
    } while (std::chrono::steady_clock::now() < deadline);
    problems += local_p;
    cells += local_c;
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < report.workers; ++w) pool.emplace_back(work, w);
    work(0);
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report.problems = problems;
  report.cells = cells;
  report.problems_per_sec = report.problems / report.seconds;
  report.cells_per_sec = report.cells / report.seconds;
  return report;
}

}  // namespace labelsat

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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <set>
#include <string>

#include "labelsat/labelsat.hpp"
#include "test_support.hpp"

using namespace labelsat;
using labelsat::testing::as_ints;
using labelsat::testing::naive_eval;
using labelsat::testing::naive_satisfiable;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::uint64_t bits_of(const Assignment& a) {
  std::uint64_t b = 0;
  for (std::size_t j = 0; j < a.size(); ++j) b |= std::uint64_t(a[j]) << j;
  return b;
}

// n in [4, 20] and distributions as the default mix draws them.
struct Draw {
  Var n;
  std::size_t m;
  DistributionSet d;
};

Draw draw_shape(const GeneratorMixConfig& mix, RngState& rng) {
  const bool shift = rng.bernoulli(0.5);
  auto d = draw_distributions(mix, shift, rng);
  const auto n = static_cast<Var>(rng.uniform_int(4, 20));
  const auto m = sample_clause_count(clause_ratio_for(mix, d, shift), n, rng);
  return {n, m, std::move(d)};
}

Outcome sat_soundness() {
  const auto mix = default_mix();
  std::size_t witness_fail = 0, oracle_fail = 0;
  const int N = 10000;
  for (int i = 0; i < N; ++i) {
    RngState rng(101, i);
    const auto s = draw_shape(mix, rng);
    const auto p = generate_sat(sat_config(s.n, s.m, s.d), rng);
    if (!naive_eval(as_ints(p.cnf), bits_of(*p.assignment()), static_cast<int>(s.n))) ++witness_fail;
    const auto r = brute_force_sat(p.cnf);
    if (!r.satisfiable || !naive_eval(as_ints(p.cnf), bits_of(r.witness), static_cast<int>(s.n))) ++oracle_fail;
  }
  return {witness_fail == 0 && oracle_fail == 0,
          std::to_string(N) + " instances, witness failures " + std::to_string(witness_fail) +
              ", brute-force disagreements " + std::to_string(oracle_fail)};
}

Outcome unsat_soundness() {
  const auto mix = default_mix();
  std::size_t fail = 0;
  for (int i = 0; i < 2500; ++i) {
    RngState rng(202, i);
    const auto s = draw_shape(mix, rng);
    const bool deep = rng.bernoulli(0.5);
    const auto cfg = unsat_config(mix, s.n, s.m, s.d, deep);
    const auto p = i < 2000 ? generate_unsat(cfg, rng) : unsat_with_sat_tail(cfg, sat_config(s.n, s.m, s.d), rng);
    if (p.cnf.num_clauses() != s.m || brute_force_sat(p.cnf).satisfiable) ++fail;
  }
  return {fail == 0, "2000 bloomed + 500 with satisfiable tail, failures " + std::to_string(fail)};
}

// Every assignment satisfying both children satisfies the parent.
bool implies(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& parent, int v) {
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << v); ++bits)
    if (naive_eval({a}, bits, v) && naive_eval({b}, bits, v) && !naive_eval({parent}, bits, v)) return false;
  return true;
}

Outcome resolution_inversion() {
  std::size_t pairs = 0, fail = 0;
  for (int t = 0; t < 1000; ++t) {
    RngState rng(303, t);
    const Var n = 2 + static_cast<Var>(rng.uniform_below(9));
    const auto prob = labelsat::testing::random_cnf(rng, n, 1 + rng.uniform_below(10), n - 1);
    const auto bloom = rng.bernoulli(0.5) ? DistributionSpec{dist::BloomWeights{0.48, 0.48, 0.02}}
                                          : DistributionSpec{dist::BloomWeights{1, 1, 1}};
    const auto out = res_search(prob, dist::UniformIndex{}, bloom, rng);
    const auto parents = as_ints(prob), kids = as_ints(out);
    if (kids.size() != 2 * parents.size()) {
      ++fail;
      continue;
    }
    for (std::size_t i = 0; i < parents.size(); ++i, ++pairs)
      if (!implies(kids[2 * i], kids[2 * i + 1], parents[i], static_cast<int>(n))) ++fail;
  }
  return {fail == 0, "1000 steps, " + std::to_string(pairs) + " clause pairs, failures " + std::to_string(fail)};
}

Outcome tiny_support() {
  using Formula = std::vector<std::vector<int>>;
  std::vector<std::vector<int>> two;
  for (int a = 1; a <= 3; ++a)
    for (int b = a + 1; b <= 3; ++b)
      for (int sa : {-1, 1})
        for (int sb : {-1, 1}) two.push_back({std::min(sa * a, sb * b), std::max(sa * a, sb * b)});
  std::set<Formula> satisfiable, unsatisfiable;
  for (const auto& c1 : two)
    for (const auto& c2 : two) {
      bool sat = false;
      for (std::uint64_t bits = 0; bits < 8; ++bits) sat = sat || naive_eval({c1, c2}, bits, 3);
      (sat ? satisfiable : unsatisfiable).insert({c1, c2});
    }

  SatGenConfig cfg;
  cfg.n = 3;
  cfg.m = 2;
  cfg.lits_clause = dist::UniformIndex{2, 2};
  RngState rng(404);
  std::set<Formula> seen;
  for (int i = 0; i < 200000; ++i) {
    auto f = as_ints(generate_sat(cfg, rng).cnf);
    for (auto& c : f) std::sort(c.begin(), c.end());
    seen.insert(std::move(f));
  }
  std::size_t missing = 0, extra = 0, bad = 0;
  for (const auto& f : satisfiable) missing += !seen.count(f);
  for (const auto& f : seen) {
    extra += !satisfiable.count(f);
    bad += unsatisfiable.count(f);
  }
  const bool pass = missing == 0 && extra == 0 && bad == 0;
  return {pass, std::to_string(satisfiable.size()) + " satisfiable formulas enumerated, " + std::to_string(seen.size()) +
                    " generated; missing " + std::to_string(missing) + ", outside " + std::to_string(extra) +
                    ", unsatisfiable " + std::to_string(bad)};
}

Outcome determinism() {
  namespace fs = std::filesystem;
  const auto dir = fs::temp_directory_path() / ("labelsat_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  auto gen = [&](const std::string& name, int workers) {
    const std::string cmd = std::string(LABELSAT_CLI_PATH) + " gen-mix --seed 2026 --count 1000 --workers " +
                            std::to_string(workers) + " --out " + (dir / name).string() + " > /dev/null";
    return std::system(cmd.c_str());
  };
  const int a = gen("a.bin", 1), b = gen("b.bin", 4);
  bool same = false;
  std::size_t size = 0;
  if (a == 0 && b == 0) {
    const auto x = read_file(dir / "a.bin"), y = read_file(dir / "b.bin");
    same = x == y;
    size = x.size();
  }
  fs::remove_all(dir);
  return {same, "gen-mix --seed 2026 --count 1000 with 1 and 4 workers, " + std::to_string(size) + " bytes, " +
                    (same ? "identical" : "different")};
}

Outcome dimacs_round_trip() {
  const auto mix = default_mix();
  std::size_t fail = 0;
  for (int i = 0; i < 1000; ++i) {
    RngState rng(505, i);
    const auto f = sample_problem(mix, rng).problem.cnf;
    if (!(parse_dimacs(serialize_dimacs(f)) == f)) ++fail;
  }
  return {fail == 0, "1000 generated formulas, mismatches " + std::to_string(fail)};
}

Outcome self_reduction() {
  const auto mix = default_mix();
  std::size_t fail = 0, calls_total = 0;
  for (int i = 0; i < 200; ++i) {
    RngState rng(606, i);
    auto s = draw_shape(mix, rng);
    s.n = static_cast<Var>(rng.uniform_int(1, 15));
    s.m = sample_clause_count(mix.ratios.uniform_mixed, s.n, rng);
    const auto p = generate_sat(sat_config(s.n, s.m, s.d), rng);
    std::size_t calls = 0;
    const auto alpha = extract_assignment(p.cnf, [&](const Cnf& f) {
      ++calls;
      return naive_satisfiable(f);
    });
    calls_total += calls;
    if (calls != s.n || !naive_eval(as_ints(p.cnf), bits_of(alpha), static_cast<int>(s.n))) ++fail;
  }
  return {fail == 0, "200 instances, " + std::to_string(calls_total) + " oracle calls, failures " + std::to_string(fail)};
}

Outcome throughput() {
  const auto mix = default_mix();
  const auto small = benchmark_throughput(mix, 15, 64, std::chrono::seconds(3));
  const auto large = benchmark_throughput(mix, 1500, 16500, std::chrono::seconds(10));
  std::printf("  bench n=15 m=64: %.1f problems/s, %.3g cells/s (reference GPU 530 p/s)\n", small.problems_per_sec,
              small.cells_per_sec);
  std::printf("  bench n=1500 m=16500: %.2f problems/s, %.3g cells/s (reference GPU 128 p/s)\n",
              large.problems_per_sec, large.cells_per_sec);
  const double slowdown = large.problems_per_sec > 0 ? small.problems_per_sec / large.problems_per_sec : 0;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%.1f p/s at n=15, %.2f p/s at n=1500, slowdown %.1fx (single thread)",
                small.problems_per_sec, large.problems_per_sec, slowdown);
  return {small.problems_per_sec > 100 && large.problems > 0, buf};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"SAT soundness", sat_soundness},
      {"UNSAT soundness", unsat_soundness},
      {"Resolution inversion", resolution_inversion},
      {"Tiny-scale support equality", tiny_support},
      {"Determinism", determinism},
      {"DIMACS round-trip", dimacs_round_trip},
      {"Oracle self-reduction", self_reduction},
      {"Throughput benchmark", throughput},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

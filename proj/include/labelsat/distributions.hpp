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
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "labelsat/cnf.hpp"
#include "labelsat/errors.hpp"
#include "labelsat/rng.hpp"

namespace labelsat {

namespace dist {

// Uniform over [low, high] intersected with 1..n. high == 0 means n.
struct UniformIndex {
  std::int64_t low = 1;
  std::int64_t high = 0;
  friend bool operator==(const UniformIndex&, const UniformIndex&) = default;
};
struct Pareto {
  double shape = 1.16;
  double scale = 2.0;
  friend bool operator==(const Pareto&, const Pareto&) = default;
};
// p(r) proportional to r^-beta on 1..n.
struct PowerLaw {
  double beta = 2.6;
  friend bool operator==(const PowerLaw&, const PowerLaw&) = default;
};
// mu, sigma of the underlying normal.
struct LogNormal {
  double mu = 10.0;
  double sigma = 2.0;
  friend bool operator==(const LogNormal&, const LogNormal&) = default;
};
struct NormalClipped {
  double mean = 0.0;
  double stddev = 1.0;
  double lo = -1e300;
  double hi = 1e300;
  friend bool operator==(const NormalClipped&, const NormalClipped&) = default;
};
struct Bernoulli {
  double p = 0.5;
  friend bool operator==(const Bernoulli&, const Bernoulli&) = default;
};
struct WeightedCategorical {
  std::vector<double> weights;
  friend bool operator==(const WeightedCategorical&, const WeightedCategorical&) = default;
};
// Uniform over the 2^l - 1 binary sequences with at least one 1.
struct UniformNonZeroBias {
  friend bool operator==(const UniformNonZeroBias&, const UniformNonZeroBias&) = default;
};
// Uniform over sequences with exactly l - 1 ones ([1] when l == 1).
struct KMinusOneBias {
  friend bool operator==(const KMinusOneBias&, const KMinusOneBias&) = default;
};
// Weights of carrying a literal to the positive child (0), the negative child (1), or both (2).
struct BloomWeights {
  double w0 = 1.0;
  double w1 = 1.0;
  double w2 = 1.0;
  friend bool operator==(const BloomWeights&, const BloomWeights&) = default;
};

}  // namespace dist

using DistributionSpec =
    std::variant<dist::UniformIndex, dist::Pareto, dist::PowerLaw, dist::LogNormal,
                 dist::NormalClipped, dist::Bernoulli, dist::WeightedCategorical,
                 dist::UniformNonZeroBias, dist::KMinusOneBias, dist::BloomWeights>;

struct ClauseRatioSpec {
  double mean = 4.27;
  double stddev = 1.0;
  double lo = 2.0;
  double hi = 11.0;
  friend bool operator==(const ClauseRatioSpec&, const ClauseRatioSpec&) = default;
};

inline std::string kind_name(const DistributionSpec& spec) {
  static constexpr const char* names[] = {
      "uniform",  "pareto",    "power_law",          "log_normal",      "normal_clipped",
      "bernoulli", "weighted", "uniform_nonzero_bias", "k_minus_one_bias", "bloom_weights"};
  return names[spec.index()];
}

// Throws ArgumentError when spec violates its parameter constraints.
inline void validate(const DistributionSpec& spec) {
  auto nonneg = [](double w) { return std::isfinite(w) && w >= 0.0; };
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, dist::UniformIndex>) {
          if (s.high != 0 && s.high < s.low) throw ArgumentError("uniform: high < low");
        } else if constexpr (std::is_same_v<T, dist::Pareto>) {
          if (!(s.shape > 0) || !(s.scale > 0)) throw ArgumentError("pareto: shape and scale must be positive");
        } else if constexpr (std::is_same_v<T, dist::PowerLaw>) {
          if (!std::isfinite(s.beta)) throw ArgumentError("power_law: beta must be finite");
        } else if constexpr (std::is_same_v<T, dist::LogNormal>) {
          if (!(s.sigma >= 0)) throw ArgumentError("log_normal: sigma must be nonnegative");
        } else if constexpr (std::is_same_v<T, dist::NormalClipped>) {
          if (!(s.lo < s.hi)) throw ArgumentError("normal_clipped: requires lo < hi");
          if (!(s.stddev >= 0)) throw ArgumentError("normal_clipped: stddev must be nonnegative");
        } else if constexpr (std::is_same_v<T, dist::Bernoulli>) {
          if (!(s.p >= 0 && s.p <= 1)) throw ArgumentError("bernoulli: p outside [0,1]");
        } else if constexpr (std::is_same_v<T, dist::WeightedCategorical>) {
          if (s.weights.empty() || !std::all_of(s.weights.begin(), s.weights.end(), nonneg))
            throw ArgumentError("weighted: weights must be nonnegative and non-empty");
          if (std::accumulate(s.weights.begin(), s.weights.end(), 0.0) <= 0)
            throw ArgumentError("weighted: at least one weight must be positive");
        } else if constexpr (std::is_same_v<T, dist::BloomWeights>) {
          if (!nonneg(s.w0) || !nonneg(s.w1) || !nonneg(s.w2) || s.w0 + s.w1 + s.w2 <= 0)
            throw ArgumentError("bloom_weights: weights must be nonnegative with a positive sum");
        }
      },
      spec);
}

inline void validate(const ClauseRatioSpec& r) {
  if (!(r.lo <= r.hi)) throw ArgumentError("clause ratio: clip lo > hi");
  if (!(r.stddev >= 0)) throw ArgumentError("clause ratio: stddev must be nonnegative");
}

// Index of the chosen weight, with probability w_i / sum(w).
inline std::size_t sample_weighted(std::span<const double> weights, RngState& rng) {
  double total = 0;
  for (double w : weights) {
    if (!(w >= 0) || !std::isfinite(w)) throw ArgumentError("sample_weighted: negative or non-finite weight");
    total += w;
  }
  if (!(total > 0)) throw ArgumentError("sample_weighted: all weights are zero");
  const double u = rng.uniform01() * total;
  double acc = 0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0) continue;
    acc += weights[i];
    last_positive = i;
    if (u < acc) return i;
  }
  return last_positive;
}

inline std::size_t sample_weighted(const dist::WeightedCategorical& c, RngState& rng) {
  return sample_weighted(std::span<const double>(c.weights), rng);
}

namespace detail {

inline constexpr int kDiscretizeRetries = 64;
inline constexpr int kUniqueRetries = 1024;

inline bool is_index_family(const DistributionSpec& s) {
  return std::holds_alternative<dist::UniformIndex>(s) || std::holds_alternative<dist::Pareto>(s) ||
         std::holds_alternative<dist::PowerLaw>(s) || std::holds_alternative<dist::LogNormal>(s);
}

inline std::pair<std::int64_t, std::int64_t> uniform_range(const dist::UniformIndex& u, Var n) {
  const std::int64_t lo = std::max<std::int64_t>(1, u.low);
  const std::int64_t hi = u.high == 0 ? n : std::min<std::int64_t>(n, u.high);
  if (lo > hi) throw ArgumentError("uniform index range is empty for n=" + std::to_string(n));
  return {lo, hi};
}

// Cumulative mass of r^-beta on 1..n, cached per thread.
inline const std::vector<double>& power_law_cdf(double beta, Var n) {
  thread_local std::map<std::pair<double, Var>, std::vector<double>> cache;
  auto [it, inserted] = cache.try_emplace({beta, n});
  if (inserted) {
    auto& cdf = it->second;
    cdf.resize(n);
    double acc = 0;
    for (Var r = 1; r <= n; ++r) {
      acc += std::pow(static_cast<double>(r), -beta);
      cdf[r - 1] = acc;
    }
  }
  return it->second;
}

inline Var sample_power_law(double beta, Var n, RngState& rng) {
  const auto& cdf = power_law_cdf(beta, n);
  const double u = rng.uniform01() * cdf.back();
  auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  if (it == cdf.end()) --it;
  return static_cast<Var>(it - cdf.begin()) + 1;
}

// Continuous draw, floored, rejected when outside 1..n; uniform after the retry cap.
template <class Draw>
Var sample_discretized(Draw draw, Var n, RngState& rng) {
  for (int t = 0; t < kDiscretizeRetries; ++t) {
    const double x = std::floor(draw());
    if (x >= 1.0 && x <= static_cast<double>(n)) return static_cast<Var>(x);
  }
  return static_cast<Var>(rng.uniform_below(n)) + 1;
}

}  // namespace detail

// One index in 1..n from a variable-family spec.
inline Var sample_var_index(const DistributionSpec& spec, Var n, RngState& rng) {
  if (n < 1) throw ArgumentError("sample_var_index: n must be at least 1");
  if (const auto* u = std::get_if<dist::UniformIndex>(&spec)) {
    auto [lo, hi] = detail::uniform_range(*u, n);
    return static_cast<Var>(rng.uniform_int(lo, hi));
  }
  if (const auto* p = std::get_if<dist::PowerLaw>(&spec)) return detail::sample_power_law(p->beta, n, rng);
  if (const auto* p = std::get_if<dist::Pareto>(&spec)) {
    return detail::sample_discretized(
        [&] { return p->scale / std::pow(rng.uniform_open0(), 1.0 / p->shape); }, n, rng);
  }
  if (const auto* l = std::get_if<dist::LogNormal>(&spec)) {
    return detail::sample_discretized([&] { return std::exp(rng.normal(l->mu, l->sigma)); }, n, rng);
  }
  throw ArgumentError("sample_var_index: '" + kind_name(spec) + "' is not a variable-index family");
}

// One index from `allowed` (distinct values in 1..n), drawn from the family
// restricted and renormalized to that set.
inline Var sample_index_among(const DistributionSpec& spec, Var n, std::span<const Var> allowed,
                              RngState& rng) {
  if (allowed.empty()) throw ArgumentError("sample_index_among: no allowed indices");
  if (!detail::is_index_family(spec))
    throw ArgumentError("sample_index_among: '" + kind_name(spec) + "' is not a variable-index family");
  if (const auto* u = std::get_if<dist::UniformIndex>(&spec)) {
    auto [lo, hi] = detail::uniform_range(*u, n);
    std::vector<Var> in_range;
    for (Var v : allowed)
      if (v >= lo && v <= hi) in_range.push_back(v);
    if (in_range.empty()) return allowed[rng.uniform_below(allowed.size())];
    return in_range[rng.uniform_below(in_range.size())];
  }
  if (const auto* p = std::get_if<dist::PowerLaw>(&spec)) {
    std::vector<double> w(allowed.size());
    for (std::size_t i = 0; i < allowed.size(); ++i) w[i] = std::pow(static_cast<double>(allowed[i]), -p->beta);
    return allowed[sample_weighted(w, rng)];
  }
  std::vector<bool> ok(static_cast<std::size_t>(n) + 1, false);
  for (Var v : allowed) ok[v] = true;
  for (int t = 0; t < detail::kDiscretizeRetries; ++t) {
    Var v = sample_var_index(spec, n, rng);
    if (ok[v]) return v;
  }
  return allowed[rng.uniform_below(allowed.size())];
}

// k pairwise-distinct indices in 1..n, in draw order. Equivalent to drawing,
// removing, and renormalizing the family's mass function.
inline std::vector<Var> sample_unique_indices(const DistributionSpec& spec, Var n, std::size_t k,
                                              RngState& rng) {
  if (n < 1) throw ArgumentError("sample_unique_indices: n must be at least 1");
  if (k > n) throw ArgumentError("sample_unique_indices: k=" + std::to_string(k) + " exceeds n=" + std::to_string(n));
  if (!detail::is_index_family(spec))
    throw ArgumentError("sample_unique_indices: '" + kind_name(spec) + "' is not a variable-index family");
  std::vector<Var> out;
  out.reserve(k);

  if (const auto* u = std::get_if<dist::UniformIndex>(&spec)) {
    auto [lo, hi] = detail::uniform_range(*u, n);
    const auto width = static_cast<std::size_t>(hi - lo + 1);
    if (k > width) throw ArgumentError("sample_unique_indices: k exceeds the uniform range");
    if (k * 4 <= width) {
      while (out.size() < k) {
        const auto v = static_cast<Var>(rng.uniform_int(lo, hi));
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
      }
    } else {
      std::vector<Var> pool(width);
      std::iota(pool.begin(), pool.end(), static_cast<Var>(lo));
      for (std::size_t i = 0; i < k; ++i) {
        const auto j = i + rng.uniform_below(width - i);
        std::swap(pool[i], pool[j]);
        out.push_back(pool[i]);
      }
    }
    return out;
  }

  std::vector<bool> taken(static_cast<std::size_t>(n) + 1, false);
  while (out.size() < k) {
    Var v = 0;
    for (int t = 0; t < detail::kUniqueRetries; ++t) {
      const Var c = sample_var_index(spec, n, rng);
      if (!taken[c]) {
        v = c;
        break;
      }
    }
    if (v == 0) {
      std::vector<Var> rest;
      for (Var c = 1; c <= n; ++c)
        if (!taken[c]) rest.push_back(c);
      v = sample_index_among(spec, n, rest, rng);
    }
    taken[v] = true;
    out.push_back(v);
  }
  return out;
}

using BiasSeq = std::vector<std::uint8_t>;

// Binary sequence of length l containing at least one 1.
inline BiasSeq sample_bias_seq(const DistributionSpec& spec, std::size_t l, RngState& rng) {
  if (l < 1) throw ArgumentError("sample_bias_seq: length must be at least 1");
  BiasSeq seq(l, 0);
  if (std::holds_alternative<dist::UniformNonZeroBias>(spec)) {
    if (l < 64) {
      const std::uint64_t word = 1 + rng.uniform_below((std::uint64_t{1} << l) - 1);
      for (std::size_t j = 0; j < l; ++j) seq[j] = (word >> j) & 1;
      return seq;
    }
    bool any = false;
    while (!any) {
      for (std::size_t j = 0; j < l; j += 64) {
        const std::uint64_t word = rng.next_u64();
        for (std::size_t b = 0; b < 64 && j + b < l; ++b) {
          seq[j + b] = (word >> b) & 1;
          any = any || seq[j + b];
        }
      }
    }
    return seq;
  }
  if (std::holds_alternative<dist::KMinusOneBias>(spec)) {
    std::fill(seq.begin(), seq.end(), 1);
    if (l > 1) seq[rng.uniform_below(l)] = 0;
    return seq;
  }
  throw ArgumentError("sample_bias_seq: '" + kind_name(spec) + "' is not a polarity-bias family");
}

// Literal count for one clause, clamped into [1, n].
inline std::size_t sample_clause_length(const DistributionSpec& spec, Var n, RngState& rng) {
  if (n < 1) throw ArgumentError("sample_clause_length: n must be at least 1");
  std::int64_t k = 0;
  if (const auto* u = std::get_if<dist::UniformIndex>(&spec)) {
    const std::int64_t hi = u->high == 0 ? n : u->high;
    k = rng.uniform_int(std::min(u->low, hi), hi);
  } else if (const auto* g = std::get_if<dist::NormalClipped>(&spec)) {
    const double x = std::clamp(rng.normal(g->mean, g->stddev), g->lo, g->hi);
    k = std::llround(x);
  } else if (detail::is_index_family(spec)) {
    k = sample_var_index(spec, n, rng);
  } else {
    throw ArgumentError("sample_clause_length: '" + kind_name(spec) + "' is not a length family");
  }
  return static_cast<std::size_t>(std::clamp<std::int64_t>(k, 1, n));
}

// true with the spec's probability (the positive polarity).
inline bool sample_polarity(const DistributionSpec& spec, RngState& rng) {
  if (const auto* b = std::get_if<dist::Bernoulli>(&spec)) return rng.bernoulli(b->p);
  throw ArgumentError("sample_polarity: '" + kind_name(spec) + "' is not a Bernoulli spec");
}

// 0, 1 or 2.
inline std::uint8_t sample_bloom(const DistributionSpec& spec, RngState& rng) {
  if (const auto* b = std::get_if<dist::BloomWeights>(&spec)) {
    const double w[3] = {b->w0, b->w1, b->w2};
    return static_cast<std::uint8_t>(sample_weighted(w, rng));
  }
  throw ArgumentError("sample_bloom: '" + kind_name(spec) + "' is not a bloom-weights spec");
}

// m = round(r * n) with r ~ Normal(mean, std) clipped to [lo, hi]; m >= 1.
inline std::size_t sample_clause_count(const ClauseRatioSpec& ratio, Var n, RngState& rng) {
  if (n < 1) throw ArgumentError("sample_clause_count: n must be at least 1");
  const double r = std::clamp(ratio.stddev > 0 ? rng.normal(ratio.mean, ratio.stddev) : ratio.mean,
                              ratio.lo, ratio.hi);
  return static_cast<std::size_t>(std::max<long long>(1, std::llround(r * n)));
}

}  // namespace labelsat

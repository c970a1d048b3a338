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

#include <array>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "labelsat/distributions.hpp"
#include "labelsat/problem.hpp"
#include "labelsat/rng.hpp"
#include "labelsat/sat_gen.hpp"
#include "labelsat/unsat_gen.hpp"

namespace labelsat {

// Generator options of the training mix. The numeric value is the option id
// stored in dataset records.
enum class GeneratorOption : std::uint8_t {
  SatUniformBias = 0,
  SatBiasedCoverFlip,
  SatBiasedCoverNoFlip,
  SatFromRandomUniformBiasShift,
  SatFromUnsatUniformBiasShift,
  SatUniformBiasShift,
  SatFromRandomCoverFlipShift,
  SatFromRandomCoverNoFlipShift,
  SatFromUnsatCoverFlipShift,
  SatFromUnsatCoverNoFlipShift,
  SatFromSatCoverFlipShift,
  UnsatShallow,
  UnsatDeep,
  UnsatShallowShift,
  UnsatDeepShift,
  UnsatFromSatShallowShift,
  UnsatFromSatDeepShift,
};

inline constexpr std::size_t kNumGeneratorOptions = 17;

struct OptionInfo {
  GeneratorOption option;
  std::string_view name;
  Label label;
  bool shift;           // draws its distributions from the shift menu
  double default_weight;
};

inline constexpr std::array<OptionInfo, kNumGeneratorOptions> kOptions = {{
    {GeneratorOption::SatUniformBias, "sat_uniform_bias", Label::Sat, false, 0.41},
    {GeneratorOption::SatBiasedCoverFlip, "sat_biased_cover_flip", Label::Sat, false, 0.01},
    {GeneratorOption::SatBiasedCoverNoFlip, "sat_biased_cover_noflip", Label::Sat, false, 0.01},
    {GeneratorOption::SatFromRandomUniformBiasShift, "sat_from_random_uniform_bias_shift", Label::Sat, true, 0.05},
    {GeneratorOption::SatFromUnsatUniformBiasShift, "sat_from_unsat_uniform_bias_shift", Label::Sat, true, 0.05},
    {GeneratorOption::SatUniformBiasShift, "sat_uniform_bias_shift", Label::Sat, true, 0.20},
    {GeneratorOption::SatFromRandomCoverFlipShift, "sat_from_random_cover_flip_shift", Label::Sat, true, 0.05},
    {GeneratorOption::SatFromRandomCoverNoFlipShift, "sat_from_random_cover_noflip_shift", Label::Sat, true, 0.05},
    {GeneratorOption::SatFromUnsatCoverFlipShift, "sat_from_unsat_cover_flip_shift", Label::Sat, true, 0.06},
    {GeneratorOption::SatFromUnsatCoverNoFlipShift, "sat_from_unsat_cover_noflip_shift", Label::Sat, true, 0.06},
    {GeneratorOption::SatFromSatCoverFlipShift, "sat_from_sat_cover_flip_shift", Label::Sat, true, 0.05},
    {GeneratorOption::UnsatShallow, "unsat_shallow", Label::Unsat, false, 0.43},
    {GeneratorOption::UnsatDeep, "unsat_deep", Label::Unsat, false, 0.10},
    {GeneratorOption::UnsatShallowShift, "unsat_shallow_shift", Label::Unsat, true, 0.31},
    {GeneratorOption::UnsatDeepShift, "unsat_deep_shift", Label::Unsat, true, 0.05},
    {GeneratorOption::UnsatFromSatShallowShift, "unsat_from_sat_shallow_shift", Label::Unsat, true, 0.10},
    {GeneratorOption::UnsatFromSatDeepShift, "unsat_from_sat_deep_shift", Label::Unsat, true, 0.01},
}};

inline const OptionInfo& option_info(GeneratorOption o) { return kOptions[static_cast<std::size_t>(o)]; }

inline std::optional<GeneratorOption> option_from_name(std::string_view name) {
  for (const auto& info : kOptions)
    if (info.name == name) return info.option;
  return std::nullopt;
}

struct WeightedSpec {
  DistributionSpec spec;
  double weight = 1.0;
  friend bool operator==(const WeightedSpec&, const WeightedSpec&) = default;
};

// One distribution per role.
struct DistributionSet {
  DistributionSpec vars = dist::UniformIndex{};
  DistributionSpec lits_clause = dist::NormalClipped{4.5, 1.0, 1.0, 1e9};
  DistributionSpec polarities = dist::Bernoulli{0.5};
  DistributionSpec polarity_bias = dist::UniformNonZeroBias{};
  DistributionSpec bloom = dist::BloomWeights{0.48, 0.48, 0.02};
  friend bool operator==(const DistributionSet&, const DistributionSet&) = default;
};

// Weighted alternatives per role, drawn from for "+ distribution shift" options.
struct DistributionMenu {
  std::vector<WeightedSpec> vars, lits_clause, polarities, polarity_bias, bloom;
  friend bool operator==(const DistributionMenu&, const DistributionMenu&) = default;
};

struct ClauseRatioTable {
  ClauseRatioSpec uniform_mixed{4.27, 1.0, 2.0, 11.0};  // unshifted options
  ClauseRatioSpec power_law_3cnf{3.71, 1.0, 2.0, 11.0};  // power-law vars with exactly 3 literals
  ClauseRatioSpec other{4.27, 1.0, 2.0, 11.0};
  friend bool operator==(const ClauseRatioTable&, const ClauseRatioTable&) = default;
};

struct BloomPreset {
  std::size_t depth = 3;
  double p = 0.5;
  friend bool operator==(const BloomPreset&, const BloomPreset&) = default;
};

struct GeneratorMixConfig {
  double sat_fraction = 0.5;
  Var min_vars = 4;
  Var max_vars = 20;
  std::array<double, kNumGeneratorOptions> option_weights{};
  DistributionSet base;
  DistributionMenu shift;
  ClauseRatioTable ratios;
  std::size_t init_size = 1;
  BloomPreset shallow{3, 0.5};
  BloomPreset deep{kUnboundedDepth, 1.0};

  friend bool operator==(const GeneratorMixConfig&, const GeneratorMixConfig&) = default;
};

inline DistributionMenu default_shift_menu() {
  DistributionMenu m;
  m.vars = {{dist::UniformIndex{}, 0.70}, {dist::Pareto{1.16, 2.0}, 0.20},
            {dist::PowerLaw{2.6}, 0.0}, {dist::LogNormal{10.0, 2.0}, 0.10}};
  m.lits_clause = {{dist::NormalClipped{4.5, 1.0, 1.0, 1e9}, 0.90}, {dist::UniformIndex{3, 7}, 0.10}};
  m.polarities = {{dist::Bernoulli{0.5}, 0.80}, {dist::Bernoulli{0.3}, 0.10}, {dist::Bernoulli{0.7}, 0.10}};
  m.polarity_bias = {{dist::UniformNonZeroBias{}, 1.0}, {dist::KMinusOneBias{}, 0.0}};
  m.bloom = {{dist::BloomWeights{0.48, 0.48, 0.02}, 0.85}, {dist::BloomWeights{0.5, 0.3, 0.2}, 0.15}};
  return m;
}

inline GeneratorMixConfig default_mix() {
  GeneratorMixConfig mix;
  for (const auto& info : kOptions) mix.option_weights[static_cast<std::size_t>(info.option)] = info.default_weight;
  mix.shift = default_shift_menu();
  return mix;
}

// A mix that always uses one option.
inline GeneratorMixConfig single_option_mix(GeneratorOption o, GeneratorMixConfig base = default_mix()) {
  base.option_weights.fill(0.0);
  base.option_weights[static_cast<std::size_t>(o)] = 1.0;
  return base;
}

namespace detail {

inline double side_weight(const GeneratorMixConfig& mix, Label side) {
  double total = 0;
  for (const auto& info : kOptions)
    if (info.label == side) total += mix.option_weights[static_cast<std::size_t>(info.option)];
  return total;
}

inline void validate_menu(const std::vector<WeightedSpec>& items, const char* role) {
  if (items.empty()) throw ConfigError(std::string("shift menu '") + role + "' is empty");
  double total = 0;
  for (const auto& w : items) {
    if (!(w.weight >= 0)) throw ConfigError(std::string("shift menu '") + role + "' has a negative weight");
    try {
      validate(w.spec);
    } catch (const ArgumentError& e) {
      throw ConfigError(std::string("shift menu '") + role + "': " + e.what());
    }
    total += w.weight;
  }
  if (!(total > 0)) throw ConfigError(std::string("shift menu '") + role + "' has zero total weight");
}

}  // namespace detail

inline void validate(const GeneratorMixConfig& mix) {
  if (!(mix.sat_fraction >= 0 && mix.sat_fraction <= 1)) throw ConfigError("sat_fraction outside [0,1]");
  if (mix.min_vars < 1 || mix.max_vars < mix.min_vars) throw ConfigError("need 1 <= min_vars <= max_vars");
  for (double w : mix.option_weights)
    if (!(w >= 0)) throw ConfigError("option weights must be nonnegative");
  const double sat = detail::side_weight(mix, Label::Sat);
  const double unsat = detail::side_weight(mix, Label::Unsat);
  if (sat + unsat <= 0) throw ConfigError("no generator option has positive weight");
  if (mix.init_size < 1) throw ConfigError("init_size must be at least 1");
  for (const auto* p : {&mix.shallow, &mix.deep})
    if (!(p->p >= 0 && p->p <= 1)) throw ConfigError("bloom preset p outside [0,1]");
  for (const auto* d : {&mix.base.vars, &mix.base.lits_clause, &mix.base.polarities, &mix.base.polarity_bias,
                        &mix.base.bloom}) {
    try {
      validate(*d);
    } catch (const ArgumentError& e) {
      throw ConfigError(std::string("base distributions: ") + e.what());
    }
  }
  bool any_shift = false;
  for (const auto& info : kOptions)
    any_shift = any_shift || (info.shift && mix.option_weights[static_cast<std::size_t>(info.option)] > 0);
  if (any_shift) {
    detail::validate_menu(mix.shift.vars, "vars");
    detail::validate_menu(mix.shift.lits_clause, "lits_clause");
    detail::validate_menu(mix.shift.polarities, "polarities");
    detail::validate_menu(mix.shift.polarity_bias, "polarity_bias");
    detail::validate_menu(mix.shift.bloom, "bloom");
  }
  for (const auto* r : {&mix.ratios.uniform_mixed, &mix.ratios.power_law_3cnf, &mix.ratios.other}) {
    try {
      validate(*r);
    } catch (const ArgumentError& e) {
      throw ConfigError(std::string("clause ratio: ") + e.what());
    }
  }
}

// ---- option execution ------------------------------------------------------

struct MixSample {
  LabeledProblem problem;
  GeneratorOption option = GeneratorOption::SatUniformBias;
};

inline GeneratorOption sample_option(const GeneratorMixConfig& mix, RngState& rng) {
  const double sat = detail::side_weight(mix, Label::Sat);
  const double unsat = detail::side_weight(mix, Label::Unsat);
  Label side = Label::Sat;
  if (sat > 0 && unsat > 0) side = rng.bernoulli(mix.sat_fraction) ? Label::Sat : Label::Unsat;
  else if (unsat > 0) side = Label::Unsat;
  std::vector<double> w(kNumGeneratorOptions, 0.0);
  for (const auto& info : kOptions)
    if (info.label == side) w[static_cast<std::size_t>(info.option)] = mix.option_weights[static_cast<std::size_t>(info.option)];
  return static_cast<GeneratorOption>(sample_weighted(w, rng));
}

inline DistributionSet draw_distributions(const GeneratorMixConfig& mix, bool shift, RngState& rng) {
  if (!shift) return mix.base;
  auto pick = [&](const std::vector<WeightedSpec>& items) {
    std::vector<double> w;
    w.reserve(items.size());
    for (const auto& it : items) w.push_back(it.weight);
    return items[sample_weighted(w, rng)].spec;
  };
  DistributionSet d;
  d.vars = pick(mix.shift.vars);
  d.lits_clause = pick(mix.shift.lits_clause);
  d.polarities = pick(mix.shift.polarities);
  d.polarity_bias = pick(mix.shift.polarity_bias);
  d.bloom = pick(mix.shift.bloom);
  return d;
}

inline const ClauseRatioSpec& clause_ratio_for(const GeneratorMixConfig& mix, const DistributionSet& d, bool shift) {
  const auto* lits = std::get_if<dist::UniformIndex>(&d.lits_clause);
  if (std::holds_alternative<dist::PowerLaw>(d.vars) && lits && lits->low == 3 && lits->high == 3)
    return mix.ratios.power_law_3cnf;
  return shift ? mix.ratios.other : mix.ratios.uniform_mixed;
}

inline SatGenConfig sat_config(Var n, std::size_t m, const DistributionSet& d) {
  return {n, m, d.vars, d.lits_clause, d.polarities, d.polarity_bias};
}

inline UnsatGenConfig unsat_config(const GeneratorMixConfig& mix, Var n, std::size_t m, const DistributionSet& d,
                                   bool deep) {
  UnsatGenConfig cfg;
  cfg.n = n;
  cfg.m = m;
  cfg.init_size = mix.init_size;
  const auto& preset = deep ? mix.deep : mix.shallow;
  cfg.depth = preset.depth;
  cfg.down_clause = {DownClause::Mode::Bernoulli, preset.p};
  cfg.vars = d.vars;
  cfg.lits_clause = d.lits_clause;
  cfg.polarities = d.polarities;
  cfg.bloom = d.bloom;
  return cfg;
}

// Runs one option at a fixed shape with already-drawn distributions.
inline LabeledProblem run_option(const GeneratorMixConfig& mix, GeneratorOption option, Var n, std::size_t m,
                                 const DistributionSet& d, RngState& rng) {
  using O = GeneratorOption;
  auto random_formula = [&] {
    return Cnf(n, sample_random_clauses(n, m, d.vars, d.lits_clause, d.polarities, rng));
  };
  auto shallow_unsat = [&] { return generate_unsat(unsat_config(mix, n, m, d, false), rng).cnf; };
  auto cover = [&](const Cnf& src, bool biased, bool flip) -> LabeledProblem {
    auto alpha = sample_assignment(d.polarities, n, rng);
    Cnf out = biased ? biased_sat_cover(src, alpha, flip, rng) : sat_cover(src, alpha, d.polarity_bias, rng);
    return {std::move(out), Label::Sat, std::move(alpha)};
  };

  switch (option) {
    case O::SatUniformBias:
    case O::SatUniformBiasShift:
      return generate_sat(sat_config(n, m, d), rng);
    case O::SatBiasedCoverFlip:
    case O::SatFromRandomCoverFlipShift:
      return cover(random_formula(), true, true);
    case O::SatBiasedCoverNoFlip:
    case O::SatFromRandomCoverNoFlipShift:
      return cover(random_formula(), true, false);
    case O::SatFromRandomUniformBiasShift:
      return cover(random_formula(), false, false);
    case O::SatFromUnsatUniformBiasShift:
      return cover(shallow_unsat(), false, false);
    case O::SatFromUnsatCoverFlipShift:
      return cover(shallow_unsat(), true, true);
    case O::SatFromUnsatCoverNoFlipShift:
      return cover(shallow_unsat(), true, false);
    case O::SatFromSatCoverFlipShift:
      return cover(generate_sat(sat_config(n, m, d), rng).cnf, true, true);
    case O::UnsatShallow:
    case O::UnsatShallowShift:
      return generate_unsat(unsat_config(mix, n, m, d, false), rng);
    case O::UnsatDeep:
    case O::UnsatDeepShift:
      return generate_unsat(unsat_config(mix, n, m, d, true), rng);
    case O::UnsatFromSatShallowShift:
      return unsat_with_sat_tail(unsat_config(mix, n, m, d, false), sat_config(n, m, d), rng);
    case O::UnsatFromSatDeepShift:
      return unsat_with_sat_tail(unsat_config(mix, n, m, d, true), sat_config(n, m, d), rng);
  }
  throw ConfigError("unknown generator option");
}

// Draws an option, its distributions, n uniformly in [min_vars, max_vars] and
// m from the clause-ratio table, then generates.
inline MixSample sample_problem(const GeneratorMixConfig& mix, RngState& rng) {
  const auto option = sample_option(mix, rng);
  const bool shift = option_info(option).shift;
  const auto d = draw_distributions(mix, shift, rng);
  const auto n = static_cast<Var>(rng.uniform_int(mix.min_vars, mix.max_vars));
  const auto m = sample_clause_count(clause_ratio_for(mix, d, shift), n, rng);
  return {run_option(mix, option, n, m, d, rng), option};
}

// As sample_problem with the shape fixed.
inline MixSample sample_problem_at(const GeneratorMixConfig& mix, Var n, std::size_t m, RngState& rng) {
  const auto option = sample_option(mix, rng);
  const auto d = draw_distributions(mix, option_info(option).shift, rng);
  return {run_option(mix, option, n, m, d, rng), option};
}

// ---- JSON config -----------------------------------------------------------

using nlohmann::json;

namespace detail {

inline void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + ": expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || it.key() == a;
    if (!ok) throw ConfigError(where + ": unknown key '" + it.key() + "'");
  }
}

template <class T>
T get_or(const json& j, const char* key, T fallback) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return fallback;
  return it->get<T>();
}

}  // namespace detail

inline json distribution_to_json(const DistributionSpec& spec) {
  return std::visit(
      [](const auto& s) -> json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, dist::UniformIndex>) return {{"kind", "uniform"}, {"low", s.low}, {"high", s.high}};
        else if constexpr (std::is_same_v<T, dist::Pareto>) return {{"kind", "pareto"}, {"shape", s.shape}, {"scale", s.scale}};
        else if constexpr (std::is_same_v<T, dist::PowerLaw>) return {{"kind", "power_law"}, {"beta", s.beta}};
        else if constexpr (std::is_same_v<T, dist::LogNormal>) return {{"kind", "log_normal"}, {"mu", s.mu}, {"sigma", s.sigma}};
        else if constexpr (std::is_same_v<T, dist::NormalClipped>)
          return {{"kind", "normal_clipped"}, {"mean", s.mean}, {"std", s.stddev}, {"lo", s.lo}, {"hi", s.hi}};
        else if constexpr (std::is_same_v<T, dist::Bernoulli>) return {{"kind", "bernoulli"}, {"p", s.p}};
        else if constexpr (std::is_same_v<T, dist::WeightedCategorical>) return {{"kind", "weighted"}, {"weights", s.weights}};
        else if constexpr (std::is_same_v<T, dist::UniformNonZeroBias>) return {{"kind", "uniform_nonzero_bias"}};
        else if constexpr (std::is_same_v<T, dist::KMinusOneBias>) return {{"kind", "k_minus_one_bias"}};
        else return {{"kind", "bloom_weights"}, {"weights", {s.w0, s.w1, s.w2}}};
      },
      spec);
}

inline DistributionSpec distribution_from_json(const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("kind")) throw ConfigError(where + ": distribution needs a 'kind'");
  const auto kind = j.at("kind").get<std::string>();
  using detail::get_or;
  using detail::reject_unknown_keys;
  DistributionSpec spec;
  try {
    if (kind == "uniform") {
      reject_unknown_keys(j, {"kind", "low", "high"}, where);
      spec = dist::UniformIndex{get_or<std::int64_t>(j, "low", 1), get_or<std::int64_t>(j, "high", 0)};
    } else if (kind == "pareto") {
      reject_unknown_keys(j, {"kind", "shape", "scale"}, where);
      spec = dist::Pareto{get_or(j, "shape", 1.16), get_or(j, "scale", 2.0)};
    } else if (kind == "power_law") {
      reject_unknown_keys(j, {"kind", "beta"}, where);
      spec = dist::PowerLaw{get_or(j, "beta", 2.6)};
    } else if (kind == "log_normal") {
      reject_unknown_keys(j, {"kind", "mu", "sigma"}, where);
      spec = dist::LogNormal{get_or(j, "mu", 10.0), get_or(j, "sigma", 2.0)};
    } else if (kind == "normal_clipped") {
      reject_unknown_keys(j, {"kind", "mean", "std", "lo", "hi"}, where);
      spec = dist::NormalClipped{get_or(j, "mean", 0.0), get_or(j, "std", 1.0), get_or(j, "lo", 1.0),
                                 get_or(j, "hi", 1e9)};
    } else if (kind == "bernoulli") {
      reject_unknown_keys(j, {"kind", "p"}, where);
      spec = dist::Bernoulli{get_or(j, "p", 0.5)};
    } else if (kind == "weighted") {
      reject_unknown_keys(j, {"kind", "weights"}, where);
      spec = dist::WeightedCategorical{j.at("weights").get<std::vector<double>>()};
    } else if (kind == "uniform_nonzero_bias") {
      reject_unknown_keys(j, {"kind"}, where);
      spec = dist::UniformNonZeroBias{};
    } else if (kind == "k_minus_one_bias") {
      reject_unknown_keys(j, {"kind"}, where);
      spec = dist::KMinusOneBias{};
    } else if (kind == "bloom_weights") {
      reject_unknown_keys(j, {"kind", "weights"}, where);
      const auto w = j.at("weights").get<std::vector<double>>();
      if (w.size() != 3) throw ConfigError(where + ": bloom_weights needs exactly 3 weights");
      spec = dist::BloomWeights{w[0], w[1], w[2]};
    } else {
      throw ConfigError(where + ": unknown distribution kind '" + kind + "'");
    }
    validate(spec);
  } catch (const json::exception& e) {
    throw ConfigError(where + ": " + e.what());
  } catch (const ArgumentError& e) {
    throw ConfigError(where + ": " + e.what());
  }
  return spec;
}

inline json ratio_to_json(const ClauseRatioSpec& r) {
  return {{"mean", r.mean}, {"std", r.stddev}, {"clip", {r.lo, r.hi}}};
}

inline ClauseRatioSpec ratio_from_json(const json& j, const std::string& where) {
  detail::reject_unknown_keys(j, {"mean", "std", "clip"}, where);
  ClauseRatioSpec r;
  r.mean = detail::get_or(j, "mean", r.mean);
  r.stddev = detail::get_or(j, "std", r.stddev);
  if (j.contains("clip")) {
    const auto c = j.at("clip").get<std::vector<double>>();
    if (c.size() != 2) throw ConfigError(where + ": clip needs [lo, hi]");
    r.lo = c[0];
    r.hi = c[1];
  }
  return r;
}

inline json preset_to_json(const BloomPreset& p) {
  return {{"depth", p.depth == kUnboundedDepth ? json(nullptr) : json(p.depth)}, {"p", p.p}};
}

inline BloomPreset preset_from_json(const json& j, const std::string& where) {
  detail::reject_unknown_keys(j, {"depth", "p"}, where);
  BloomPreset p;
  p.depth = j.contains("depth") && !j.at("depth").is_null() ? j.at("depth").get<std::size_t>() : kUnboundedDepth;
  p.p = detail::get_or(j, "p", 0.5);
  return p;
}

inline json mix_to_json(const GeneratorMixConfig& mix) {
  json options = json::object();
  for (const auto& info : kOptions)
    options[std::string(info.name)] = mix.option_weights[static_cast<std::size_t>(info.option)];
  auto set_json = [](const DistributionSet& d) {
    return json{{"vars", distribution_to_json(d.vars)},
                {"lits_clause", distribution_to_json(d.lits_clause)},
                {"polarities", distribution_to_json(d.polarities)},
                {"polarity_bias", distribution_to_json(d.polarity_bias)},
                {"bloom", distribution_to_json(d.bloom)}};
  };
  auto menu_json = [](const std::vector<WeightedSpec>& items) {
    json arr = json::array();
    for (const auto& it : items) arr.push_back({{"weight", it.weight}, {"dist", distribution_to_json(it.spec)}});
    return arr;
  };
  return {
      {"sat_fraction", mix.sat_fraction},
      {"min_vars", mix.min_vars},
      {"max_vars", mix.max_vars},
      {"options", options},
      {"base", set_json(mix.base)},
      {"shift",
       {{"vars", menu_json(mix.shift.vars)},
        {"lits_clause", menu_json(mix.shift.lits_clause)},
        {"polarities", menu_json(mix.shift.polarities)},
        {"polarity_bias", menu_json(mix.shift.polarity_bias)},
        {"bloom", menu_json(mix.shift.bloom)}}},
      {"clause_ratio",
       {{"uniform_mixed", ratio_to_json(mix.ratios.uniform_mixed)},
        {"power_law_3cnf", ratio_to_json(mix.ratios.power_law_3cnf)},
        {"other", ratio_to_json(mix.ratios.other)}}},
      {"unsat",
       {{"init_size", mix.init_size}, {"shallow", preset_to_json(mix.shallow)}, {"deep", preset_to_json(mix.deep)}}},
  };
}

// Keys absent from `j` keep their default_mix() values, except "options":
// when present, unlisted options get weight 0.
inline GeneratorMixConfig mix_from_json(const json& j) {
  using detail::reject_unknown_keys;
  GeneratorMixConfig mix = default_mix();
  try {
    reject_unknown_keys(j, {"sat_fraction", "min_vars", "max_vars", "options", "base", "shift", "clause_ratio", "unsat"},
                        "config");
    mix.sat_fraction = detail::get_or(j, "sat_fraction", mix.sat_fraction);
    mix.min_vars = detail::get_or(j, "min_vars", mix.min_vars);
    mix.max_vars = detail::get_or(j, "max_vars", mix.max_vars);
    if (j.contains("options")) {
      const auto& o = j.at("options");
      if (!o.is_object()) throw ConfigError("config.options: expected an object");
      mix.option_weights.fill(0.0);
      for (auto it = o.begin(); it != o.end(); ++it) {
        const auto opt = option_from_name(it.key());
        if (!opt) throw ConfigError("config.options: unknown generator option '" + it.key() + "'");
        mix.option_weights[static_cast<std::size_t>(*opt)] = it.value().get<double>();
      }
    }
    if (j.contains("base")) {
      const auto& b = j.at("base");
      reject_unknown_keys(b, {"vars", "lits_clause", "polarities", "polarity_bias", "bloom"}, "config.base");
      auto role = [&](const char* key, DistributionSpec& dst) {
        if (b.contains(key)) dst = distribution_from_json(b.at(key), std::string("config.base.") + key);
      };
      role("vars", mix.base.vars);
      role("lits_clause", mix.base.lits_clause);
      role("polarities", mix.base.polarities);
      role("polarity_bias", mix.base.polarity_bias);
      role("bloom", mix.base.bloom);
    }
    if (j.contains("shift")) {
      const auto& s = j.at("shift");
      reject_unknown_keys(s, {"vars", "lits_clause", "polarities", "polarity_bias", "bloom"}, "config.shift");
      auto role = [&](const char* key, std::vector<WeightedSpec>& dst) {
        if (!s.contains(key)) return;
        const auto where = std::string("config.shift.") + key;
        if (!s.at(key).is_array()) throw ConfigError(where + ": expected an array");
        dst.clear();
        for (const auto& item : s.at(key)) {
          reject_unknown_keys(item, {"weight", "dist"}, where);
          dst.push_back({distribution_from_json(item.at("dist"), where), item.at("weight").get<double>()});
        }
      };
      role("vars", mix.shift.vars);
      role("lits_clause", mix.shift.lits_clause);
      role("polarities", mix.shift.polarities);
      role("polarity_bias", mix.shift.polarity_bias);
      role("bloom", mix.shift.bloom);
    }
    if (j.contains("clause_ratio")) {
      const auto& r = j.at("clause_ratio");
      reject_unknown_keys(r, {"uniform_mixed", "power_law_3cnf", "other"}, "config.clause_ratio");
      if (r.contains("uniform_mixed")) mix.ratios.uniform_mixed = ratio_from_json(r.at("uniform_mixed"), "config.clause_ratio.uniform_mixed");
      if (r.contains("power_law_3cnf")) mix.ratios.power_law_3cnf = ratio_from_json(r.at("power_law_3cnf"), "config.clause_ratio.power_law_3cnf");
      if (r.contains("other")) mix.ratios.other = ratio_from_json(r.at("other"), "config.clause_ratio.other");
    }
    if (j.contains("unsat")) {
      const auto& u = j.at("unsat");
      reject_unknown_keys(u, {"init_size", "shallow", "deep"}, "config.unsat");
      mix.init_size = detail::get_or(u, "init_size", mix.init_size);
      if (u.contains("shallow")) mix.shallow = preset_from_json(u.at("shallow"), "config.unsat.shallow");
      if (u.contains("deep")) mix.deep = preset_from_json(u.at("deep"), "config.unsat.deep");
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  validate(mix);
  return mix;
}

inline GeneratorMixConfig load_mix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
  return mix_from_json(j);
}

// FNV-1a over the canonical JSON dump.
inline std::uint64_t config_hash(const GeneratorMixConfig& mix) {
  const auto text = mix_to_json(mix).dump();
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace labelsat

// Copyright 2026 The bpps Authors
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

// Seeded benchmark generator and the two adversarial families on which the LP
// bounds degrade.
//
// Sampling ranges, as percentages of the capacity d:
//   items  small [5, 15]   large [15, 30]
//   setups small [1, 10]   large [10, 20]
// Endpoints are rounded inwards: [ceil(p1 d / 100), floor(p2 d / 100)].
// With costs: r = 10, f_c uniform in [1, 5]. Without costs: r = 1, f_c = 0.

#ifndef BPPS_GEN_HPP_
#define BPPS_GEN_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "bpps/core.hpp"
#include "bpps/random.hpp"

namespace bpps::gen {

enum class CostMode { kWithCosts, kNoCosts };
enum class SizeClass { kSmall, kLarge };

inline const char* ToString(CostMode mode) {
  return mode == CostMode::kWithCosts ? "costs" : "nocosts";
}

inline const char* ToString(SizeClass size) {
  return size == SizeClass::kSmall ? "small" : "large";
}

inline std::optional<CostMode> ParseCostMode(const std::string& text) {
  if (text == "costs") return CostMode::kWithCosts;
  if (text == "nocosts") return CostMode::kNoCosts;
  return std::nullopt;
}

inline std::optional<SizeClass> ParseSizeClass(const std::string& text) {
  if (text == "small") return SizeClass::kSmall;
  if (text == "large") return SizeClass::kLarge;
  return std::nullopt;
}

inline constexpr std::array<int, 5> kGridItems = {25, 50, 75, 100, 200};
inline constexpr std::array<int, 2> kGridClasses = {5, 10};
inline constexpr std::array<std::int64_t, 3> kGridCapacities = {200, 1000,
                                                                10000};
inline constexpr std::int64_t kBinCostWithCosts = 10;
inline constexpr std::int64_t kMaxSetupCost = kBinCostWithCosts / 2;

struct PercentRange {
  std::int64_t lo;
  std::int64_t hi;
};

inline PercentRange ItemPercent(SizeClass size) {
  return size == SizeClass::kSmall ? PercentRange{5, 15} : PercentRange{15, 30};
}

inline PercentRange SetupPercent(SizeClass size) {
  return size == SizeClass::kSmall ? PercentRange{1, 10} : PercentRange{10, 20};
}

// Closed integer interval [ceil(lo d / 100), floor(hi d / 100)].
inline PercentRange ScaledRange(PercentRange pct, std::int64_t d) {
  return {CeilDiv(CheckedMul(pct.lo, d), 100), CheckedMul(pct.hi, d) / 100};
}

struct GeneratorConfig {
  int n = 25;
  int m = 5;
  std::int64_t d = 200;
  CostMode cost_mode = CostMode::kWithCosts;
  SizeClass item_size = SizeClass::kSmall;
  SizeClass setup_size = SizeClass::kSmall;
  std::uint64_t seed = 0;
  bool free_form = false;  // allow n, m, d outside the benchmark grid

  PercentRange weight_range() const { return ScaledRange(ItemPercent(item_size), d); }
  PercentRange setup_range() const { return ScaledRange(SetupPercent(setup_size), d); }

  friend bool operator==(const GeneratorConfig&, const GeneratorConfig&) = default;
};

inline void ValidateConfig(const GeneratorConfig& cfg) {
  auto in_grid = [](auto value, const auto& grid) {
    for (auto g : grid) {
      if (g == value) return true;
    }
    return false;
  };
  if (!cfg.free_form) {
    if (!in_grid(cfg.n, kGridItems) || !in_grid(cfg.m, kGridClasses) ||
        !in_grid(cfg.d, kGridCapacities)) {
      throw PreconditionError(
          "n, m, d outside the benchmark grid (use free-form to allow)");
    }
  }
  if (cfg.m < 1 || cfg.n < cfg.m) {
    throw PreconditionError("need n >= m >= 1 so every class is nonempty");
  }
  if (cfg.d < 1 || cfg.d > kMaxInputValue) {
    throw PreconditionError("capacity out of range");
  }
  const PercentRange w = cfg.weight_range();
  const PercentRange s = cfg.setup_range();
  if (w.lo > w.hi || s.lo > s.hi) {
    throw PreconditionError("capacity " + std::to_string(cfg.d) +
                            " too small for the size intervals");
  }
}

namespace detail {

enum Field : std::uint64_t {
  kWeights = 0x1000,
  kSetups = 0x2000,
  kCosts = 0x3000,
  kLabels = 0x4000,
};

inline std::uint64_t ConfigHash(const GeneratorConfig& cfg) {
  std::uint64_t h = SplitMix64(static_cast<std::uint64_t>(cfg.n));
  h = SplitMix64(h ^ static_cast<std::uint64_t>(cfg.m));
  h = SplitMix64(h ^ static_cast<std::uint64_t>(cfg.d));
  h = SplitMix64(h ^ static_cast<std::uint64_t>(cfg.cost_mode));
  h = SplitMix64(h ^ static_cast<std::uint64_t>(cfg.item_size));
  h = SplitMix64(h ^ static_cast<std::uint64_t>(cfg.setup_size));
  return h;
}

inline std::uint64_t StreamSeed(const GeneratorConfig& cfg, Field field,
                                std::uint64_t attempt) {
  return SplitMix64(cfg.seed + field + (attempt << 20)) ^ ConfigHash(cfg);
}

}  // namespace detail

inline std::string canonical_name(const GeneratorConfig& cfg) {
  return "bpps_n" + std::to_string(cfg.n) + "_m" + std::to_string(cfg.m) +
         "_d" + std::to_string(cfg.d) + "_" + ToString(cfg.cost_mode) + "_" +
         ToString(cfg.item_size) + "_" + ToString(cfg.setup_size) + "_s" +
         std::to_string(cfg.seed);
}

inline std::string canonical_file_name(const GeneratorConfig& cfg) {
  return canonical_name(cfg) + ".txt";
}

// Accepts a canonical name with or without the ".txt" suffix.
inline std::optional<GeneratorConfig> parse_canonical_name(std::string name) {
  static const std::regex kPattern(
      R"(bpps_n(\d+)_m(\d+)_d(\d+)_(costs|nocosts)_(small|large)_(small|large)_s(\d+))");
  if (name.size() > 4 && name.compare(name.size() - 4, 4, ".txt") == 0) {
    name.resize(name.size() - 4);
  }
  std::smatch match;
  if (!std::regex_match(name, match, kPattern)) return std::nullopt;
  try {
    GeneratorConfig cfg;
    cfg.n = std::stoi(match[1]);
    cfg.m = std::stoi(match[2]);
    cfg.d = std::stoll(match[3]);
    cfg.cost_mode = *ParseCostMode(match[4]);
    cfg.item_size = *ParseSizeClass(match[5]);
    cfg.setup_size = *ParseSizeClass(match[6]);
    cfg.seed = std::stoull(match[7]);
    auto in_grid = [](auto value, const auto& grid) {
      for (auto g : grid) {
        if (g == value) return true;
      }
      return false;
    };
    cfg.free_form = !(in_grid(cfg.n, kGridItems) &&
                      in_grid(cfg.m, kGridClasses) &&
                      in_grid(cfg.d, kGridCapacities));
    if (canonical_name(cfg) != name) return std::nullopt;  // leading zeros
    return cfg;
  } catch (const std::logic_error&) {
    return std::nullopt;
  }
}

struct GeneratedInstance {
  Instance instance;
  int label_redraws = 0;    // class-label sequences rejected for empty classes
  int trivial_redraws = 0;  // whole instances rejected as single-bin
};

inline constexpr int kMaxTrivialRedraws = 1000;

inline GeneratedInstance generate_detailed(const GeneratorConfig& cfg) {
  ValidateConfig(cfg);
  GeneratedInstance out;
  for (int attempt = 0; attempt <= kMaxTrivialRedraws; ++attempt) {
    const auto a = static_cast<std::uint64_t>(attempt);
    Instance inst;
    inst.name = canonical_name(cfg);
    inst.capacity = cfg.d;
    inst.bin_cost = cfg.cost_mode == CostMode::kWithCosts ? kBinCostWithCosts : 1;

    RandomStream weights(detail::StreamSeed(cfg, detail::kWeights, a));
    const PercentRange wr = cfg.weight_range();
    for (int i = 0; i < cfg.n; ++i) inst.weights.push_back(weights.uniform(wr.lo, wr.hi));

    RandomStream setups(detail::StreamSeed(cfg, detail::kSetups, a));
    const PercentRange sr = cfg.setup_range();
    for (int c = 0; c < cfg.m; ++c) {
      inst.setup_weights.push_back(setups.uniform(sr.lo, sr.hi));
    }

    RandomStream costs(detail::StreamSeed(cfg, detail::kCosts, a));
    for (int c = 0; c < cfg.m; ++c) {
      inst.setup_costs.push_back(cfg.cost_mode == CostMode::kWithCosts
                                     ? costs.uniform(1, kMaxSetupCost)
                                     : 0);
    }

    RandomStream labels(detail::StreamSeed(cfg, detail::kLabels, a));
    for (;;) {
      inst.class_of.assign(static_cast<std::size_t>(cfg.n), 0);
      std::vector<int> count(static_cast<std::size_t>(cfg.m), 0);
      for (int i = 0; i < cfg.n; ++i) {
        const int c = static_cast<int>(labels.uniform(0, cfg.m - 1));
        inst.class_of[static_cast<std::size_t>(i)] = c;
        ++count[static_cast<std::size_t>(c)];
      }
      bool surjective = true;
      for (int k : count) surjective = surjective && k > 0;
      if (surjective) break;
      ++out.label_redraws;
    }

    const ValidationReport report = validate_instance(inst);
    if (report.ok()) {
      out.instance = std::move(inst);
      return out;
    }
    if (!report.ok_except_trivial()) {
      throw Error("generator produced an invalid instance: " + report.summary());
    }
    ++out.trivial_redraws;
  }
  throw PreconditionError("configuration only yields single-bin instances");
}

inline Instance generate(const GeneratorConfig& cfg) {
  return generate_detailed(cfg).instance;
}

// The full benchmark grid in a fixed order, two seeds per grid point.
inline std::vector<GeneratorConfig> benchmark_configs(std::uint64_t base_seed) {
  std::vector<GeneratorConfig> configs;
  for (int n : kGridItems) {
    for (int m : kGridClasses) {
      for (std::int64_t d : kGridCapacities) {
        for (CostMode cost : {CostMode::kWithCosts, CostMode::kNoCosts}) {
          for (SizeClass item : {SizeClass::kSmall, SizeClass::kLarge}) {
            for (SizeClass setup : {SizeClass::kSmall, SizeClass::kLarge}) {
              for (std::uint64_t s = 0; s < 2; ++s) {
                GeneratorConfig cfg;
                cfg.n = n;
                cfg.m = m;
                cfg.d = d;
                cfg.cost_mode = cost;
                cfg.item_size = item;
                cfg.setup_size = setup;
                cfg.seed = base_seed + s;
                configs.push_back(cfg);
              }
            }
          }
        }
      }
    }
  }
  return configs;
}

inline std::vector<Instance> generate_benchmark(std::uint64_t base_seed = 0) {
  std::vector<Instance> out;
  for (const GeneratorConfig& cfg : benchmark_configs(base_seed)) {
    out.push_back(generate(cfg));
  }
  return out;
}

// Adversarial single-class families where every bin holds exactly one item,
// so the optimum is n (r + f1).
//   kUnitItems: d = n, w_i = 1, s = n - 1.
//   kHalfItems: d = 2 theta, w_i = theta, s = 1.
enum class WorstCaseFamily { kUnitItems, kHalfItems };

inline const char* ToString(WorstCaseFamily family) {
  return family == WorstCaseFamily::kUnitItems ? "unit" : "half";
}

inline std::optional<WorstCaseFamily> ParseWorstCaseFamily(
    const std::string& text) {
  if (text == "unit") return WorstCaseFamily::kUnitItems;
  if (text == "half") return WorstCaseFamily::kHalfItems;
  return std::nullopt;
}

inline Instance worst_case(WorstCaseFamily family, int n, std::int64_t theta,
                           std::int64_t r, std::int64_t f1) {
  if (n < 2) throw PreconditionError("worst-case families need n >= 2");
  Instance inst;
  inst.bin_cost = r;
  inst.setup_costs = {f1};
  inst.class_of.assign(static_cast<std::size_t>(n), 0);
  if (family == WorstCaseFamily::kUnitItems) {
    inst.name = "worst_unit_n" + std::to_string(n);
    inst.capacity = n;
    inst.weights.assign(static_cast<std::size_t>(n), 1);
    inst.setup_weights = {n - 1};
  } else {
    if (theta < 1) throw PreconditionError("half-item family needs theta >= 1");
    inst.name = "worst_half_t" + std::to_string(theta) + "_n" + std::to_string(n);
    inst.capacity = CheckedMul(2, theta);
    inst.weights.assign(static_cast<std::size_t>(n), theta);
    inst.setup_weights = {1};
  }
  return inst;
}

inline Instance worst_case_unit(int n, std::int64_t r, std::int64_t f1) {
  return worst_case(WorstCaseFamily::kUnitItems, n, 0, r, f1);
}

inline Instance worst_case_half(std::int64_t theta, int n, std::int64_t r,
                                std::int64_t f1) {
  return worst_case(WorstCaseFamily::kHalfItems, n, theta, r, f1);
}

}  // namespace bpps::gen

#endif  // BPPS_GEN_HPP_

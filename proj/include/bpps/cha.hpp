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

// Three-step constructive heuristic for the BPPS, and the class-wise upper
// bound on the number of bins.
//
//   Step 1. Pack each class alone at capacity d - s_c (beta_c bins). Stop if
//           no class fits in a single bin.
//   Step 2. Classes with beta_c == 1 become one aggregated item each
//           (W_c + s_c) and are packed together at capacity d (delta bins).
//           Stop if delta >= 2.
//   Step 3. All single-bin classes now share one bin. Try to move that whole
//           bin ("meta item") into a bin of another class, scanning classes
//           and their bins in index order.
//
// With exact per-class packings the resulting value is always less than twice
// the minimum-classes LP bound.

#ifndef BPPS_CHA_HPP_
#define BPPS_CHA_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bpps/bpp.hpp"
#include "bpps/core.hpp"

namespace bpps {

enum class BppMode { kExact, kHeuristic };

inline const char* ToString(BppMode mode) {
  return mode == BppMode::kExact ? "exact" : "heuristic";
}

struct ChaOptions {
  BppMode mode = BppMode::kExact;
  std::int64_t node_limit = bpp::kDefaultBppNodeLimit;
  int perm_count = bpp::kDefaultPermutations;
  std::uint64_t seed = 0;
};

enum class ChaTermination { kStep1, kStep2, kStep3Merged, kStep3Unmerged };

inline const char* ToString(ChaTermination t) {
  switch (t) {
    case ChaTermination::kStep1: return "1";
    case ChaTermination::kStep2: return "2";
    case ChaTermination::kStep3Merged: return "3-merged";
    case ChaTermination::kStep3Unmerged: return "3-unmerged";
  }
  return "?";
}

struct ChaTrace {
  ChaTermination termination = ChaTermination::kStep1;
  std::vector<int> beta;                // per class
  std::vector<int> single_bin_classes;  // classes with beta_c == 1
  std::optional<int> delta;
  std::optional<int> merge_class;
  std::int64_t value = 0;
};

struct ChaResult {
  Solution solution;
  ChaTrace trace;
};

// Packs one bin packing instance according to the mode. The seed offset keeps
// heuristic streams distinct per class.
inline bpp::BppPacking PackBpp(const bpp::BppInstance& bi,
                               const ChaOptions& options,
                               std::uint64_t stream) {
  if (options.mode == BppMode::kHeuristic) {
    return bpp::heuristic_packing(bi, options.perm_count,
                                  options.seed + stream);
  }
  bpp::ExactBppResult result = bpp::exact_packing(bi, options.node_limit);
  if (!result.resolved) {
    throw bpp::UnresolvedError("bin packing node limit reached after " +
                               std::to_string(result.nodes) + " nodes");
  }
  return std::move(result.packing);
}

// Closed-form value of the heuristic for a given termination.
inline std::int64_t ChaValue(const Instance& inst, const ChaTrace& trace) {
  std::int64_t setup = 0;
  std::int64_t bins_outside = 0;  // sum of beta_c over classes with beta_c >= 2
  std::int64_t bins_all = 0;
  for (int c = 0; c < inst.class_count(); ++c) {
    const int beta = trace.beta[static_cast<std::size_t>(c)];
    setup = CheckedAdd(setup, CheckedMul(beta, inst.f(c)));
    bins_all += beta;
    if (beta != 1) bins_outside += beta;
  }
  std::int64_t bins = 0;
  switch (trace.termination) {
    case ChaTermination::kStep1: bins = bins_all; break;
    case ChaTermination::kStep2: bins = bins_outside + trace.delta.value(); break;
    case ChaTermination::kStep3Merged: bins = bins_outside; break;
    case ChaTermination::kStep3Unmerged: bins = bins_outside + 1; break;
  }
  return CheckedAdd(setup, CheckedMul(inst.bin_cost, bins));
}

inline ChaResult cha(const Instance& inst, const ChaOptions& options = {}) {
  require_valid(inst);
  const int m = inst.class_count();
  ChaResult result;
  ChaTrace& trace = result.trace;

  // Step 1.
  std::vector<std::vector<std::vector<int>>> class_bins(
      static_cast<std::size_t>(m));
  std::vector<std::int64_t> class_weight(static_cast<std::size_t>(m), 0);
  for (int c = 0; c < m; ++c) {
    const std::vector<int> items = inst.items_of_class(c);
    bpp::BppInstance bi;
    bi.capacity = inst.capacity - inst.s(c);
    for (int i : items) bi.weights.push_back(inst.w(i));
    const bpp::BppPacking packing =
        PackBpp(bi, options, static_cast<std::uint64_t>(c));
    auto& bins = class_bins[static_cast<std::size_t>(c)];
    for (const auto& bin : packing.bins) {
      std::vector<int> mapped;
      for (int local : bin) mapped.push_back(items[static_cast<std::size_t>(local)]);
      bins.push_back(std::move(mapped));
    }
    trace.beta.push_back(packing.bin_count());
    class_weight[static_cast<std::size_t>(c)] = bi.total();
    if (packing.bin_count() == 1) trace.single_bin_classes.push_back(c);
  }

  auto emit_class_bins = [&](bool single_bin_too) {
    for (int c = 0; c < m; ++c) {
      if (!single_bin_too && trace.beta[static_cast<std::size_t>(c)] == 1) {
        continue;
      }
      for (const auto& bin : class_bins[static_cast<std::size_t>(c)]) {
        result.solution.bins.push_back(bin);
      }
    }
  };

  if (trace.single_bin_classes.empty()) {
    trace.termination = ChaTermination::kStep1;
    emit_class_bins(true);
    trace.value = ChaValue(inst, trace);
    return result;
  }

  // Step 2.
  const auto& tilde = trace.single_bin_classes;
  bpp::BppInstance aggregated;
  aggregated.capacity = inst.capacity;
  for (int c : tilde) {
    aggregated.weights.push_back(
        CheckedAdd(class_weight[static_cast<std::size_t>(c)], inst.s(c)));
  }
  const bpp::BppPacking merged =
      PackBpp(aggregated, options, static_cast<std::uint64_t>(m));
  trace.delta = merged.bin_count();

  std::vector<std::vector<int>> merged_bins;
  for (const auto& bin : merged.bins) {
    std::vector<int> items;
    for (int local : bin) {
      const int c = tilde[static_cast<std::size_t>(local)];
      const auto& only = class_bins[static_cast<std::size_t>(c)].front();
      items.insert(items.end(), only.begin(), only.end());
    }
    merged_bins.push_back(std::move(items));
  }

  if (*trace.delta >= 2) {
    trace.termination = ChaTermination::kStep2;
    emit_class_bins(false);
    for (auto& bin : merged_bins) result.solution.bins.push_back(std::move(bin));
    trace.value = ChaValue(inst, trace);
    return result;
  }

  // Step 3.
  if (static_cast<int>(tilde.size()) == m) {
    throw TrivialInstanceError(
        "every class fits in one bin and all of them fit together");
  }
  std::int64_t meta = 0;
  for (auto w : aggregated.weights) meta = CheckedAdd(meta, w);
  for (int c = 0; c < m && !trace.merge_class; ++c) {
    if (trace.beta[static_cast<std::size_t>(c)] == 1) continue;
    auto& bins = class_bins[static_cast<std::size_t>(c)];
    const std::int64_t residual_capacity = inst.capacity - inst.s(c);
    for (auto& bin : bins) {
      std::int64_t load = 0;
      for (int i : bin) load += inst.w(i);
      if (load + meta <= residual_capacity) {
        bin.insert(bin.end(), merged_bins.front().begin(),
                   merged_bins.front().end());
        trace.merge_class = c;
        break;
      }
    }
  }
  emit_class_bins(false);
  if (trace.merge_class) {
    trace.termination = ChaTermination::kStep3Merged;
  } else {
    trace.termination = ChaTermination::kStep3Unmerged;
    result.solution.bins.push_back(std::move(merged_bins.front()));
  }
  trace.value = ChaValue(inst, trace);
  return result;
}

// Sum over classes of an upper bound on the bins needed to pack the class
// alone at capacity d - s_c.
inline std::int64_t k_upper(const Instance& inst,
                            const ChaOptions& options = {}) {
  std::int64_t total = 0;
  for (int c = 0; c < inst.class_count(); ++c) {
    bpp::BppInstance bi;
    bi.capacity = inst.capacity - inst.s(c);
    for (int i : inst.items_of_class(c)) bi.weights.push_back(inst.w(i));
    total += PackBpp(bi, options, static_cast<std::uint64_t>(c)).bin_count();
  }
  return total;
}

inline std::int64_t k_upper(const Instance& inst, BppMode mode) {
  ChaOptions options;
  options.mode = mode;
  return k_upper(inst, options);
}

}  // namespace bpps

#endif  // BPPS_CHA_HPP_

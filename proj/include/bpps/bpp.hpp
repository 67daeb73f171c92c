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

// Classical one-dimensional bin packing: fit heuristics under item orders and
// a small branch-and-bound for the exact minimum number of bins.

#ifndef BPPS_BPP_HPP_
#define BPPS_BPP_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bpps/core.hpp"
#include "bpps/random.hpp"

namespace bpps::bpp {

// An exact search hit its node limit before proving optimality.
class UnresolvedError : public Error {
 public:
  using Error::Error;
};

struct BppInstance {
  std::vector<std::int64_t> weights;
  std::int64_t capacity = 0;

  int size() const { return static_cast<int>(weights.size()); }

  std::int64_t total() const {
    std::int64_t t = 0;
    for (auto w : weights) t = CheckedAdd(t, w);
    return t;
  }

  void validate() const {
    if (capacity < 1) throw PreconditionError("bin capacity must be positive");
    for (auto w : weights) {
      if (w < 1 || w > capacity) {
        throw PreconditionError("bin packing weight " + std::to_string(w) +
                                " outside [1, " + std::to_string(capacity) +
                                "]");
      }
    }
  }
};

struct BppPacking {
  std::vector<std::vector<int>> bins;  // indices into BppInstance::weights

  int bin_count() const { return static_cast<int>(bins.size()); }
};

inline bool IsFeasiblePacking(const BppInstance& bi, const BppPacking& p) {
  std::vector<int> seen(static_cast<std::size_t>(bi.size()), 0);
  for (const auto& bin : p.bins) {
    if (bin.empty()) return false;
    std::int64_t load = 0;
    for (int i : bin) {
      if (i < 0 || i >= bi.size()) return false;
      ++seen[static_cast<std::size_t>(i)];
      load += bi.weights[static_cast<std::size_t>(i)];
    }
    if (load > bi.capacity) return false;
  }
  return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
}

enum class FitRule { kNextFit, kFirstFit, kBestFit };

inline const char* ToString(FitRule rule) {
  switch (rule) {
    case FitRule::kNextFit: return "NF";
    case FitRule::kFirstFit: return "FF";
    case FitRule::kBestFit: return "BF";
  }
  return "?";
}

inline BppPacking fit_heuristic(const BppInstance& bi, FitRule rule,
                                const std::vector<int>& order) {
  BppPacking packing;
  std::vector<std::int64_t> loads;
  for (int item : order) {
    const std::int64_t w = bi.weights[static_cast<std::size_t>(item)];
    std::size_t target = loads.size();
    switch (rule) {
      case FitRule::kNextFit:
        if (!loads.empty() && loads.back() + w <= bi.capacity) {
          target = loads.size() - 1;
        }
        break;
      case FitRule::kFirstFit:
        for (std::size_t b = 0; b < loads.size(); ++b) {
          if (loads[b] + w <= bi.capacity) {
            target = b;
            break;
          }
        }
        break;
      case FitRule::kBestFit: {
        std::int64_t best_residual = bi.capacity + 1;
        for (std::size_t b = 0; b < loads.size(); ++b) {
          const std::int64_t residual = bi.capacity - loads[b] - w;
          // Strict comparison keeps the lowest index among equal residuals.
          if (residual >= 0 && residual < best_residual) {
            best_residual = residual;
            target = b;
          }
        }
        break;
      }
    }
    if (target == loads.size()) {
      loads.push_back(0);
      packing.bins.emplace_back();
    }
    loads[target] += w;
    packing.bins[target].push_back(item);
  }
  return packing;
}

// Item indices by non-increasing weight, ties by index.
inline std::vector<int> DecreasingOrder(const BppInstance& bi) {
  std::vector<int> order(static_cast<std::size_t>(bi.size()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&bi](int a, int b) {
    return bi.weights[static_cast<std::size_t>(a)] >
           bi.weights[static_cast<std::size_t>(b)];
  });
  return order;
}

inline constexpr int kDefaultPermutations = 50;

// Best packing over {NF, FF, BF} x perm_count item orders. The first order is
// the non-increasing weight order; the others are Fisher-Yates shuffles of the
// identity drawn from RandomStream(seed), each starting from the identity.
inline BppPacking heuristic_packing(const BppInstance& bi,
                                    int perm_count = kDefaultPermutations,
                                    std::uint64_t seed = 0) {
  if (perm_count < 1) throw PreconditionError("perm_count must be >= 1");
  BppPacking best;
  bool have_best = false;
  RandomStream rng(seed);
  std::vector<int> identity(static_cast<std::size_t>(bi.size()));
  std::iota(identity.begin(), identity.end(), 0);
  for (int p = 0; p < perm_count; ++p) {
    std::vector<int> order;
    if (p == 0) {
      order = DecreasingOrder(bi);
    } else {
      order = identity;
      rng.shuffle(order);
    }
    for (FitRule rule :
         {FitRule::kNextFit, FitRule::kFirstFit, FitRule::kBestFit}) {
      BppPacking packing = fit_heuristic(bi, rule, order);
      if (!have_best || packing.bin_count() < best.bin_count()) {
        best = std::move(packing);
        have_best = true;
      }
    }
  }
  return best;
}

inline int heuristic_beta(const BppInstance& bi,
                          int perm_count = kDefaultPermutations,
                          std::uint64_t seed = 0) {
  return heuristic_packing(bi, perm_count, seed).bin_count();
}

inline constexpr std::int64_t kDefaultBppNodeLimit = 10'000'000;

struct ExactBppResult {
  bool resolved = false;
  BppPacking packing;  // optimal when resolved, best found otherwise
  std::int64_t nodes = 0;
};

namespace detail {

class BppSearch {
 public:
  BppSearch(const BppInstance& bi, std::int64_t node_limit)
      : bi_(bi), node_limit_(node_limit), order_(DecreasingOrder(bi)) {
    total_ = bi.total();
  }

  ExactBppResult Run() {
    ExactBppResult result;
    if (bi_.size() == 0) {
      result.resolved = true;
      return result;
    }
    incumbent_ = heuristic_packing(bi_, 1, 0);
    const int root_bound = static_cast<int>(CeilDiv(total_, bi_.capacity));
    if (incumbent_.bin_count() > root_bound) {
      assignment_.assign(static_cast<std::size_t>(bi_.size()), -1);
      Dive(0);
    }
    result.resolved = !aborted_;
    result.packing = incumbent_;
    result.nodes = nodes_;
    return result;
  }

 private:
  // Volume bound that also counts open space no remaining item can use.
  int LowerBound(std::size_t pos) const {
    if (pos >= order_.size()) return static_cast<int>(loads_.size());
    const std::int64_t smallest =
        bi_.weights[static_cast<std::size_t>(order_.back())];
    std::int64_t waste = 0;
    for (auto load : loads_) {
      const std::int64_t residual = bi_.capacity - load;
      if (residual < smallest) waste += residual;
    }
    const auto bound =
        static_cast<int>(CeilDiv(total_ + waste, bi_.capacity));
    return std::max(bound, static_cast<int>(loads_.size()));
  }

  void Dive(std::size_t pos) {
    if (aborted_) return;
    if (++nodes_ > node_limit_) {
      aborted_ = true;
      return;
    }
    if (pos == order_.size()) {
      if (static_cast<int>(loads_.size()) < incumbent_.bin_count()) {
        BppPacking packing;
        packing.bins.resize(loads_.size());
        for (std::size_t i = 0; i < assignment_.size(); ++i) {
          packing.bins[static_cast<std::size_t>(assignment_[i])].push_back(
              static_cast<int>(i));
        }
        incumbent_ = std::move(packing);
      }
      return;
    }
    if (LowerBound(pos) >= incumbent_.bin_count()) return;

    const int item = order_[pos];
    const std::int64_t w = bi_.weights[static_cast<std::size_t>(item)];
    for (std::size_t b = 0; b < loads_.size(); ++b) {
      if (loads_[b] + w > bi_.capacity) continue;
      // Bins with equal load are interchangeable for the remaining items.
      bool duplicate = false;
      for (std::size_t a = 0; a < b; ++a) {
        if (loads_[a] == loads_[b]) {
          duplicate = true;
          break;
        }
      }
      if (duplicate) continue;
      loads_[b] += w;
      assignment_[static_cast<std::size_t>(item)] = static_cast<int>(b);
      Dive(pos + 1);
      loads_[b] -= w;
      if (aborted_) return;
    }
    // A new bin is only opened as the next unused index.
    if (static_cast<int>(loads_.size()) + 1 < incumbent_.bin_count()) {
      loads_.push_back(w);
      assignment_[static_cast<std::size_t>(item)] =
          static_cast<int>(loads_.size()) - 1;
      Dive(pos + 1);
      loads_.pop_back();
    }
  }

  const BppInstance& bi_;
  std::int64_t node_limit_;
  std::vector<int> order_;
  std::int64_t total_ = 0;
  std::vector<std::int64_t> loads_;
  std::vector<int> assignment_;
  BppPacking incumbent_;
  std::int64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace detail

inline ExactBppResult exact_packing(
    const BppInstance& bi, std::int64_t node_limit = kDefaultBppNodeLimit) {
  bi.validate();
  return detail::BppSearch(bi, node_limit).Run();
}

// Minimum number of bins, or nullopt when the node limit is exhausted.
inline std::optional<int> exact_beta(
    const BppInstance& bi, std::int64_t node_limit = kDefaultBppNodeLimit) {
  const ExactBppResult result = exact_packing(bi, node_limit);
  if (!result.resolved) return std::nullopt;
  return result.packing.bin_count();
}

}  // namespace bpps::bpp

#endif  // BPPS_BPP_HPP_

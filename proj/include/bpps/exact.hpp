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

// Exact BPPS solvers for small instances: an exhaustive enumeration of set
// partitions used as a reference, and a depth-first branch-and-bound.

#ifndef BPPS_EXACT_HPP_
#define BPPS_EXACT_HPP_

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "bpps/bounds.hpp"
#include "bpps/cha.hpp"
#include "bpps/core.hpp"

namespace bpps {

enum class SolveStatus { kOptimal, kLimitReached };

inline const char* ToString(SolveStatus s) {
  return s == SolveStatus::kOptimal ? "optimal" : "limit-reached";
}

struct ExactResult {
  std::int64_t value = 0;        // cost of `solution`
  Solution solution;
  SolveStatus status = SolveStatus::kOptimal;
  std::int64_t lower_bound = 0;  // equals value when optimal
  std::int64_t nodes = 0;
};

class SizeLimitError : public Error {
 public:
  using Error::Error;
};

inline constexpr int kDefaultBruteForceItems = 12;

namespace detail {

// Enumerates restricted-growth strings a[0..n) with a[0] = 0 and
// a[i] <= 1 + max(a[0..i)), i.e. every set partition exactly once, in
// lexicographic order. Prefixes whose blocks already exceed capacity are cut,
// since blocks only grow along a prefix.
class PartitionEnumerator {
 public:
  explicit PartitionEnumerator(const Instance& inst)
      : inst_(inst),
        n_(inst.item_count()),
        m_(inst.class_count()),
        rgs_(static_cast<std::size_t>(n_), 0) {}

  ExactResult Run() {
    Extend(0);
    ExactResult result;
    result.value = best_cost_;
    result.status = SolveStatus::kOptimal;
    result.lower_bound = best_cost_;
    result.nodes = nodes_;
    const int blocks = *std::max_element(best_.begin(), best_.end()) + 1;
    result.solution.bins.resize(static_cast<std::size_t>(blocks));
    for (int i = 0; i < n_; ++i) {
      result.solution.bins[static_cast<std::size_t>(best_[static_cast<std::size_t>(i)])]
          .push_back(i);
    }
    return result;
  }

 private:
  void Extend(int i) {
    ++nodes_;
    // Costs never decrease along a prefix, so a partial cost that already
    // matches the best cannot lead to a strict improvement.
    if (found_ && cost_ >= best_cost_) return;
    if (i == n_) {
      found_ = true;
      best_cost_ = cost_;
      best_ = rgs_;
      return;
    }
    const int c = inst_.cls(i);
    const auto cs = static_cast<std::size_t>(c);
    const std::int64_t w = inst_.w(i);
    const std::size_t blocks = loads_.size();
    for (std::size_t b = 0; b <= blocks; ++b) {
      if (b == blocks) {
        loads_.push_back(0);
        class_counts_.emplace_back(static_cast<std::size_t>(m_), 0);
        cost_ += inst_.bin_cost;
      }
      const bool opens_class = class_counts_[b][cs] == 0;
      const std::int64_t extra = w + (opens_class ? inst_.s(c) : 0);
      if (loads_[b] + extra <= inst_.capacity) {
        const std::int64_t added = opens_class ? inst_.f(c) : 0;
        loads_[b] += extra;
        ++class_counts_[b][cs];
        cost_ += added;
        rgs_[static_cast<std::size_t>(i)] = static_cast<int>(b);
        Extend(i + 1);
        cost_ -= added;
        --class_counts_[b][cs];
        loads_[b] -= extra;
      }
      if (b == blocks) {
        loads_.pop_back();
        class_counts_.pop_back();
        cost_ -= inst_.bin_cost;
      }
    }
  }

  const Instance& inst_;
  int n_;
  int m_;
  std::vector<int> rgs_;
  std::vector<std::int64_t> loads_;
  std::vector<std::vector<int>> class_counts_;
  std::vector<int> best_;
  std::int64_t cost_ = 0;
  std::int64_t best_cost_ = 0;
  bool found_ = false;
  std::int64_t nodes_ = 0;
};

}  // namespace detail

// Exhaustive optimum; among equal-cost partitions the lexicographically
// smallest restricted-growth string is returned.
inline ExactResult brute_force(const Instance& inst,
                               int max_items = kDefaultBruteForceItems) {
  if (inst.item_count() > max_items) {
    throw SizeLimitError("brute force limited to " + std::to_string(max_items) +
                         " items, instance has " +
                         std::to_string(inst.item_count()));
  }
  require_valid(inst, /*allow_trivial=*/true);
  return detail::PartitionEnumerator(inst).Run();
}

inline constexpr std::int64_t kDefaultNodeLimit = 10'000'000;
inline constexpr double kDefaultTimeLimitSeconds = 60.0;

struct SearchLimits {
  std::int64_t node_limit = kDefaultNodeLimit;
  double time_limit_seconds = kDefaultTimeLimitSeconds;
};

namespace detail {

class BranchAndBound {
 public:
  BranchAndBound(const Instance& inst, const SearchLimits& limits)
      : inst_(inst),
        limits_(limits),
        n_(inst.item_count()),
        m_(inst.class_count()),
        gamma_(bpps::gamma(inst)),
        remaining_class_weight_(static_cast<std::size_t>(m_), 0),
        assignment_(static_cast<std::size_t>(n_), -1) {
    order_.resize(static_cast<std::size_t>(n_));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&inst](int a, int b) {
      return inst.w(a) > inst.w(b);
    });
    for (int i = 0; i < n_; ++i) {
      auto& rw = remaining_class_weight_[static_cast<std::size_t>(inst.cls(i))];
      rw = CheckedAdd(rw, inst.w(i));
    }
    total_weight_ = inst.total_weight();
  }

  ExactResult Run() {
    start_ = std::chrono::steady_clock::now();
    SeedIncumbent();
    const std::int64_t root = LowerBound();
    if (incumbent_value_ > root) Dive(0);

    ExactResult result;
    result.value = incumbent_value_;
    result.solution = incumbent_;
    result.nodes = nodes_;
    if (aborted_) {
      result.status = SolveStatus::kLimitReached;
      result.lower_bound = root;
    } else {
      result.status = SolveStatus::kOptimal;
      result.lower_bound = incumbent_value_;
    }
    return result;
  }

  std::int64_t RootBound() const { return LowerBound(); }

 private:
  struct Bin {
    std::int64_t load = 0;
    std::vector<int> class_count;  // items per class in this bin
  };

  void SeedIncumbent() {
    ChaOptions options;
    options.mode = BppMode::kExact;
    options.node_limit = 100'000;
    ChaResult start;
    try {
      start = cha(inst_, options);
    } catch (const bpp::UnresolvedError&) {
      options.mode = BppMode::kHeuristic;
      start = cha(inst_, options);
    }
    incumbent_ = std::move(start.solution);
    incumbent_value_ = cost_unchecked(inst_, incumbent_).total;
  }

  // Admissible bound on the cost of every completion of the current node.
  //
  // Let A_c be the number of bins in which class c ends up active and B the
  // number of bins used; any completion costs r B + sum_c f_c A_c.
  //  * A_c >= gamma_c, because each such bin holds at most d - s_c of class c.
  //  * A_c >= a_c + ceil(max(0, R_c - room_c) / (d - s_c)), where a_c is the
  //    current number of bins with c active, R_c the unassigned weight of c,
  //    and room_c the free space of those a_c bins: the rest of R_c needs new
  //    activations, each holding at most d - s_c.
  //  * B >= open bins, and the final volume W + sum_c s_c A_c fits in d B, so
  //    B >= ceil((W + sum_c s_c LB(A_c)) / d).
  // Cost is nondecreasing in B and every A_c, so plugging in the lower bounds
  // gives a lower bound. With nothing assigned, a_c = 0 and R_c = W_c, so the
  // bound is r k_lower + sum_c gamma_c f_c, the MCI+MBI relaxation value.
  std::int64_t LowerBound() const {
    std::int64_t volume = total_weight_;
    std::int64_t setup_cost = 0;
    for (int c = 0; c < m_; ++c) {
      std::int64_t active = 0;
      std::int64_t room = 0;
      for (const Bin& bin : bins_) {
        if (bin.class_count[static_cast<std::size_t>(c)] > 0) {
          ++active;
          room += inst_.capacity - bin.load;
        }
      }
      const std::int64_t residual = inst_.capacity - inst_.s(c);
      const std::int64_t missing =
          std::max<std::int64_t>(0, remaining_class_weight_[static_cast<std::size_t>(c)] - room);
      const std::int64_t needed =
          std::max(gamma_[static_cast<std::size_t>(c)],
                   active + CeilDiv(missing, residual));
      volume += inst_.s(c) * needed;
      setup_cost += inst_.f(c) * needed;
    }
    const std::int64_t bins = std::max(static_cast<std::int64_t>(bins_.size()),
                                       CeilDiv(volume, inst_.capacity));
    return inst_.bin_cost * bins + setup_cost;
  }

  bool OutOfBudget() {
    if (++nodes_ > limits_.node_limit) return true;
    if ((nodes_ & 1023) == 0) {
      const std::chrono::duration<double> elapsed =
          std::chrono::steady_clock::now() - start_;
      if (elapsed.count() > limits_.time_limit_seconds) return true;
    }
    return false;
  }

  void RecordLeaf() {
    std::int64_t cost = inst_.bin_cost * static_cast<std::int64_t>(bins_.size());
    for (const Bin& bin : bins_) {
      for (int c = 0; c < m_; ++c) {
        if (bin.class_count[static_cast<std::size_t>(c)] > 0) cost += inst_.f(c);
      }
    }
    if (cost >= incumbent_value_) return;
    incumbent_value_ = cost;
    incumbent_.bins.assign(bins_.size(), {});
    for (int i = 0; i < n_; ++i) {
      incumbent_.bins[static_cast<std::size_t>(assignment_[static_cast<std::size_t>(i)])]
          .push_back(i);
    }
  }

  void Place(int item, std::size_t b) {
    const int c = inst_.cls(item);
    Bin& bin = bins_[b];
    if (bin.class_count[static_cast<std::size_t>(c)]++ == 0) {
      bin.load += inst_.s(c);
    }
    bin.load += inst_.w(item);
    remaining_class_weight_[static_cast<std::size_t>(c)] -= inst_.w(item);
    assignment_[static_cast<std::size_t>(item)] = static_cast<int>(b);
  }

  void Unplace(int item, std::size_t b) {
    const int c = inst_.cls(item);
    Bin& bin = bins_[b];
    bin.load -= inst_.w(item);
    if (--bin.class_count[static_cast<std::size_t>(c)] == 0) {
      bin.load -= inst_.s(c);
    }
    remaining_class_weight_[static_cast<std::size_t>(c)] += inst_.w(item);
    assignment_[static_cast<std::size_t>(item)] = -1;
  }

  bool Fits(int item, const Bin& bin) const {
    const int c = inst_.cls(item);
    const std::int64_t extra =
        inst_.w(item) +
        (bin.class_count[static_cast<std::size_t>(c)] == 0 ? inst_.s(c) : 0);
    return bin.load + extra <= inst_.capacity;
  }

  // Two bins with the same load and the same class multiset admit exactly the
  // same completions.
  bool SameState(const Bin& a, const Bin& b) const {
    return a.load == b.load && a.class_count == b.class_count;
  }

  void Dive(std::size_t pos) {
    if (aborted_) return;
    if (OutOfBudget()) {
      aborted_ = true;
      return;
    }
    if (pos == order_.size()) {
      RecordLeaf();
      return;
    }
    if (LowerBound() >= incumbent_value_) return;

    const int item = order_[pos];
    const int c = inst_.cls(item);
    // Bins where the class is already active first: no new setup is paid.
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t b = 0; b < bins_.size(); ++b) {
        const bool active = bins_[b].class_count[static_cast<std::size_t>(c)] > 0;
        if (active != (pass == 0) || !Fits(item, bins_[b])) continue;
        bool duplicate = false;
        for (std::size_t a = 0; a < b && !duplicate; ++a) {
          duplicate = SameState(bins_[a], bins_[b]);
        }
        if (duplicate) continue;
        Place(item, b);
        Dive(pos + 1);
        Unplace(item, b);
        if (aborted_) return;
      }
    }
    // New bins are only opened at the next unused index.
    bins_.push_back(Bin{0, std::vector<int>(static_cast<std::size_t>(m_), 0)});
    Place(item, bins_.size() - 1);
    Dive(pos + 1);
    Unplace(item, bins_.size() - 1);
    bins_.pop_back();
  }

  const Instance& inst_;
  SearchLimits limits_;
  int n_;
  int m_;
  std::vector<std::int64_t> gamma_;
  std::vector<std::int64_t> remaining_class_weight_;
  std::vector<int> assignment_;
  std::vector<int> order_;
  std::int64_t total_weight_ = 0;
  std::vector<Bin> bins_;
  Solution incumbent_;
  std::int64_t incumbent_value_ = 0;
  std::int64_t nodes_ = 0;
  bool aborted_ = false;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

// Node bound of the search evaluated before any item is placed.
inline std::int64_t root_lower_bound(const Instance& inst) {
  require_valid(inst);
  return detail::BranchAndBound(inst, {}).RootBound();
}

inline ExactResult branch_and_bound(const Instance& inst,
                                    const SearchLimits& limits = {}) {
  require_valid(inst);
  return detail::BranchAndBound(inst, limits).Run();
}

}  // namespace bpps

#endif  // BPPS_EXACT_HPP_

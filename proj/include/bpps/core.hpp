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

// Data model for the Bin Packing Problem with Setups.
//
// An instance has n items with integer weights, partitioned into m classes.
// Each class c carries a setup weight s_c and a setup cost f_c that are paid
// once in every bin where at least one item of class c is packed. Bins have
// capacity d and a fixed cost r. A solution is a partition of the items into
// bins; its cost is r per bin plus the setup costs of the active classes.
//
// Indices are 0-based in memory and 1-based in every file and report.

#ifndef BPPS_CORE_HPP_
#define BPPS_CORE_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace bpps {

inline constexpr std::int64_t kMaxInputValue = 2147483647;  // 2^31 - 1

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A solution violates capacity or the partition property.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// The instance fits in a single bin.
class TrivialInstanceError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Malformed text input (instance, solution, model or assignment files).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Overflow-checked integer arithmetic.
inline std::int64_t CheckedAdd(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("integer overflow in addition");
  }
  return out;
}

inline std::int64_t CheckedMul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("integer overflow in multiplication");
  }
  return out;
}

inline std::int64_t CeilDiv(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw std::domain_error("CeilDiv with non-positive divisor");
  if (num <= 0) return -((-num) / den);
  return (num - 1) / den + 1;
}

struct Instance {
  std::string name;
  std::vector<std::int64_t> weights;        // w_i
  std::vector<int> class_of;                // class index per item
  std::vector<std::int64_t> setup_weights;  // s_c
  std::vector<std::int64_t> setup_costs;    // f_c
  std::int64_t capacity = 0;                // d
  std::int64_t bin_cost = 0;                // r

  int item_count() const { return static_cast<int>(weights.size()); }
  int class_count() const { return static_cast<int>(setup_weights.size()); }

  // Items of class c in increasing index order.
  std::vector<int> items_of_class(int c) const {
    std::vector<int> out;
    for (int i = 0; i < item_count(); ++i) {
      if (class_of[static_cast<std::size_t>(i)] == c) out.push_back(i);
    }
    return out;
  }

  std::int64_t class_weight(int c) const {
    std::int64_t total = 0;
    for (int i = 0; i < item_count(); ++i) {
      if (class_of[static_cast<std::size_t>(i)] == c) {
        total = CheckedAdd(total, weights[static_cast<std::size_t>(i)]);
      }
    }
    return total;
  }

  std::int64_t total_weight() const {
    std::int64_t total = 0;
    for (auto w : weights) total = CheckedAdd(total, w);
    return total;
  }

  std::int64_t total_setup_weight() const {
    std::int64_t total = 0;
    for (auto s : setup_weights) total = CheckedAdd(total, s);
    return total;
  }

  std::int64_t total_setup_cost() const {
    std::int64_t total = 0;
    for (auto f : setup_costs) total = CheckedAdd(total, f);
    return total;
  }

  std::int64_t w(int i) const { return weights[static_cast<std::size_t>(i)]; }
  int cls(int i) const { return class_of[static_cast<std::size_t>(i)]; }
  std::int64_t s(int c) const {
    return setup_weights[static_cast<std::size_t>(c)];
  }
  std::int64_t f(int c) const {
    return setup_costs[static_cast<std::size_t>(c)];
  }

  friend bool operator==(const Instance&, const Instance&) = default;
};

struct Solution {
  std::vector<std::vector<int>> bins;  // item indices per bin

  int bin_count() const { return static_cast<int>(bins.size()); }

  friend bool operator==(const Solution&, const Solution&) = default;
};

struct CostBreakdown {
  std::int64_t bin_cost_total = 0;
  std::int64_t setup_cost_total = 0;
  std::int64_t total = 0;
};

enum class ViolationKind {
  kSizeMismatch,
  kNonPositive,
  kNegative,
  kValueTooLarge,
  kClassOutOfRange,
  kEmptyClass,
  kItemSetupOverflow,
  kTrivialInstance,
  kEmptyBin,
  kItemOutOfRange,
  kItemMissing,
  kItemDuplicated,
  kCapacity,
  kAssignmentRow,
  kLinkingRow,
  kMciRow,
  kMbiRow,
  kVariableBound,
};

inline const char* ToString(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kSizeMismatch: return "size-mismatch";
    case ViolationKind::kNonPositive: return "non-positive";
    case ViolationKind::kNegative: return "negative";
    case ViolationKind::kValueTooLarge: return "value-too-large";
    case ViolationKind::kClassOutOfRange: return "class-out-of-range";
    case ViolationKind::kEmptyClass: return "empty-class";
    case ViolationKind::kItemSetupOverflow: return "item-setup-overflow";
    case ViolationKind::kTrivialInstance: return "trivial-instance";
    case ViolationKind::kEmptyBin: return "empty-bin";
    case ViolationKind::kItemOutOfRange: return "item-out-of-range";
    case ViolationKind::kItemMissing: return "item-missing";
    case ViolationKind::kItemDuplicated: return "item-duplicated";
    case ViolationKind::kCapacity: return "capacity";
    case ViolationKind::kAssignmentRow: return "assignment-row";
    case ViolationKind::kLinkingRow: return "linking-row";
    case ViolationKind::kMciRow: return "mci-row";
    case ViolationKind::kMbiRow: return "mbi-row";
    case ViolationKind::kVariableBound: return "variable-bound";
  }
  return "unknown";
}

struct Violation {
  ViolationKind kind;
  int index = -1;       // 1-based offending index, -1 when not applicable
  std::string measured;
  std::string allowed;

  std::string describe() const {
    std::string out = ToString(kind);
    if (index >= 0) out += " #" + std::to_string(index);
    if (!measured.empty()) out += ": " + measured;
    if (!allowed.empty()) out += " (allowed " + allowed + ")";
    return out;
  }
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }

  bool has(ViolationKind kind) const {
    return std::any_of(violations.begin(), violations.end(),
                       [kind](const Violation& v) { return v.kind == kind; });
  }

  // True when the only problem is the single-bin case.
  bool ok_except_trivial() const {
    return std::all_of(violations.begin(), violations.end(),
                       [](const Violation& v) {
                         return v.kind == ViolationKind::kTrivialInstance;
                       });
  }

  void add(ViolationKind kind, int index, std::string measured = {},
           std::string allowed = {}) {
    violations.push_back({kind, index, std::move(measured), std::move(allowed)});
  }

  std::string summary() const {
    if (ok()) return "ok";
    std::string out;
    for (const auto& v : violations) {
      if (!out.empty()) out += "; ";
      out += v.describe();
    }
    return out;
  }
};

inline ValidationReport validate_instance(const Instance& inst) {
  ValidationReport report;
  const int n = inst.item_count();
  const int m = inst.class_count();
  if (n < 1) report.add(ViolationKind::kNonPositive, -1, "n = 0", ">= 1");
  if (m < 1) report.add(ViolationKind::kNonPositive, -1, "m = 0", ">= 1");
  if (inst.class_of.size() != inst.weights.size()) {
    report.add(ViolationKind::kSizeMismatch, -1,
               "class labels " + std::to_string(inst.class_of.size()),
               std::to_string(n));
  }
  if (inst.setup_costs.size() != inst.setup_weights.size()) {
    report.add(ViolationKind::kSizeMismatch, -1,
               "setup costs " + std::to_string(inst.setup_costs.size()),
               std::to_string(m));
  }
  if (!report.ok()) return report;

  auto check_range = [&report](std::int64_t v, int index, bool positive,
                               const std::string& what) {
    if (positive ? v < 1 : v < 0) {
      report.add(positive ? ViolationKind::kNonPositive
                          : ViolationKind::kNegative,
                 index, what + " = " + std::to_string(v),
                 positive ? ">= 1" : ">= 0");
    } else if (v > kMaxInputValue) {
      report.add(ViolationKind::kValueTooLarge, index,
                 what + " = " + std::to_string(v),
                 "<= " + std::to_string(kMaxInputValue));
    }
  };
  check_range(inst.capacity, -1, true, "d");
  check_range(inst.bin_cost, -1, true, "r");
  for (int i = 0; i < n; ++i) check_range(inst.w(i), i + 1, true, "w");
  for (int c = 0; c < m; ++c) {
    check_range(inst.s(c), c + 1, false, "s");
    check_range(inst.f(c), c + 1, false, "f");
  }
  if (!report.ok()) return report;

  std::vector<int> class_size(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < n; ++i) {
    const int c = inst.cls(i);
    if (c < 0 || c >= m) {
      report.add(ViolationKind::kClassOutOfRange, i + 1,
                 "class " + std::to_string(c + 1),
                 "1.." + std::to_string(m));
      continue;
    }
    ++class_size[static_cast<std::size_t>(c)];
    if (inst.w(i) + inst.s(c) > inst.capacity) {
      report.add(ViolationKind::kItemSetupOverflow, i + 1,
                 "w + s = " + std::to_string(inst.w(i) + inst.s(c)),
                 "<= " + std::to_string(inst.capacity));
    }
  }
  for (int c = 0; c < m; ++c) {
    if (class_size[static_cast<std::size_t>(c)] == 0) {
      report.add(ViolationKind::kEmptyClass, c + 1);
    }
  }
  if (!report.ok()) return report;

  const std::int64_t volume =
      CheckedAdd(inst.total_weight(), inst.total_setup_weight());
  if (volume <= inst.capacity) {
    report.add(ViolationKind::kTrivialInstance, -1,
               "sum w + sum s = " + std::to_string(volume),
               "> " + std::to_string(inst.capacity));
  }
  return report;
}

// Throws unless the instance is valid, allowing the trivial case on request.
inline void require_valid(const Instance& inst, bool allow_trivial = false) {
  const ValidationReport report = validate_instance(inst);
  if (report.ok()) return;
  if (report.ok_except_trivial()) {
    if (allow_trivial) return;
    throw TrivialInstanceError("trivial instance: all items fit in one bin");
  }
  throw PreconditionError("invalid instance: " + report.summary());
}

// Sorted list of classes active in a bin.
inline std::vector<int> active_classes(const Instance& inst,
                                       const std::vector<int>& bin) {
  std::vector<int> classes;
  for (int i : bin) classes.push_back(inst.cls(i));
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  return classes;
}

// Item weights plus setup weights of the active classes.
inline std::int64_t bin_load(const Instance& inst,
                             const std::vector<int>& bin) {
  std::int64_t load = 0;
  for (int i : bin) load = CheckedAdd(load, inst.w(i));
  for (int c : active_classes(inst, bin)) load = CheckedAdd(load, inst.s(c));
  return load;
}

inline ValidationReport check_feasible(const Instance& inst,
                                       const Solution& sol) {
  ValidationReport report;
  const int n = inst.item_count();
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  for (int b = 0; b < sol.bin_count(); ++b) {
    const auto& bin = sol.bins[static_cast<std::size_t>(b)];
    if (bin.empty()) {
      report.add(ViolationKind::kEmptyBin, b + 1);
      continue;
    }
    bool indices_ok = true;
    for (int i : bin) {
      if (i < 0 || i >= n) {
        report.add(ViolationKind::kItemOutOfRange, b + 1,
                   "item " + std::to_string(i + 1), "1.." + std::to_string(n));
        indices_ok = false;
      } else {
        ++seen[static_cast<std::size_t>(i)];
      }
    }
    if (!indices_ok) continue;
    const std::int64_t load = bin_load(inst, bin);
    if (load > inst.capacity) {
      report.add(ViolationKind::kCapacity, b + 1,
                 "load " + std::to_string(load),
                 "<= " + std::to_string(inst.capacity));
    }
  }
  for (int i = 0; i < n; ++i) {
    const int count = seen[static_cast<std::size_t>(i)];
    if (count == 0) {
      report.add(ViolationKind::kItemMissing, i + 1);
    } else if (count > 1) {
      report.add(ViolationKind::kItemDuplicated, i + 1,
                 "appears " + std::to_string(count) + " times", "1");
    }
  }
  return report;
}

// Cost of a solution that is assumed feasible.
inline CostBreakdown cost_unchecked(const Instance& inst, const Solution& sol) {
  CostBreakdown cost;
  cost.bin_cost_total = CheckedMul(inst.bin_cost, sol.bin_count());
  for (const auto& bin : sol.bins) {
    for (int c : active_classes(inst, bin)) {
      cost.setup_cost_total = CheckedAdd(cost.setup_cost_total, inst.f(c));
    }
  }
  cost.total = CheckedAdd(cost.bin_cost_total, cost.setup_cost_total);
  return cost;
}

inline CostBreakdown solution_cost(const Instance& inst, const Solution& sol) {
  const ValidationReport report = check_feasible(inst, sol);
  if (!report.ok()) {
    throw InfeasibleError("infeasible solution: " + report.summary());
  }
  return cost_unchecked(inst, sol);
}

}  // namespace bpps

#endif  // BPPS_CORE_HPP_

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

// Solution features, gaps and the CSV row format used by the report command.

#ifndef BPPS_REPORT_HPP_
#define BPPS_REPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "bpps/bounds.hpp"
#include "bpps/core.hpp"
#include "bpps/rational.hpp"

namespace bpps::report {

struct FeatureReport {
  int bins_used = 0;
  Rational items_per_bin;
  Rational classes_per_bin;
  Rational fill_percent;  // mean of 100 * (items + setups) / d over used bins

  friend bool operator==(const FeatureReport&, const FeatureReport&) = default;
};

inline FeatureReport feature_report(const Instance& inst, const Solution& sol) {
  const ValidationReport report = check_feasible(inst, sol);
  if (!report.ok()) throw InfeasibleError("infeasible solution: " + report.summary());
  FeatureReport out;
  out.bins_used = sol.bin_count();
  std::int64_t items = 0;
  std::int64_t classes = 0;
  std::int64_t load = 0;
  for (const auto& bin : sol.bins) {
    items += static_cast<std::int64_t>(bin.size());
    classes += static_cast<std::int64_t>(active_classes(inst, bin).size());
    load = CheckedAdd(load, bin_load(inst, bin));
  }
  const std::int64_t k = out.bins_used;
  out.items_per_bin = Rational(items, k);
  out.classes_per_bin = Rational(classes, k);
  out.fill_percent = Rational(100) * Rational(load, CheckedMul(k, inst.capacity));
  return out;
}

// Percentage gap 100 (upper - lower) / upper.
inline Rational gap(const Rational& upper, const Rational& lower) {
  if (upper <= Rational(0)) throw PreconditionError("gap needs upper > 0");
  return Rational(100) * (upper - lower) / upper;
}

// Fixed-point rendering used in CSV cells.
inline constexpr int kCsvDecimals = 9;

inline std::string Cell(const Rational& value) { return value.decimal(kCsvDecimals); }

template <typename T>
std::string Cell(const std::optional<T>& value) {
  if (!value) return "";
  if constexpr (std::is_same_v<T, Rational>) {
    return Cell(*value);
  } else if constexpr (std::is_same_v<T, std::string>) {
    return *value;
  } else {
    return std::to_string(*value);
  }
}

// One instance of a report run. Optional fields are left blank in the CSV.
struct ReportRow {
  std::string instance;
  int n = 0;
  int m = 0;
  std::int64_t d = 0;
  std::int64_t r = 0;
  std::int64_t k_lower = 0;
  std::int64_t k_upper = 0;
  Rational zeta_n;
  Rational zeta_dag;
  Rational zeta_ddag;
  std::int64_t cha_value = 0;
  std::string cha_termination;
  std::string source;  // where `upper` comes from: solve, file or cha
  std::string status;  // optimal, limit-reached or heuristic
  std::int64_t upper = 0;
  std::optional<std::int64_t> lower;
  std::optional<FeatureReport> features;

  std::optional<Rational> optimality_gap() const {
    if (!lower || upper <= 0) return std::nullopt;
    return gap(Rational(upper), Rational(*lower));
  }
  Rational integrality_gap(const Rational& zeta) const {
    return gap(Rational(upper), zeta);
  }
};

inline const std::vector<std::string>& CsvColumns() {
  static const std::vector<std::string> kColumns = {
      "instance",       "n",
      "m",              "d",
      "r",              "k_lower",
      "k_upper",        "zeta_n",
      "zeta_dag",       "zeta_ddag",
      "cha_value",      "cha_termination",
      "source",         "status",
      "upper",          "lower",
      "opt_gap_pct",    "igap_n_pct",
      "igap_dag_pct",   "igap_ddag_pct",
      "bins",           "items_per_bin",
      "classes_per_bin", "fill_pct",
  };
  return kColumns;
}

inline std::vector<std::string> CsvCells(const ReportRow& row) {
  std::vector<std::string> cells = {
      row.instance,
      std::to_string(row.n),
      std::to_string(row.m),
      std::to_string(row.d),
      std::to_string(row.r),
      std::to_string(row.k_lower),
      std::to_string(row.k_upper),
      Cell(row.zeta_n),
      Cell(row.zeta_dag),
      Cell(row.zeta_ddag),
      std::to_string(row.cha_value),
      row.cha_termination,
      row.source,
      row.status,
      std::to_string(row.upper),
      Cell(row.lower),
      Cell(row.optimality_gap()),
      Cell(row.integrality_gap(row.zeta_n)),
      Cell(row.integrality_gap(row.zeta_dag)),
      Cell(row.integrality_gap(row.zeta_ddag)),
  };
  if (row.features) {
    cells.push_back(std::to_string(row.features->bins_used));
    cells.push_back(Cell(row.features->items_per_bin));
    cells.push_back(Cell(row.features->classes_per_bin));
    cells.push_back(Cell(row.features->fill_percent));
  } else {
    cells.insert(cells.end(), 4, "");
  }
  return cells;
}

inline void WriteCsvLine(std::ostream& os, const std::vector<std::string>& cells) {
  for (std::size_t k = 0; k < cells.size(); ++k) os << (k ? "," : "") << cells[k];
  os << '\n';
}

// Header plus one line per row, sorted by instance name.
inline void write_csv(std::ostream& os, std::vector<ReportRow> rows) {
  std::sort(rows.begin(), rows.end(), [](const ReportRow& a, const ReportRow& b) {
    return a.instance < b.instance;
  });
  WriteCsvLine(os, CsvColumns());
  for (const ReportRow& row : rows) WriteCsvLine(os, CsvCells(row));
}

struct Summary {
  int instances = 0;
  int optimal = 0;
  std::optional<Rational> mean_open_gap;  // over rows not solved to optimality
  std::optional<Rational> mean_items_per_bin;
  std::optional<Rational> mean_classes_per_bin;
  std::optional<Rational> mean_fill_percent;
};

inline Summary summarize(const std::vector<ReportRow>& rows) {
  Summary s;
  s.instances = static_cast<int>(rows.size());
  Rational gap_sum;
  int open = 0;
  Rational items;
  Rational classes;
  Rational fill;
  int featured = 0;
  for (const ReportRow& row : rows) {
    if (row.status == "optimal") {
      ++s.optimal;
    } else if (const auto g = row.optimality_gap()) {
      gap_sum += *g;
      ++open;
    }
    if (row.features) {
      items += row.features->items_per_bin;
      classes += row.features->classes_per_bin;
      fill += row.features->fill_percent;
      ++featured;
    }
  }
  if (open > 0) s.mean_open_gap = gap_sum / Rational(open);
  if (featured > 0) {
    s.mean_items_per_bin = items / Rational(featured);
    s.mean_classes_per_bin = classes / Rational(featured);
    s.mean_fill_percent = fill / Rational(featured);
  }
  return s;
}

}  // namespace bpps::report

#endif  // BPPS_REPORT_HPP_

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

// Closed-form LP relaxation values for the natural formulation and its
// strengthened variants, plus the matching fractional solutions.
//
//   gamma_c  = ceil(W_c / (d - s_c))                 minimum classes
//   k_lower  = ceil((W + sum_c gamma_c s_c) / d)     minimum bins
//   zeta_n    = r/d (W + sum_c s_c) + sum_c f_c
//   zeta_dag  = r/d (W + sum_c gamma_c s_c) + sum_c gamma_c f_c
//   zeta_ddag = r k_lower + sum_c gamma_c f_c
//
// where W_c is the item weight of class c and W the total item weight.

#ifndef BPPS_BOUNDS_HPP_
#define BPPS_BOUNDS_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bpps/core.hpp"
#include "bpps/rational.hpp"

namespace bpps {

// Formulation variants: natural, +minimum-classes rows, +minimum-bins row,
// and the last one with k reduced to the class-wise upper bound.
enum class Variant { kN, kDag, kDdag, kStar };

inline const char* ToString(Variant v) {
  switch (v) {
    case Variant::kN: return "n";
    case Variant::kDag: return "dag";
    case Variant::kDdag: return "ddag";
    case Variant::kStar: return "star";
  }
  return "?";
}

inline std::optional<Variant> ParseVariant(const std::string& text) {
  if (text == "n") return Variant::kN;
  if (text == "dag") return Variant::kDag;
  if (text == "ddag") return Variant::kDdag;
  if (text == "star") return Variant::kStar;
  return std::nullopt;
}

inline bool HasMci(Variant v) { return v != Variant::kN; }
inline bool HasMbi(Variant v) {
  return v == Variant::kDdag || v == Variant::kStar;
}

inline std::vector<std::int64_t> gamma(const Instance& inst) {
  const int m = inst.class_count();
  std::vector<std::int64_t> class_weight(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < inst.item_count(); ++i) {
    auto& cw = class_weight[static_cast<std::size_t>(inst.cls(i))];
    cw = CheckedAdd(cw, inst.w(i));
  }
  std::vector<std::int64_t> out(static_cast<std::size_t>(m));
  for (int c = 0; c < m; ++c) {
    const std::int64_t residual = inst.capacity - inst.s(c);
    // Every valid item has w >= 1 and w + s_c <= d, so residual >= 1.
    if (residual < 1) {
      throw PreconditionError("class " + std::to_string(c + 1) +
                              " has no residual capacity");
    }
    out[static_cast<std::size_t>(c)] =
        CeilDiv(class_weight[static_cast<std::size_t>(c)], residual);
  }
  return out;
}

namespace detail {

// W + sum_c gamma_c s_c
inline std::int64_t GammaVolume(const Instance& inst,
                                const std::vector<std::int64_t>& g) {
  std::int64_t volume = inst.total_weight();
  for (int c = 0; c < inst.class_count(); ++c) {
    volume = CheckedAdd(volume,
                        CheckedMul(g[static_cast<std::size_t>(c)], inst.s(c)));
  }
  return volume;
}

inline std::int64_t GammaSetupCost(const Instance& inst,
                                   const std::vector<std::int64_t>& g) {
  std::int64_t cost = 0;
  for (int c = 0; c < inst.class_count(); ++c) {
    cost = CheckedAdd(cost,
                      CheckedMul(g[static_cast<std::size_t>(c)], inst.f(c)));
  }
  return cost;
}

}  // namespace detail

inline std::int64_t k_lower(const Instance& inst) {
  return CeilDiv(detail::GammaVolume(inst, gamma(inst)), inst.capacity);
}

inline Rational zeta_lp_n(const Instance& inst) {
  const std::int64_t volume =
      CheckedAdd(inst.total_weight(), inst.total_setup_weight());
  return Rational(CheckedMul(inst.bin_cost, volume), inst.capacity) +
         Rational(inst.total_setup_cost());
}

inline Rational zeta_lp_dag(const Instance& inst) {
  const auto g = gamma(inst);
  return Rational(CheckedMul(inst.bin_cost, detail::GammaVolume(inst, g)),
                  inst.capacity) +
         Rational(detail::GammaSetupCost(inst, g));
}

inline Rational zeta_lp_ddag(const Instance& inst) {
  const auto g = gamma(inst);
  const std::int64_t kl = CeilDiv(detail::GammaVolume(inst, g), inst.capacity);
  return Rational(CheckedAdd(CheckedMul(inst.bin_cost, kl),
                             detail::GammaSetupCost(inst, g)));
}

struct BoundsReport {
  std::vector<std::int64_t> gamma;
  std::int64_t k_lower = 0;
  Rational zeta_n;
  Rational zeta_dag;
  Rational zeta_ddag;
};

inline BoundsReport compute_bounds(const Instance& inst) {
  BoundsReport report;
  report.gamma = gamma(inst);
  report.k_lower = k_lower(inst);
  report.zeta_n = zeta_lp_n(inst);
  report.zeta_dag = zeta_lp_dag(inst);
  report.zeta_ddag = zeta_lp_ddag(inst);
  return report;
}

// Uniform closed-form solution of one LP relaxation over k candidate bins.
// x is uniform; y is uniform per class; z is stored per bin so individual
// entries can be altered before verification.
class FractionalSolution {
 public:
  FractionalSolution(Variant variant, int k, Rational x,
                     std::vector<Rational> y, std::vector<Rational> z)
      : variant_(variant),
        k_(k),
        x_(x),
        y_(std::move(y)),
        z_(std::move(z)) {}

  Variant variant() const { return variant_; }
  int k() const { return k_; }

  Rational x(int /*item*/, int /*bin*/) const { return x_; }
  Rational y(int c, int /*bin*/) const {
    return y_[static_cast<std::size_t>(c)];
  }
  Rational z(int b) const { return z_[static_cast<std::size_t>(b)]; }

  void set_z(int b, Rational value) { z_[static_cast<std::size_t>(b)] = value; }

  Rational objective(const Instance& inst) const {
    Rational total;
    for (int b = 0; b < k_; ++b) {
      total += Rational(inst.bin_cost) * z(b);
      for (int c = 0; c < inst.class_count(); ++c) {
        total += Rational(inst.f(c)) * y(c, b);
      }
    }
    return total;
  }

 private:
  Variant variant_;
  int k_;
  Rational x_;
  std::vector<Rational> y_;
  std::vector<Rational> z_;
};

inline FractionalSolution fractional_solution(const Instance& inst,
                                              Variant variant, int k) {
  const auto g = gamma(inst);
  const std::int64_t kl = CeilDiv(detail::GammaVolume(inst, g), inst.capacity);
  if (k < kl) {
    throw PreconditionError("k = " + std::to_string(k) + " is below k_lower = " +
                            std::to_string(kl));
  }
  const int m = inst.class_count();
  std::vector<Rational> y(static_cast<std::size_t>(m));
  for (int c = 0; c < m; ++c) {
    y[static_cast<std::size_t>(c)] =
        HasMci(variant) ? Rational(g[static_cast<std::size_t>(c)], k)
                        : Rational(1, k);
  }
  Rational z_value;
  switch (variant) {
    case Variant::kN:
      z_value = Rational(CheckedAdd(inst.total_weight(),
                                    inst.total_setup_weight()),
                         CheckedMul(k, inst.capacity));
      break;
    case Variant::kDag:
      z_value = Rational(detail::GammaVolume(inst, g),
                         CheckedMul(k, inst.capacity));
      break;
    case Variant::kDdag:
    case Variant::kStar:
      z_value = Rational(kl, k);
      break;
  }
  return FractionalSolution(variant, k, Rational(1, k), std::move(y),
                            std::vector<Rational>(static_cast<std::size_t>(k),
                                                  z_value));
}

// Checks every row of the relaxation named by `rows` in exact arithmetic.
inline ValidationReport verify_fractional(const Instance& inst,
                                          const FractionalSolution& fs,
                                          Variant rows) {
  ValidationReport report;
  const int n = inst.item_count();
  const int m = inst.class_count();
  const int k = fs.k();
  const Rational zero(0);
  const Rational one(1);
  auto bound = [&](const Rational& v, char var, int a, int b) {
    if (v >= zero && v <= one) return;
    std::string name(1, var);
    name += "_" + std::to_string(a + 1);
    if (b >= 0) name += "_" + std::to_string(b + 1);
    report.add(ViolationKind::kVariableBound, -1, name + " = " + v.str(),
               "[0,1]");
  };
  for (int b = 0; b < k; ++b) {
    for (int i = 0; i < n; ++i) bound(fs.x(i, b), 'x', i, b);
    for (int c = 0; c < m; ++c) bound(fs.y(c, b), 'y', c, b);
    bound(fs.z(b), 'z', b, -1);
  }
  for (int i = 0; i < n; ++i) {
    Rational row;
    for (int b = 0; b < k; ++b) row += fs.x(i, b);
    if (row != one) {
      report.add(ViolationKind::kAssignmentRow, i + 1, row.str(), "1");
    }
  }
  for (int b = 0; b < k; ++b) {
    Rational load;
    for (int i = 0; i < n; ++i) load += Rational(inst.w(i)) * fs.x(i, b);
    for (int c = 0; c < m; ++c) load += Rational(inst.s(c)) * fs.y(c, b);
    const Rational limit = Rational(inst.capacity) * fs.z(b);
    if (load > limit) {
      report.add(ViolationKind::kCapacity, b + 1, load.str(),
                 "<= " + limit.str());
    }
  }
  for (int b = 0; b < k; ++b) {
    for (int i = 0; i < n; ++i) {
      if (fs.x(i, b) > fs.y(inst.cls(i), b)) {
        report.add(ViolationKind::kLinkingRow, i + 1,
                   "x_" + std::to_string(i + 1) + "_" + std::to_string(b + 1) +
                       " = " + fs.x(i, b).str(),
                   "<= " + fs.y(inst.cls(i), b).str());
      }
    }
  }
  if (HasMci(rows)) {
    const auto g = gamma(inst);
    for (int c = 0; c < m; ++c) {
      Rational row;
      for (int b = 0; b < k; ++b) row += fs.y(c, b);
      if (row < Rational(g[static_cast<std::size_t>(c)])) {
        report.add(ViolationKind::kMciRow, c + 1, row.str(),
                   ">= " + std::to_string(g[static_cast<std::size_t>(c)]));
      }
    }
  }
  if (HasMbi(rows)) {
    const std::int64_t kl = k_lower(inst);
    Rational row;
    for (int b = 0; b < k; ++b) row += fs.z(b);
    if (row < Rational(kl)) {
      report.add(ViolationKind::kMbiRow, -1, row.str(),
                 ">= " + std::to_string(kl));
    }
  }
  return report;
}

inline ValidationReport verify_fractional(const Instance& inst,
                                          const FractionalSolution& fs) {
  return verify_fractional(inst, fs, fs.variant());
}

}  // namespace bpps

#endif  // BPPS_BOUNDS_HPP_

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

// Shared hand-built instances.

#ifndef BPPS_TESTS_SUPPORT_FIXTURES_HPP_
#define BPPS_TESTS_SUPPORT_FIXTURES_HPP_

#include <cstdint>
#include <string>

#include "bpps/core.hpp"

namespace bpps::testing {

// Eight items on capacity 6: four of weight 3 in class 1 (s = 1, f = 2) and
// four of weight 1 in class 2 (s = 1, f = 3).
inline Instance Fig1(std::int64_t r) {
  Instance inst;
  inst.name = "fig1_r" + std::to_string(r);
  inst.weights = {3, 3, 3, 3, 1, 1, 1, 1};
  inst.class_of = {0, 0, 0, 0, 1, 1, 1, 1};
  inst.setup_weights = {1, 1};
  inst.setup_costs = {2, 3};
  inst.capacity = 6;
  inst.bin_cost = r;
  return inst;
}

// 0-based solution from 1-based bins.
inline Solution Bins1(std::initializer_list<std::initializer_list<int>> bins) {
  Solution sol;
  for (const auto& bin : bins) {
    std::vector<int> items;
    for (int i : bin) items.push_back(i - 1);
    sol.bins.push_back(std::move(items));
  }
  return sol;
}

}  // namespace bpps::testing

#endif  // BPPS_TESTS_SUPPORT_FIXTURES_HPP_

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

// Umbrella header for the bin packing with setups toolkit.

#ifndef BPPS_BPPS_HPP_
#define BPPS_BPPS_HPP_

#include "bpps/bounds.hpp"
#include "bpps/bpp.hpp"
#include "bpps/cha.hpp"
#include "bpps/core.hpp"
#include "bpps/exact.hpp"
#include "bpps/gen.hpp"
#include "bpps/io.hpp"
#include "bpps/milp.hpp"
#include "bpps/random.hpp"
#include "bpps/rational.hpp"
#include "bpps/report.hpp"

#endif  // BPPS_BPPS_HPP_

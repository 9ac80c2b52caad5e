// Copyright 2026 The photon-purify Authors
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

#include <cstdint>
#include <string>
#include <vector>

namespace photon {

enum class Fault : unsigned {
  kNone = 0,
  // Perturbs one entry of each sampled unitary by 1e-3 inside the
  // norm-preservation check only.
  kPerturbUnitary = 1u << 0,
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  int trials = 100;
  unsigned faults = 0;
};

struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Runs the library's invariant checks: unitarity, norm-preservation,
// photon-number-preservation, composition, permanent-vs-oracle,
// apply-vs-oracle, outcome-distribution, purity-grid, closed-form, dominance,
// optimizer. Throws kInvalidArgument if trials < 1.
std::vector<CheckOutcome> run_verification(const VerifyOptions& options);

}  // namespace photon

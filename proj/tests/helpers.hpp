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

#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "photon_purify/fock.hpp"

namespace photon::testing {

inline double max_amplitude_diff(const StateVector& a, const StateVector& b) {
  double worst = 0.0;
  for (const auto& [n, amp] : a.amplitudes()) worst = std::max(worst, std::abs(amp - b.amplitude(n)));
  for (const auto& [n, amp] : b.amplitudes()) worst = std::max(worst, std::abs(amp - a.amplitude(n)));
  return worst;
}

inline void check_close(Complex actual, Complex expected, double tol = 1e-12) {
  INFO("actual " << actual << " expected " << expected);
  CHECK(std::abs(actual - expected) <= tol);
}

}  // namespace photon::testing

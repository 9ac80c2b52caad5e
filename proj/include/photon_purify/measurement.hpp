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

#include <map>
#include <optional>
#include <vector>

#include "photon_purify/fock.hpp"

namespace photon {

/// Photon counts reported by number-resolving detectors, keyed by mode.
using DetectionPattern = std::map<int, int>;

// Probabilities at or below this are treated as exactly zero.
inline constexpr double kProbabilityFloor = 1e-300;

/// Outcome of projecting onto a detection pattern.
///
/// `state` lives on the undetected modes, which keep their relative order and
/// are renumbered from 0. It is empty exactly when the outcome is impossible.
struct ConditionResult {
  std::optional<StateVector> state;
  double probability = 0.0;

  bool impossible() const noexcept { return !state.has_value(); }
};

// `state` is expected to be normalized; the probability is the summed squared
// magnitude of the matching amplitudes.
ConditionResult condition(const StateVector& state, const DetectionPattern& pattern);

std::map<DetectionPattern, double> outcome_distribution(const StateVector& state,
                                                        const std::vector<int>& detected_modes);

}  // namespace photon

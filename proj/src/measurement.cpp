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

#include "photon_purify/measurement.hpp"

#include <cmath>
#include <string>

#include "photon_purify/error.hpp"

namespace photon {

namespace {

void check_modes(const StateVector& state, const std::vector<int>& modes) {
  std::vector<bool> seen(static_cast<std::size_t>(state.modes()), false);
  for (int mode : modes) {
    if (mode < 0 || mode >= state.modes()) {
      throw Error(ErrorCode::kModeMismatch, "detected mode " + std::to_string(mode) +
                                                " outside a " + std::to_string(state.modes()) +
                                                "-mode state");
    }
    if (seen[static_cast<std::size_t>(mode)]) {
      throw Error(ErrorCode::kDuplicateMode, "mode " + std::to_string(mode) + " detected twice");
    }
    seen[static_cast<std::size_t>(mode)] = true;
  }
}

}  // namespace

ConditionResult condition(const StateVector& state, const DetectionPattern& pattern) {
  std::vector<int> detected;
  for (const auto& [mode, count] : pattern) {
    if (count < 0) throw Error(ErrorCode::kInvalidArgument, "negative detector count");
    detected.push_back(mode);
  }
  check_modes(state, detected);

  std::vector<int> kept;
  for (int mode = 0; mode < state.modes(); ++mode) {
    if (!pattern.contains(mode)) kept.push_back(mode);
  }

  AmplitudeMap projected;
  double probability = 0.0;
  for (const auto& [occupation, amp] : state.amplitudes()) {
    bool match = true;
    for (const auto& [mode, count] : pattern) {
      if (occupation[mode] != count) {
        match = false;
        break;
      }
    }
    if (!match) continue;
    std::vector<int> rest;
    rest.reserve(kept.size());
    for (int mode : kept) rest.push_back(occupation[mode]);
    projected.emplace(OccupationVector(std::move(rest)), amp);
    probability += std::norm(amp);
  }

  if (probability <= kProbabilityFloor) return {std::nullopt, 0.0};

  const double scale = 1.0 / std::sqrt(probability);
  for (auto& [occupation, amp] : projected) amp *= scale;
  return {StateVector(static_cast<int>(kept.size()), state.cutoff(), std::move(projected)), probability};
}

std::map<DetectionPattern, double> outcome_distribution(const StateVector& state,
                                                        const std::vector<int>& detected_modes) {
  check_modes(state, detected_modes);
  std::map<DetectionPattern, double> out;
  for (const auto& [occupation, amp] : state.amplitudes()) {
    DetectionPattern pattern;
    for (int mode : detected_modes) pattern.emplace(mode, occupation[mode]);
    out[pattern] += std::norm(amp);
  }
  return out;
}

}  // namespace photon

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

#include <vector>

#include "photon_purify/scheme.hpp"

namespace photon {

/// Evenly spaced points; steps == 1 yields just `start`.
struct GridRange {
  double start = 0.0;
  double stop = 0.0;
  int steps = 1;

  double at(int i) const;
};

struct SweepSpec {
  GridRange p1{0.0, 1.0, 11};
  GridRange p2{0.0, 1.0, 11};
  GridRange phase1{0.0, 0.0, 1};
  GridRange phase2{0.0, 0.0, 1};
  // Identical inputs: p2 and phase2 follow p1 and phase1; p2/phase2 ranges unused.
  bool diagonal = false;
  int cutoff = kDefaultCutoff;
  int threads = 0;  // 0 picks hardware_concurrency
};

struct SweepRow {
  double p1, p2, phase1, phase2;
  SchemeResult result;
};

// Throws kInvalidArgument for malformed ranges (steps < 1, start > stop,
// probabilities outside [0, 1], cutoff < 2).
void validate(const SweepSpec& spec);

// Rows come back in row-major order over (p1, p2, phase1, phase2), last index
// fastest, independent of how many threads evaluated them.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

}  // namespace photon

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

#include <optional>
#include <string_view>

#include "photon_purify/fock.hpp"
#include "photon_purify/linear_optics.hpp"

namespace photon {

// Two-stage purification circuit on three modes:
//
//   mode 0: vacuum ancilla       mode 1: input 1       mode 2: input 2
//
// Stage one mixes modes 1 and 2 on a beam splitter chosen so that, given no
// photon at the mode-2 detector, the |1> component of mode 1 vanishes. Stage
// two mixes modes 0 and 1 and keeps runs where the mode-1 detector sees exactly
// one photon. The mode-0 output is then the single-photon Fock state.

/// Unnormalized |0>, |1>, |2> amplitudes of mode 1 after seeing no photon in mode 2.
struct StageOneCoefficients {
  Complex c0;
  Complex c1;
  Complex c2;
};

// Residual |c1| allowed before stage two refuses to run.
inline constexpr double kPurityTolerance = 1e-10;

enum class Degeneracy {
  kNone = 0,
  // alpha2 beta1 = alpha1 beta2 = 0: any splitter cancels |1>.
  kBothVacuousTerms,
  // beta1 beta2 = 0: no photon pair ever reaches the circuit.
  kNoPhotonPair,
  // alpha1 alpha2 = 0 (one input is a pure single photon).
  kNoVacuumPair,
};

std::string_view degeneracy_name(Degeneracy d) noexcept;

struct CancellationSolution {
  BeamSplitterParams params;
  bool degenerate = false;
};

struct StageTwoResult {
  double probability = 0.0;
  std::optional<StateVector> output;  // empty when the herald cannot fire
};

struct SchemeResult {
  BeamSplitterParams lambda1;
  BeamSplitterParams lambda2;
  double stage_one_probability = 0.0;
  double stage_two_probability = 0.0;  // conditional on stage one
  double p_success = 0.0;              // joint probability of both heralds
  double output_fidelity = 0.0;        // 0 when p_success == 0
  Degeneracy degeneracy = Degeneracy::kNone;

  bool degenerate() const noexcept { return degeneracy != Degeneracy::kNone; }
};

StageOneCoefficients stage_one_coefficients(const InputState& in1, const InputState& in2,
                                            const BeamSplitterParams& bs);

// Solves alpha2 beta1 cos(theta) + alpha1 beta2 e^{i phi} sin(theta) = 0 with
// theta in [0, pi/2] and phi the principal argument. When both terms vanish
// identically the identical-input answer (pi/4, pi) is returned and flagged.
// Where phi is otherwise undetermined (theta = 0 or pi/2) it is set to pi.
CancellationSolution solve_cancellation(const InputState& in1, const InputState& in2);

// Feeds the normalized c0|0> + c2|2> state and a vacuum ancilla through `bs2`
// and heralds one photon in the data arm. Throws kPurityViolated if |c1| > 1e-10.
StageTwoResult stage_two(const StageOneCoefficients& c, const BeamSplitterParams& bs2,
                         int cutoff = kDefaultCutoff);

// Golden-section maximization of the stage-two herald probability over
// theta2 in [0, pi/2], phi2 = 0. A flat objective returns pi/4.
BeamSplitterParams optimize_stage_two(const StageOneCoefficients& c);

SchemeResult run_scheme(const InputState& in1, const InputState& in2, int cutoff = kDefaultCutoff);

// p^2/4 for two identical inputs with single-photon probability p.
double success_curve_new(double p);
// 16 p^3/81 for the earlier three-input scheme.
double success_curve_old(double p);

}  // namespace photon

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

#include "photon_purify/scheme.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "photon_purify/error.hpp"
#include "photon_purify/measurement.hpp"

namespace photon {

namespace {

using std::numbers::pi;

bool vanishes(Complex z) { return std::norm(z) <= kProbabilityFloor; }

void require_pure(const StageOneCoefficients& c) {
  if (std::abs(c.c1) > kPurityTolerance) {
    throw Error(ErrorCode::kPurityViolated,
                "stage-one |1> amplitude " + std::to_string(std::abs(c.c1)) + " was not cancelled");
  }
}

void require_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::kOutOfRange, "p must lie in [0, 1]");
}

// Unnormalized stage-one amplitudes read back from a simulated conditional
// state on (ancilla, data) modes.
StageOneCoefficients coefficients_from_state(const ConditionResult& r) {
  const double scale = std::sqrt(r.probability);
  const StateVector& s = *r.state;
  return {s.amplitude(OccupationVector{0, 0}) * scale, s.amplitude(OccupationVector{0, 1}) * scale,
          s.amplitude(OccupationVector{0, 2}) * scale};
}

}  // namespace

std::string_view degeneracy_name(Degeneracy d) noexcept {
  switch (d) {
    case Degeneracy::kNone: return "none";
    case Degeneracy::kBothVacuousTerms: return "both-vacuous-terms";
    case Degeneracy::kNoPhotonPair: return "no-photon-pair";
    case Degeneracy::kNoVacuumPair: return "no-vacuum-pair";
  }
  return "unknown";
}

StageOneCoefficients stage_one_coefficients(const InputState& in1, const InputState& in2,
                                            const BeamSplitterParams& bs) {
  const Unitary lambda = beamsplitter(bs);
  const Complex l11 = lambda(0, 0);
  const Complex l12 = lambda(0, 1);
  return {in1.alpha() * in2.alpha(),
          in2.alpha() * in1.beta() * l11 + in1.alpha() * in2.beta() * l12,
          std::sqrt(2.0) * in1.beta() * in2.beta() * l11 * l12};
}

CancellationSolution solve_cancellation(const InputState& in1, const InputState& in2) {
  // c1 = a cos(theta) + b e^{i phi} sin(theta)
  const Complex a = in2.alpha() * in1.beta();
  const Complex b = in1.alpha() * in2.beta();
  if (vanishes(a) && vanishes(b)) return {{pi / 4, pi}, true};
  if (vanishes(b)) return {{pi / 2, pi}, false};
  if (vanishes(a)) return {{0.0, pi}, false};

  const double theta = std::atan2(std::abs(a), std::abs(b));
  double phi = std::arg(-a * std::conj(b));
  if (phi <= -pi) phi = pi;  // principal value in (-pi, pi]
  return {{theta, phi}, false};
}

StageTwoResult stage_two(const StageOneCoefficients& c, const BeamSplitterParams& bs2, int cutoff) {
  require_pure(c);
  if (cutoff < 2) throw Error(ErrorCode::kCutoffExceeded, "stage two needs a cutoff of at least 2");
  const double norm2 = std::norm(c.c0) + std::norm(c.c2);
  if (norm2 <= kProbabilityFloor) return {};

  const double scale = 1.0 / std::sqrt(norm2);
  const StateVector data(1, cutoff, {{OccupationVector{0}, c.c0 * scale}, {OccupationVector{2}, c.c2 * scale}});
  const StateVector mixed = apply(beamsplitter(bs2), tensor(StateVector::vacuum(1, cutoff), data));
  ConditionResult heralded = condition(mixed, {{1, 1}});
  if (heralded.impossible()) return {};
  return {heralded.probability, std::move(heralded.state)};
}

BeamSplitterParams optimize_stage_two(const StageOneCoefficients& c) {
  require_pure(c);
  const auto objective = [&c](double theta) { return stage_two(c, {theta, 0.0}).probability; };

  // Golden-section search for a unimodal maximum. When the two probes tie the
  // maximum lies between them, so both ends move in.
  constexpr double kTolerance = 1e-10;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = 0.0;
  double hi = pi / 2;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = objective(x1);
  double f2 = objective(x2);
  while (hi - lo > kTolerance) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = objective(x2);
    } else if (f1 > f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = objective(x1);
    } else {
      lo = x1;
      hi = x2;
      x1 = hi - inv_phi * (hi - lo);
      x2 = lo + inv_phi * (hi - lo);
      f1 = objective(x1);
      f2 = objective(x2);
    }
  }
  const double best = 0.5 * (lo + hi);
  const double f_best = objective(best);
  if (f_best <= kProbabilityFloor) return {pi / 4, 0.0};

  // The herald probability is 2|c2|^2 sin^2 cos^2 whatever c is, so the
  // numeric optimum has to land on the analytic one.
  if (std::abs(best - pi / 4) > 1e-6) {
    throw std::logic_error("stage-two optimizer disagrees with analytic optimum: theta = " +
                           std::to_string(best));
  }
  return {best, 0.0};
}

SchemeResult run_scheme(const InputState& in1, const InputState& in2, int cutoff) {
  if (cutoff < 2) throw Error(ErrorCode::kInvalidArgument, "scheme needs a photon cutoff of at least 2");

  SchemeResult result;
  const CancellationSolution solved = solve_cancellation(in1, in2);
  result.lambda1 = solved.params;
  result.lambda2 = {pi / 4, 0.0};
  if (solved.degenerate) {
    result.degeneracy = Degeneracy::kBothVacuousTerms;
  } else if (vanishes(in1.beta() * in2.beta())) {
    result.degeneracy = Degeneracy::kNoPhotonPair;
  } else if (vanishes(in1.alpha() * in2.alpha())) {
    result.degeneracy = Degeneracy::kNoVacuumPair;
  }

  // Modes: 0 ancilla (vacuum), 1 input 1, 2 input 2.
  const StateVector initial = tensor(StateVector::vacuum(1, cutoff),
                                     tensor(input_to_state(in1, cutoff), input_to_state(in2, cutoff)));
  const StateVector mixed = apply(embed(beamsplitter(solved.params), {1, 2}, 3), initial);
  const ConditionResult first = condition(mixed, {{2, 0}});
  if (first.impossible()) return result;
  result.stage_one_probability = first.probability;

  result.lambda2 = optimize_stage_two(coefficients_from_state(first));
  const StateVector remixed = apply(embed(beamsplitter(result.lambda2), {0, 1}, 2), *first.state);
  const ConditionResult second = condition(remixed, {{1, 1}});
  if (second.impossible()) return result;
  result.stage_two_probability = second.probability;
  result.p_success = first.probability * second.probability;
  result.output_fidelity = fidelity(*second.state, StateVector::basis(OccupationVector{1}, cutoff));
  return result;
}

double success_curve_new(double p) {
  require_probability(p);
  return p * p / 4.0;
}

double success_curve_old(double p) {
  require_probability(p);
  return 16.0 * p * p * p / 81.0;
}

}  // namespace photon

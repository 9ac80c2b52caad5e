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

#include "photon_purify/fock.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "photon_purify/error.hpp"

namespace photon {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_same_modes(const StateVector& a, const StateVector& b) {
  if (a.modes() != b.modes()) {
    throw Error(ErrorCode::kModeMismatch, "states have " + std::to_string(a.modes()) + " and " +
                                              std::to_string(b.modes()) + " modes");
  }
}

}  // namespace

OccupationVector::OccupationVector(std::vector<int> counts) : counts_(std::move(counts)) {
  for (int n : counts_) {
    if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative photon count");
  }
}

int OccupationVector::total() const noexcept {
  return std::accumulate(counts_.begin(), counts_.end(), 0);
}

StateVector::StateVector(int modes, int cutoff, AmplitudeMap amplitudes)
    : modes_(modes), cutoff_(cutoff) {
  if (modes < 0) throw Error(ErrorCode::kInvalidArgument, "mode count must be non-negative");
  if (cutoff < 1) throw Error(ErrorCode::kInvalidArgument, "photon cutoff must be positive");
  for (auto& [occupation, amp] : amplitudes) {
    if (occupation.modes() != modes) {
      throw Error(ErrorCode::kModeMismatch, "occupation length differs from mode count");
    }
    if (occupation.total() > cutoff) {
      throw Error(ErrorCode::kCutoffExceeded,
                  "occupation holds " + std::to_string(occupation.total()) +
                      " photons, cutoff is " + std::to_string(cutoff));
    }
    if (!finite(amp)) throw Error(ErrorCode::kInvalidArgument, "non-finite amplitude");
  }
  std::erase_if(amplitudes, [](const auto& kv) { return std::abs(kv.second) < kPruneThreshold; });
  amplitudes_ = std::move(amplitudes);
}

StateVector StateVector::basis(const OccupationVector& occupation, int cutoff) {
  return StateVector(occupation.modes(), cutoff, {{occupation, Complex{1.0, 0.0}}});
}

StateVector StateVector::vacuum(int modes, int cutoff) {
  return basis(OccupationVector(std::vector<int>(static_cast<std::size_t>(modes), 0)), cutoff);
}

Complex StateVector::amplitude(const OccupationVector& occupation) const {
  auto it = amplitudes_.find(occupation);
  return it == amplitudes_.end() ? Complex{} : it->second;
}

double StateVector::squared_norm() const noexcept {
  double sum = 0.0;
  for (const auto& [occupation, amp] : amplitudes_) sum += std::norm(amp);
  return sum;
}

StateVector StateVector::scaled(Complex factor) const {
  AmplitudeMap out = amplitudes_;
  for (auto& [occupation, amp] : out) amp *= factor;
  return StateVector(modes_, cutoff_, std::move(out));
}

InputState make_input(Complex alpha, Complex beta) {
  if (!finite(alpha) || !finite(beta)) {
    throw Error(ErrorCode::kNotNormalized, "non-finite input amplitude");
  }
  const double norm = std::norm(alpha) + std::norm(beta);
  if (std::abs(norm - 1.0) > kNormalizationTolerance) {
    throw Error(ErrorCode::kNotNormalized,
                "|alpha|^2 + |beta|^2 = " + std::to_string(norm) + ", expected 1");
  }
  return InputState(alpha, beta);
}

InputState input_from_probability(double p, double phase) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kOutOfRange, "single-photon probability must lie in [0, 1]");
  }
  if (!std::isfinite(phase)) throw Error(ErrorCode::kOutOfRange, "phase must be finite");
  return make_input(Complex{std::sqrt(1.0 - p), 0.0}, std::polar(std::sqrt(p), phase));
}

StateVector input_to_state(const InputState& input, int cutoff) {
  return StateVector(1, cutoff, {{OccupationVector{0}, input.alpha()}, {OccupationVector{1}, input.beta()}});
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  const int cutoff = std::max(a.cutoff(), b.cutoff());
  AmplitudeMap out;
  for (const auto& [na, amp_a] : a.amplitudes()) {
    for (const auto& [nb, amp_b] : b.amplitudes()) {
      if (na.total() + nb.total() > cutoff) {
        throw Error(ErrorCode::kCutoffExceeded, "tensor product exceeds photon cutoff " +
                                                    std::to_string(cutoff));
      }
      std::vector<int> counts = na.counts();
      counts.insert(counts.end(), nb.counts().begin(), nb.counts().end());
      out.emplace(OccupationVector(std::move(counts)), amp_a * amp_b);
    }
  }
  return StateVector(a.modes() + b.modes(), cutoff, std::move(out));
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  require_same_modes(a, b);
  Complex sum{};
  // Walk the smaller map and look up in the larger one.
  const bool a_smaller = a.amplitudes().size() <= b.amplitudes().size();
  const StateVector& small = a_smaller ? a : b;
  const StateVector& large = a_smaller ? b : a;
  for (const auto& [occupation, amp] : small.amplitudes()) {
    auto it = large.amplitudes().find(occupation);
    if (it == large.amplitudes().end()) continue;
    sum += a_smaller ? std::conj(amp) * it->second : std::conj(it->second) * amp;
  }
  return sum;
}

double fidelity(const StateVector& a, const StateVector& b) {
  require_same_modes(a, b);
  for (const StateVector* s : {&a, &b}) {
    if (std::abs(s->squared_norm() - 1.0) > kNormalizationTolerance) {
      throw Error(ErrorCode::kNotNormalized, "fidelity needs normalized states");
    }
  }
  return std::norm(inner_product(a, b));
}

Normalized normalize(const StateVector& state) {
  const double norm2 = state.squared_norm();
  if (!(norm2 > 1e-300)) throw Error(ErrorCode::kZeroState, "cannot normalize a zero state");
  return {state.scaled(Complex{1.0 / std::sqrt(norm2), 0.0}), norm2};
}

}  // namespace photon

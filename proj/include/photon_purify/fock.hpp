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

#include <complex>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <vector>

namespace photon {

using Complex = std::complex<double>;

inline constexpr int kDefaultCutoff = 4;

// Amplitudes smaller than this in magnitude are dropped whenever a state is
// built. This is the only pruning threshold in the library.
inline constexpr double kPruneThreshold = 1e-14;

inline constexpr double kNormalizationTolerance = 1e-9;

/// Photon count per mode. Used as the basis label of a Fock state.
class OccupationVector {
 public:
  OccupationVector() = default;
  explicit OccupationVector(std::vector<int> counts);
  OccupationVector(std::initializer_list<int> counts)
      : OccupationVector(std::vector<int>(counts)) {}

  int modes() const noexcept { return static_cast<int>(counts_.size()); }
  int total() const noexcept;
  int operator[](int mode) const { return counts_.at(static_cast<std::size_t>(mode)); }
  const std::vector<int>& counts() const noexcept { return counts_; }

  auto operator<=>(const OccupationVector&) const = default;

 private:
  std::vector<int> counts_;
};

using AmplitudeMap = std::map<OccupationVector, Complex>;

/// Sparse pure state of `modes` bosonic modes with at most `cutoff` photons in
/// total. Immutable once built; the amplitudes are not required to be
/// normalized (intermediate conditional states are not).
class StateVector {
 public:
  StateVector(int modes, int cutoff, AmplitudeMap amplitudes);

  static StateVector basis(const OccupationVector& occupation, int cutoff = kDefaultCutoff);
  static StateVector vacuum(int modes, int cutoff = kDefaultCutoff);

  int modes() const noexcept { return modes_; }
  int cutoff() const noexcept { return cutoff_; }
  const AmplitudeMap& amplitudes() const noexcept { return amplitudes_; }
  Complex amplitude(const OccupationVector& occupation) const;
  double squared_norm() const noexcept;
  bool empty() const noexcept { return amplitudes_.empty(); }

  StateVector scaled(Complex factor) const;

 private:
  int modes_;
  int cutoff_;
  AmplitudeMap amplitudes_;
};

/// Single-mode superposition alpha|0> + beta|1>.
class InputState {
 public:
  Complex alpha() const noexcept { return alpha_; }
  Complex beta() const noexcept { return beta_; }
  /// Single-photon probability |beta|^2.
  double p() const noexcept { return p_; }

 private:
  friend InputState make_input(Complex alpha, Complex beta);
  InputState(Complex alpha, Complex beta) : alpha_(alpha), beta_(beta), p_(std::norm(beta)) {}

  Complex alpha_;
  Complex beta_;
  double p_;
};

// Throws kNotNormalized unless |alpha|^2 + |beta|^2 is within 1e-9 of 1.
InputState make_input(Complex alpha, Complex beta);

// sqrt(1-p)|0> + sqrt(p) e^{i phase}|1>. Throws kOutOfRange for p outside [0, 1].
InputState input_from_probability(double p, double phase = 0.0);

StateVector input_to_state(const InputState& input, int cutoff = kDefaultCutoff);

// Mode lists concatenate (a's modes first). The result keeps the larger of the
// two cutoffs and throws kCutoffExceeded if any product term exceeds it.
StateVector tensor(const StateVector& a, const StateVector& b);

Complex inner_product(const StateVector& a, const StateVector& b);

// |<a|b>|^2 for states normalized within 1e-9.
double fidelity(const StateVector& a, const StateVector& b);

struct Normalized {
  StateVector state;
  double squared_norm;
};

Normalized normalize(const StateVector& state);

}  // namespace photon

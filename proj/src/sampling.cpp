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

#include "photon_purify/sampling.hpp"

#include <cmath>
#include <numbers>

#include "photon_purify/linear_optics.hpp"

namespace photon::sampling {

Complex gaussian_complex(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

ComplexMatrix random_matrix(Rng& rng, int rows, int cols) {
  ComplexMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) m(r, c) = gaussian_complex(rng);
  }
  return m;
}

Unitary random_unitary(Rng& rng, int dim) {
  ComplexMatrix m = random_matrix(rng, dim, dim);
  // Modified Gram-Schmidt over columns, run twice for orthogonality at the
  // 1e-15 level.
  for (int pass = 0; pass < 2; ++pass) {
    for (int j = 0; j < dim; ++j) {
      for (int k = 0; k < j; ++k) {
        Complex dot{};
        for (int i = 0; i < dim; ++i) dot += std::conj(m(i, k)) * m(i, j);
        for (int i = 0; i < dim; ++i) m(i, j) -= dot * m(i, k);
      }
      double norm = 0.0;
      for (int i = 0; i < dim; ++i) norm += std::norm(m(i, j));
      norm = std::sqrt(norm);
      for (int i = 0; i < dim; ++i) m(i, j) /= norm;
    }
  }
  return Unitary(std::move(m));
}

StateVector random_state(Rng& rng, int modes, int max_photons, int cutoff) {
  AmplitudeMap amps;
  for (int n = 0; n <= max_photons; ++n) {
    for (auto& occupation : photon_sector(modes, n)) amps.emplace(std::move(occupation), gaussian_complex(rng));
  }
  double norm2 = 0.0;
  for (const auto& [occupation, amp] : amps) norm2 += std::norm(amp);
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& [occupation, amp] : amps) amp *= scale;
  return StateVector(modes, cutoff, std::move(amps));
}

BeamSplitterParams random_beamsplitter(Rng& rng) {
  using std::numbers::pi;
  std::uniform_real_distribution<double> theta(0.0, pi / 2);
  std::uniform_real_distribution<double> phi(-pi, pi);
  const double t = theta(rng);
  return {t, phi(rng)};
}

}  // namespace photon::sampling

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

#include <random>

#include "photon_purify/fock.hpp"
#include "photon_purify/linear_optics.hpp"

namespace photon::sampling {

using Rng = std::mt19937_64;

Complex gaussian_complex(Rng& rng);

// Haar-distributed unitary from Gram-Schmidt on a complex Ginibre matrix.
Unitary random_unitary(Rng& rng, int dim);

ComplexMatrix random_matrix(Rng& rng, int rows, int cols);

// Normalized state with random amplitudes on every occupation whose total is
// at most `max_photons`.
StateVector random_state(Rng& rng, int modes, int max_photons, int cutoff = kDefaultCutoff);

BeamSplitterParams random_beamsplitter(Rng& rng);

}  // namespace photon::sampling

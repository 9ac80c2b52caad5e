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

#include <utility>
#include <vector>

#include "photon_purify/fock.hpp"

namespace photon {

// Convention used everywhere in this library: column j of an interferometer
// matrix is the image of the creation operator of input mode j,
//
//     a_j^dagger  ->  sum_i U(i, j) a_i^dagger
//
// so a two-mode element maps a_1^dagger to U11 a_1^dagger + U21 a_2^dagger.

/// Dense row-major complex matrix. No structure is assumed.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols);
  ComplexMatrix(int rows, int cols, std::vector<Complex> row_major);

  static ComplexMatrix identity(int dim);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Complex& operator()(int r, int c) { return data_[index(r, c)]; }
  const Complex& operator()(int r, int c) const { return data_[index(r, c)]; }
  const std::vector<Complex>& data() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  // max_ij |this - other|
  double max_abs_diff(const ComplexMatrix& other) const;

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Complex> data_;
};

inline constexpr double kUnitarityTolerance = 1e-10;

/// Square matrix with ||U^dagger U - I||_max <= 1e-10, checked on construction.
class Unitary {
 public:
  explicit Unitary(ComplexMatrix matrix);

  int dim() const noexcept { return matrix_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  Complex operator()(int r, int c) const { return matrix_(r, c); }

  friend Unitary operator*(const Unitary& a, const Unitary& b);

 private:
  ComplexMatrix matrix_;
};

double unitarity_error(const ComplexMatrix& m);

/// Two-mode element [[cos t, e^{i phi} sin t], [-e^{-i phi} sin t, cos t]].
///
/// External phases on inputs and outputs are dropped: they change neither
/// photon-counting probabilities nor the fidelity of a single-mode Fock state
/// with |1>, so the mixing angle and one relative phase cover every case the
/// purification circuit needs.
struct BeamSplitterParams {
  double theta = 0.0;  // [0, pi/2]
  double phi = 0.0;    // [-pi, pi]
};

// Throws kOutOfRange when theta or phi leaves its interval.
Unitary beamsplitter(const BeamSplitterParams& params);

// Places a 2x2 unitary on `target_modes` of a `total_modes` identity.
// target_modes.first receives the unitary's first row/column.
Unitary embed(const Unitary& u, std::pair<int, int> target_modes, int total_modes);

// Ryser inclusion-exclusion in Gray-code order; dims 0-2 use direct formulas.
Complex permanent(const ComplexMatrix& m);

// Applies an interferometer to a Fock-basis state via
//   <n'|U|n> = per(U[n', n]) / sqrt(prod n_i! prod n'_j!)
// where U[n', n] repeats row i n'_i times and column j n_j times.
StateVector apply(const Unitary& u, const StateVector& state);

// Same transformation for an arbitrary square matrix. No unitarity check, so
// norm is not guaranteed; used to drive failure paths in the verifier.
StateVector apply_matrix(const ComplexMatrix& m, const StateVector& state);

// All occupations of `modes` modes holding exactly `photons` photons, in
// lexicographic order.
std::vector<OccupationVector> photon_sector(int modes, int photons);

}  // namespace photon

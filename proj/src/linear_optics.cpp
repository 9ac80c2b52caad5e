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

#include "photon_purify/linear_optics.hpp"

#include <array>
#include <bit>
#include <cassert>
#include <cmath>
#include <numbers>
#include <string>

#include "photon_purify/error.hpp"

namespace photon {

namespace {

constexpr int kMaxFactorial = 20;

constexpr std::array<double, kMaxFactorial + 1> make_factorials() {
  std::array<double, kMaxFactorial + 1> f{};
  f[0] = 1.0;
  for (int i = 1; i <= kMaxFactorial; ++i) f[i] = f[i - 1] * i;
  return f;
}

constexpr auto kFactorials = make_factorials();

double factorial_product(const OccupationVector& n) {
  double out = 1.0;
  for (int c : n.counts()) out *= kFactorials[static_cast<std::size_t>(c)];
  return out;
}

// Mode index repeated once per photon: (2, 0, 1) -> [0, 0, 2].
std::vector<int> expand_modes(const OccupationVector& n) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n.total()));
  for (int mode = 0; mode < n.modes(); ++mode) {
    for (int k = 0; k < n[mode]; ++k) out.push_back(mode);
  }
  return out;
}

void sector_recurse(int mode, int remaining, std::vector<int>& counts,
                    std::vector<OccupationVector>& out) {
  const int modes = static_cast<int>(counts.size());
  if (mode == modes - 1) {
    counts[static_cast<std::size_t>(mode)] = remaining;
    out.emplace_back(counts);
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    counts[static_cast<std::size_t>(mode)] = k;
    sector_recurse(mode + 1, remaining - k, counts, out);
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {
  if (rows < 0 || cols < 0) throw Error(ErrorCode::kInvalidArgument, "negative matrix dimension");
}

ComplexMatrix::ComplexMatrix(int rows, int cols, std::vector<Complex> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
  if (rows < 0 || cols < 0 || data_.size() != static_cast<std::size_t>(rows * cols)) {
    throw Error(ErrorCode::kInvalidArgument, "matrix data does not match its dimensions");
  }
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::kModeMismatch, "matrix product shape mismatch");
  ComplexMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      for (int j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw Error(ErrorCode::kModeMismatch, "matrix shape mismatch");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i) worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
  return worst;
}

double unitarity_error(const ComplexMatrix& m) {
  if (!m.square()) throw Error(ErrorCode::kNotSquare, "unitary must be square");
  return (m.adjoint() * m).max_abs_diff(ComplexMatrix::identity(m.rows()));
}

Unitary::Unitary(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() < 1) throw Error(ErrorCode::kInvalidArgument, "unitary dimension must be positive");
  const double err = unitarity_error(matrix_);
  if (!(err <= kUnitarityTolerance)) {
    throw Error(ErrorCode::kNotUnitary, "||U^dagger U - I||_max = " + std::to_string(err));
  }
}

Unitary operator*(const Unitary& a, const Unitary& b) { return Unitary(a.matrix() * b.matrix()); }

Unitary beamsplitter(const BeamSplitterParams& params) {
  using std::numbers::pi;
  if (!(params.theta >= 0.0 && params.theta <= pi / 2)) {
    throw Error(ErrorCode::kOutOfRange, "beam splitter theta must lie in [0, pi/2]");
  }
  if (!(params.phi >= -pi && params.phi <= pi)) {
    throw Error(ErrorCode::kOutOfRange, "beam splitter phi must lie in [-pi, pi]");
  }
  const double c = std::cos(params.theta);
  const double s = std::sin(params.theta);
  return Unitary(ComplexMatrix(2, 2,
                               {Complex{c, 0.0}, std::polar(s, params.phi),
                                -std::polar(s, -params.phi), Complex{c, 0.0}}));
}

Unitary embed(const Unitary& u, std::pair<int, int> target_modes, int total_modes) {
  const auto [a, b] = target_modes;
  if (u.dim() != 2) throw Error(ErrorCode::kInvalidArgument, "embed expects a two-mode unitary");
  if (a < 0 || b < 0 || a >= total_modes || b >= total_modes) {
    throw Error(ErrorCode::kIndexOutOfRange, "target mode outside [0, " + std::to_string(total_modes) + ")");
  }
  if (a == b) throw Error(ErrorCode::kDuplicateMode, "target modes must be distinct");
  ComplexMatrix m = ComplexMatrix::identity(total_modes);
  m(a, a) = u(0, 0);
  m(a, b) = u(0, 1);
  m(b, a) = u(1, 0);
  m(b, b) = u(1, 1);
  return Unitary(std::move(m));
}

Complex permanent(const ComplexMatrix& m) {
  if (!m.square()) throw Error(ErrorCode::kNotSquare, "permanent needs a square matrix");
  const int n = m.rows();
  switch (n) {
    case 0: return Complex{1.0, 0.0};
    case 1: return m(0, 0);
    case 2: return m(0, 0) * m(1, 1) + m(0, 1) * m(1, 0);
    default: break;
  }
  if (n > 30) throw Error(ErrorCode::kInvalidArgument, "permanent dimension too large");

  // per(A) = sum_{S subset cols} (-1)^{n-|S|} prod_i sum_{j in S} a_ij, with
  // subsets visited in Gray-code order so each step adds or removes one column.
  std::vector<Complex> row_sums(static_cast<std::size_t>(n));
  Complex total{};
  std::uint64_t gray = 0;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    const int col = std::countr_zero(k);
    const std::uint64_t bit = std::uint64_t{1} << col;
    gray ^= bit;
    const bool added = (gray & bit) != 0;
    Complex prod{1.0, 0.0};
    for (int i = 0; i < n; ++i) {
      auto& sum = row_sums[static_cast<std::size_t>(i)];
      sum += added ? m(i, col) : -m(i, col);
      prod *= sum;
    }
    const bool negative = ((n - std::popcount(gray)) & 1) != 0;
    total += negative ? -prod : prod;
  }
  return total;
}

std::vector<OccupationVector> photon_sector(int modes, int photons) {
  std::vector<OccupationVector> out;
  if (modes == 0) {
    if (photons == 0) out.emplace_back();
    return out;
  }
  std::vector<int> counts(static_cast<std::size_t>(modes), 0);
  sector_recurse(0, photons, counts, out);
  return out;
}

StateVector apply_matrix(const ComplexMatrix& m, const StateVector& state) {
  if (!m.square()) throw Error(ErrorCode::kNotSquare, "interferometer matrix must be square");
  if (m.rows() != state.modes()) {
    throw Error(ErrorCode::kModeMismatch, "interferometer acts on " + std::to_string(m.rows()) +
                                              " modes, state has " + std::to_string(state.modes()));
  }
  assert(state.cutoff() <= kMaxFactorial);

  const int modes = state.modes();
  std::vector<std::vector<OccupationVector>> sectors(static_cast<std::size_t>(state.cutoff() + 1));
  AmplitudeMap out;
  for (const auto& [in, amp] : state.amplitudes()) {
    const int photons = in.total();
    auto& sector = sectors[static_cast<std::size_t>(photons)];
    if (sector.empty()) sector = photon_sector(modes, photons);

    const std::vector<int> cols = expand_modes(in);
    const double in_factor = factorial_product(in);
    ComplexMatrix sub(photons, photons);
    for (const auto& target : sector) {
      const std::vector<int> rows = expand_modes(target);
      for (int r = 0; r < photons; ++r) {
        for (int c = 0; c < photons; ++c) {
          sub(r, c) = m(rows[static_cast<std::size_t>(r)], cols[static_cast<std::size_t>(c)]);
        }
      }
      const Complex element = permanent(sub) / std::sqrt(in_factor * factorial_product(target));
      out[target] += amp * element;
    }
  }
  return StateVector(modes, state.cutoff(), std::move(out));
}

StateVector apply(const Unitary& u, const StateVector& state) { return apply_matrix(u.matrix(), state); }

}  // namespace photon

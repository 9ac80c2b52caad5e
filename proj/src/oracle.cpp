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

#include "photon_purify/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

#include "photon_purify/error.hpp"

namespace photon::oracle {

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

double sqrt_factorial_product(const std::vector<int>& degrees) {
  double out = 1.0;
  for (int d : degrees) out *= std::sqrt(static_cast<double>(factorial(d)));
  return out;
}

// Every way to split `total` among `parts` slots.
void compositions(int parts, int total, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == parts - 1) {
    current.push_back(total);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int k = 0; k <= total; ++k) {
    current.push_back(k);
    compositions(parts, total - k, current, out);
    current.pop_back();
  }
}

std::uint64_t multinomial(int total, const std::vector<int>& parts) {
  std::uint64_t denom = 1;
  for (int k : parts) denom *= factorial(k);
  return factorial(total) / denom;
}

Complex integer_power(Complex z, int k) {
  Complex out{1.0, 0.0};
  for (int i = 0; i < k; ++i) out *= z;
  return out;
}

CreationPolynomial multiply(const CreationPolynomial& a, const CreationPolynomial& b) {
  CreationPolynomial out{a.modes, {}};
  for (const auto& [da, ca] : a.terms) {
    for (const auto& [db, cb] : b.terms) {
      std::vector<int> degree(da.size());
      std::transform(da.begin(), da.end(), db.begin(), degree.begin(), std::plus<>());
      out.terms[degree] += ca * cb;
    }
  }
  return out;
}

// (sum_i u(i, col) a_i^dagger)^power, expanded with multinomial weights.
CreationPolynomial column_power(const ComplexMatrix& u, int col, int power) {
  const int modes = u.rows();
  std::vector<std::vector<int>> splits;
  std::vector<int> scratch;
  compositions(modes, power, scratch, splits);
  CreationPolynomial out{modes, {}};
  for (const auto& split : splits) {
    Complex coeff{static_cast<double>(multinomial(power, split)), 0.0};
    for (int i = 0; i < modes; ++i) coeff *= integer_power(u(i, col), split[static_cast<std::size_t>(i)]);
    out.terms[split] += coeff;
  }
  return out;
}

}  // namespace

CreationPolynomial state_to_polynomial(const StateVector& state) {
  CreationPolynomial poly{state.modes(), {}};
  for (const auto& [occupation, amp] : state.amplitudes()) {
    poly.terms[occupation.counts()] = amp / sqrt_factorial_product(occupation.counts());
  }
  return poly;
}

CreationPolynomial substitute(const CreationPolynomial& poly, const ComplexMatrix& u) {
  if (!u.square()) throw Error(ErrorCode::kNotSquare, "substitution matrix must be square");
  if (u.rows() != poly.modes) throw Error(ErrorCode::kModeMismatch, "polynomial and matrix disagree on modes");

  CreationPolynomial out{poly.modes, {}};
  for (const auto& [degree, coeff] : poly.terms) {
    CreationPolynomial product{poly.modes, {{std::vector<int>(static_cast<std::size_t>(poly.modes), 0), coeff}}};
    for (int j = 0; j < poly.modes; ++j) {
      const int power = degree[static_cast<std::size_t>(j)];
      if (power > 0) product = multiply(product, column_power(u, j, power));
    }
    for (const auto& [d, c] : product.terms) out.terms[d] += c;
  }
  std::erase_if(out.terms, [](const auto& kv) { return std::abs(kv.second) < kPruneThreshold; });
  return out;
}

StateVector polynomial_to_state(const CreationPolynomial& poly, int cutoff) {
  AmplitudeMap amps;
  for (const auto& [degree, coeff] : poly.terms) {
    if (std::accumulate(degree.begin(), degree.end(), 0) > cutoff) {
      if (std::abs(coeff) < kPruneThreshold) continue;
      throw Error(ErrorCode::kCutoffExceeded, "polynomial degree exceeds photon cutoff");
    }
    amps.emplace(OccupationVector(degree), coeff * sqrt_factorial_product(degree));
  }
  return StateVector(poly.modes, cutoff, std::move(amps));
}

Complex permanent_naive(const ComplexMatrix& m) {
  if (!m.square()) throw Error(ErrorCode::kNotSquare, "permanent needs a square matrix");
  const int n = m.rows();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Complex total{};
  do {
    Complex prod{1.0, 0.0};
    for (int i = 0; i < n; ++i) prod *= m(i, perm[static_cast<std::size_t>(i)]);
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

StateVector apply_by_expansion(const ComplexMatrix& u, const StateVector& state) {
  return polynomial_to_state(substitute(state_to_polynomial(state), u), state.cutoff());
}

}  // namespace photon::oracle

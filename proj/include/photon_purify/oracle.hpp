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

#include <map>
#include <vector>

#include "photon_purify/fock.hpp"
#include "photon_purify/linear_optics.hpp"

// Brute-force reference engine. Nothing here calls into the permanent-based
// transform: states are rewritten as polynomials in creation operators,
// substituted and expanded term by term with integer multinomial weights.
namespace photon::oracle {

/// Sum of coefficient * prod_i (a_i^dagger)^degree[i].
struct CreationPolynomial {
  int modes = 0;
  std::map<std::vector<int>, Complex> terms;
};

CreationPolynomial state_to_polynomial(const StateVector& state);

// Replaces a_j^dagger by sum_i U(i, j) a_i^dagger and collects terms.
CreationPolynomial substitute(const CreationPolynomial& poly, const ComplexMatrix& u);

StateVector polynomial_to_state(const CreationPolynomial& poly, int cutoff = kDefaultCutoff);

// Sum over all permutations; O(n * n!).
Complex permanent_naive(const ComplexMatrix& m);

// polynomial_to_state(substitute(state_to_polynomial(s), u)).
StateVector apply_by_expansion(const ComplexMatrix& u, const StateVector& state);

}  // namespace photon::oracle

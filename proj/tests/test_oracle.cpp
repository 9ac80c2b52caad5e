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

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "photon_purify/error.hpp"
#include "photon_purify/linear_optics.hpp"
#include "photon_purify/oracle.hpp"
#include "photon_purify/sampling.hpp"

using namespace photon;
using namespace photon::oracle;
using photon::testing::check_close;
using photon::testing::max_amplitude_diff;
using std::numbers::pi;

namespace {

Complex coeff(const CreationPolynomial& p, std::vector<int> degree) {
  auto it = p.terms.find(degree);
  return it == p.terms.end() ? Complex{} : it->second;
}

}  // namespace

TEST_CASE("state_to_polynomial") {
  const CreationPolynomial vac = state_to_polynomial(StateVector::basis({0}));
  CHECK(vac.terms.size() == 1);
  check_close(coeff(vac, {0}), 1.0);

  const CreationPolynomial two = state_to_polynomial(StateVector::basis({2}));
  check_close(coeff(two, {2}), 1.0 / std::sqrt(2.0));

  const Complex a1{0.6, 0.0}, b1{0.0, 0.8}, a2{0.8, 0.0}, b2{0.6, 0.0};
  const CreationPolynomial joint =
      state_to_polynomial(tensor(input_to_state(make_input(a1, b1)), input_to_state(make_input(a2, b2))));
  CHECK(joint.terms.size() == 4);
  check_close(coeff(joint, {0, 0}), a1 * a2);
  check_close(coeff(joint, {1, 0}), a2 * b1);
  check_close(coeff(joint, {0, 1}), a1 * b2);
  check_close(coeff(joint, {1, 1}), b1 * b2);
}

TEST_CASE("substitute") {
  const CreationPolynomial a1{2, {{{1, 0}, 1.0}}};
  const CreationPolynomial same = substitute(a1, ComplexMatrix::identity(2));
  CHECK(same.terms.size() == 1);
  check_close(coeff(same, {1, 0}), 1.0);

  const CreationPolynomial cross{2, {{{1, 1}, 1.0}}};
  const CreationPolynomial hom = substitute(cross, beamsplitter({pi / 4, pi}).matrix());
  check_close(coeff(hom, {2, 0}), -0.5);
  check_close(coeff(hom, {0, 2}), 0.5);
  CHECK(coeff(hom, {1, 1}) == Complex{});

  CHECK_THROWS_AS(substitute(a1, ComplexMatrix::identity(3)), Error);
}

TEST_CASE("substitute yields every coefficient of the transformed two-input polynomial") {
  sampling::Rng rng(17);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> angle(-pi, pi);
  for (int t = 0; t < 20; ++t) {
    const InputState in1 = input_from_probability(unit(rng), angle(rng));
    const InputState in2 = input_from_probability(unit(rng), angle(rng));
    const ComplexMatrix l = beamsplitter(sampling::random_beamsplitter(rng)).matrix();
    const Complex a1 = in1.alpha(), b1 = in1.beta(), a2 = in2.alpha(), b2 = in2.beta();
    const CreationPolynomial out =
        substitute(state_to_polynomial(tensor(input_to_state(in1), input_to_state(in2))), l);

    check_close(coeff(out, {0, 0}), a1 * a2);
    check_close(coeff(out, {1, 0}), a2 * b1 * l(0, 0) + a1 * b2 * l(0, 1));
    check_close(coeff(out, {0, 1}), a2 * b1 * l(1, 0) + a1 * b2 * l(1, 1));
    check_close(coeff(out, {2, 0}), b1 * b2 * l(0, 0) * l(0, 1));
    check_close(coeff(out, {0, 2}), b1 * b2 * l(1, 0) * l(1, 1));
    check_close(coeff(out, {1, 1}), b1 * b2 * (l(0, 0) * l(1, 1) + l(0, 1) * l(1, 0)));
  }
}

TEST_CASE("substitute preserves the degree of every monomial") {
  sampling::Rng rng(4);
  for (int photons = 0; photons <= 4; ++photons) {
    for (const auto& n : photon_sector(3, photons)) {
      const CreationPolynomial p{3, {{n.counts(), 1.0}}};
      for (const auto& [degree, c] : substitute(p, sampling::random_unitary(rng, 3).matrix()).terms) {
        CHECK(std::accumulate(degree.begin(), degree.end(), 0) == photons);
      }
    }
  }
}

TEST_CASE("polynomial_to_state") {
  check_close(polynomial_to_state({1, {{{0}, 1.0}}}).amplitude({0}), 1.0);
  check_close(polynomial_to_state({1, {{{2}, 1.0 / std::sqrt(2.0)}}}).amplitude({2}), 1.0);
  CHECK_THROWS_AS(polynomial_to_state({1, {{{3}, 1.0}}}, 2), Error);

  sampling::Rng rng(8);
  for (int t = 0; t < 50; ++t) {
    const StateVector s = sampling::random_state(rng, 1 + t % 3, 4);
    const StateVector back = polynomial_to_state(state_to_polynomial(s));
    CHECK(max_amplitude_diff(s, back) <= 1e-15);
    CHECK(std::abs(fidelity(s, back) - 1.0) <= 1e-12);
  }
}

TEST_CASE("expansion engine agrees with the permanent route") {
  sampling::Rng rng(2718);
  double worst = 0.0;
  for (int t = 0; t < 200; ++t) {
    const int modes = 1 + t % 3;
    const StateVector s = sampling::random_state(rng, modes, 4);
    const Unitary u = sampling::random_unitary(rng, modes);
    worst = std::max(worst, max_amplitude_diff(apply(u, s), apply_by_expansion(u.matrix(), s)));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("naive permanent") {
  check_close(permanent_naive(ComplexMatrix(2, 2, {1.0, 2.0, 3.0, 4.0})), 10.0);
  check_close(permanent_naive(ComplexMatrix(3, 3, std::vector<Complex>(9, 1.0))), 6.0);
  check_close(permanent_naive(ComplexMatrix(0, 0)), 1.0);
}

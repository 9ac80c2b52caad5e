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
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "photon_purify/error.hpp"
#include "photon_purify/fock.hpp"
#include "photon_purify/sampling.hpp"

using namespace photon;
using photon::testing::check_close;

namespace {

const double kRootHalf = 1.0 / std::sqrt(2.0);

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected photon::Error");
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST_CASE("make_input derives p from beta") {
  CHECK(make_input(1.0, 0.0).p() == 0.0);
  CHECK(make_input(0.0, 1.0).p() == 1.0);
  CHECK(make_input(kRootHalf, kRootHalf).p() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(make_input(Complex{0.6, 0.0}, Complex{0.0, 0.8}).p() == doctest::Approx(0.64));
}

TEST_CASE("make_input rejects unnormalized amplitudes") {
  CHECK(code_of([] { make_input(1.0, 1.0); }) == ErrorCode::kNotNormalized);
  CHECK(code_of([] { make_input(0.5, 0.5); }) == ErrorCode::kNotNormalized);
  CHECK(code_of([] { make_input(std::nan(""), 0.0); }) == ErrorCode::kNotNormalized);
  // Within the 1e-9 window.
  CHECK_NOTHROW(make_input(std::sqrt(1.0 + 5e-10), 0.0));
}

TEST_CASE("input_from_probability") {
  const InputState s = input_from_probability(0.25, std::numbers::pi / 2);
  check_close(s.alpha(), std::sqrt(0.75));
  check_close(s.beta(), Complex{0.0, 0.5});
  CHECK(code_of([] { input_from_probability(1.5); }) == ErrorCode::kOutOfRange);
  CHECK(code_of([] { input_from_probability(-0.1); }) == ErrorCode::kOutOfRange);
}

TEST_CASE("input_to_state") {
  const StateVector vac = input_to_state(make_input(1.0, 0.0));
  CHECK(vac.modes() == 1);
  CHECK(vac.amplitudes().size() == 1);
  check_close(vac.amplitude({0}), 1.0);

  const StateVector one = input_to_state(make_input(0.0, 1.0));
  CHECK(one.amplitudes().size() == 1);
  check_close(one.amplitude({1}), 1.0);

  const StateVector half = input_to_state(make_input(kRootHalf, kRootHalf));
  check_close(half.amplitude({0}), 0.70710678118654752);
  check_close(half.amplitude({1}), 0.70710678118654752);
}

TEST_CASE("tensor multiplies amplitudes over concatenated occupations") {
  const StateVector vv = tensor(StateVector::vacuum(1), StateVector::vacuum(1));
  CHECK(vv.modes() == 2);
  check_close(vv.amplitude({0, 0}), 1.0);

  const Complex a1{0.6, 0.0}, b1{0.0, 0.8}, a2{0.8, 0.0}, b2{-0.36, 0.48};
  const StateVector joint = tensor(input_to_state(make_input(a1, b1)), input_to_state(make_input(a2, b2)));
  check_close(joint.amplitude({0, 0}), a1 * a2);
  check_close(joint.amplitude({1, 0}), a2 * b1);
  check_close(joint.amplitude({0, 1}), a1 * b2);
  check_close(joint.amplitude({1, 1}), b1 * b2);

  const InputState h = make_input(kRootHalf, kRootHalf);
  const StateVector quarter = tensor(input_to_state(h), input_to_state(h));
  for (const auto& [n, amp] : quarter.amplitudes()) check_close(amp, 0.5);
  CHECK(quarter.amplitudes().size() == 4);
}

TEST_CASE("tensor respects the photon cutoff") {
  const StateVector one = StateVector::basis({1}, 1);
  CHECK(code_of([&] { tensor(one, one); }) == ErrorCode::kCutoffExceeded);
  CHECK_NOTHROW(tensor(one, StateVector::basis({1}, 2)));
}

TEST_CASE("tensor photon distribution is the convolution of its parts") {
  sampling::Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    const StateVector a = sampling::random_state(rng, 1, 2);
    const StateVector b = sampling::random_state(rng, 2, 2);
    const StateVector ab = tensor(a, b);
    std::vector<double> pa(5), pb(5), pab(5), conv(5);
    for (const auto& [n, amp] : a.amplitudes()) pa[n.total()] += std::norm(amp);
    for (const auto& [n, amp] : b.amplitudes()) pb[n.total()] += std::norm(amp);
    for (const auto& [n, amp] : ab.amplitudes()) pab[n.total()] += std::norm(amp);
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; i + j < 5; ++j) conv[i + j] += pa[i] * pb[j];
    }
    for (int k = 0; k < 5; ++k) CHECK(pab[k] == doctest::Approx(conv[k]).epsilon(1e-12));
  }
}

TEST_CASE("inner_product") {
  const StateVector zero = StateVector::basis({0});
  const StateVector one = StateVector::basis({1});
  check_close(inner_product(zero, zero), 1.0);
  check_close(inner_product(zero, one), 0.0);
  CHECK(code_of([&] { inner_product(zero, StateVector::vacuum(2)); }) == ErrorCode::kModeMismatch);

  // Conjugate-linear in the first argument.
  const StateVector i_one = one.scaled(Complex{0.0, 1.0});
  check_close(inner_product(i_one, one), Complex{0.0, -1.0});
  check_close(inner_product(one, i_one), Complex{0.0, 1.0});

  sampling::Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    const StateVector s = sampling::random_state(rng, 3, 3).scaled(Complex{1.7, -0.3});
    const Complex self = inner_product(s, s);
    CHECK(std::abs(self.imag()) <= 1e-12);
    CHECK(std::abs(self.real() - s.squared_norm()) <= 1e-12);
    CHECK(self.real() >= 0.0);
  }
}

TEST_CASE("fidelity") {
  const StateVector zero = StateVector::basis({0});
  const StateVector one = StateVector::basis({1});
  CHECK(fidelity(one, one) == doctest::Approx(1.0));
  CHECK(fidelity(zero, one) == 0.0);
  CHECK(code_of([&] { fidelity(one.scaled(2.0), one); }) == ErrorCode::kNotNormalized);
  CHECK(code_of([&] { fidelity(one, StateVector::vacuum(2)); }) == ErrorCode::kModeMismatch);

  sampling::Rng rng(3);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  for (int t = 0; t < 50; ++t) {
    CHECK(std::abs(fidelity(one.scaled(std::polar(1.0, angle(rng))), one) - 1.0) <= 1e-12);
    const StateVector a = sampling::random_state(rng, 2, 3);
    const StateVector b = sampling::random_state(rng, 2, 3);
    const double f = fidelity(a, b);
    CHECK(f >= 0.0);
    CHECK(f <= 1.0 + 1e-12);
    CHECK(std::abs(f - fidelity(b, a)) <= 1e-12);
    CHECK(std::abs(f - fidelity(a.scaled(std::polar(1.0, angle(rng))), b.scaled(std::polar(1.0, angle(rng))))) <=
          1e-12);
  }
}

TEST_CASE("normalize") {
  const Normalized two = normalize(StateVector(1, 4, {{OccupationVector{0}, 2.0}}));
  check_close(two.state.amplitude({0}), 1.0);
  CHECK(two.squared_norm == doctest::Approx(4.0));

  const Normalized mixed = normalize(StateVector(1, 4, {{OccupationVector{0}, 0.5}, {OccupationVector{2}, -0.35355339059327373}}));
  CHECK(mixed.squared_norm == doctest::Approx(0.375).epsilon(1e-14));
  check_close(mixed.state.amplitude({0}), 0.81649658092772603);
  check_close(mixed.state.amplitude({2}), -0.57735026918962576);

  CHECK(code_of([] { normalize(StateVector(1, 4, {})); }) == ErrorCode::kZeroState);
  // Below the pruning threshold counts as empty.
  CHECK(code_of([] { normalize(StateVector(1, 4, {{OccupationVector{0}, 1e-301}})); }) == ErrorCode::kZeroState);

  sampling::Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    const StateVector s = sampling::random_state(rng, 2, 4).scaled(Complex{0.01, 3.0});
    CHECK(std::abs(normalize(s).state.squared_norm() - 1.0) <= 1e-12);
  }
}

TEST_CASE("state construction validates occupations and prunes tiny amplitudes") {
  CHECK(code_of([] { OccupationVector{-1}; }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { StateVector(2, 4, {{OccupationVector{1}, 1.0}}); }) == ErrorCode::kModeMismatch);
  CHECK(code_of([] { StateVector(1, 2, {{OccupationVector{3}, 1.0}}); }) == ErrorCode::kCutoffExceeded);
  CHECK(code_of([] { StateVector(1, 2, {{OccupationVector{1}, Complex{INFINITY, 0.0}}}); }) ==
        ErrorCode::kInvalidArgument);

  const StateVector s(1, 4, {{OccupationVector{0}, 1.0}, {OccupationVector{1}, 9e-15}});
  CHECK(s.amplitudes().size() == 1);
  CHECK(s.amplitude({1}) == Complex{});
}

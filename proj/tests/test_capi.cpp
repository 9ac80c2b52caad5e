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
#include <cstring>
#include <numbers>
#include <string>

#include "doctest.h"
#include "photon_purify/photon_purify.h"

using std::numbers::pi;

TEST_CASE("C API: run_scheme") {
  pp_scheme_report r{};
  REQUIRE(pp_run_scheme({0.5, 0.0}, {0.5, 0.0}, 4, &r) == PP_OK);
  CHECK(std::abs(r.p_success - 0.0625) <= 1e-12);
  CHECK(r.output_fidelity >= 1 - 1e-10);
  CHECK(r.degeneracy == PP_DEGENERATE_NONE);
  CHECK(std::abs(r.lambda1.theta - pi / 4) <= 1e-12);
  CHECK(r.input1.p == 0.5);

  REQUIRE(pp_run_scheme({0.0, 0.0}, {0.5, 0.0}, 4, &r) == PP_OK);
  CHECK(r.p_success == 0.0);
  CHECK(r.degeneracy == PP_DEGENERATE_NO_PHOTON_PAIR);
  CHECK(std::string(pp_degeneracy_string(r.degeneracy)) == "no-photon-pair");
}

TEST_CASE("C API: errors map to status codes") {
  pp_scheme_report r{};
  CHECK(pp_run_scheme({1.5, 0.0}, {0.5, 0.0}, 4, &r) == PP_ERR_OUT_OF_RANGE);
  CHECK(std::strlen(pp_last_error()) > 0);
  CHECK(pp_run_scheme({0.5, 0.0}, {0.5, 0.0}, 1, &r) == PP_ERR_INVALID_ARGUMENT);
  CHECK(pp_run_scheme({0.5, 0.0}, {0.5, 0.0}, 4, nullptr) == PP_ERR_INVALID_ARGUMENT);
  CHECK(pp_run_scheme({0.5, 0.0}, {0.5, 0.0}, 4, &r) == PP_OK);
  CHECK(std::strlen(pp_last_error()) == 0);
  CHECK(std::string(pp_status_string(PP_ERR_PURITY_VIOLATED)) == "purity violated");

  double v = 0;
  CHECK(pp_success_curve_new(2.0, &v) == PP_ERR_OUT_OF_RANGE);
  REQUIRE(pp_success_curve_old(1.0, &v) == PP_OK);
  CHECK(std::abs(v - 16.0 / 81.0) <= 1e-15);
}

TEST_CASE("C API: solve_cancellation") {
  pp_beamsplitter bs{};
  int degenerate = -1;
  REQUIRE(pp_solve_cancellation({0.8, 0.0}, {0.2, 0.0}, &bs, &degenerate) == PP_OK);
  CHECK(degenerate == 0);
  CHECK(std::abs(bs.theta - std::atan(4.0)) <= 1e-12);
  REQUIRE(pp_solve_cancellation({1.0, 0.0}, {1.0, 0.0}, &bs, &degenerate) == PP_OK);
  CHECK(degenerate == 1);
}

TEST_CASE("C API: state handles reproduce Hong-Ou-Mandel bunching") {
  const int ones[] = {1, 1};
  pp_state* in = nullptr;
  REQUIRE(pp_state_basis(ones, 2, 4, &in) == PP_OK);
  pp_state* out = nullptr;
  REQUIRE(pp_state_apply_beamsplitter(in, {pi / 4, pi}, 0, 1, &out) == PP_OK);
  CHECK(pp_state_modes(out) == 2);
  CHECK(pp_state_size(out) == 2);

  double re = 0, im = 0;
  const int coincidence[] = {1, 1};
  REQUIRE(pp_state_amplitude(out, coincidence, &re, &im) == PP_OK);
  CHECK(re == 0.0);
  const int bunched[] = {0, 2};
  REQUIRE(pp_state_amplitude(out, bunched, &re, &im) == PP_OK);
  CHECK(std::abs(re - 1 / std::sqrt(2.0)) <= 1e-12);

  int counts[2];
  REQUIRE(pp_state_entry(out, 0, counts, &re, &im) == PP_OK);
  CHECK(counts[0] + counts[1] == 2);
  CHECK(pp_state_entry(out, 5, counts, &re, &im) == PP_ERR_INDEX_OUT_OF_RANGE);

  const int modes[] = {1};
  const int none[] = {1};
  double prob = -1;
  pp_state* cond = reinterpret_cast<pp_state*>(0x1);
  REQUIRE(pp_state_condition(out, modes, none, 1, &prob, &cond) == PP_OK);
  CHECK(prob == 0.0);
  CHECK(cond == nullptr);

  const int two[] = {2};
  REQUIRE(pp_state_condition(out, modes, two, 1, &prob, &cond) == PP_OK);
  CHECK(std::abs(prob - 0.5) <= 1e-12);
  REQUIRE(cond != nullptr);
  CHECK(pp_state_modes(cond) == 1);

  CHECK(pp_state_apply_beamsplitter(in, {pi / 4, pi}, 0, 0, &out) == PP_ERR_DUPLICATE_MODE);
  CHECK(pp_state_apply_beamsplitter(in, {pi / 4, pi}, 0, 2, &out) == PP_ERR_INDEX_OUT_OF_RANGE);

  pp_state_free(cond);
  pp_state_free(out);
  pp_state_free(in);
  pp_state_free(nullptr);
}

TEST_CASE("C API: tensor, unitary and fidelity") {
  pp_state* a = nullptr;
  pp_state* b = nullptr;
  REQUIRE(pp_state_from_input({0.5, 0.0}, 4, &a) == PP_OK);
  REQUIRE(pp_state_from_input({0.5, 0.0}, 4, &b) == PP_OK);
  pp_state* ab = nullptr;
  REQUIRE(pp_state_tensor(a, b, &ab) == PP_OK);
  CHECK(pp_state_size(ab) == 4);

  const double re[] = {0.0, 1.0, 1.0, 0.0};
  const double im[] = {0.0, 0.0, 0.0, 0.0};
  pp_state* swapped = nullptr;
  REQUIRE(pp_state_apply_unitary(ab, re, im, 2, &swapped) == PP_OK);
  double f = 0;
  REQUIRE(pp_state_fidelity(ab, swapped, &f) == PP_OK);
  CHECK(std::abs(f - 1.0) <= 1e-12);

  const double bad[] = {1.0, 1.0, 0.0, 1.0};
  pp_state* never = nullptr;
  CHECK(pp_state_apply_unitary(ab, bad, im, 2, &never) == PP_ERR_NOT_UNITARY);
  CHECK(pp_state_fidelity(a, ab, &f) == PP_ERR_MODE_MISMATCH);
  CHECK(pp_state_from_input({0.5, 0.0}, 0, &never) == PP_ERR_INVALID_ARGUMENT);

  pp_state_free(swapped);
  pp_state_free(ab);
  pp_state_free(b);
  pp_state_free(a);
}

TEST_CASE("C API: sweep handle") {
  pp_sweep_spec spec{};
  spec.p1 = {0.0, 1.0, 11};
  spec.phase1 = {0.0, 0.0, 1};
  spec.diagonal = 1;
  spec.cutoff = 4;
  pp_sweep* sweep = nullptr;
  REQUIRE(pp_sweep_run(&spec, &sweep) == PP_OK);
  REQUIRE(pp_sweep_size(sweep) == 11);
  for (size_t i = 0; i < 11; ++i) {
    pp_scheme_report r{};
    REQUIRE(pp_sweep_row(sweep, i, &r) == PP_OK);
    CHECK(std::abs(r.p_success - r.input1.p * r.input1.p / 4) <= 1e-12);
  }
  pp_scheme_report r{};
  CHECK(pp_sweep_row(sweep, 11, &r) == PP_ERR_INDEX_OUT_OF_RANGE);
  pp_sweep_free(sweep);

  spec.p1.steps = 0;
  CHECK(pp_sweep_run(&spec, &sweep) == PP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("C API: verify handle") {
  pp_verify_report* report = nullptr;
  REQUIRE(pp_verify_run(1, 5, PP_FAULT_NONE, &report) == PP_OK);
  CHECK(pp_verify_all_passed(report) == 1);
  CHECK(pp_verify_count(report) == 11);
  const char* name = nullptr;
  const char* detail = nullptr;
  int passed = 0;
  REQUIRE(pp_verify_check(report, 0, &name, &passed, &detail) == PP_OK);
  CHECK(std::string(name) == "unitarity");
  pp_verify_free(report);

  REQUIRE(pp_verify_run(1, 5, PP_FAULT_PERTURB_UNITARY, &report) == PP_OK);
  CHECK(pp_verify_all_passed(report) == 0);
  pp_verify_free(report);

  CHECK(pp_verify_run(1, 0, PP_FAULT_NONE, &report) == PP_ERR_INVALID_ARGUMENT);
}

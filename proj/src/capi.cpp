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

#include "photon_purify/photon_purify.h"

#include <algorithm>
#include <exception>
#include <iterator>
#include <memory>
#include <string>
#include <vector>

#include "photon_purify/error.hpp"
#include "photon_purify/fock.hpp"
#include "photon_purify/linear_optics.hpp"
#include "photon_purify/measurement.hpp"
#include "photon_purify/scheme.hpp"
#include "photon_purify/sweep.hpp"
#include "photon_purify/verify.hpp"

struct pp_state {
  photon::StateVector state;
};

struct pp_sweep {
  std::vector<pp_scheme_report> rows;
};

struct pp_verify_report {
  std::vector<photon::CheckOutcome> checks;
};

namespace {

thread_local std::string last_error;

pp_status to_status(photon::ErrorCode code) {
  using photon::ErrorCode;
  switch (code) {
    case ErrorCode::kInvalidArgument: return PP_ERR_INVALID_ARGUMENT;
    case ErrorCode::kNotNormalized: return PP_ERR_NOT_NORMALIZED;
    case ErrorCode::kOutOfRange: return PP_ERR_OUT_OF_RANGE;
    case ErrorCode::kModeMismatch: return PP_ERR_MODE_MISMATCH;
    case ErrorCode::kCutoffExceeded: return PP_ERR_CUTOFF_EXCEEDED;
    case ErrorCode::kZeroState: return PP_ERR_ZERO_STATE;
    case ErrorCode::kNotUnitary: return PP_ERR_NOT_UNITARY;
    case ErrorCode::kNotSquare: return PP_ERR_NOT_SQUARE;
    case ErrorCode::kIndexOutOfRange: return PP_ERR_INDEX_OUT_OF_RANGE;
    case ErrorCode::kDuplicateMode: return PP_ERR_DUPLICATE_MODE;
    case ErrorCode::kPurityViolated: return PP_ERR_PURITY_VIOLATED;
  }
  return PP_ERR_INTERNAL;
}

pp_status fail(pp_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <typename F>
pp_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return PP_OK;
  } catch (const photon::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::exception& e) {
    return fail(PP_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(PP_ERR_INTERNAL, "unknown exception");
  }
}

#define PP_REQUIRE(cond, message) \
  do {                            \
    if (!(cond)) return fail(PP_ERR_INVALID_ARGUMENT, message); \
  } while (0)

photon::InputState to_input(pp_input in) { return photon::input_from_probability(in.p, in.phase); }

pp_beamsplitter to_c(const photon::BeamSplitterParams& p) { return {p.theta, p.phi}; }

photon::GridRange to_range(const pp_range& r) { return {r.start, r.stop, r.steps}; }

pp_scheme_report to_report(pp_input in1, pp_input in2, const photon::SchemeResult& r) {
  pp_scheme_report out{};
  out.input1 = in1;
  out.input2 = in2;
  out.lambda1 = to_c(r.lambda1);
  out.lambda2 = to_c(r.lambda2);
  out.stage_one_probability = r.stage_one_probability;
  out.stage_two_probability = r.stage_two_probability;
  out.p_success = r.p_success;
  out.output_fidelity = r.output_fidelity;
  out.degeneracy = static_cast<pp_degeneracy>(r.degeneracy);
  return out;
}

photon::OccupationVector to_occupation(const int* counts, int modes) {
  return photon::OccupationVector(std::vector<int>(counts, counts + modes));
}

pp_state* wrap(photon::StateVector s) { return new pp_state{std::move(s)}; }

}  // namespace

extern "C" {

const char* pp_version(void) { return "1.0.0"; }

const char* pp_status_string(pp_status status) {
  switch (status) {
    case PP_OK: return "ok";
    case PP_ERR_INVALID_ARGUMENT: return "invalid argument";
    case PP_ERR_NOT_NORMALIZED: return "not normalized";
    case PP_ERR_OUT_OF_RANGE: return "out of range";
    case PP_ERR_MODE_MISMATCH: return "mode mismatch";
    case PP_ERR_CUTOFF_EXCEEDED: return "cutoff exceeded";
    case PP_ERR_ZERO_STATE: return "zero state";
    case PP_ERR_NOT_UNITARY: return "not unitary";
    case PP_ERR_NOT_SQUARE: return "not square";
    case PP_ERR_INDEX_OUT_OF_RANGE: return "index out of range";
    case PP_ERR_DUPLICATE_MODE: return "duplicate mode";
    case PP_ERR_PURITY_VIOLATED: return "purity violated";
    case PP_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* pp_last_error(void) { return last_error.c_str(); }

const char* pp_degeneracy_string(pp_degeneracy degeneracy) {
  return photon::degeneracy_name(static_cast<photon::Degeneracy>(degeneracy)).data();
}

pp_status pp_run_scheme(pp_input in1, pp_input in2, int cutoff, pp_scheme_report* out) {
  PP_REQUIRE(out != nullptr, "out is null");
  return guarded([&] { *out = to_report(in1, in2, photon::run_scheme(to_input(in1), to_input(in2), cutoff)); });
}

pp_status pp_solve_cancellation(pp_input in1, pp_input in2, pp_beamsplitter* out, int* degenerate) {
  PP_REQUIRE(out != nullptr, "out is null");
  return guarded([&] {
    const auto solved = photon::solve_cancellation(to_input(in1), to_input(in2));
    *out = to_c(solved.params);
    if (degenerate) *degenerate = solved.degenerate ? 1 : 0;
  });
}

pp_status pp_success_curve_new(double p, double* out) {
  PP_REQUIRE(out != nullptr, "out is null");
  return guarded([&] { *out = photon::success_curve_new(p); });
}

pp_status pp_success_curve_old(double p, double* out) {
  PP_REQUIRE(out != nullptr, "out is null");
  return guarded([&] { *out = photon::success_curve_old(p); });
}

pp_status pp_state_from_input(pp_input in, int cutoff, pp_state** out) {
  PP_REQUIRE(out != nullptr, "out is null");
  return guarded([&] { *out = wrap(photon::input_to_state(to_input(in), cutoff)); });
}

pp_status pp_state_basis(const int* counts, int modes, int cutoff, pp_state** out) {
  PP_REQUIRE(out != nullptr, "out is null");
  PP_REQUIRE(modes >= 0 && (counts != nullptr || modes == 0), "counts is null");
  return guarded([&] { *out = wrap(photon::StateVector::basis(to_occupation(counts, modes), cutoff)); });
}

void pp_state_free(pp_state* state) { delete state; }

int pp_state_modes(const pp_state* state) { return state ? state->state.modes() : -1; }

size_t pp_state_size(const pp_state* state) { return state ? state->state.amplitudes().size() : 0; }

pp_status pp_state_entry(const pp_state* state, size_t i, int* counts, double* re, double* im) {
  PP_REQUIRE(state && counts && re && im, "null argument");
  const auto& amps = state->state.amplitudes();
  if (i >= amps.size()) return fail(PP_ERR_INDEX_OUT_OF_RANGE, "entry index out of range");
  auto it = amps.begin();
  std::advance(it, static_cast<std::ptrdiff_t>(i));
  std::copy(it->first.counts().begin(), it->first.counts().end(), counts);
  *re = it->second.real();
  *im = it->second.imag();
  return PP_OK;
}

pp_status pp_state_amplitude(const pp_state* state, const int* counts, double* re, double* im) {
  PP_REQUIRE(state && re && im, "null argument");
  PP_REQUIRE(counts != nullptr || state->state.modes() == 0, "counts is null");
  return guarded([&] {
    const photon::Complex amp = state->state.amplitude(to_occupation(counts, state->state.modes()));
    *re = amp.real();
    *im = amp.imag();
  });
}

pp_status pp_state_tensor(const pp_state* a, const pp_state* b, pp_state** out) {
  PP_REQUIRE(a && b && out, "null argument");
  return guarded([&] { *out = wrap(photon::tensor(a->state, b->state)); });
}

pp_status pp_state_apply_beamsplitter(const pp_state* state, pp_beamsplitter bs, int mode_a, int mode_b,
                                      pp_state** out) {
  PP_REQUIRE(state && out, "null argument");
  return guarded([&] {
    const photon::Unitary u =
        photon::embed(photon::beamsplitter({bs.theta, bs.phi}), {mode_a, mode_b}, state->state.modes());
    *out = wrap(photon::apply(u, state->state));
  });
}

pp_status pp_state_apply_unitary(const pp_state* state, const double* re, const double* im, int dim,
                                 pp_state** out) {
  PP_REQUIRE(state && re && im && out, "null argument");
  PP_REQUIRE(dim > 0, "dimension must be positive");
  return guarded([&] {
    std::vector<photon::Complex> entries(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim));
    for (std::size_t k = 0; k < entries.size(); ++k) entries[k] = {re[k], im[k]};
    const photon::Unitary u(photon::ComplexMatrix(dim, dim, std::move(entries)));
    *out = wrap(photon::apply(u, state->state));
  });
}

pp_status pp_state_condition(const pp_state* state, const int* modes, const int* counts, size_t n,
                             double* probability, pp_state** out) {
  PP_REQUIRE(state && probability && out, "null argument");
  PP_REQUIRE(n == 0 || (modes && counts), "null pattern");
  return guarded([&] {
    photon::DetectionPattern pattern;
    for (size_t k = 0; k < n; ++k) {
      if (!pattern.emplace(modes[k], counts[k]).second) {
        throw photon::Error(photon::ErrorCode::kDuplicateMode, "mode listed twice in pattern");
      }
    }
    photon::ConditionResult r = photon::condition(state->state, pattern);
    *probability = r.probability;
    *out = r.impossible() ? nullptr : wrap(std::move(*r.state));
  });
}

pp_status pp_state_fidelity(const pp_state* a, const pp_state* b, double* out) {
  PP_REQUIRE(a && b && out, "null argument");
  return guarded([&] { *out = photon::fidelity(a->state, b->state); });
}

pp_status pp_sweep_run(const pp_sweep_spec* spec, pp_sweep** out) {
  PP_REQUIRE(spec && out, "null argument");
  return guarded([&] {
    photon::SweepSpec s;
    s.p1 = to_range(spec->p1);
    s.p2 = to_range(spec->p2);
    s.phase1 = to_range(spec->phase1);
    s.phase2 = to_range(spec->phase2);
    s.diagonal = spec->diagonal != 0;
    s.cutoff = spec->cutoff;
    s.threads = spec->threads;
    auto sweep = std::make_unique<pp_sweep>();
    for (const auto& row : photon::run_sweep(s)) {
      sweep->rows.push_back(to_report({row.p1, row.phase1}, {row.p2, row.phase2}, row.result));
    }
    *out = sweep.release();
  });
}

size_t pp_sweep_size(const pp_sweep* sweep) { return sweep ? sweep->rows.size() : 0; }

pp_status pp_sweep_row(const pp_sweep* sweep, size_t i, pp_scheme_report* out) {
  PP_REQUIRE(sweep && out, "null argument");
  if (i >= sweep->rows.size()) return fail(PP_ERR_INDEX_OUT_OF_RANGE, "row index out of range");
  *out = sweep->rows[i];
  return PP_OK;
}

void pp_sweep_free(pp_sweep* sweep) { delete sweep; }

pp_status pp_verify_run(uint64_t seed, int trials, unsigned faults, pp_verify_report** out) {
  PP_REQUIRE(out != nullptr, "out is null");
  return guarded([&] {
    auto report = std::make_unique<pp_verify_report>();
    report->checks = photon::run_verification({seed, trials, faults});
    *out = report.release();
  });
}

size_t pp_verify_count(const pp_verify_report* report) { return report ? report->checks.size() : 0; }

pp_status pp_verify_check(const pp_verify_report* report, size_t i, const char** name, int* passed,
                          const char** detail) {
  PP_REQUIRE(report != nullptr, "report is null");
  if (i >= report->checks.size()) return fail(PP_ERR_INDEX_OUT_OF_RANGE, "check index out of range");
  const auto& check = report->checks[i];
  if (name) *name = check.name.c_str();
  if (passed) *passed = check.passed ? 1 : 0;
  if (detail) *detail = check.detail.c_str();
  return PP_OK;
}

int pp_verify_all_passed(const pp_verify_report* report) {
  if (!report) return 0;
  for (const auto& check : report->checks) {
    if (!check.passed) return 0;
  }
  return 1;
}

void pp_verify_free(pp_verify_report* report) { delete report; }

}  // extern "C"

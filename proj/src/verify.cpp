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

#include "photon_purify/verify.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <set>

#include "photon_purify/error.hpp"
#include "photon_purify/linear_optics.hpp"
#include "photon_purify/measurement.hpp"
#include "photon_purify/oracle.hpp"
#include "photon_purify/sampling.hpp"
#include "photon_purify/scheme.hpp"

namespace photon {

namespace {

using sampling::Rng;
using std::numbers::pi;

std::string format_detail(const char* fmt, double value, int count) {
  char buf[160];
  std::snprintf(buf, sizeof buf, fmt, value, count);
  return buf;
}

double max_amplitude_diff(const StateVector& a, const StateVector& b) {
  double worst = 0.0;
  for (const auto& [n, amp] : a.amplitudes()) worst = std::max(worst, std::abs(amp - b.amplitude(n)));
  for (const auto& [n, amp] : b.amplitudes()) worst = std::max(worst, std::abs(amp - a.amplitude(n)));
  return worst;
}

int random_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

struct Context {
  const VerifyOptions& options;
  Rng rng;
};

CheckOutcome check_unitarity(Context& ctx) {
  int rejected = 0;
  double worst = 0.0;
  for (int t = 0; t < ctx.options.trials; ++t) {
    const Unitary bs = beamsplitter(sampling::random_beamsplitter(ctx.rng));
    worst = std::max(worst, unitarity_error(bs.matrix()));
    ComplexMatrix perturbed = bs.matrix();
    perturbed(random_int(ctx.rng, 0, 1), random_int(ctx.rng, 0, 1)) += 1e-6;
    try {
      (void)Unitary(perturbed);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kNotUnitary) ++rejected;
    }
  }
  const bool ok = worst <= 1e-12 && rejected == ctx.options.trials;
  char buf[160];
  std::snprintf(buf, sizeof buf, "max ||U^dagger U - I|| = %.3g; %d/%d perturbed matrices rejected", worst,
                rejected, ctx.options.trials);
  return {"unitarity", ok, buf};
}

CheckOutcome check_norm(Context& ctx) {
  double worst = 0.0;
  for (int t = 0; t < ctx.options.trials; ++t) {
    const int modes = random_int(ctx.rng, 1, 3);
    const StateVector s = sampling::random_state(ctx.rng, modes, 4);
    ComplexMatrix u = sampling::random_unitary(ctx.rng, modes).matrix();
    if (ctx.options.faults & static_cast<unsigned>(Fault::kPerturbUnitary)) u(0, 0) += 1e-3;
    worst = std::max(worst, std::abs(apply_matrix(u, s).squared_norm() - 1.0));
  }
  return {"norm-preservation", worst <= 1e-12,
          format_detail("max |<psi|psi> - 1| = %.3g over %d trials", worst, ctx.options.trials)};
}

CheckOutcome check_photon_number(Context& ctx) {
  bool ok = true;
  double worst = 0.0;
  for (int t = 0; t < ctx.options.trials; ++t) {
    const int modes = random_int(ctx.rng, 1, 3);
    // Populate a random subset of sectors so that empty sectors are exercised.
    const StateVector full = sampling::random_state(ctx.rng, modes, 4);
    AmplitudeMap amps;
    const int skip = random_int(ctx.rng, 0, 4);
    for (const auto& [n, amp] : full.amplitudes()) {
      if (n.total() != skip) amps.emplace(n, amp);
    }
    const StateVector s = normalize(StateVector(modes, 4, amps)).state;
    const StateVector out = apply(sampling::random_unitary(ctx.rng, modes), s);

    std::vector<double> in_weight(5, 0.0), out_weight(5, 0.0);
    for (const auto& [n, amp] : s.amplitudes()) in_weight[static_cast<std::size_t>(n.total())] += std::norm(amp);
    for (const auto& [n, amp] : out.amplitudes()) out_weight[static_cast<std::size_t>(n.total())] += std::norm(amp);
    for (std::size_t k = 0; k < 5; ++k) {
      if (in_weight[k] == 0.0 && out_weight[k] != 0.0) ok = false;
      worst = std::max(worst, std::abs(in_weight[k] - out_weight[k]));
    }
  }
  ok = ok && worst <= 1e-12;
  return {"photon-number-preservation", ok,
          format_detail("max sector weight change %.3g over %d trials", worst, ctx.options.trials)};
}

CheckOutcome check_composition(Context& ctx) {
  double worst = 0.0;
  for (int t = 0; t < ctx.options.trials; ++t) {
    const int modes = random_int(ctx.rng, 1, 3);
    const StateVector s = sampling::random_state(ctx.rng, modes, 4);
    const Unitary u1 = sampling::random_unitary(ctx.rng, modes);
    const Unitary u2 = sampling::random_unitary(ctx.rng, modes);
    worst = std::max(worst, max_amplitude_diff(apply(u2, apply(u1, s)), apply(u2 * u1, s)));
  }
  return {"composition", worst <= 1e-10,
          format_detail("max amplitude deviation %.3g over %d trials", worst, ctx.options.trials)};
}

CheckOutcome check_permanent(Context& ctx) {
  double worst = 0.0;
  for (int t = 0; t < ctx.options.trials; ++t) {
    const int dim = 1 + t % 6;
    ComplexMatrix m = sampling::random_matrix(ctx.rng, dim, dim);
    // Entries on the scale of a dim x dim unitary.
    for (int r = 0; r < dim; ++r) {
      for (int c = 0; c < dim; ++c) m(r, c) /= std::sqrt(2.0 * dim);
    }
    worst = std::max(worst, std::abs(permanent(m) - oracle::permanent_naive(m)));
  }
  return {"permanent-vs-oracle", worst <= 1e-12,
          format_detail("max |ryser - naive| = %.3g over %d trials", worst, ctx.options.trials)};
}

CheckOutcome check_apply_oracle(Context& ctx) {
  double worst = 0.0;
  for (int t = 0; t < ctx.options.trials; ++t) {
    const int modes = random_int(ctx.rng, 1, 3);
    const StateVector s = sampling::random_state(ctx.rng, modes, 4);
    const Unitary u = sampling::random_unitary(ctx.rng, modes);
    worst = std::max(worst, max_amplitude_diff(apply(u, s), oracle::apply_by_expansion(u.matrix(), s)));
  }
  return {"apply-vs-oracle", worst <= 1e-12,
          format_detail("max amplitude deviation %.3g over %d trials", worst, ctx.options.trials)};
}

CheckOutcome check_outcomes(Context& ctx) {
  double worst = 0.0;
  for (int t = 0; t < ctx.options.trials; ++t) {
    const int modes = random_int(ctx.rng, 1, 3);
    const StateVector s = sampling::random_state(ctx.rng, modes, 4);
    std::vector<int> detected;
    for (int m = 0; m < modes; ++m) {
      if (random_int(ctx.rng, 0, 1) == 1) detected.push_back(m);
    }
    if (detected.empty()) detected.push_back(0);
    const auto dist = outcome_distribution(s, detected);
    double total = 0.0;
    for (const auto& [pattern, p] : dist) {
      total += p;
      worst = std::max(worst, std::abs(condition(s, pattern).probability - p));
    }
    worst = std::max(worst, std::abs(total - 1.0));
  }
  return {"outcome-distribution", worst <= 1e-12,
          format_detail("max probability deviation %.3g over %d trials", worst, ctx.options.trials)};
}

// Runs `visit` on the 20 x 20 x 8 x 8 grid p in [0.05, 0.95], phase in [0, 2 pi).
void for_each_grid_point(const std::function<void(const InputState&, const InputState&)>& visit) {
  constexpr int kP = 20;
  constexpr int kPhase = 8;
  for (int i = 0; i < kP; ++i) {
    for (int j = 0; j < kP; ++j) {
      for (int k = 0; k < kPhase; ++k) {
        for (int l = 0; l < kPhase; ++l) {
          const double p1 = 0.05 + 0.9 * i / (kP - 1);
          const double p2 = 0.05 + 0.9 * j / (kP - 1);
          visit(input_from_probability(p1, 2 * pi * k / kPhase), input_from_probability(p2, 2 * pi * l / kPhase));
        }
      }
    }
  }
}

CheckOutcome check_purity(Context&) {
  double worst = 0.0;
  int points = 0;
  for_each_grid_point([&](const InputState& a, const InputState& b) {
    const SchemeResult r = run_scheme(a, b);
    if (r.degenerate()) return;
    ++points;
    worst = std::max(worst, 1.0 - r.output_fidelity);
  });
  return {"purity-grid", worst <= 1e-10,
          format_detail("max 1 - fidelity = %.3g over %d grid points", worst, points)};
}

CheckOutcome check_closed_form(Context& ctx) {
  double worst = 0.0;
  std::uniform_real_distribution<double> prob(0.0, 1.0);
  std::uniform_real_distribution<double> phase(-pi, pi);
  for (int t = 0; t < ctx.options.trials; ++t) {
    const InputState a = input_from_probability(prob(ctx.rng), phase(ctx.rng));
    const InputState b = input_from_probability(prob(ctx.rng), phase(ctx.rng));
    const SchemeResult r = run_scheme(a, b);
    const double s = std::sin(r.lambda1.theta);
    const double c = std::cos(r.lambda1.theta);
    const double expected = std::norm(a.beta() * b.beta()) * s * s * c * c;
    worst = std::max(worst, std::abs(r.p_success - expected));
    worst = std::max(worst, std::abs(r.p_success - r.stage_one_probability * r.stage_two_probability));
  }
  return {"closed-form", worst <= 1e-12,
          format_detail("max |p_success - |b1 b2|^2 sin^2 cos^2| = %.3g over %d trials", worst,
                        ctx.options.trials)};
}

CheckOutcome check_dominance(Context&) {
  int violations = 0;
  constexpr int kPoints = 1000;
  for (int i = 1; i <= kPoints; ++i) {
    const double p = static_cast<double>(i) / kPoints;
    if (!(success_curve_new(p) > success_curve_old(p))) ++violations;
  }
  return {"dominance", violations == 0,
          format_detail("p^2/4 <= 16p^3/81 at %.0f of %d points in (0, 1]", violations, kPoints)};
}

CheckOutcome check_optimizer(Context& ctx) {
  double worst = 0.0;
  for (int t = 0; t < ctx.options.trials; ++t) {
    const StageOneCoefficients c{sampling::gaussian_complex(ctx.rng), {}, sampling::gaussian_complex(ctx.rng)};
    worst = std::max(worst, std::abs(optimize_stage_two(c).theta - pi / 4));
  }
  return {"optimizer", worst <= 1e-8,
          format_detail("max |theta2 - pi/4| = %.3g over %d trials", worst, ctx.options.trials)};
}

}  // namespace

std::vector<CheckOutcome> run_verification(const VerifyOptions& options) {
  if (options.trials < 1) throw Error(ErrorCode::kInvalidArgument, "trials must be at least 1");
  Context ctx{options, Rng(options.seed)};
  struct NamedCheck {
    const char* name;
    CheckOutcome (*run)(Context&);
  };
  const NamedCheck checks[] = {
      {"unitarity", check_unitarity},
      {"norm-preservation", check_norm},
      {"photon-number-preservation", check_photon_number},
      {"composition", check_composition},
      {"permanent-vs-oracle", check_permanent},
      {"apply-vs-oracle", check_apply_oracle},
      {"outcome-distribution", check_outcomes},
      {"purity-grid", check_purity},
      {"closed-form", check_closed_form},
      {"dominance", check_dominance},
      {"optimizer", check_optimizer},
  };
  std::vector<CheckOutcome> out;
  for (const auto& check : checks) {
    try {
      out.push_back(check.run(ctx));
    } catch (const std::exception& e) {
      // A throwing check counts as failed; the rest still run.
      out.push_back({check.name, false, std::string("threw: ") + e.what()});
    }
  }
  return out;
}

}  // namespace photon

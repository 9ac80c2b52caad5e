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

#include "photon_purify/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "photon_purify/error.hpp"

namespace photon {

namespace {

void validate_range(const GridRange& r, const char* name, bool probability) {
  const std::string label(name);
  if (r.steps < 1) throw Error(ErrorCode::kInvalidArgument, label + ": steps must be at least 1");
  if (!std::isfinite(r.start) || !std::isfinite(r.stop)) {
    throw Error(ErrorCode::kInvalidArgument, label + ": bounds must be finite");
  }
  if (r.start > r.stop) throw Error(ErrorCode::kInvalidArgument, label + ": start exceeds stop");
  if (probability && (r.start < 0.0 || r.stop > 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, label + ": probabilities must lie in [0, 1]");
  }
}

}  // namespace

double GridRange::at(int i) const {
  if (steps == 1 || i == 0) return start;
  if (i == steps - 1) return stop;
  return start + (stop - start) * (static_cast<double>(i) / static_cast<double>(steps - 1));
}

void validate(const SweepSpec& spec) {
  validate_range(spec.p1, "p1", true);
  validate_range(spec.phase1, "phase1", false);
  if (!spec.diagonal) {
    validate_range(spec.p2, "p2", true);
    validate_range(spec.phase2, "phase2", false);
  }
  if (spec.cutoff < 2) throw Error(ErrorCode::kInvalidArgument, "cutoff must be at least 2");
  if (spec.threads < 0) throw Error(ErrorCode::kInvalidArgument, "thread count must be non-negative");
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  validate(spec);

  std::vector<SweepRow> rows;
  if (spec.diagonal) {
    for (int i = 0; i < spec.p1.steps; ++i) {
      for (int k = 0; k < spec.phase1.steps; ++k) {
        const double p = spec.p1.at(i);
        const double phase = spec.phase1.at(k);
        rows.push_back({p, p, phase, phase, {}});
      }
    }
  } else {
    for (int i = 0; i < spec.p1.steps; ++i) {
      for (int j = 0; j < spec.p2.steps; ++j) {
        for (int k = 0; k < spec.phase1.steps; ++k) {
          for (int l = 0; l < spec.phase2.steps; ++l) {
            rows.push_back({spec.p1.at(i), spec.p2.at(j), spec.phase1.at(k), spec.phase2.at(l), {}});
          }
        }
      }
    }
  }

  const std::size_t workers = std::clamp<std::size_t>(
      spec.threads > 0 ? static_cast<std::size_t>(spec.threads)
                       : std::max(1u, std::thread::hardware_concurrency()),
      1, std::max<std::size_t>(rows.size(), 1));

  // Each worker claims the next unevaluated row; results land in place, so
  // output order never depends on scheduling.
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      try {
        SweepRow& row = rows[i];
        row.result = run_scheme(input_from_probability(row.p1, row.phase1),
                                input_from_probability(row.p2, row.phase2), spec.cutoff);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

}  // namespace photon

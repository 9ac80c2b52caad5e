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

// photon-purify: run, sweep and verify the two-input single-photon purification
// circuit. Talks to the library only through photon_purify.h.
//
// Exit codes: 0 success, 1 invariant failure, 2 configuration error, 3 I/O error.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "photon_purify/photon_purify.h"

namespace {

using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInvariant = 1;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

constexpr std::uint64_t kDefaultSeed = 42;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvariantFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// 12 significant digits; %g switches to lowercase scientific below 1e-4.
std::string num(double x) {
  if (x == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

// Library statuses that describe bad user input map to exit code 2.
void check(pp_status status) {
  if (status == PP_OK) return;
  std::string message = std::string(pp_status_string(status)) + ": " + pp_last_error();
  switch (status) {
    case PP_ERR_INVALID_ARGUMENT:
    case PP_ERR_NOT_NORMALIZED:
    case PP_ERR_OUT_OF_RANGE:
    case PP_ERR_CUTOFF_EXCEEDED:
      throw ConfigError(message);
    default:
      throw std::runtime_error(message);
  }
}

json load_config(const std::string& path) {
  if (path.empty()) return json::object();
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path);
  try {
    json cfg = json::parse(in);
    if (!cfg.is_object()) throw ConfigError("config root must be a JSON object");
    return cfg;
  } catch (const json::exception& e) {
    throw ConfigError("invalid config " + path + ": " + e.what());
  }
}

template <typename T>
T config_value(const json& cfg, const json::json_pointer& ptr, T fallback) {
  if (!cfg.contains(ptr)) return fallback;
  try {
    return cfg.at(ptr).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError("config field " + ptr.to_string() + ": " + e.what());
  }
}

class Output {
 public:
  explicit Output(const std::string& path) : path_(path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw IoError("cannot open " + path + " for writing");
    }
  }

  std::ostream& stream() { return path_.empty() ? std::cout : file_; }

  void close() {
    if (path_.empty()) {
      std::cout.flush();
      return;
    }
    file_.close();
    if (!file_) throw IoError("failed writing " + path_);
  }

 private:
  std::string path_;
  std::ofstream file_;
};

std::string validated_format(const std::string& format) {
  if (format != "table" && format != "csv" && format != "json") {
    throw ConfigError("unknown format '" + format + "' (expected table, csv or json)");
  }
  return format;
}

// ---------------------------------------------------------------- run

struct RunOptions {
  std::string config;
  std::optional<double> p1, p2, phase1, phase2;
  std::optional<int> cutoff;
  std::optional<std::string> format;
  std::string out;
};

json report_json(const pp_scheme_report& r) {
  return {{"p1", r.input1.p},
          {"p2", r.input2.p},
          {"phase1", r.input1.phase},
          {"phase2", r.input2.phase},
          {"lambda", {{"theta", r.lambda1.theta}, {"phi", r.lambda1.phi}}},
          {"lambda_prime", {{"theta", r.lambda2.theta}, {"phi", r.lambda2.phi}}},
          {"stage_one_probability", r.stage_one_probability},
          {"stage_two_probability", r.stage_two_probability},
          {"p_success", r.p_success},
          {"fidelity", r.output_fidelity},
          {"degenerate", r.degeneracy != PP_DEGENERATE_NONE},
          {"degeneracy", pp_degeneracy_string(r.degeneracy)}};
}

int cmd_run(const RunOptions& opt) {
  const json cfg = load_config(opt.config);
  pp_input in1{opt.p1.value_or(config_value(cfg, "/input1/p"_json_pointer, 0.5)),
               opt.phase1.value_or(config_value(cfg, "/input1/phase"_json_pointer, 0.0))};
  pp_input in2{opt.p2.value_or(config_value(cfg, "/input2/p"_json_pointer, 0.5)),
               opt.phase2.value_or(config_value(cfg, "/input2/phase"_json_pointer, 0.0))};
  const int cutoff = opt.cutoff.value_or(config_value(cfg, "/cutoff"_json_pointer, 4));
  const std::string format =
      validated_format(opt.format.value_or(config_value<std::string>(cfg, "/format"_json_pointer, "table")));

  for (double p : {in1.p, in2.p}) {
    if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("p must lie in [0, 1], got " + num(p));
  }
  if (cutoff < 2) throw ConfigError("cutoff must be at least 2");

  pp_scheme_report r{};
  check(pp_run_scheme(in1, in2, cutoff, &r));
  const bool degenerate = r.degeneracy != PP_DEGENERATE_NONE;

  Output out(opt.out);
  std::ostream& os = out.stream();
  if (format == "json") {
    os << report_json(r).dump(2) << '\n';
  } else if (format == "csv") {
    os << "p1,p2,phase1,phase2,theta,phi,theta2,phi2,p_stage1,p_stage2,p_success,fidelity,degenerate\n"
       << num(in1.p) << ',' << num(in2.p) << ',' << num(in1.phase) << ',' << num(in2.phase) << ','
       << num(r.lambda1.theta) << ',' << num(r.lambda1.phi) << ',' << num(r.lambda2.theta) << ','
       << num(r.lambda2.phi) << ',' << num(r.stage_one_probability) << ',' << num(r.stage_two_probability)
       << ',' << num(r.p_success) << ',' << num(r.output_fidelity) << ',' << (degenerate ? "true" : "false")
       << '\n';
  } else {
    auto line = [&os](const char* key, const std::string& value) {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%-24s", key);
      os << buf << value << '\n';
    };
    line("input 1", "p=" + num(in1.p) + " phase=" + num(in1.phase));
    line("input 2", "p=" + num(in2.p) + " phase=" + num(in2.phase));
    line("lambda theta", num(r.lambda1.theta));
    line("lambda phi", num(r.lambda1.phi));
    line("lambda' theta", num(r.lambda2.theta));
    line("lambda' phi", num(r.lambda2.phi));
    line("stage-1 probability", num(r.stage_one_probability));
    line("stage-2 probability", num(r.stage_two_probability));
    line("p_success", num(r.p_success));
    line("fidelity", num(r.output_fidelity));
    line("degenerate", std::string(degenerate ? "true" : "false") + " (" + pp_degeneracy_string(r.degeneracy) + ")");
  }
  out.close();
  return kExitOk;
}

// ---------------------------------------------------------------- sweep

struct SweepOptions {
  std::string config;
  std::optional<std::string> p1_range, p2_range, phase1_range, phase2_range;
  bool diagonal = false;
  std::optional<int> cutoff, threads;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> format, out, plot;
};

// "start:stop:steps" or a single value.
pp_range parse_range(const std::string& text, const char* name) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  try {
    std::size_t used = 0;
    auto to_double = [&used](const std::string& s) {
      const double v = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    };
    if (parts.size() == 1) {
      const double v = to_double(parts[0]);
      return {v, v, 1};
    }
    if (parts.size() == 3) {
      const int steps = std::stoi(parts[2], &used);
      if (used != parts[2].size()) throw std::invalid_argument(parts[2]);
      return {to_double(parts[0]), to_double(parts[1]), steps};
    }
  } catch (const std::logic_error&) {
  }
  throw ConfigError(std::string(name) + ": expected start:stop:steps or a single value, got '" + text + "'");
}

pp_range range_from_config(const json& cfg, const char* key, pp_range fallback) {
  const json::json_pointer ptr("/sweep/" + std::string(key));
  if (!cfg.contains(ptr)) return fallback;
  const json& r = cfg.at(ptr);
  try {
    if (r.is_number()) {
      const double v = r.get<double>();
      return {v, v, 1};
    }
    return {r.at("start").get<double>(), r.at("stop").get<double>(), r.at("steps").get<int>()};
  } catch (const json::exception& e) {
    throw ConfigError("config field /sweep/" + std::string(key) + ": " + e.what());
  }
}

// Two closed-form success curves over p in [0, 1]; diagonal sweep rows are
// overlaid as markers.
void write_svg(const std::string& path, const std::vector<pp_scheme_report>& rows) {
  constexpr double kWidth = 640, kHeight = 420, kLeft = 70, kRight = 20, kTop = 30, kBottom = 60;
  constexpr double kYMax = 0.25;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto x_of = [&](double p) { return kLeft + p * plot_w; };
  auto y_of = [&](double v) { return kTop + (1.0 - v / kYMax) * plot_h; };
  auto coord = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return std::string(buf);
  };
  auto polyline = [&](const char* id, const char* color, double (*curve)(double)) {
    std::string pts;
    for (int i = 0; i <= 200; ++i) {
      const double p = i / 200.0;
      pts += coord(x_of(p)) + "," + coord(y_of(curve(p))) + (i < 200 ? " " : "");
    }
    return std::string("  <polyline id=\"") + id + "\" fill=\"none\" stroke=\"" + color +
           "\" stroke-width=\"2\" points=\"" + pts + "\"/>\n";
  };

  Output out(path);
  std::ostream& os = out.stream();
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
     << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
     << "  <line id=\"x-axis\" x1=\"" << coord(x_of(0)) << "\" y1=\"" << coord(y_of(0)) << "\" x2=\""
     << coord(x_of(1)) << "\" y2=\"" << coord(y_of(0)) << "\" stroke=\"black\"/>\n"
     << "  <line id=\"y-axis\" x1=\"" << coord(x_of(0)) << "\" y1=\"" << coord(y_of(0)) << "\" x2=\""
     << coord(x_of(0)) << "\" y2=\"" << coord(y_of(kYMax)) << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double p = i / 5.0;
    const double v = kYMax * i / 5.0;
    os << "  <text x=\"" << coord(x_of(p)) << "\" y=\"" << coord(y_of(0) + 18)
       << "\" font-size=\"12\" text-anchor=\"middle\">" << num(p) << "</text>\n"
       << "  <text x=\"" << coord(x_of(0) - 8) << "\" y=\"" << coord(y_of(v) + 4)
       << "\" font-size=\"12\" text-anchor=\"end\">" << num(v) << "</text>\n";
  }
  os << "  <text x=\"" << coord(kLeft + plot_w / 2) << "\" y=\"" << coord(kHeight - 15)
     << "\" font-size=\"14\" text-anchor=\"middle\">single-photon probability p</text>\n"
     << "  <text x=\"18\" y=\"" << coord(kTop + plot_h / 2) << "\" font-size=\"14\" text-anchor=\"middle\""
     << " transform=\"rotate(-90 18 " << coord(kTop + plot_h / 2) << ")\">success probability</text>\n"
     << polyline("curve-new", "#1f77b4", [](double p) {
          double v = 0;
          check(pp_success_curve_new(p, &v));
          return v;
        })
     << polyline("curve-old", "#d62728", [](double p) {
          double v = 0;
          check(pp_success_curve_old(p, &v));
          return v;
        });
  for (const auto& r : rows) {
    if (r.input1.p != r.input2.p || r.input1.phase != r.input2.phase) continue;
    os << "  <circle class=\"simulated\" cx=\"" << coord(x_of(r.input1.p)) << "\" cy=\""
       << coord(y_of(r.p_success)) << "\" r=\"3\" fill=\"#1f77b4\"/>\n";
  }
  os << "  <text x=\"" << coord(kLeft + 12) << "\" y=\"" << coord(kTop + 14)
     << "\" font-size=\"12\" fill=\"#1f77b4\">two inputs: p^2/4</text>\n"
     << "  <text x=\"" << coord(kLeft + 12) << "\" y=\"" << coord(kTop + 30)
     << "\" font-size=\"12\" fill=\"#d62728\">three inputs: 16p^3/81</text>\n"
     << "</svg>\n";
  out.close();
}

int cmd_sweep(const SweepOptions& opt) {
  const json cfg = load_config(opt.config);
  pp_sweep_spec spec{};
  spec.p1 = opt.p1_range ? parse_range(*opt.p1_range, "--p1-range")
                         : range_from_config(cfg, "p1_range", {0.0, 1.0, 11});
  spec.p2 = opt.p2_range ? parse_range(*opt.p2_range, "--p2-range")
                         : range_from_config(cfg, "p2_range", {0.0, 1.0, 11});
  spec.phase1 = opt.phase1_range ? parse_range(*opt.phase1_range, "--phase1-range")
                                 : range_from_config(cfg, "phase1_range", {0.0, 0.0, 1});
  spec.phase2 = opt.phase2_range ? parse_range(*opt.phase2_range, "--phase2-range")
                                 : range_from_config(cfg, "phase2_range", {0.0, 0.0, 1});
  spec.diagonal = (opt.diagonal || config_value(cfg, "/sweep/diagonal"_json_pointer, false)) ? 1 : 0;
  spec.cutoff = opt.cutoff.value_or(config_value(cfg, "/cutoff"_json_pointer, 4));
  spec.threads = opt.threads.value_or(config_value(cfg, "/sweep/threads"_json_pointer, 0));
  const std::string format =
      validated_format(opt.format.value_or(config_value<std::string>(cfg, "/format"_json_pointer, "csv")));
  const std::string out_path = opt.out.value_or(config_value<std::string>(cfg, "/sweep/out"_json_pointer, ""));
  const std::string plot_path = opt.plot.value_or(config_value<std::string>(cfg, "/sweep/plot"_json_pointer, ""));
  if (format == "table") throw ConfigError("sweep writes csv or json");
  if (spec.cutoff < 2) throw ConfigError("cutoff must be at least 2");

  pp_sweep* sweep = nullptr;
  check(pp_sweep_run(&spec, &sweep));
  std::unique_ptr<pp_sweep, decltype(&pp_sweep_free)> owner(sweep, pp_sweep_free);
  std::vector<pp_scheme_report> rows(pp_sweep_size(sweep));
  for (std::size_t i = 0; i < rows.size(); ++i) check(pp_sweep_row(sweep, i, &rows[i]));

  Output out(out_path);
  std::ostream& os = out.stream();
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : rows) arr.push_back(report_json(r));
    os << arr.dump(2) << '\n';
  } else {
    os << "p1,p2,phase1,phase2,theta,phi,p_success,fidelity,degenerate\n";
    for (const auto& r : rows) {
      os << num(r.input1.p) << ',' << num(r.input2.p) << ',' << num(r.input1.phase) << ','
         << num(r.input2.phase) << ',' << num(r.lambda1.theta) << ',' << num(r.lambda1.phi) << ','
         << num(r.p_success) << ',' << num(r.output_fidelity) << ','
         << (r.degeneracy != PP_DEGENERATE_NONE ? "true" : "false") << '\n';
    }
  }
  out.close();
  if (!plot_path.empty()) write_svg(plot_path, rows);
  return kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyCliOptions {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::string inject_fault;
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag, const json& cfg) {
  if (flag) return *flag;
  if (cfg.contains("seed")) return config_value<std::uint64_t>(cfg, "/seed"_json_pointer, kDefaultSeed);
  if (const char* env = std::getenv("PHOTON_PURIFY_SEED"); env && *env) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::logic_error&) {
    }
    throw ConfigError(std::string("PHOTON_PURIFY_SEED is not an unsigned integer: ") + env);
  }
  return kDefaultSeed;
}

int cmd_verify(const VerifyCliOptions& opt) {
  const json cfg = load_config(opt.config);
  const std::uint64_t seed = resolve_seed(opt.seed, cfg);
  const int trials = opt.trials.value_or(config_value(cfg, "/trials"_json_pointer, 100));
  if (trials < 1) throw ConfigError("trials must be at least 1");
  unsigned faults = PP_FAULT_NONE;
  if (opt.inject_fault == "perturb-unitary") {
    faults |= PP_FAULT_PERTURB_UNITARY;
  } else if (!opt.inject_fault.empty()) {
    throw ConfigError("unknown fault '" + opt.inject_fault + "'");
  }

  pp_verify_report* report = nullptr;
  check(pp_verify_run(seed, trials, faults, &report));
  std::unique_ptr<pp_verify_report, decltype(&pp_verify_free)> owner(report, pp_verify_free);

  std::cout << "seed " << seed << ", " << trials << " trials\n";
  std::vector<std::string> failed;
  for (std::size_t i = 0; i < pp_verify_count(report); ++i) {
    const char* name = nullptr;
    const char* detail = nullptr;
    int passed = 0;
    check(pp_verify_check(report, i, &name, &passed, &detail));
    char buf[48];
    std::snprintf(buf, sizeof buf, "%-5s %-28s", passed ? "PASS" : "FAIL", name);
    std::cout << buf << detail << '\n';
    if (!passed) failed.emplace_back(name);
  }
  if (failed.empty()) {
    std::cout << "all invariants hold\n";
    return kExitOk;
  }
  std::string names;
  for (const auto& n : failed) names += (names.empty() ? "" : ", ") + n;
  throw InvariantFailure("failed invariants: " + names);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulate and verify two-input heralded single-photon purification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(pp_version()));

  RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "Solve and simulate one circuit instance");
  run_cmd->add_option("--config", run.config, "JSON config file (flags override it)");
  run_cmd->add_option("--p1", run.p1, "single-photon probability of input 1");
  run_cmd->add_option("--p2", run.p2, "single-photon probability of input 2");
  run_cmd->add_option("--phase1", run.phase1, "phase of the |1> amplitude of input 1 (radians)");
  run_cmd->add_option("--phase2", run.phase2, "phase of the |1> amplitude of input 2 (radians)");
  run_cmd->add_option("--cutoff", run.cutoff, "total photon cutoff (>= 2)");
  run_cmd->add_option("--format", run.format, "table, csv or json");
  run_cmd->add_option("--out", run.out, "write the report here instead of stdout");

  SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate the circuit over a parameter grid");
  sweep_cmd->add_option("--config", sweep.config, "JSON config file (flags override it)");
  sweep_cmd->add_option("--p1-range", sweep.p1_range, "start:stop:steps for p1");
  sweep_cmd->add_option("--p2-range", sweep.p2_range, "start:stop:steps for p2");
  sweep_cmd->add_option("--phase1-range", sweep.phase1_range, "start:stop:steps for phase1");
  sweep_cmd->add_option("--phase2-range", sweep.phase2_range, "start:stop:steps for phase2");
  sweep_cmd->add_flag("--diagonal", sweep.diagonal, "identical inputs: input 2 follows input 1");
  sweep_cmd->add_option("--cutoff", sweep.cutoff, "total photon cutoff (>= 2)");
  sweep_cmd->add_option("--threads", sweep.threads, "worker threads (0: all cores)");
  sweep_cmd->add_option("--seed", sweep.seed, "accepted for symmetry with verify; sweeps are deterministic");
  sweep_cmd->add_option("--format", sweep.format, "csv or json");
  sweep_cmd->add_option("--out", sweep.out, "output file (default stdout)");
  sweep_cmd->add_option("--plot", sweep.plot, "also write an SVG of the success curves");

  VerifyCliOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run the randomized invariant checks");
  verify_cmd->add_option("--config", verify.config, "JSON config file (flags override it)");
  verify_cmd->add_option("--seed", verify.seed, "RNG seed (fallback: PHOTON_PURIFY_SEED, then 42)");
  verify_cmd->add_option("--trials", verify.trials, "random trials per check");
  verify_cmd->add_option("--inject-fault", verify.inject_fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*run_cmd) return cmd_run(run);
    if (*sweep_cmd) return cmd_sweep(sweep);
    if (*verify_cmd) return cmd_verify(verify);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const InvariantFailure& e) {
    std::cerr << e.what() << '\n';
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvariant;
  }
  return kExitConfig;
}

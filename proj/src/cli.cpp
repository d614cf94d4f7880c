// Copyright 2026 The lindobs Authors
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

#include "lindobs/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lindobs/errors.hpp"
#include "lindobs/io.hpp"
#include "lindobs/semigroup.hpp"

namespace lindobs::cli {
namespace {

using nlohmann::ordered_json;

// Python-style repr: shortest round-trip digits, always with a decimal
// point or exponent.
std::string repr(double v) {
  std::string s = io::format_number(v);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

ordered_json matrix_json(const ComplexMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Index k = 0; k < m.cols(); ++k) row.push_back({m(i, k).real(), m(i, k).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class F>
CommandResult guarded(std::ostream& diag, F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    diag << "error: " << e.what() << '\n';
    return {kInputError, {}};
  } catch (const NotEnvironmentInduced& e) {
    diag << "error: " << e.what() << '\n';
    return {kNotEnvironmentInduced, {}};
  } catch (const NumericalRankAmbiguity& e) {
    diag << "error: " << e.what() << " (band [" << repr(e.band_lo()) << ", " << repr(e.band_hi())
         << "], offending " << repr(e.offending()) << ")\n";
    return {kNumericalFailure, {}};
  } catch (const CenterSeparationFailure& e) {
    diag << "error: " << e.what() << '\n';
    return {kNumericalFailure, {}};
  } catch (const NonIntegralStructure& e) {
    diag << "error: " << e.what() << '\n';
    return {kNumericalFailure, {}};
  } catch (const NotAnAlgebra& e) {
    diag << "error: " << e.what() << '\n';
    return {kNumericalFailure, {}};
  } catch (const Error& e) {
    // Remaining library errors stem from malformed inputs (shapes,
    // invalid states, bad grids).
    diag << "error: " << e.what() << '\n';
    return {kInputError, {}};
  }
}

LindbladModel load_model(const std::string& path, const RunConfig& config) {
  try {
    return io::parse_model(io::read_file(path), config.tol);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

ComplexMatrix load_matrix(const std::string& path, Index d) {
  ComplexMatrix m;
  try {
    m = io::parse_matrix(io::read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
  if (m.rows() != d) {
    throw ParseError(path + ": expected a " + std::to_string(d) + "x" + std::to_string(d) +
                     " matrix, got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  return m;
}

std::string label_or(const LindbladModel& model, const std::string& path) {
  return model.label().empty() ? path : model.label();
}

}  // namespace

void parse_times(const std::string& text, RunConfig& config) {
  std::istringstream in(text);
  std::string a, b, c;
  if (!std::getline(in, a, ':') || !std::getline(in, b, ':') || !std::getline(in, c) ||
      a.empty() || b.empty() || c.empty()) {
    throw ParseError("--times: expected start:stop:count, got \"" + text + "\"");
  }
  try {
    std::size_t pa = 0, pb = 0, pc = 0;
    const double start = std::stod(a, &pa);
    const double stop = std::stod(b, &pb);
    const int count = std::stoi(c, &pc);
    if (pa != a.size() || pb != b.size() || pc != c.size()) throw std::invalid_argument("trailing");
    if (!(start >= 0.0) || !(stop > start) || count < 2) {
      throw ParseError("--times: need start >= 0, stop > start, count >= 2");
    }
    config.t_start = start;
    config.t_stop = stop;
    config.t_count = count;
  } catch (const std::logic_error&) {
    throw ParseError("--times: cannot parse \"" + text + "\"");
  }
}

void apply_tolerance_override(const std::string& assignment, Tolerances& tol) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) throw ParseError("--tol: expected KEY=VAL, got \"" + assignment + "\"");
  const std::string key = assignment.substr(0, eq);
  double value = 0.0;
  try {
    std::size_t pos = 0;
    value = std::stod(assignment.substr(eq + 1), &pos);
    if (pos != assignment.size() - eq - 1) throw std::invalid_argument("trailing");
  } catch (const std::logic_error&) {
    throw ParseError("--tol: bad value in \"" + assignment + "\"");
  }
  if (!(value > 0.0)) throw ParseError("--tol: tolerance must be positive");
  if (key == "herm") tol.herm = value;
  else if (key == "psd") tol.psd = value;
  else if (key == "rank") tol.rank = value;
  else if (key == "cluster_gap") tol.cluster_gap = value;
  else if (key == "closure") tol.closure = value;
  else throw ParseError("--tol: unknown key \"" + key + "\"");
}

CommandResult cmd_check(const std::string& model_path, const RunConfig& config, std::ostream& diag) {
  return guarded(diag, [&]() -> CommandResult {
    const LindbladModel model = load_model(model_path, config);
    const GateResult gate = check_environment_induced(model, config.tol);
    std::ostringstream os;
    os << (gate.environment_induced ? "environment-induced" : "not environment-induced")
       << ", deficit=" << repr(gate.deficit) << '\n';
    return {gate.environment_induced ? kOk : kNotEnvironmentInduced, os.str()};
  });
}

CommandResult cmd_evolve(const std::string& model_path, const std::string& state_path,
                         const RunConfig& config, std::ostream& diag) {
  return guarded(diag, [&]() -> CommandResult {
    const LindbladModel model = load_model(model_path, config);
    const ComplexMatrix raw = load_matrix(state_path, model.dim());
    DensityMatrix rho = [&] {
      try {
        return DensityMatrix(raw, config.tol);
      } catch (const InvalidState& e) {
        throw ParseError(state_path + ": " + e.what());
      }
    }();
    const auto times = linear_time_grid(config.t_start, config.t_stop, config.t_count);
    const Superoperator generator = build_generator_superop(model);
    const GateResult gate = check_environment_induced(model, config.tol);
    EntropyTrace trace;
    if (gate.environment_induced) {
      const IsometricSubspace k = compute_isometric_subspace(generator, gate, config.tol);
      trace = entropy_trace(generator, rho, times, &k);
    } else {
      diag << "warning: " << label_or(model, model_path)
           << " is not environment-induced (deficit=" << repr(gate.deficit)
           << "); sweep_residual_trace_norm left blank\n";
      trace = entropy_trace(generator, rho, times);
    }
    return {kOk, io::entropy_trace_csv(trace)};
  });
}

std::string decomposition_report(const Analysis& analysis, const RunConfig& config,
                                 const std::string& label) {
  const AlgebraStructure& s = analysis.structure;
  ordered_json report;
  if (!label.empty()) report["label"] = label;

  ordered_json k_blocks = ordered_json::array();
  for (const auto& b : s.blocks) {
    if (k_blocks.empty() || k_blocks.back()["k"].get<int>() != b.k) {
      k_blocks.push_back({{"k", b.k}, {"r", b.minimal_dim}, {"blocks", ordered_json::array()}});
    }
    k_blocks.back()["blocks"].push_back({{"n", b.n},
                                         {"N", b.multiplicity},
                                         {"rank", b.rank()},
                                         {"projector", matrix_json(b.unit_projector)}});
  }
  report["k_blocks"] = std::move(k_blocks);
  report["gauge_group"] = gauge_group_summary(s).labels();
  const ConservativenessCheck cons = check_conservative(s);
  report["conservative"] = cons.conservative;
  report["conservative_defect"] = cons.defect;
  report["dim_K"] = analysis.isometric.size();
  report["center_dim"] = s.center_dim;

  // Haar Monte-Carlo spot check: one random Hermitian observable of unit
  // operator norm per block, compared with the closed form.
  std::mt19937_64 rng(config.seed ^ 0x9e3779b97f4a7c15ULL);
  std::normal_distribution<double> gauss;
  double worst = 0.0;
  for (const auto& b : s.blocks) {
    ComplexMatrix a(s.dim, s.dim);
    for (Index j = 0; j < s.dim; ++j) {
      for (Index i = 0; i < s.dim; ++i) a(i, j) = Complex(gauss(rng), gauss(rng));
    }
    a = hermitian_part(a);
    a /= operator_norm(a);
    const ComplexMatrix mc = haar_mc_projection(b, a, config.mc_samples, rng());
    worst = std::max(worst, operator_norm(mc - block_projection(b, a)));
  }
  report["mc_check"] = {{"samples", config.mc_samples}, {"max_deviation", worst}};
  return report.dump(2) + "\n";
}

CommandResult cmd_decompose(const std::string& model_path, const RunConfig& config,
                            std::ostream& diag) {
  return guarded(diag, [&]() -> CommandResult {
    const LindbladModel model = load_model(model_path, config);
    const Analysis analysis = analyze(model, config.seed, config.tol);
    return {kOk, decomposition_report(analysis, config, model.label())};
  });
}

CommandResult cmd_project(const std::string& model_path, const std::string& operator_path,
                          const RunConfig& config, std::ostream& diag) {
  return guarded(diag, [&]() -> CommandResult {
    const LindbladModel model = load_model(model_path, config);
    const ComplexMatrix a = load_matrix(operator_path, model.dim());
    Analysis analysis = analyze(model, config.seed, config.tol);
    const ConditionalExpectation closed(analysis.structure);
    const ComplexMatrix exact = full_projection(closed, a);
    if (config.mode == EvaluationMode::kClosedForm) return {kOk, io::serialize_matrix(exact)};

    const ConditionalExpectation mc(std::move(analysis.structure), EvaluationMode::kMonteCarlo,
                                    config.mc_samples, config.seed);
    const ComplexMatrix estimate = full_projection(mc, a);
    ordered_json out;
    out["matrix"] = matrix_json(estimate);
    out["mode"] = "mc";
    out["samples"] = config.mc_samples;
    out["deviation"] = operator_norm(estimate - exact);
    return {kOk, out.dump(2) + "\n"};
  });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"lindobs: decoherence structure of finite-dimensional Lindblad semigroups"};
  app.require_subcommand(1);

  RunConfig config;
  if (const char* env = std::getenv("LINDOBS_SEED")) {
    try {
      config.seed = std::stoull(env);
    } catch (const std::logic_error&) {
      err << "error: LINDOBS_SEED is not an unsigned integer\n";
      return kInputError;
    }
  }
  std::string times;
  std::string mode = "closed";
  std::vector<std::string> tol_overrides;
  std::string model_path, second_path;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", config.seed, "RNG seed (falls back to $LINDOBS_SEED, then 0)");
    sub->add_option("--out", config.out, "Write the result to PATH instead of stdout");
    sub->add_option("--tol", tol_overrides,
                    "Tolerance override KEY=VAL (herm, psd, rank, cluster_gap, closure)");
  };

  auto* check = app.add_subcommand("check", "Operator-norm contractivity gate");
  check->add_option("model", model_path, "Model JSON")->required();
  common(check);

  auto* evolve = app.add_subcommand(
      "evolve", "Entropy (nats), linear entropy and sweeping residual along a trajectory (CSV)");
  evolve->add_option("model", model_path, "Model JSON")->required();
  evolve->add_option("state", second_path, "Initial density matrix JSON")->required();
  evolve->add_option("--times", times, "Linear grid start:stop:count (default 0:5:51)");
  common(evolve);

  auto* decompose = app.add_subcommand("decompose", "Factor-block structure report (JSON)");
  decompose->add_option("model", model_path, "Model JSON")->required();
  decompose->add_option("--mc-samples", config.mc_samples, "Haar samples for the spot check");
  common(decompose);

  auto* project = app.add_subcommand("project", "Apply the conditional expectation (JSON)");
  project->add_option("model", model_path, "Model JSON")->required();
  project->add_option("operator", second_path, "Operator matrix JSON")->required();
  project->add_option("--mode", mode, "closed or mc")->check(CLI::IsMember({"closed", "mc"}));
  project->add_option("--mc-samples", config.mc_samples, "Haar samples in mc mode");
  common(project);

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
    if (!times.empty()) parse_times(times, config);
    for (const auto& t : tol_overrides) apply_tolerance_override(t, config.tol);
    if (config.mc_samples == 0) throw ParseError("--mc-samples must be >= 1");
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  config.mode = mode == "mc" ? EvaluationMode::kMonteCarlo : EvaluationMode::kClosedForm;

  CommandResult result;
  if (check->parsed()) result = cmd_check(model_path, config, err);
  else if (evolve->parsed()) result = cmd_evolve(model_path, second_path, config, err);
  else if (decompose->parsed()) result = cmd_decompose(model_path, config, err);
  else result = cmd_project(model_path, second_path, config, err);

  if (config.out.empty()) {
    out << result.payload;
  } else if (!result.payload.empty()) {
    std::ofstream file(config.out, std::ios::binary);
    if (!file || !(file << result.payload)) {
      err << "error: cannot write " << config.out << '\n';
      return kInputError;
    }
  }
  return result.exit_code;
}

}  // namespace lindobs::cli

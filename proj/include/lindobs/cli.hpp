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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lindobs/expectation.hpp"
#include "lindobs/operators.hpp"
#include "lindobs/pipeline.hpp"

namespace lindobs::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kNotEnvironmentInduced = 2,
  kNumericalFailure = 3,
};

struct RunConfig {
  double t_start = 0.0;
  double t_stop = 5.0;
  int t_count = 51;
  std::uint64_t seed = 0;
  Tolerances tol;
  std::size_t mc_samples = 10000;
  EvaluationMode mode = EvaluationMode::kClosedForm;
  std::string out;  ///< empty: standard output
};

/// Parses "start:stop:count".
void parse_times(const std::string& text, RunConfig& config);
/// Parses "KEY=VAL" with KEY one of herm, psd, rank, cluster_gap, closure.
void apply_tolerance_override(const std::string& assignment, Tolerances& tol);

struct CommandResult {
  int exit_code = kOk;
  std::string payload;  ///< written to --out or standard output
};

CommandResult cmd_check(const std::string& model_path, const RunConfig& config, std::ostream& diag);
CommandResult cmd_evolve(const std::string& model_path, const std::string& state_path,
                         const RunConfig& config, std::ostream& diag);
CommandResult cmd_decompose(const std::string& model_path, const RunConfig& config,
                            std::ostream& diag);
CommandResult cmd_project(const std::string& model_path, const std::string& operator_path,
                          const RunConfig& config, std::ostream& diag);

/// JSON report of the factor-block structure, including the Haar
/// Monte-Carlo spot check.
std::string decomposition_report(const Analysis& analysis, const RunConfig& config,
                                 const std::string& label);

/// Entry point shared by the executable and the tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lindobs::cli

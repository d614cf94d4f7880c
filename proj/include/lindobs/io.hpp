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

#include <string>
#include <string_view>

#include "lindobs/lindblad.hpp"
#include "lindobs/operators.hpp"
#include "lindobs/semigroup.hpp"

namespace lindobs::io {

// File formats. Complex numbers are [re, im] arrays and matrices are
// row-major nested arrays of them. A model file is
//
//   {"dim": d, "hamiltonian": <matrix>, "jumps": [<matrix>, ...], "label": "..."}
//
// with "label" optional. Parse errors carry the JSON line/column or the
// offending field path.

ComplexMatrix parse_matrix(std::string_view text);
LindbladModel parse_model(std::string_view text, const Tolerances& tol = {});

/// Canonical text: one matrix row per line, numbers in shortest
/// round-trip form. Parsing and re-serializing canonical text
/// reproduces it byte for byte.
std::string serialize_matrix(const ComplexMatrix& m);
std::string serialize_model(const LindbladModel& model);

/// Shortest decimal representation that parses back to the same double.
std::string format_number(double v);

/// Header `t,entropy_nats,linear_entropy,sweep_residual_trace_norm`,
/// 17 significant digits, residual blank when absent.
std::string entropy_trace_csv(const EntropyTrace& trace);

std::string read_file(const std::string& path);

}  // namespace lindobs::io

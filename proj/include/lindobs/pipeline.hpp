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

#include "lindobs/algebra.hpp"
#include "lindobs/isometric.hpp"
#include "lindobs/lindblad.hpp"

namespace lindobs {

/// Everything derived from a gated model: generator, isometric subspace,
/// algebra of effective observables and its factor blocks.
struct Analysis {
  GateResult gate;
  Superoperator generator;
  IsometricSubspace isometric;
  StarAlgebra algebra;
  AlgebraStructure structure;
};

/// Throws NotEnvironmentInduced when the model fails the gate.
Analysis analyze(const LindbladModel& model, std::uint64_t seed, const Tolerances& tol = {});

}  // namespace lindobs

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

#include "lindobs/pipeline.hpp"

#include <random>

namespace lindobs {

Analysis analyze(const LindbladModel& model, std::uint64_t seed, const Tolerances& tol) {
  const GateResult gate = check_environment_induced(model, tol);
  Superoperator generator = build_generator_superop(model);
  IsometricSubspace k = compute_isometric_subspace(generator, gate, tol);
  StarAlgebra algebra = extract_algebra(k, tol);
  std::mt19937_64 rng(seed);
  AlgebraStructure structure = decompose_structure(algebra, rng, tol);
  return {gate, std::move(generator), std::move(k), std::move(algebra), std::move(structure)};
}

}  // namespace lindobs

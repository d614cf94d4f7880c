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

#include <optional>
#include <vector>

#include "lindobs/isometric.hpp"
#include "lindobs/lindblad.hpp"
#include "lindobs/operators.hpp"

namespace lindobs {

/// Tolerances used to re-validate numerically evolved states.
inline constexpr Tolerances kEvolvedStateTolerances{1e-9, 1e-8};

/// T_t rho = unvec(exp(t L) vec(rho)).
DensityMatrix evolve_state(const Superoperator& generator, const DensityMatrix& rho, double t);

/// Heisenberg picture T_t^*(A) = unvec(exp(t L^+) vec(A)).
ComplexMatrix evolve_dual(const Superoperator& generator, const ComplexMatrix& a, double t);

/// -tr(rho ln rho) in nats. Eigenvalues in [-1e-8, 0) are treated as 0.
double von_neumann_entropy(const DensityMatrix& rho);

/// tr(rho - rho^2)
double linear_entropy(const DensityMatrix& rho);

/// Projective measurement without readout: sum_j Q_j rho Q_j.
DensityMatrix pinch(const DensityMatrix& rho, const std::vector<ComplexMatrix>& projectors);

/// ||T_t rho - P(T_t rho)||_1, the part of the state not yet swept onto K.
double sweep_residual(const Superoperator& generator, const IsometricSubspace& k,
                      const DensityMatrix& rho, double t);

struct EntropyTrace {
  std::vector<double> times;
  std::vector<double> entropy;
  std::vector<double> linear_entropy;
  /// Present only when an isometric subspace was supplied.
  std::optional<std::vector<double>> sweep_residual;
};

/// Entropy diagnostics along a trajectory. Each time point is evaluated
/// independently of the others.
EntropyTrace entropy_trace(const Superoperator& generator, const DensityMatrix& rho,
                           const std::vector<double>& times,
                           const IsometricSubspace* k = nullptr);

/// count equally spaced points from start to stop inclusive.
std::vector<double> linear_time_grid(double start, double stop, int count);

}  // namespace lindobs

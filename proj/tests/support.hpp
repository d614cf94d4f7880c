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

// Test-only helpers: seeded random generators, the canonical models and
// brute-force oracles that do not share code paths with the library.
#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lindobs/lindblad.hpp"
#include "lindobs/operators.hpp"

namespace lindobs::testing {

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

ComplexMatrix random_complex(Index rows, Index cols, std::mt19937_64& rng);
ComplexMatrix random_hermitian(Index d, std::mt19937_64& rng);
/// exp(iH) for a random Hermitian H, via its eigendecomposition.
ComplexMatrix random_unitary(Index d, std::mt19937_64& rng);
DensityMatrix random_density(Index d, std::mt19937_64& rng);

/// H = 0, single jump [[0,0],[1,0]]; fails the gate.
LindbladModel amplitude_decay_example();
/// H = 0 (or given), jump sqrt(rate) sigma_z.
LindbladModel dephasing(double rate = 1.0, const ComplexMatrix& h = ComplexMatrix::Zero(2, 2));
/// jumps sigma_x, sigma_y, sigma_z.
LindbladModel depolarizing_qubit();
/// d = 4: H = H1 (x) I, jumps I (x) sigma_a.
LindbladModel qubit_with_depolarized_partner();
LindbladModel purely_hamiltonian(Index d, std::mt19937_64& rng);

/// Gated model whose algebra of effective observables is, up to a random
/// unitary, the direct sum of B(C^N) (x) I_r over the given (N, r).
LindbladModel structured_model(const std::vector<std::pair<Index, Index>>& blocks,
                               std::mt19937_64& rng);

/// Random model passing the gate: Hermitian jumps, scaled unitary jumps,
/// a non-normal pair {G, G^+}, or a structured model.
LindbladModel random_gated_model(Index d, std::mt19937_64& rng);

/// The test-suite of gated models used by the property and acceptance
/// tests, with descriptive names.
std::vector<std::pair<std::string, LindbladModel>> gated_suite(std::mt19937_64& rng);

// --- oracles ---

/// Sum of sqrt(eigenvalues of A^+ A).
double trace_norm_oracle(const ComplexMatrix& a);

/// Projector (on vec space) onto the span of eigenvectors of L with
/// |Re lambda| <= tol, from a general complex eigensolver.
ComplexMatrix peripheral_projector_oracle(const ComplexMatrix& superop, double tol = 1e-7);

/// Orthogonal projector onto the column span.
ComplexMatrix column_span_projector(const ComplexMatrix& cols, double rel_tol = 1e-8);

/// Dimension of {x : [x, g] = 0 for all g}, by brute-force SVD.
Index commutant_dim(const std::vector<ComplexMatrix>& generators, Index d);

/// Closed-form solution for a single dephasing jump sqrt(rate) sigma_z:
/// off-diagonals decay as exp(-2 rate t).
ComplexMatrix dephasing_closed_form(const ComplexMatrix& rho0, double rate, double t);

double max_abs(const ComplexMatrix& a);

}  // namespace lindobs::testing

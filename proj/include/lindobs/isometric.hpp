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
#include <vector>

#include "lindobs/lindblad.hpp"
#include "lindobs/operators.hpp"

namespace lindobs {

/// The subspace K of Hilbert-Schmidt operators on which the semigroup
/// acts isometrically (for T_t and for its dual), stored as an HS
/// orthonormal basis of Hermitian matrices.
class IsometricSubspace {
 public:
  IsometricSubspace(Index dim, std::vector<ComplexMatrix> basis, std::uint64_t model_fingerprint,
                    std::vector<Index> iteration_dims = {});

  Index dim() const noexcept { return dim_; }
  Index size() const noexcept { return static_cast<Index>(basis_.size()); }
  const std::vector<ComplexMatrix>& basis() const noexcept { return basis_; }
  std::uint64_t model_fingerprint() const noexcept { return fingerprint_; }

  /// Column j is vec(basis[j]); orthonormal columns.
  const ComplexMatrix& vectorized() const noexcept { return columns_; }

  /// Subspace dimension after each fixpoint round, starting with ker(L + L^+).
  const std::vector<Index>& iteration_dims() const noexcept { return iteration_dims_; }

 private:
  Index dim_;
  std::vector<ComplexMatrix> basis_;
  ComplexMatrix columns_;
  std::uint64_t fingerprint_;
  std::vector<Index> iteration_dims_;
};

/// Largest subspace of ker(L + L^+) invariant under both L and L^+.
///
/// Starts from the numerical kernel of the symmetrized dissipative part
/// D = (L + L^+) and repeatedly keeps the directions whose images under
/// L and L^+ stay inside the current subspace. Throws
/// NotEnvironmentInduced when the gate failed and NumericalRankAmbiguity
/// when a singular value falls inside [0.1, 10] * rank tolerance.
IsometricSubspace compute_isometric_subspace(const Superoperator& generator, const GateResult& gate,
                                             const Tolerances& tol = {});

/// Orthogonal (Hilbert-Schmidt) projection onto K.
ComplexMatrix project_hs(const IsometricSubspace& k, const ComplexMatrix& phi);

struct UnitaryRestrictionSample {
  double t = 0.0;
  double norm_drift = 0.0;         ///< max_a | ||T_t x_a||_2 - 1 |
  double dual_norm_drift = 0.0;    ///< max_a | ||T_t^* x_a||_2 - 1 |
  double invariance_defect = 0.0;  ///< max_a ||(id - P) T_t x_a||_2
};

struct UnitaryRestrictionReport {
  std::vector<UnitaryRestrictionSample> samples;

  double max_defect() const;
  bool passed(double tol = 1e-8) const { return max_defect() <= tol; }
};

UnitaryRestrictionReport verify_unitary_restriction(const Superoperator& generator,
                                                    const IsometricSubspace& k,
                                                    const std::vector<double>& times);

}  // namespace lindobs

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

#include <random>
#include <string>
#include <vector>

#include "lindobs/isometric.hpp"
#include "lindobs/operators.hpp"

namespace lindobs {

/// A verified unital *-algebra of d x d matrices, given by an HS
/// orthonormal basis of Hermitian elements.
class StarAlgebra {
 public:
  StarAlgebra(Index dim, std::vector<ComplexMatrix> basis, double closure_defect);

  Index dim() const noexcept { return dim_; }
  Index size() const noexcept { return static_cast<Index>(basis_.size()); }
  const std::vector<ComplexMatrix>& basis() const noexcept { return basis_; }
  /// Largest HS distance from the span over all closure checks.
  double closure_defect() const noexcept { return closure_defect_; }

  ComplexMatrix project(const ComplexMatrix& x) const;

 private:
  Index dim_;
  std::vector<ComplexMatrix> basis_;
  ComplexMatrix columns_;
  double closure_defect_;
};

/// Algebra of effective observables spanned by K. Throws NotAnAlgebra
/// when the span is not closed under products and adjoints (within
/// tol.closure) or misses the identity.
StarAlgebra extract_algebra(const IsometricSubspace& k, const Tolerances& tol = {});

/// One type I factor summand M_kn, with range(E_kn) identified with
/// C^N (x) C^r through the isometry W: W^+ m W = m' (x) I_r.
struct FactorBlock {
  int k = 0;  ///< 1-based; indexes the distinct values of r, ascending
  int n = 0;  ///< 1-based position among blocks sharing k
  ComplexMatrix unit_projector;
  Index multiplicity = 0;  ///< N
  Index minimal_dim = 0;   ///< r
  ComplexMatrix isometry;  ///< d x (N r), composite column index a * r + i

  Index rank() const noexcept { return multiplicity * minimal_dim; }
};

struct AlgebraStructure {
  Index dim = 0;
  std::vector<FactorBlock> blocks;
  ComplexMatrix unit;        ///< E = sum E_kn
  ComplexMatrix complement;  ///< I - E
  Index linear_dim = 0;      ///< sum N^2
  Index center_dim = 0;
  /// max over algebra basis x of ||x - sum E x E||_2 together with the
  /// deviation of W^+ x W from the form m' (x) I_r.
  double reproduction_defect = 0.0;
};

/// Wedderburn decomposition of a unital *-algebra into factor blocks.
///
/// The center is the null space of the commutator system; a random
/// self-adjoint central element separates the minimal central projectors
/// by its eigenvalue clusters. Inside each block a random generic element
/// yields N spectral projectors of rank r, and polar parts of e_1 m e_a
/// transport range(e_1) to the other ones. All randomness is drawn from
/// rng.
AlgebraStructure decompose_structure(const StarAlgebra& algebra, std::mt19937_64& rng,
                                     const Tolerances& tol = {});

struct GaugeGroupSummary {
  /// One entry r per block with r > 1, in block order.
  std::vector<Index> unitary_factors;

  std::vector<std::string> labels() const;
};

GaugeGroupSummary gauge_group_summary(const AlgebraStructure& s);

}  // namespace lindobs

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
#include <string>
#include <vector>

#include "lindobs/operators.hpp"

namespace lindobs {

/// Hamiltonian plus a finite list of jump operators on C^d.
class LindbladModel {
 public:
  LindbladModel(ComplexMatrix hamiltonian, std::vector<ComplexMatrix> jumps, std::string label = {},
                const Tolerances& tol = {});

  Index dim() const noexcept { return hamiltonian_.rows(); }
  const ComplexMatrix& hamiltonian() const noexcept { return hamiltonian_; }
  const std::vector<ComplexMatrix>& jumps() const noexcept { return jumps_; }
  const std::string& label() const noexcept { return label_; }

  /// FNV-1a hash of the dimension and all matrix entries; ties derived
  /// objects (superoperators, isometric subspaces) back to their source.
  std::uint64_t fingerprint() const noexcept { return fingerprint_; }

  /// sum_j V_j* V_j
  ComplexMatrix dissipation_sum() const;
  /// sum_j V_j V_j*
  ComplexMatrix reverse_dissipation_sum() const;

 private:
  ComplexMatrix hamiltonian_;
  std::vector<ComplexMatrix> jumps_;
  std::string label_;
  std::uint64_t fingerprint_ = 0;
};

/// Matrix of the generator acting on column-stacked operators.
struct Superoperator {
  static constexpr const char* kConvention = "column-stacking";

  Index dim = 0;  ///< d; the matrix is d^2 x d^2
  ComplexMatrix matrix;
  std::uint64_t fingerprint = 0;

  ComplexMatrix apply(const ComplexMatrix& x) const { return unvec(matrix * vec(x), dim); }
  ComplexMatrix apply_adjoint(const ComplexMatrix& x) const {
    return unvec(matrix.adjoint() * vec(x), dim);
  }
};

/// -i[H,X] + sum_j V_j X V_j* - 1/2 {sum_j V_j* V_j, X}
ComplexMatrix apply_generator(const LindbladModel& model, const ComplexMatrix& x);

Superoperator build_generator_superop(const LindbladModel& model);

struct GateResult {
  bool environment_induced = false;
  /// max(0, -lambda_min(sum V*V - sum VV*))
  double deficit = 0.0;
};

/// Operator-norm contractivity test: the semigroup is environment-induced
/// iff sum_j V_j V_j* <= sum_j V_j* V_j.
GateResult check_environment_induced(const LindbladModel& model, const Tolerances& tol = {});

}  // namespace lindobs

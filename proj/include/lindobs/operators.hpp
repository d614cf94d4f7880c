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

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace lindobs {

using Complex = std::complex<double>;
using Index = Eigen::Index;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Numerical thresholds shared by the whole toolkit. Every check takes
/// its tolerance from here, so a single override (e.g. `--tol rank=1e-8`
/// on the command line) reaches every rank decision.
struct Tolerances {
  double herm = 1e-10;        ///< Hermiticity and unit-trace checks, relative to the operator norm.
  double psd = 1e-9;          ///< Allowed negativity of minimal eigenvalues.
  double rank = 1e-9;         ///< Relative threshold for numerical rank decisions.
  double cluster_gap = 1e-6;  ///< Eigenvalue clustering gap, relative to the spectral spread.
  double closure = 1e-8;      ///< *-algebra closure defect.
};

/// Eigenpairs of a Hermitian matrix, eigenvalues ascending.
struct EigenDecomposition {
  RealVector values;
  ComplexMatrix vectors;
};

void require_square(const ComplexMatrix& a, const char* what);

double operator_norm(const ComplexMatrix& a);
double hs_norm(const ComplexMatrix& a);

/// ||A - A*||_inf, i.e. twice the operator norm of the anti-Hermitian part.
double hermiticity_defect(const ComplexMatrix& a);
bool is_hermitian(const ComplexMatrix& a, double rel_tol);

ComplexMatrix hermitian_part(const ComplexMatrix& a);

EigenDecomposition eigh(const ComplexMatrix& a, double herm_tol = Tolerances{}.herm);

double min_eigenvalue(const ComplexMatrix& hermitian);

/// exp(t M) by scaling and squaring with a Pade approximant.
ComplexMatrix matrix_exponential(const ComplexMatrix& m, double t);

double trace_norm(const ComplexMatrix& a);

/// tr(x* y)
Complex hs_inner(const ComplexMatrix& x, const ComplexMatrix& y);

/// Trace over the second factor of C^N (x) C^r, with the composite index
/// (a, i) stored at a * r + i.
ComplexMatrix partial_trace_second(const ComplexMatrix& x, Index n, Index r);

/// True when |value| is zero relative to scale at relative threshold eps.
/// Values inside the band [0.1 eps, 10 eps] * scale raise
/// NumericalRankAmbiguity instead of being silently classified.
bool numerically_zero(double value, double scale, double eps, const char* where);

/// Split ascending values into runs separated by gaps larger than
/// rel_gap * (max - min). Returns the run lengths; a spread below 1e-10
/// of the largest magnitude counts as one run.
std::vector<Index> cluster_sorted(const RealVector& ascending, double rel_gap);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Column-stacking vectorization: vec(A X B) = (B^T kron A) vec(X).
ComplexVector vec(const ComplexMatrix& x);
ComplexMatrix unvec(const ComplexVector& v, Index d);

/// Choi matrix sum_{ij} E_ij (x) Phi(E_ij) of a linear map on d x d matrices.
ComplexMatrix choi_matrix(const std::function<ComplexMatrix(const ComplexMatrix&)>& map, Index d);

/// Choi matrix of the map unvec(S vec(.)) for a d^2 x d^2 superoperator matrix.
ComplexMatrix choi_matrix(const ComplexMatrix& superop);

/// A validated density matrix of unit trace, positive semidefinite
/// within the given tolerances. The stored matrix is the
/// Hermitian part of the input.
class DensityMatrix {
 public:
  explicit DensityMatrix(const ComplexMatrix& m, const Tolerances& tol = {});

  static DensityMatrix pure(const ComplexVector& psi);
  static DensityMatrix maximally_mixed(Index d);

  const ComplexMatrix& matrix() const noexcept { return m_; }
  Index dim() const noexcept { return m_.rows(); }

 private:
  ComplexMatrix m_;
};

}  // namespace lindobs

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

#include "lindobs/operators.hpp"

#include <cmath>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "lindobs/errors.hpp"

namespace lindobs {

void require_square(const ComplexMatrix& a, const char* what) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw DimensionMismatch(std::string(what) + ": expected a non-empty square matrix, got " +
                            std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

double operator_norm(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  return svd.singularValues()(0);
}

double hs_norm(const ComplexMatrix& a) { return a.norm(); }

double hermiticity_defect(const ComplexMatrix& a) {
  return operator_norm(a - a.adjoint());
}

bool is_hermitian(const ComplexMatrix& a, double rel_tol) {
  if (a.rows() != a.cols()) return false;
  if (!a.allFinite()) return false;
  return hermiticity_defect(a) <= rel_tol * operator_norm(a);
}

ComplexMatrix hermitian_part(const ComplexMatrix& a) {
  return (a + a.adjoint()) * 0.5;
}

EigenDecomposition eigh(const ComplexMatrix& a, double herm_tol) {
  require_square(a, "eigh");
  if (!is_hermitian(a, herm_tol)) {
    throw NonHermitianInput("eigh: input is not Hermitian (defect " +
                            std::to_string(hermiticity_defect(a)) + ")");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_part(a));
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double min_eigenvalue(const ComplexMatrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_part(hermitian),
                                                      Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

ComplexMatrix matrix_exponential(const ComplexMatrix& m, double t) {
  require_square(m, "matrix_exponential");
  if (t == 0.0) return ComplexMatrix::Identity(m.rows(), m.cols());
  const ComplexMatrix scaled = m * t;
  return scaled.exp();
}

double trace_norm(const ComplexMatrix& a) {
  require_square(a, "trace_norm");
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  return svd.singularValues().sum();
}

Complex hs_inner(const ComplexMatrix& x, const ComplexMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw DimensionMismatch("hs_inner: shapes differ");
  }
  return x.conjugate().cwiseProduct(y).sum();
}

ComplexMatrix partial_trace_second(const ComplexMatrix& x, Index n, Index r) {
  require_square(x, "partial_trace_second");
  if (n <= 0 || r <= 0 || n * r != x.rows()) {
    throw DimensionMismatch("partial_trace_second: " + std::to_string(n) + "*" + std::to_string(r) +
                            " != " + std::to_string(x.rows()));
  }
  ComplexMatrix y = ComplexMatrix::Zero(n, n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      Complex s{};
      for (Index i = 0; i < r; ++i) s += x(a * r + i, b * r + i);
      y(a, b) = s;
    }
  }
  return y;
}

bool numerically_zero(double value, double scale, double eps, const char* where) {
  if (scale == 0.0) return true;
  const double lo = 0.1 * eps * scale;
  const double hi = 10.0 * eps * scale;
  const double a = std::abs(value);
  if (a >= lo && a <= hi) {
    throw NumericalRankAmbiguity(std::string(where) + ": singular value " + std::to_string(a) +
                                     " lies in the ambiguity band [" + std::to_string(lo) + ", " +
                                     std::to_string(hi) + "]",
                                 lo, hi, a);
  }
  return a < lo;
}

std::vector<Index> cluster_sorted(const RealVector& ascending, double rel_gap) {
  std::vector<Index> runs;
  if (ascending.size() == 0) return runs;
  const double spread = ascending(ascending.size() - 1) - ascending(0);
  const double magnitude = ascending.cwiseAbs().maxCoeff();
  // A spread at roundoff level means a single degenerate eigenvalue.
  if (spread <= 1e-10 * magnitude) return {ascending.size()};
  Index len = 1;
  for (Index i = 1; i < ascending.size(); ++i) {
    if (ascending(i) - ascending(i - 1) > rel_gap * spread) {
      runs.push_back(len);
      len = 0;
    }
    ++len;
  }
  runs.push_back(len);
  return runs;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

ComplexVector vec(const ComplexMatrix& x) {
  return Eigen::Map<const ComplexVector>(x.data(), x.size());
}

ComplexMatrix unvec(const ComplexVector& v, Index d) {
  if (d * d != v.size()) {
    throw DimensionMismatch("unvec: vector length " + std::to_string(v.size()) +
                            " is not " + std::to_string(d) + "^2");
  }
  return Eigen::Map<const ComplexMatrix>(v.data(), d, d);
}

ComplexMatrix choi_matrix(const std::function<ComplexMatrix(const ComplexMatrix&)>& map, Index d) {
  ComplexMatrix choi = ComplexMatrix::Zero(d * d, d * d);
  ComplexMatrix unit = ComplexMatrix::Zero(d, d);
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      unit(i, j) = 1.0;
      choi.block(i * d, j * d, d, d) = map(unit);
      unit(i, j) = 0.0;
    }
  }
  return choi;
}

ComplexMatrix choi_matrix(const ComplexMatrix& superop) {
  require_square(superop, "choi_matrix");
  const auto d = static_cast<Index>(std::lround(std::sqrt(static_cast<double>(superop.rows()))));
  if (d * d != superop.rows()) throw DimensionMismatch("choi_matrix: size is not a square");
  return choi_matrix([&](const ComplexMatrix& x) { return unvec(superop * vec(x), d); }, d);
}

DensityMatrix::DensityMatrix(const ComplexMatrix& m, const Tolerances& tol) {
  require_square(m, "DensityMatrix");
  if (!m.allFinite()) throw InvalidState("density matrix has non-finite entries");
  if (!is_hermitian(m, tol.herm)) throw InvalidState("density matrix is not Hermitian");
  m_ = hermitian_part(m);
  const double tr = m_.trace().real();
  if (std::abs(tr - 1.0) > tol.herm) {
    throw InvalidState("density matrix trace " + std::to_string(tr) + " differs from 1");
  }
  const double lo = min_eigenvalue(m_);
  if (lo < -tol.psd) {
    throw InvalidState("density matrix has negative eigenvalue " + std::to_string(lo));
  }
}

DensityMatrix DensityMatrix::pure(const ComplexVector& psi) {
  const double n = psi.norm();
  if (n == 0.0) throw InvalidState("pure state from a zero vector");
  const ComplexVector u = psi / n;
  return DensityMatrix(u * u.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(Index d) {
  return DensityMatrix(ComplexMatrix::Identity(d, d) / static_cast<double>(d));
}

}  // namespace lindobs

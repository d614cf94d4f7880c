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

#include "lindobs/isometric.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "lindobs/errors.hpp"

namespace lindobs {
namespace {

// Real coordinates of a Hermitian matrix: diagonal entries, then
// sqrt(2) Re and sqrt(2) Im of each strictly upper entry. This map is an
// isometry from (Hermitian, HS) onto R^{d^2}.
Eigen::VectorXd hermitian_coordinates(const ComplexMatrix& x) {
  const Index d = x.rows();
  Eigen::VectorXd c(d * d);
  Index p = 0;
  for (Index i = 0; i < d; ++i) c(p++) = x(i, i).real();
  for (Index i = 0; i < d; ++i) {
    for (Index j = i + 1; j < d; ++j) {
      c(p++) = std::sqrt(2.0) * x(i, j).real();
      c(p++) = std::sqrt(2.0) * x(i, j).imag();
    }
  }
  return c;
}

ComplexMatrix from_hermitian_coordinates(const Eigen::VectorXd& c, Index d) {
  ComplexMatrix x = ComplexMatrix::Zero(d, d);
  Index p = 0;
  for (Index i = 0; i < d; ++i) x(i, i) = c(p++);
  const double s = 1.0 / std::sqrt(2.0);
  for (Index i = 0; i < d; ++i) {
    for (Index j = i + 1; j < d; ++j) {
      const Complex z(s * c(p), s * c(p + 1));
      p += 2;
      x(i, j) = z;
      x(j, i) = std::conj(z);
    }
  }
  return x;
}

// Hermitian, HS-orthonormal basis of a *-closed subspace given by
// orthonormal columns (vectorized). Sign fixed so the largest coordinate
// of every basis element is positive.
std::vector<ComplexMatrix> canonical_hermitian_basis(const ComplexMatrix& columns, Index d) {
  const Index m = columns.cols();
  if (m == 0) return {};
  Eigen::MatrixXd span(d * d, 2 * m);
  for (Index a = 0; a < m; ++a) {
    const ComplexMatrix x = unvec(columns.col(a), d);
    span.col(2 * a) = hermitian_coordinates((x + x.adjoint()) * 0.5);
    span.col(2 * a + 1) = hermitian_coordinates((x - x.adjoint()) * Complex(0.0, -0.5));
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(span, Eigen::ComputeThinU);
  const Eigen::VectorXd& sv = svd.singularValues();
  if (sv.size() < m || sv(m - 1) < 0.5 || (sv.size() > m && sv(m) > 1e-6)) {
    // A *-closed subspace of dimension m has a Hermitian spanning set of
    // rank m; anything less means K is not closed under adjoints.
    throw NotAnAlgebra("isometric subspace is not closed under adjoints");
  }
  std::vector<ComplexMatrix> basis;
  basis.reserve(static_cast<std::size_t>(m));
  for (Index a = 0; a < m; ++a) {
    Eigen::VectorXd u = svd.matrixU().col(a);
    Index arg = 0;
    u.cwiseAbs().maxCoeff(&arg);
    if (u(arg) < 0) u = -u;
    basis.push_back(from_hermitian_coordinates(u, d));
  }
  return basis;
}

ComplexMatrix orthonormalize(const ComplexMatrix& b) {
  Eigen::HouseholderQR<ComplexMatrix> qr(b);
  return qr.householderQ() * ComplexMatrix::Identity(b.rows(), b.cols());
}

}  // namespace

IsometricSubspace::IsometricSubspace(Index dim, std::vector<ComplexMatrix> basis,
                                     std::uint64_t model_fingerprint,
                                     std::vector<Index> iteration_dims)
    : dim_(dim),
      basis_(std::move(basis)),
      columns_(dim * dim, static_cast<Index>(basis_.size())),
      fingerprint_(model_fingerprint),
      iteration_dims_(std::move(iteration_dims)) {
  for (std::size_t a = 0; a < basis_.size(); ++a) {
    if (basis_[a].rows() != dim || basis_[a].cols() != dim) {
      throw DimensionMismatch("isometric basis element has the wrong shape");
    }
    columns_.col(static_cast<Index>(a)) = vec(basis_[a]);
  }
}

IsometricSubspace compute_isometric_subspace(const Superoperator& generator, const GateResult& gate,
                                             const Tolerances& tol) {
  if (!gate.environment_induced) {
    throw NotEnvironmentInduced("isometric subspace requested for a semigroup that is not "
                                "environment-induced (deficit " +
                                std::to_string(gate.deficit) + ")");
  }
  const Index d = generator.dim;
  const Index n = d * d;
  const ComplexMatrix& l = generator.matrix;
  if (l.rows() != n || l.cols() != n) throw DimensionMismatch("superoperator has the wrong size");

  ComplexMatrix dissipative = l + l.adjoint();
  dissipative = hermitian_part(dissipative);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(dissipative);
  const RealVector& lam = eig.eigenvalues();
  // Rank decisions are measured against the whole generator: a dissipator
  // at roundoff level must not become its own yardstick.
  const double l_scale = operator_norm(l);

  std::vector<Index> kernel;
  for (Index i = 0; i < n; ++i) {
    if (numerically_zero(lam(i), l_scale, tol.rank, "kernel of L + L^+")) kernel.push_back(i);
  }
  ComplexMatrix b(n, static_cast<Index>(kernel.size()));
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    b.col(static_cast<Index>(i)) = eig.eigenvectors().col(kernel[i]);
  }

  std::vector<Index> dims{b.cols()};
  while (b.cols() > 0) {
    const Index m = b.cols();
    const ComplexMatrix complement = ComplexMatrix::Identity(n, n) - b * b.adjoint();
    ComplexMatrix residual(2 * n, m);
    residual.topRows(n) = complement * (l * b);
    residual.bottomRows(n) = complement * (l.adjoint() * b);

    Eigen::JacobiSVD<ComplexMatrix> svd(residual, Eigen::ComputeFullV);
    const RealVector& sv = svd.singularValues();
    // Singular values come sorted descending, so the null directions are
    // the trailing columns of V.
    Index rank = 0;
    for (Index i = 0; i < sv.size(); ++i) {
      if (!numerically_zero(sv(i), l_scale, tol.rank, "invariant-subspace residual")) ++rank;
    }
    if (rank == 0) break;
    const ComplexMatrix keep = svd.matrixV().rightCols(m - rank);
    b = keep.cols() > 0 ? orthonormalize(b * keep) : ComplexMatrix(n, 0);
    dims.push_back(b.cols());
  }

  return IsometricSubspace(d, canonical_hermitian_basis(b, d), generator.fingerprint,
                           std::move(dims));
}

ComplexMatrix project_hs(const IsometricSubspace& k, const ComplexMatrix& phi) {
  if (phi.rows() != k.dim() || phi.cols() != k.dim()) {
    throw DimensionMismatch("project_hs: operator is not " + std::to_string(k.dim()) + "x" +
                            std::to_string(k.dim()));
  }
  const ComplexMatrix& q = k.vectorized();
  const ComplexVector coeffs = q.adjoint() * vec(phi);
  return unvec(q * coeffs, k.dim());
}

double UnitaryRestrictionReport::max_defect() const {
  double worst = 0.0;
  for (const auto& s : samples) {
    worst = std::max({worst, s.norm_drift, s.dual_norm_drift, s.invariance_defect});
  }
  return worst;
}

UnitaryRestrictionReport verify_unitary_restriction(const Superoperator& generator,
                                                    const IsometricSubspace& k,
                                                    const std::vector<double>& times) {
  if (generator.fingerprint != k.model_fingerprint() || generator.dim != k.dim()) {
    throw ModelMismatch("isometric subspace was computed for a different model");
  }
  const ComplexMatrix& q = k.vectorized();
  UnitaryRestrictionReport report;
  for (double t : times) {
    if (t < 0.0) throw NegativeTime("verify_unitary_restriction: negative time");
    const ComplexMatrix flow = matrix_exponential(generator.matrix, t);
    UnitaryRestrictionSample s;
    s.t = t;
    for (Index a = 0; a < q.cols(); ++a) {
      const ComplexVector y = flow * q.col(a);
      const ComplexVector y_dual = flow.adjoint() * q.col(a);
      s.norm_drift = std::max(s.norm_drift, std::abs(y.norm() - 1.0));
      s.dual_norm_drift = std::max(s.dual_norm_drift, std::abs(y_dual.norm() - 1.0));
      s.invariance_defect = std::max(s.invariance_defect, (y - q * (q.adjoint() * y)).norm());
    }
    report.samples.push_back(s);
  }
  return report;
}

}  // namespace lindobs

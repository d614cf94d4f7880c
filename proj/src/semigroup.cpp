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

#include "lindobs/semigroup.hpp"

#include <cmath>
#include <string>

#include "lindobs/errors.hpp"

namespace lindobs {
namespace {

constexpr double kClampSlack = 1e-8;

void require_time(double t, const char* where) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw NegativeTime(std::string(where) + ": time must be finite and non-negative");
  }
}

void require_matching(const Superoperator& generator, Index d, const char* where) {
  if (generator.dim != d) {
    throw DimensionMismatch(std::string(where) + ": state dimension " + std::to_string(d) +
                            " does not match generator dimension " +
                            std::to_string(generator.dim));
  }
}

RealVector clamped_spectrum(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(rho.matrix(), Eigen::EigenvaluesOnly);
  RealVector lam = eig.eigenvalues();
  if (lam.size() > 0 && lam(0) < -kClampSlack) {
    throw InvalidState("state has eigenvalue " + std::to_string(lam(0)) + " below -1e-8");
  }
  return lam.cwiseMax(0.0).cwiseMin(1.0);
}

DensityMatrix evolve_with(const ComplexMatrix& flow, const DensityMatrix& rho) {
  const Index d = rho.dim();
  return DensityMatrix(unvec(flow * vec(rho.matrix()), d), kEvolvedStateTolerances);
}

}  // namespace

DensityMatrix evolve_state(const Superoperator& generator, const DensityMatrix& rho, double t) {
  require_time(t, "evolve_state");
  require_matching(generator, rho.dim(), "evolve_state");
  if (t == 0.0) return rho;
  return evolve_with(matrix_exponential(generator.matrix, t), rho);
}

ComplexMatrix evolve_dual(const Superoperator& generator, const ComplexMatrix& a, double t) {
  require_time(t, "evolve_dual");
  require_square(a, "evolve_dual");
  require_matching(generator, a.rows(), "evolve_dual");
  if (t == 0.0) return a;
  const ComplexMatrix flow = matrix_exponential(generator.matrix, t).adjoint();
  return unvec(flow * vec(a), a.rows());
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const RealVector lam = clamped_spectrum(rho);
  double s = 0.0;
  for (Index i = 0; i < lam.size(); ++i) {
    if (lam(i) > 0.0) s -= lam(i) * std::log(lam(i));
  }
  return std::max(0.0, s);
}

double linear_entropy(const DensityMatrix& rho) {
  const RealVector lam = clamped_spectrum(rho);
  return std::max(0.0, 1.0 - lam.squaredNorm());
}

DensityMatrix pinch(const DensityMatrix& rho, const std::vector<ComplexMatrix>& projectors) {
  constexpr double kFamilyTol = 1e-10;
  const Index d = rho.dim();
  if (projectors.empty()) throw InvalidProjectorFamily("pinch: empty projector family");
  ComplexMatrix total = ComplexMatrix::Zero(d, d);
  for (std::size_t j = 0; j < projectors.size(); ++j) {
    const ComplexMatrix& q = projectors[j];
    if (q.rows() != d || q.cols() != d) {
      throw InvalidProjectorFamily("pinch: projector " + std::to_string(j) + " has wrong shape");
    }
    for (std::size_t k = j; k < projectors.size(); ++k) {
      const ComplexMatrix expected = (j == k) ? q : ComplexMatrix::Zero(d, d);
      if ((q * projectors[k] - expected).cwiseAbs().maxCoeff() > kFamilyTol) {
        throw InvalidProjectorFamily("pinch: projectors " + std::to_string(j) + " and " +
                                     std::to_string(k) + " violate Q_j Q_k = delta_jk Q_j");
      }
    }
    if ((q - q.adjoint()).cwiseAbs().maxCoeff() > kFamilyTol) {
      throw InvalidProjectorFamily("pinch: projector " + std::to_string(j) + " is not Hermitian");
    }
    total += q;
  }
  if ((total - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff() > kFamilyTol) {
    throw InvalidProjectorFamily("pinch: projectors do not sum to the identity");
  }
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (const auto& q : projectors) out += q * rho.matrix() * q;
  return DensityMatrix(out, kEvolvedStateTolerances);
}

double sweep_residual(const Superoperator& generator, const IsometricSubspace& k,
                      const DensityMatrix& rho, double t) {
  if (generator.fingerprint != k.model_fingerprint() || generator.dim != k.dim()) {
    throw ModelMismatch("sweep_residual: isometric subspace belongs to a different model");
  }
  const DensityMatrix evolved = evolve_state(generator, rho, t);
  return trace_norm(evolved.matrix() - project_hs(k, evolved.matrix()));
}

EntropyTrace entropy_trace(const Superoperator& generator, const DensityMatrix& rho,
                           const std::vector<double>& times, const IsometricSubspace* k) {
  require_matching(generator, rho.dim(), "entropy_trace");
  if (k != nullptr && (generator.fingerprint != k->model_fingerprint() ||
                       generator.dim != k->dim())) {
    throw ModelMismatch("entropy_trace: isometric subspace belongs to a different model");
  }
  EntropyTrace trace;
  trace.times = times;
  if (k != nullptr) trace.sweep_residual.emplace();
  for (double t : times) {
    const DensityMatrix evolved = evolve_state(generator, rho, t);
    trace.entropy.push_back(von_neumann_entropy(evolved));
    trace.linear_entropy.push_back(linear_entropy(evolved));
    if (k != nullptr) {
      trace.sweep_residual->push_back(
          trace_norm(evolved.matrix() - project_hs(*k, evolved.matrix())));
    }
  }
  return trace;
}

std::vector<double> linear_time_grid(double start, double stop, int count) {
  if (!(start >= 0.0) || !(stop > start) || count < 2) {
    throw Error("time grid needs start >= 0, stop > start and count >= 2");
  }
  std::vector<double> grid(static_cast<std::size_t>(count));
  const double step = (stop - start) / static_cast<double>(count - 1);
  for (int i = 0; i < count; ++i) grid[static_cast<std::size_t>(i)] = start + step * i;
  grid.back() = stop;
  return grid;
}

}  // namespace lindobs

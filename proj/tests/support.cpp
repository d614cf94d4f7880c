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

#include "support.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace lindobs::testing {

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

ComplexMatrix random_complex(Index rows, Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  ComplexMatrix m(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) m(i, j) = Complex(g(rng), g(rng));
  }
  return m;
}

ComplexMatrix random_hermitian(Index d, std::mt19937_64& rng) {
  const ComplexMatrix g = random_complex(d, d, rng);
  return (g + g.adjoint()) * 0.5;
}

ComplexMatrix random_unitary(Index d, std::mt19937_64& rng) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(random_hermitian(d, rng) * 3.0);
  ComplexVector phases(d);
  for (Index i = 0; i < d; ++i) phases(i) = std::exp(Complex(0.0, eig.eigenvalues()(i)));
  return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

DensityMatrix random_density(Index d, std::mt19937_64& rng) {
  std::uniform_int_distribution<Index> rank_dist(1, d);
  const ComplexMatrix g = random_complex(d, rank_dist(rng), rng);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(rho);
}

LindbladModel amplitude_decay_example() {
  ComplexMatrix a = ComplexMatrix::Zero(2, 2);
  a(1, 0) = 1.0;
  return LindbladModel(ComplexMatrix::Zero(2, 2), {a}, "amplitude-decay");
}

LindbladModel dephasing(double rate, const ComplexMatrix& h) {
  return LindbladModel(h, {std::sqrt(rate) * pauli_z()}, "dephasing");
}

LindbladModel depolarizing_qubit() {
  return LindbladModel(ComplexMatrix::Zero(2, 2), {pauli_x(), pauli_y(), pauli_z()},
                       "depolarizing-qubit");
}

LindbladModel qubit_with_depolarized_partner() {
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  ComplexMatrix h1(2, 2);
  h1 << 0.7, Complex(0.2, -0.3), Complex(0.2, 0.3), -0.4;
  return LindbladModel(kron(h1, id), {kron(id, pauli_x()), kron(id, pauli_y()), kron(id, pauli_z())},
                       "qubit-with-depolarized-partner");
}

LindbladModel purely_hamiltonian(Index d, std::mt19937_64& rng) {
  return LindbladModel(random_hermitian(d, rng), {}, "purely-hamiltonian");
}

LindbladModel structured_model(const std::vector<std::pair<Index, Index>>& blocks,
                               std::mt19937_64& rng) {
  Index d = 0;
  for (const auto& [n, r] : blocks) d += n * r;
  const ComplexMatrix u = random_unitary(d, rng);
  const auto block_diag = [&](auto&& make_block) {
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    Index off = 0;
    for (const auto& [n, r] : blocks) {
      m.block(off, off, n * r, n * r) = make_block(n, r);
      off += n * r;
    }
    return ComplexMatrix(u * m * u.adjoint());
  };
  std::vector<ComplexMatrix> jumps;
  for (int j = 0; j < 2; ++j) {
    jumps.push_back(block_diag([&](Index n, Index r) {
      return kron(ComplexMatrix::Identity(n, n), random_hermitian(r, rng));
    }));
  }
  ComplexMatrix h = block_diag([&](Index n, Index r) {
    return ComplexMatrix(kron(random_hermitian(n, rng), ComplexMatrix::Identity(r, r)) +
                         kron(ComplexMatrix::Identity(n, n), random_hermitian(r, rng)));
  });
  return LindbladModel(hermitian_part(h), std::move(jumps), "structured");
}

LindbladModel random_gated_model(Index d, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind_dist(0, 3);
  std::uniform_int_distribution<int> count_dist(1, 3);
  std::uniform_real_distribution<double> scale(0.2, 1.5);
  const ComplexMatrix h = random_hermitian(d, rng) * scale(rng);
  std::vector<ComplexMatrix> jumps;
  switch (kind_dist(rng)) {
    case 0:
      for (int j = count_dist(rng); j > 0; --j) jumps.push_back(random_hermitian(d, rng) * scale(rng));
      break;
    case 1:
      for (int j = count_dist(rng); j > 0; --j) jumps.push_back(random_unitary(d, rng) * scale(rng));
      break;
    case 2: {
      const ComplexMatrix g = random_complex(d, d, rng) * (0.5 * scale(rng));
      jumps.push_back(g);
      jumps.push_back(g.adjoint());
      break;
    }
    default: {
      // Split d into blocks (N, r) with N * r summing to d.
      std::vector<std::pair<Index, Index>> blocks;
      Index left = d;
      while (left > 0) {
        std::uniform_int_distribution<Index> size_dist(1, left);
        const Index size = size_dist(rng);
        std::vector<Index> divisors;
        for (Index n = 1; n <= size; ++n) {
          if (size % n == 0) divisors.push_back(n);
        }
        std::uniform_int_distribution<std::size_t> pick(0, divisors.size() - 1);
        const Index n = divisors[pick(rng)];
        blocks.emplace_back(n, size / n);
        left -= size;
      }
      return structured_model(blocks, rng);
    }
  }
  return LindbladModel(h, std::move(jumps), "random-gated");
}

std::vector<std::pair<std::string, LindbladModel>> gated_suite(std::mt19937_64& rng) {
  std::vector<std::pair<std::string, LindbladModel>> suite;
  suite.emplace_back("dephasing", dephasing(1.0, 0.5 * pauli_z()));
  suite.emplace_back("depolarizing-qubit", depolarizing_qubit());
  suite.emplace_back("qubit-with-depolarized-partner", qubit_with_depolarized_partner());
  suite.emplace_back("purely-hamiltonian-3", purely_hamiltonian(3, rng));
  suite.emplace_back("structured-(2,1)+(1,1)", structured_model({{2, 1}, {1, 1}}, rng));
  suite.emplace_back("structured-(2,2)+(1,1)", structured_model({{2, 2}, {1, 1}}, rng));
  suite.emplace_back("structured-(1,2)+(1,2)+(1,1)", structured_model({{1, 2}, {1, 2}, {1, 1}}, rng));
  suite.emplace_back("structured-(2,1)+(1,3)", structured_model({{2, 1}, {1, 3}}, rng));
  for (Index d = 2; d <= 5; ++d) {
    suite.emplace_back("random-gated-" + std::to_string(d), random_gated_model(d, rng));
  }
  return suite;
}

double trace_norm_oracle(const ComplexMatrix& a) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(a.adjoint() * a, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (Index i = 0; i < eig.eigenvalues().size(); ++i) s += std::sqrt(std::max(0.0, eig.eigenvalues()(i)));
  return s;
}

ComplexMatrix column_span_projector(const ComplexMatrix& cols, double rel_tol) {
  if (cols.cols() == 0) return ComplexMatrix::Zero(cols.rows(), cols.rows());
  Eigen::JacobiSVD<ComplexMatrix> svd(cols, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  Index rank = 0;
  for (Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > rel_tol * sv(0)) ++rank;
  }
  const ComplexMatrix u = svd.matrixU().leftCols(rank);
  return u * u.adjoint();
}

ComplexMatrix peripheral_projector_oracle(const ComplexMatrix& superop, double tol) {
  Eigen::ComplexEigenSolver<ComplexMatrix> eig(superop);
  std::vector<Index> keep;
  for (Index i = 0; i < eig.eigenvalues().size(); ++i) {
    if (std::abs(eig.eigenvalues()(i).real()) <= tol) keep.push_back(i);
  }
  ComplexMatrix cols(superop.rows(), static_cast<Index>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    cols.col(static_cast<Index>(i)) = eig.eigenvectors().col(keep[i]);
  }
  return column_span_projector(cols);
}

Index commutant_dim(const std::vector<ComplexMatrix>& generators, Index d) {
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  ComplexMatrix system(static_cast<Index>(generators.size()) * d * d, d * d);
  for (std::size_t g = 0; g < generators.size(); ++g) {
    // vec(g X - X g) = (I kron g - g^T kron I) vec X
    system.middleRows(static_cast<Index>(g) * d * d, d * d) =
        kron(id, generators[g]) - kron(generators[g].transpose(), id);
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(system);
  const auto& sv = svd.singularValues();
  Index null = d * d;
  for (Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > 1e-8 * std::max(1.0, sv(0))) --null;
  }
  return null;
}

ComplexMatrix dephasing_closed_form(const ComplexMatrix& rho0, double rate, double t) {
  ComplexMatrix out = rho0;
  out(0, 1) *= std::exp(-2.0 * rate * t);
  out(1, 0) *= std::exp(-2.0 * rate * t);
  return out;
}

double max_abs(const ComplexMatrix& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

}  // namespace lindobs::testing

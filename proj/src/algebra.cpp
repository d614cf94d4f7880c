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

#include "lindobs/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "lindobs/errors.hpp"

namespace lindobs {
namespace {

constexpr int kMaxRetries = 8;

ComplexMatrix stack_columns(const std::vector<ComplexMatrix>& mats, Index d) {
  ComplexMatrix cols(d * d, static_cast<Index>(mats.size()));
  for (std::size_t a = 0; a < mats.size(); ++a) cols.col(static_cast<Index>(a)) = vec(mats[a]);
  return cols;
}

ComplexMatrix random_hermitian_combination(const std::vector<ComplexMatrix>& elements,
                                           std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  ComplexMatrix h = ComplexMatrix::Zero(elements.front().rows(), elements.front().cols());
  for (const auto& x : elements) {
    h += gauss(rng) * hermitian_part(x);
    h += gauss(rng) * hermitian_part(Complex(0.0, -1.0) * x);
  }
  return hermitian_part(h);
}

ComplexMatrix random_combination(const std::vector<ComplexMatrix>& elements,
                                 std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  ComplexMatrix m = ComplexMatrix::Zero(elements.front().rows(), elements.front().cols());
  for (const auto& x : elements) m += Complex(gauss(rng), gauss(rng)) * x;
  return m;
}

// Orthonormal basis (as matrices) of span{mats}, with the rank decided
// relative to the largest singular value.
std::vector<ComplexMatrix> span_basis(const std::vector<ComplexMatrix>& mats, Index d,
                                      const Tolerances& tol, const char* where) {
  const ComplexMatrix cols = stack_columns(mats, d);
  Eigen::JacobiSVD<ComplexMatrix> svd(cols, Eigen::ComputeThinU);
  const RealVector& sv = svd.singularValues();
  const double scale = sv.size() > 0 ? sv(0) : 0.0;
  std::vector<ComplexMatrix> out;
  if (scale == 0.0) return out;
  for (Index i = 0; i < sv.size(); ++i) {
    if (!numerically_zero(sv(i), scale, tol.rank, where)) out.push_back(unvec(svd.matrixU().col(i), d));
  }
  return out;
}

// Null space of the linear map c -> sum_b c_b [x_b, x_a] (all a), i.e.
// the center of the algebra, as matrices.
std::vector<ComplexMatrix> center_basis(const StarAlgebra& algebra, const Tolerances& tol) {
  const auto& basis = algebra.basis();
  const Index d = algebra.dim();
  const Index m = algebra.size();
  ComplexMatrix system(m * d * d, m);
  for (Index b = 0; b < m; ++b) {
    for (Index a = 0; a < m; ++a) {
      const ComplexMatrix& xa = basis[static_cast<std::size_t>(a)];
      const ComplexMatrix& xb = basis[static_cast<std::size_t>(b)];
      system.block(a * d * d, b, d * d, 1) = vec(xb * xa - xa * xb);
    }
  }
  Eigen::BDCSVD<ComplexMatrix> svd(system, Eigen::ComputeThinV);
  const RealVector& sv = svd.singularValues();
  // The basis is HS-orthonormal, so commutators are O(1); an abelian
  // algebra leaves only roundoff here and must not set its own scale.
  const double scale = std::max(sv.size() > 0 ? sv(0) : 0.0, 1.0);
  std::vector<ComplexMatrix> center;
  for (Index i = 0; i < m; ++i) {
    const double s = i < sv.size() ? sv(i) : 0.0;
    if (!numerically_zero(s, scale, tol.rank, "center of the algebra")) continue;
    ComplexMatrix z = ComplexMatrix::Zero(d, d);
    for (Index b = 0; b < m; ++b) z += svd.matrixV()(b, i) * basis[static_cast<std::size_t>(b)];
    center.push_back(std::move(z));
  }
  return center;
}

// Orthonormal bases of the minimal central projections' ranges.
std::vector<ComplexMatrix> separate_center(const std::vector<ComplexMatrix>& center,
                                           std::mt19937_64& rng, const Tolerances& tol) {
  const auto want = static_cast<Index>(center.size());
  if (want == 0) throw CenterSeparationFailure("center of the algebra came out empty");
  for (int attempt = 0; attempt <= kMaxRetries; ++attempt) {
    const ComplexMatrix h = random_hermitian_combination(center, rng);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(h);
    const std::vector<Index> runs = cluster_sorted(eig.eigenvalues(), tol.cluster_gap);
    if (static_cast<Index>(runs.size()) != want) continue;
    std::vector<ComplexMatrix> ranges;
    Index start = 0;
    for (Index len : runs) {
      ranges.push_back(eig.eigenvectors().middleCols(start, len));
      start += len;
    }
    return ranges;
  }
  throw CenterSeparationFailure("random central elements failed to separate " +
                                std::to_string(want) + " central projections after " +
                                std::to_string(kMaxRetries) + " retries");
}

struct BlockFrame {
  Index multiplicity = 0;
  Index minimal_dim = 0;
  ComplexMatrix isometry;  // in the coordinates of range(E)
};

// Matrix-unit frame for one factor, working in range(E) coordinates.
BlockFrame build_frame(const std::vector<ComplexMatrix>& block_basis, Index rank,
                       std::mt19937_64& rng, const Tolerances& tol) {
  const auto lin = static_cast<Index>(block_basis.size());
  const auto n_real = std::sqrt(static_cast<double>(lin));
  const auto n = static_cast<Index>(std::llround(n_real));
  if (n <= 0 || std::abs(n_real - static_cast<double>(n)) > 1e-6 || n * n != lin) {
    throw NonIntegralStructure("block of linear dimension " + std::to_string(lin) +
                               " is not a full matrix algebra");
  }
  if (rank % n != 0) {
    throw NonIntegralStructure("block rank " + std::to_string(rank) +
                               " is not a multiple of N = " + std::to_string(n));
  }
  const Index r = rank / n;
  if (n == 1) return {1, r, ComplexMatrix::Identity(rank, rank)};

  for (int attempt = 0; attempt <= kMaxRetries; ++attempt) {
    const ComplexMatrix h = random_hermitian_combination(block_basis, rng);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(h);
    const std::vector<Index> runs = cluster_sorted(eig.eigenvalues(), tol.cluster_gap);
    if (static_cast<Index>(runs.size()) != n ||
        std::any_of(runs.begin(), runs.end(), [r](Index len) { return len != r; })) {
      continue;
    }
    std::vector<ComplexMatrix> frames;
    for (Index a = 0; a < n; ++a) frames.push_back(eig.eigenvectors().middleCols(a * r, r));

    ComplexMatrix w(rank, rank);
    w.leftCols(r) = frames[0];
    bool ok = true;
    for (Index a = 1; a < n && ok; ++a) {
      const ComplexMatrix m = random_combination(block_basis, rng);
      // e_1 m e_a restricted to the frames is a nonzero multiple of a unitary.
      const ComplexMatrix t = frames[0].adjoint() * m * frames[static_cast<std::size_t>(a)];
      Eigen::JacobiSVD<ComplexMatrix> svd(t, Eigen::ComputeFullU | Eigen::ComputeFullV);
      const RealVector& sv = svd.singularValues();
      if (sv(0) == 0.0 || sv(r - 1) < 0.5 * sv(0)) {
        ok = false;
        break;
      }
      const ComplexMatrix u = svd.matrixU() * svd.matrixV().adjoint();
      w.middleCols(a * r, r) = frames[static_cast<std::size_t>(a)] * u.adjoint();
    }
    if (ok) return {n, r, std::move(w)};
  }
  throw NonIntegralStructure("could not build matrix units for a block with N = " +
                             std::to_string(n) + ", r = " + std::to_string(r));
}

// Deviation of W^+ x W from its first-factor part (ptr_2(.)/r) (x) I_r.
double first_factor_defect(const ComplexMatrix& b, Index n, Index r) {
  const ComplexMatrix reduced = partial_trace_second(b, n, r) / static_cast<double>(r);
  return (b - kron(reduced, ComplexMatrix::Identity(r, r))).norm();
}

}  // namespace

StarAlgebra::StarAlgebra(Index dim, std::vector<ComplexMatrix> basis, double closure_defect)
    : dim_(dim), basis_(std::move(basis)), columns_(stack_columns(basis_, dim)),
      closure_defect_(closure_defect) {}

ComplexMatrix StarAlgebra::project(const ComplexMatrix& x) const {
  if (x.rows() != dim_ || x.cols() != dim_) throw DimensionMismatch("StarAlgebra::project");
  return unvec(columns_ * (columns_.adjoint() * vec(x)), dim_);
}

StarAlgebra extract_algebra(const IsometricSubspace& k, const Tolerances& tol) {
  const Index d = k.dim();
  const auto& basis = k.basis();
  if (basis.empty()) throw NotAnAlgebra("isometric subspace is empty");
  const ComplexMatrix& q = k.vectorized();
  const auto residual = [&](const ComplexMatrix& cols) {
    return (cols - q * (q.adjoint() * cols)).colwise().norm().maxCoeff();
  };

  double defect = 0.0;
  std::vector<ComplexMatrix> adjoints;
  for (const auto& x : basis) adjoints.push_back(x.adjoint());
  defect = std::max(defect, residual(stack_columns(adjoints, d)));

  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  defect = std::max(defect, residual(vec(id)) / std::sqrt(static_cast<double>(d)));

  const auto m = static_cast<Index>(basis.size());
  ComplexMatrix products(d * d, m);
  for (Index a = 0; a < m; ++a) {
    for (Index b = 0; b < m; ++b) {
      products.col(b) = vec(basis[static_cast<std::size_t>(a)] * basis[static_cast<std::size_t>(b)]);
    }
    defect = std::max(defect, residual(products));
  }
  if (defect > tol.closure) {
    throw NotAnAlgebra("span of the isometric subspace is not a unital *-algebra (defect " +
                       std::to_string(defect) + ")");
  }
  return StarAlgebra(d, basis, defect);
}

AlgebraStructure decompose_structure(const StarAlgebra& algebra, std::mt19937_64& rng,
                                     const Tolerances& tol) {
  const Index d = algebra.dim();
  if (algebra.size() == 0) throw NotAnAlgebra("empty algebra");

  const std::vector<ComplexMatrix> center = center_basis(algebra, tol);
  const std::vector<ComplexMatrix> ranges = separate_center(center, rng, tol);

  struct Pending {
    FactorBlock block;
    Index first_occurrence = 0;
  };
  std::vector<Pending> pending;
  double defect = 0.0;
  for (const ComplexMatrix& v : ranges) {
    const Index rank = v.cols();
    std::vector<ComplexMatrix> restricted;
    restricted.reserve(algebra.basis().size());
    for (const auto& x : algebra.basis()) restricted.push_back(v.adjoint() * x * v);
    const std::vector<ComplexMatrix> block_basis =
        span_basis(restricted, rank, tol, "block linear dimension");
    if (block_basis.empty()) throw NonIntegralStructure("central projection with an empty block");

    BlockFrame frame = build_frame(block_basis, rank, rng, tol);
    FactorBlock block;
    block.unit_projector = v * v.adjoint();
    block.multiplicity = frame.multiplicity;
    block.minimal_dim = frame.minimal_dim;
    block.isometry = v * frame.isometry;
    for (const auto& y : restricted) {
      defect = std::max(defect, first_factor_defect(frame.isometry.adjoint() * y * frame.isometry,
                                                    frame.multiplicity, frame.minimal_dim));
    }
    pending.push_back({std::move(block), d});
  }

  // A block first occurs at the smallest basis index where its unit carries
  // the largest diagonal weight among all blocks.
  for (Index i = 0; i < d; ++i) {
    std::size_t best = 0;
    for (std::size_t b = 1; b < pending.size(); ++b) {
      if (pending[b].block.unit_projector(i, i).real() >
          pending[best].block.unit_projector(i, i).real() + 1e-12) {
        best = b;
      }
    }
    pending[best].first_occurrence = std::min(pending[best].first_occurrence, i);
  }
  std::stable_sort(pending.begin(), pending.end(), [](const Pending& a, const Pending& b) {
    if (a.block.minimal_dim != b.block.minimal_dim) return a.block.minimal_dim < b.block.minimal_dim;
    return a.first_occurrence < b.first_occurrence;
  });

  AlgebraStructure s;
  s.dim = d;
  s.center_dim = static_cast<Index>(center.size());
  s.unit = ComplexMatrix::Zero(d, d);
  int k = 0;
  int n = 0;
  Index last_r = -1;
  for (auto& p : pending) {
    if (p.block.minimal_dim != last_r) {
      ++k;
      n = 0;
      last_r = p.block.minimal_dim;
    }
    p.block.k = k;
    p.block.n = ++n;
    s.unit += p.block.unit_projector;
    s.linear_dim += p.block.multiplicity * p.block.multiplicity;
    s.blocks.push_back(std::move(p.block));
  }
  s.complement = ComplexMatrix::Identity(d, d) - s.unit;

  for (const auto& x : algebra.basis()) {
    ComplexMatrix diag = ComplexMatrix::Zero(d, d);
    for (const auto& b : s.blocks) diag += b.unit_projector * x * b.unit_projector;
    defect = std::max(defect, (x - diag).norm());
  }
  s.reproduction_defect = defect;
  return s;
}

std::vector<std::string> GaugeGroupSummary::labels() const {
  std::vector<std::string> out;
  for (Index r : unitary_factors) out.push_back("U(" + std::to_string(r) + ")");
  return out;
}

GaugeGroupSummary gauge_group_summary(const AlgebraStructure& s) {
  GaugeGroupSummary g;
  for (const auto& b : s.blocks) {
    if (b.minimal_dim > 1) g.unitary_factors.push_back(b.minimal_dim);
  }
  return g;
}

}  // namespace lindobs

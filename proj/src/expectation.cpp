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

#include "lindobs/expectation.hpp"

#include <algorithm>
#include <thread>
#include <utility>
#include <vector>

#include "lindobs/errors.hpp"

namespace lindobs {
namespace {

void require_dim(const AlgebraStructure& s, const ComplexMatrix& a, const char* where) {
  if (a.rows() != s.dim || a.cols() != s.dim) {
    throw DimensionMismatch(std::string(where) + ": operator is not " + std::to_string(s.dim) +
                            "x" + std::to_string(s.dim));
  }
}

std::mt19937_64 derived_engine(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

ConditionalExpectation::ConditionalExpectation(AlgebraStructure structure, EvaluationMode mode,
                                               std::size_t mc_samples, std::uint64_t seed)
    : structure_(std::move(structure)), mode_(mode), mc_samples_(mc_samples), seed_(seed) {
  if (mode_ == EvaluationMode::kMonteCarlo && mc_samples_ == 0) {
    throw Error("Monte-Carlo conditional expectation needs at least one sample");
  }
}

ComplexMatrix block_projection(const FactorBlock& block, const ComplexMatrix& a) {
  const ComplexMatrix& w = block.isometry;
  if (a.rows() != w.rows() || a.cols() != w.rows()) {
    throw DimensionMismatch("block_projection: operator does not match the block");
  }
  const Index n = block.multiplicity;
  const Index r = block.minimal_dim;
  const ComplexMatrix reduced =
      partial_trace_second(w.adjoint() * a * w, n, r) / static_cast<double>(r);
  return w * kron(reduced, ComplexMatrix::Identity(r, r)) * w.adjoint();
}

ComplexMatrix full_projection(const ConditionalExpectation& ce, const ComplexMatrix& a) {
  const AlgebraStructure& s = ce.structure();
  require_dim(s, a, "full_projection");
  ComplexMatrix out = ComplexMatrix::Zero(s.dim, s.dim);
  for (std::size_t b = 0; b < s.blocks.size(); ++b) {
    if (ce.mode() == EvaluationMode::kClosedForm) {
      out += block_projection(s.blocks[b], a);
    } else {
      const std::uint64_t block_seed = derived_engine(ce.seed(), b)();
      out += haar_mc_projection(s.blocks[b], a, ce.mc_samples(), block_seed);
    }
  }
  return out;
}

ComplexMatrix wan_projection(const AlgebraStructure& s, const ComplexMatrix& a) {
  require_dim(s, a, "wan_projection");
  ComplexMatrix out = ComplexMatrix::Zero(s.dim, s.dim);
  for (const auto& b : s.blocks) {
    if (b.minimal_dim != 1) {
      throw NotWanCase("wan_projection: block (" + std::to_string(b.k) + "," +
                       std::to_string(b.n) + ") has r = " + std::to_string(b.minimal_dim));
    }
    out += b.unit_projector * a * b.unit_projector;
  }
  return out;
}

ComplexMatrix coarse_grain_projection(const AlgebraStructure& s, const ComplexMatrix& a) {
  require_dim(s, a, "coarse_grain_projection");
  ComplexMatrix out = ComplexMatrix::Zero(s.dim, s.dim);
  for (const auto& b : s.blocks) {
    if (b.multiplicity != 1) continue;
    out += (b.unit_projector * a).trace() / static_cast<double>(b.rank()) * b.unit_projector;
  }
  return out;
}

ComplexMatrix haar_unitary(Index r, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0 / std::sqrt(2.0));
  ComplexMatrix z(r, r);
  for (Index j = 0; j < r; ++j) {
    for (Index i = 0; i < r; ++i) z(i, j) = Complex(gauss(rng), gauss(rng));
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& packed = qr.matrixQR();
  for (Index j = 0; j < r; ++j) {
    const Complex rjj = packed(j, j);
    const double mag = std::abs(rjj);
    if (mag > 0.0) q.col(j) *= rjj / mag;
  }
  return q;
}

ComplexMatrix haar_mc_projection(const FactorBlock& block, const ComplexMatrix& a,
                                 std::size_t samples, std::uint64_t seed, unsigned shards) {
  const ComplexMatrix& w = block.isometry;
  if (a.rows() != w.rows() || a.cols() != w.rows()) {
    throw DimensionMismatch("haar_mc_projection: operator does not match the block");
  }
  if (samples == 0) throw Error("haar_mc_projection: samples must be >= 1");
  const Index n = block.multiplicity;
  const Index r = block.minimal_dim;
  const ComplexMatrix framed = w.adjoint() * a * w;
  const ComplexMatrix id_n = ComplexMatrix::Identity(n, n);

  std::vector<ComplexMatrix> draws(samples);
  const auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      auto rng = derived_engine(seed, i);
      const ComplexMatrix u = kron(id_n, haar_unitary(r, rng));
      draws[i] = u * framed * u.adjoint();
    }
  };
  shards = std::max(1u, std::min<unsigned>(shards, static_cast<unsigned>(samples)));
  if (shards == 1) {
    work(0, samples);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (samples + shards - 1) / shards;
    for (unsigned s = 0; s < shards; ++s) {
      const std::size_t begin = std::min(samples, s * chunk);
      const std::size_t end = std::min(samples, begin + chunk);
      pool.emplace_back(work, begin, end);
    }
    for (auto& t : pool) t.join();
  }

  ComplexMatrix mean = ComplexMatrix::Zero(framed.rows(), framed.cols());
  for (const auto& x : draws) mean += x;
  mean /= static_cast<double>(samples);
  return w * mean * w.adjoint();
}

ConservativenessCheck check_conservative(const AlgebraStructure& s) {
  const double defect = operator_norm(s.unit - ComplexMatrix::Identity(s.dim, s.dim));
  return {defect <= 1e-8, defect};
}

}  // namespace lindobs

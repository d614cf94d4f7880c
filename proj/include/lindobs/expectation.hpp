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
#include <random>

#include "lindobs/algebra.hpp"
#include "lindobs/isometric.hpp"
#include "lindobs/operators.hpp"

namespace lindobs {

enum class EvaluationMode { kClosedForm, kMonteCarlo };

/// The norm-one projection of B(H) onto the algebra of effective
/// observables, evaluated blockwise either in closed form or by Haar
/// Monte-Carlo averaging.
class ConditionalExpectation {
 public:
  explicit ConditionalExpectation(AlgebraStructure structure,
                                  EvaluationMode mode = EvaluationMode::kClosedForm,
                                  std::size_t mc_samples = 10000, std::uint64_t seed = 0);

  const AlgebraStructure& structure() const noexcept { return structure_; }
  EvaluationMode mode() const noexcept { return mode_; }
  std::size_t mc_samples() const noexcept { return mc_samples_; }
  std::uint64_t seed() const noexcept { return seed_; }

 private:
  AlgebraStructure structure_;
  EvaluationMode mode_;
  std::size_t mc_samples_;
  std::uint64_t seed_;
};

/// Haar twirl of E A E over the unitaries of the block's commutant,
/// closed form: W [ptr_2(W^+ A W) / r (x) I_r] W^+.
ComplexMatrix block_projection(const FactorBlock& block, const ComplexMatrix& a);

/// sum over blocks; in Monte-Carlo mode block b uses seed derived from
/// (ce.seed(), b).
ComplexMatrix full_projection(const ConditionalExpectation& ce, const ComplexMatrix& a);

/// sum_n E_n A E_n; requires r = 1 for every block.
ComplexMatrix wan_projection(const AlgebraStructure& s, const ComplexMatrix& a);

/// sum over blocks with N = 1 of tr(E A) E / rank(E).
ComplexMatrix coarse_grain_projection(const AlgebraStructure& s, const ComplexMatrix& a);

/// Haar-distributed unitary on C^r (QR of a complex Ginibre matrix with
/// the phases of R's diagonal divided out).
ComplexMatrix haar_unitary(Index r, std::mt19937_64& rng);

/// Empirical mean of (I_N (x) U) W^+ A W (I_N (x) U)^+ over Haar samples,
/// mapped back through W. Sample i draws from an engine seeded by
/// (seed, i), so the estimate does not depend on the shard count.
ComplexMatrix haar_mc_projection(const FactorBlock& block, const ComplexMatrix& a,
                                 std::size_t samples, std::uint64_t seed, unsigned shards = 1);

struct ConservativenessCheck {
  bool conservative = false;
  double defect = 0.0;  ///< ||sum E_kn - I||_inf
};

ConservativenessCheck check_conservative(const AlgebraStructure& s);

}  // namespace lindobs

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

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lindobs/errors.hpp"
#include "lindobs/lindblad.hpp"
#include "lindobs/semigroup.hpp"
#include "support.hpp"

using namespace lindobs;
using namespace lindobs::testing;
using Catch::Matchers::WithinAbs;

namespace {

ComplexMatrix projector_p() {
  ComplexMatrix p = ComplexMatrix::Zero(2, 2);
  p(0, 0) = 1.0;
  return p;
}

}  // namespace

TEST_CASE("model validation", "[lindblad][errors]") {
  ComplexMatrix h(2, 2);
  h << 0, 1, 0, 0;
  CHECK_THROWS_AS(LindbladModel(h, {}), NonHermitianInput);
  CHECK_THROWS_AS(LindbladModel(ComplexMatrix::Zero(2, 2), {ComplexMatrix::Zero(3, 3)}),
                  DimensionMismatch);
  CHECK_THROWS_AS(LindbladModel(ComplexMatrix::Zero(2, 3), {}), DimensionMismatch);
  const LindbladModel empty(ComplexMatrix::Identity(3, 3), {});
  CHECK(empty.jumps().empty());
  CHECK(empty.fingerprint() != LindbladModel(ComplexMatrix::Identity(3, 3) * 2.0, {}).fingerprint());
}

TEST_CASE("generator on the decay example", "[lindblad]") {
  const LindbladModel model = amplitude_decay_example();
  const ComplexMatrix p = projector_p();
  const ComplexMatrix p_perp = ComplexMatrix::Identity(2, 2) - p;
  CHECK(max_abs(apply_generator(model, p) - (p_perp - p)) <= 1e-15);

  const Superoperator l = build_generator_superop(model);
  CHECK(l.matrix.rows() == 4);
  CHECK(max_abs(l.apply(p) - (p_perp - p)) <= 1e-15);
  CHECK(std::string(Superoperator::kConvention) == "column-stacking");
}

TEST_CASE("generator trivial cases", "[lindblad]") {
  std::mt19937_64 rng(41);
  // Commuting X with H and no jumps.
  const ComplexMatrix h = random_hermitian(3, rng);
  const LindbladModel hamiltonian_only(h, {});
  CHECK(max_abs(apply_generator(hamiltonian_only, h * h)) <= 1e-12);

  CHECK(max_abs(apply_generator(dephasing(), ComplexMatrix::Identity(2, 2) * 0.5)) == 0.0);

  const LindbladModel null_model(ComplexMatrix::Zero(3, 3), {});
  CHECK(max_abs(build_generator_superop(null_model).matrix) == 0.0);

  CHECK_THROWS_AS(apply_generator(dephasing(), ComplexMatrix::Zero(3, 3)), DimensionMismatch);
}

TEST_CASE("superoperator agrees with direct application", "[lindblad][property]") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    const Index d = 2 + trial % 4;
    std::vector<ComplexMatrix> jumps;
    for (int j = 0; j < 1 + trial % 3; ++j) jumps.push_back(random_complex(d, d, rng));
    const LindbladModel model(random_hermitian(d, rng), jumps);
    const Superoperator l = build_generator_superop(model);
    for (int k = 0; k < 20; ++k) {
      const ComplexMatrix x = random_complex(d, d, rng);
      const ComplexMatrix direct = apply_generator(model, x);
      CHECK(max_abs(l.apply(x) - direct) <= 1e-12 * std::max(1.0, max_abs(direct)));
    }
  }
}

TEST_CASE("generator preserves trace and Hermiticity", "[lindblad][property]") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 50; ++trial) {
    const Index d = 2 + trial % 5;
    std::vector<ComplexMatrix> jumps;
    for (int j = 0; j < 1 + trial % 3; ++j) jumps.push_back(random_complex(d, d, rng));
    const LindbladModel model(random_hermitian(d, rng), jumps);
    const Superoperator l = build_generator_superop(model);
    const ComplexMatrix x = random_complex(d, d, rng);
    const ComplexMatrix lx = l.apply(x);
    CHECK(std::abs(lx.trace()) <= 1e-11 * std::max(1.0, max_abs(lx)));
    CHECK(max_abs(lx.adjoint() - l.apply(x.adjoint())) <= 1e-11 * std::max(1.0, max_abs(lx)));
  }
}

TEST_CASE("semigroup is completely positive", "[lindblad][property]") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    const Index d = 2 + trial % 3;
    std::vector<ComplexMatrix> jumps{random_complex(d, d, rng), random_complex(d, d, rng)};
    const LindbladModel model(random_hermitian(d, rng), jumps);
    const Superoperator l = build_generator_superop(model);
    for (double t : {0.1, 1.0}) {
      const ComplexMatrix choi = choi_matrix(matrix_exponential(l.matrix, t));
      CHECK(min_eigenvalue(choi) >= -1e-8);
    }
  }
}

TEST_CASE("environment-induced gate", "[lindblad]") {
  const GateResult decay = check_environment_induced(amplitude_decay_example());
  CHECK_FALSE(decay.environment_induced);
  CHECK_THAT(decay.deficit, WithinAbs(1.0, 1e-14));

  ComplexMatrix damping = ComplexMatrix::Zero(2, 2);
  damping(0, 1) = 1.0;
  const GateResult amp = check_environment_induced(LindbladModel(ComplexMatrix::Zero(2, 2), {damping}));
  CHECK_FALSE(amp.environment_induced);
  CHECK_THAT(amp.deficit, WithinAbs(1.0, 1e-14));

  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 10; ++trial) {
    const Index d = 2 + trial % 4;
    const LindbladModel herm(random_hermitian(d, rng), {random_hermitian(d, rng), random_hermitian(d, rng)});
    const LindbladModel unit(random_hermitian(d, rng), {random_unitary(d, rng)});
    CHECK(check_environment_induced(herm).environment_induced);
    CHECK(check_environment_induced(unit).environment_induced);
    CHECK(check_environment_induced(herm).deficit <= 1e-12);
  }
}

TEST_CASE("gated semigroups contract the operator norm", "[lindblad][property]") {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> time(0.0, 5.0);
  for (int trial = 0; trial < 20; ++trial) {
    const LindbladModel model = random_gated_model(2 + trial % 4, rng);
    REQUIRE(check_environment_induced(model).environment_induced);
    const Superoperator l = build_generator_superop(model);
    for (int k = 0; k < 3; ++k) {
      const ComplexMatrix a = random_complex(model.dim(), model.dim(), rng);
      const double t = time(rng);
      const ComplexMatrix ta = unvec(matrix_exponential(l.matrix, t) * vec(a), model.dim());
      CHECK(operator_norm(ta) <= operator_norm(a) * (1 + 1e-8));
    }
  }
}

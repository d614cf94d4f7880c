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

#include "lindobs/lindblad.hpp"

#include <algorithm>
#include <cstring>
#include <utility>

#include "lindobs/errors.hpp"

namespace lindobs {
namespace {

class Fnv1a {
 public:
  void add(const void* data, std::size_t n) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
      hash_ ^= bytes[i];
      hash_ *= 0x100000001b3ULL;
    }
  }
  void add(const ComplexMatrix& m) {
    for (Index j = 0; j < m.cols(); ++j) {
      for (Index i = 0; i < m.rows(); ++i) {
        const double parts[2] = {m(i, j).real(), m(i, j).imag()};
        add(parts, sizeof(parts));
      }
    }
  }
  std::uint64_t value() const { return hash_; }

 private:
  std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

}  // namespace

LindbladModel::LindbladModel(ComplexMatrix hamiltonian, std::vector<ComplexMatrix> jumps,
                             std::string label, const Tolerances& tol)
    : hamiltonian_(std::move(hamiltonian)), jumps_(std::move(jumps)), label_(std::move(label)) {
  require_square(hamiltonian_, "LindbladModel hamiltonian");
  if (!hamiltonian_.allFinite()) throw NonHermitianInput("hamiltonian has non-finite entries");
  if (!is_hermitian(hamiltonian_, tol.herm)) {
    throw NonHermitianInput("hamiltonian is not Hermitian (defect " +
                            std::to_string(hermiticity_defect(hamiltonian_)) + ")");
  }
  const Index d = hamiltonian_.rows();
  for (std::size_t j = 0; j < jumps_.size(); ++j) {
    if (jumps_[j].rows() != d || jumps_[j].cols() != d) {
      throw DimensionMismatch("jump operator " + std::to_string(j) + " is not " +
                              std::to_string(d) + "x" + std::to_string(d));
    }
    if (!jumps_[j].allFinite()) {
      throw DimensionMismatch("jump operator " + std::to_string(j) + " has non-finite entries");
    }
  }
  Fnv1a h;
  const std::int64_t dd = d;
  h.add(&dd, sizeof(dd));
  h.add(hamiltonian_);
  for (const auto& v : jumps_) h.add(v);
  fingerprint_ = h.value();
}

ComplexMatrix LindbladModel::dissipation_sum() const {
  ComplexMatrix g = ComplexMatrix::Zero(dim(), dim());
  for (const auto& v : jumps_) g += v.adjoint() * v;
  return g;
}

ComplexMatrix LindbladModel::reverse_dissipation_sum() const {
  ComplexMatrix g = ComplexMatrix::Zero(dim(), dim());
  for (const auto& v : jumps_) g += v * v.adjoint();
  return g;
}

ComplexMatrix apply_generator(const LindbladModel& model, const ComplexMatrix& x) {
  const Index d = model.dim();
  if (x.rows() != d || x.cols() != d) {
    throw DimensionMismatch("apply_generator: operator is not " + std::to_string(d) + "x" +
                            std::to_string(d));
  }
  const Complex i_unit(0.0, 1.0);
  const ComplexMatrix& h = model.hamiltonian();
  ComplexMatrix out = -i_unit * (h * x - x * h);
  const ComplexMatrix g = model.dissipation_sum();
  for (const auto& v : model.jumps()) out += v * x * v.adjoint();
  out -= 0.5 * (g * x + x * g);
  return out;
}

Superoperator build_generator_superop(const LindbladModel& model) {
  const Index d = model.dim();
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  const Complex i_unit(0.0, 1.0);
  const ComplexMatrix& h = model.hamiltonian();
  const ComplexMatrix g = model.dissipation_sum();

  ComplexMatrix l = -i_unit * (kron(id, h) - kron(h.transpose(), id));
  for (const auto& v : model.jumps()) l += kron(v.conjugate(), v);
  l -= 0.5 * (kron(id, g) + kron(g.transpose(), id));
  return {d, std::move(l), model.fingerprint()};
}

GateResult check_environment_induced(const LindbladModel& model, const Tolerances& tol) {
  const ComplexMatrix gap = model.dissipation_sum() - model.reverse_dissipation_sum();
  const double lo = min_eigenvalue(gap);
  const double deficit = std::max(0.0, -lo);
  return {deficit <= tol.psd, deficit};
}

}  // namespace lindobs

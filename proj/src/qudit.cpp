// Copyright 2026 The privlab Authors
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


#include "privlab/qudit.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "privlab/random.hpp"

namespace privlab {

namespace {

constexpr double kBasisTol = 1e-10;

void require_dim(int d) {
  if (d < 2) throw std::invalid_argument("qudit dimension must be at least 2");
}

}  // namespace

Complex root_of_unity(int d, long long power) {
  long long p = ((power % d) + d) % d;
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(p) / d);
}

Matrix pauli_z(int d) {
  require_dim(d);
  Matrix z = Matrix::Zero(d, d);
  for (int k = 0; k < d; ++k) z(k, k) = root_of_unity(d, k);
  return z;
}

Matrix pauli_x(int d) {
  require_dim(d);
  Matrix x = Matrix::Zero(d, d);
  for (int k = 0; k < d; ++k) x((k + 1) % d, k) = 1.0;
  return x;
}

PauliPair generalized_paulis(int d, const std::string& label) {
  HilbertSpace space({d}, {label});
  return {LinearOperator(space, pauli_z(d), LinearOperator::Kind::Unitary),
          LinearOperator(space, pauli_x(d), LinearOperator::Kind::Unitary), root_of_unity(d)};
}

// ------------------------------------------------------------- ConjugateBasis

ConjugateBasis::ConjugateBasis(Eigen::MatrixXd theta) : theta_(std::move(theta)) {
  const Eigen::Index d = theta_.rows();
  if (d < 2 || theta_.cols() != d) throw std::invalid_argument("ConjugateBasis: theta must be square with d >= 2");
  vectors_.resize(d, d);
  const double s = 1.0 / std::sqrt(static_cast<double>(d));
  for (Eigen::Index x = 0; x < d; ++x) {
    for (Eigen::Index k = 0; k < d; ++k) vectors_(k, x) = std::polar(s, theta_(x, k));
  }
  if (!is_unitary(vectors_, kBasisTol)) throw std::invalid_argument("ConjugateBasis: phases do not give an orthonormal basis");
}

ConjugateBasis ConjugateBasis::fourier(int d) {
  require_dim(d);
  Eigen::MatrixXd theta(d, d);
  for (int x = 0; x < d; ++x) {
    for (int k = 0; k < d; ++k) theta(x, k) = 2.0 * std::numbers::pi * ((x * k) % d) / d;
  }
  return ConjugateBasis(theta);
}

Matrix ConjugateBasis::projector(int x) const {
  if (x < 0 || x >= dim()) throw std::invalid_argument("ConjugateBasis::projector: index out of range");
  return vectors_.col(x) * vectors_.col(x).adjoint();
}

ConjugateBasis ConjugateBasis::conj_in_standard_basis() const { return ConjugateBasis(-theta_); }

Povm ConjugateBasis::as_povm(const std::string& label) const {
  return projective_povm(HilbertSpace({dim()}, {label}), vectors_);
}

ConjugateBasis fourier_conjugate_basis(int d) { return ConjugateBasis::fourier(d); }

// ----------------------------------------------------------- TwistingOperator

TwistingOperator::TwistingOperator(int d, int shield_dim, Blocks blocks, std::string a, std::string b, std::string s)
    : d_(d), shield_dim_(shield_dim), blocks_(std::move(blocks)), a_(std::move(a)), b_(std::move(b)), s_(std::move(s)) {
  require_dim(d_);
  if (shield_dim_ < 1) throw std::invalid_argument("TwistingOperator: shield dimension must be positive");
  for (const auto& [jk, v] : blocks_) {
    if (jk.first < 0 || jk.first >= d_ || jk.second < 0 || jk.second >= d_) {
      throw std::invalid_argument("TwistingOperator: block index out of range");
    }
    if (v.rows() != shield_dim_ || v.cols() != shield_dim_) throw std::invalid_argument("TwistingOperator: block shape mismatch");
    if (!is_unitary(v, kBasisTol)) throw std::invalid_argument("TwistingOperator: block is not unitary");
  }
}

TwistingOperator TwistingOperator::diagonal(int d, const std::vector<Matrix>& diag_blocks) {
  if (static_cast<int>(diag_blocks.size()) != d) throw std::invalid_argument("TwistingOperator::diagonal: need d blocks");
  const auto s = static_cast<int>(diag_blocks[0].rows());
  Blocks blocks;
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) blocks[{j, k}] = j == k ? diag_blocks[k] : Matrix::Identity(s, s);
  }
  return TwistingOperator(d, s, std::move(blocks));
}

TwistingOperator TwistingOperator::random(int d, int shield_dim, Rng& rng) {
  Blocks blocks;
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) blocks[{j, k}] = random_unitary(shield_dim, rng);
  }
  return TwistingOperator(d, shield_dim, std::move(blocks));
}

const Matrix& TwistingOperator::block(int j, int k) const {
  auto it = blocks_.find({j, k});
  if (it == blocks_.end()) {
    throw std::invalid_argument("TwistingOperator: missing block (" + std::to_string(j) + "," + std::to_string(k) + ")");
  }
  return it->second;
}

HilbertSpace TwistingOperator::space() const { return HilbertSpace({d_, d_, shield_dim_}, {a_, b_, s_}); }

LinearOperator twisting_unitary(const TwistingOperator& t) {
  const int d = t.key_dim(), s = t.shield_dim();
  Matrix u = Matrix::Zero(d * d * s, d * d * s);
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) u.block((j * d + k) * s, (j * d + k) * s, s, s) = t.block(j, k);
  }
  return LinearOperator(t.space(), u, LinearOperator::Kind::Unitary);
}

StateVector maximally_entangled(int d, const std::string& a, const std::string& b) {
  require_dim(d);
  Vector v = Vector::Zero(d * d);
  for (int k = 0; k < d; ++k) v(k * d + k) = 1.0 / std::sqrt(static_cast<double>(d));
  return StateVector::normalized(HilbertSpace({d, d}, {a, b}), v);
}

DensityOperator build_private_state(int d, const TwistingOperator& t, const DensityOperator& xi) {
  if (t.key_dim() != d) throw std::invalid_argument("build_private_state: key dimension mismatch");
  if (xi.space().total_dim() != t.shield_dim()) throw std::invalid_argument("build_private_state: shield dimension mismatch");
  Matrix phi = maximally_entangled(d).density().matrix();
  Matrix u = twisting_unitary(t).matrix();
  Matrix g = u * kron(phi, xi.matrix()) * u.adjoint();
  return DensityOperator(t.space(), g, DensityOperator::Trusted{});
}

}  // namespace privlab

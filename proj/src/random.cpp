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


#include "privlab/random.hpp"

#include <cmath>
#include <stdexcept>

namespace privlab {

Matrix ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  Matrix g(rows, cols);
  const double s = std::sqrt(0.5);
  // column-major fill order is part of the reproducibility contract
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      double re = rng.normal();
      double im = rng.normal();
      g(i, j) = Complex(s * re, s * im);
    }
  }
  return g;
}

Matrix random_unitary(Eigen::Index dim, Rng& rng) {
  Matrix g = ginibre(dim, dim, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < dim; ++i) {
    Complex d = r(i, i);
    double a = std::abs(d);
    if (a > 0.0) q.col(i) *= d / a;
  }
  return q;
}

StateVector random_pure_state(const HilbertSpace& space, Rng& rng) {
  Matrix g = ginibre(space.total_dim(), 1, rng);
  return StateVector::normalized(space, g.col(0));
}

DensityOperator random_density(const HilbertSpace& space, Rng& rng, Eigen::Index rank) {
  const Eigen::Index n = space.total_dim();
  if (rank <= 0 || rank > n) rank = n;
  Matrix g = ginibre(n, rank, rng);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityOperator(space, rho, DensityOperator::Trusted{});
}

std::vector<double> random_distribution(std::size_t size, Rng& rng) {
  if (size == 0) throw std::invalid_argument("random_distribution: empty");
  std::vector<double> p(size);
  double total = 0.0;
  for (auto& x : p) {
    double u = 0.0;
    do {
      u = rng.uniform();
    } while (u <= 0.0);
    x = -std::log(u);
    total += x;
  }
  for (auto& x : p) x /= total;
  return p;
}

std::vector<Matrix> random_povm_elements(Eigen::Index dim, std::size_t outcomes, Rng& rng) {
  if (outcomes == 0) throw std::invalid_argument("random_povm_elements: need at least one outcome");
  std::vector<Matrix> w;
  Matrix s = Matrix::Zero(dim, dim);
  for (std::size_t i = 0; i < outcomes; ++i) {
    Matrix g = ginibre(dim, dim, rng);
    w.push_back(g * g.adjoint());
    s += w.back();
  }
  Matrix isq = matrix_function(s, SpectralFunction::InvSqrtOnSupport);
  for (auto& e : w) {
    e = isq * e * isq;
    e = 0.5 * (e + e.adjoint()).eval();
  }
  return w;
}

}  // namespace privlab

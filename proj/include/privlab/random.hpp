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


#ifndef PRIVLAB_RANDOM_HPP
#define PRIVLAB_RANDOM_HPP

#include <vector>

#include "privlab/rng.hpp"
#include "privlab/tensor.hpp"

namespace privlab {

// Complex matrix with i.i.d. standard complex normal entries.
Matrix ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng);
// Haar-distributed unitary (QR of a Ginibre matrix with phase fix).
Matrix random_unitary(Eigen::Index dim, Rng& rng);
StateVector random_pure_state(const HilbertSpace& space, Rng& rng);
// Induced measure of the given rank (rank <= 0 means full rank).
DensityOperator random_density(const HilbertSpace& space, Rng& rng, Eigen::Index rank = 0);
// Point drawn uniformly from the probability simplex.
std::vector<double> random_distribution(std::size_t size, Rng& rng);
// Elements of a random POVM: G_i = S^{-1/2} W_i S^{-1/2} for Wishart W_i.
std::vector<Matrix> random_povm_elements(Eigen::Index dim, std::size_t outcomes, Rng& rng);

}  // namespace privlab

#endif  // PRIVLAB_RANDOM_HPP

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


#ifndef PRIVLAB_QUDIT_HPP
#define PRIVLAB_QUDIT_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "privlab/povm.hpp"
#include "privlab/rng.hpp"
#include "privlab/tensor.hpp"

namespace privlab {

struct PauliPair {
  LinearOperator z;
  LinearOperator x;
  Complex omega;
};

// Z = sum_k w^k |k><k|, X = sum_k |k+1><k|, w = exp(2 pi i / d).
PauliPair generalized_paulis(int d, const std::string& label = "A");
Matrix pauli_z(int d);
Matrix pauli_x(int d);
Complex root_of_unity(int d, long long power = 1);

// Basis |x~> = d^{-1/2} sum_k exp(i theta_xk) |k>, stored by its phases.
class ConjugateBasis {
 public:
  explicit ConjugateBasis(Eigen::MatrixXd theta);
  static ConjugateBasis fourier(int d);

  int dim() const { return static_cast<int>(theta_.rows()); }
  const Eigen::MatrixXd& theta() const { return theta_; }
  // Column x is |x~>.
  const Matrix& vectors() const { return vectors_; }
  Matrix projector(int x) const;
  // Complex conjugate of every vector in the standard basis (theta -> -theta).
  ConjugateBasis conj_in_standard_basis() const;
  Povm as_povm(const std::string& label) const;

 private:
  Eigen::MatrixXd theta_;
  Matrix vectors_;
};

ConjugateBasis fourier_conjugate_basis(int d);

// Controlled unitary U = sum_jk P_j (x) P_k (x) V_jk on key registers a, b
// and shield s (in that order).
class TwistingOperator {
 public:
  using Blocks = std::map<std::pair<int, int>, Matrix>;

  TwistingOperator(int d, int shield_dim, Blocks blocks, std::string a = "A", std::string b = "B",
                   std::string s = "S");
  // V_kk = diag_blocks[k], V_jk = I for j != k.
  static TwistingOperator diagonal(int d, const std::vector<Matrix>& diag_blocks);
  // Haar-random V_jk for every (j, k).
  static TwistingOperator random(int d, int shield_dim, Rng& rng);

  int key_dim() const { return d_; }
  int shield_dim() const { return shield_dim_; }
  const Matrix& block(int j, int k) const;
  const Blocks& blocks() const { return blocks_; }
  HilbertSpace space() const;
  const std::string& a_label() const { return a_; }
  const std::string& b_label() const { return b_; }
  const std::string& s_label() const { return s_; }

 private:
  int d_;
  int shield_dim_;
  Blocks blocks_;
  std::string a_, b_, s_;
};

LinearOperator twisting_unitary(const TwistingOperator& t);

// |Phi_d> on (a, b).
StateVector maximally_entangled(int d, const std::string& a = "A", const std::string& b = "B");

// U (Phi_d (x) xi) U^dagger on A B S.
DensityOperator build_private_state(int d, const TwistingOperator& t, const DensityOperator& xi);

}  // namespace privlab

#endif  // PRIVLAB_QUDIT_HPP

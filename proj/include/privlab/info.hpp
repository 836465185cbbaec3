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


#ifndef PRIVLAB_INFO_HPP
#define PRIVLAB_INFO_HPP

#include <optional>
#include <string>
#include <vector>

#include "privlab/povm.hpp"
#include "privlab/qudit.hpp"
#include "privlab/tensor.hpp"

namespace privlab {

// All entropies are in bits.
double shannon_entropy(const std::vector<double>& p);
double von_neumann_entropy(const DensityOperator& rho);
// Entropy of a Hermitian PSD matrix with unit trace (eigenvalues clamped at 1e-12).
double von_neumann_entropy(const Matrix& rho);

// Ensemble {p_k, phi_k}; all states share one space.
class CqEnsemble {
 public:
  CqEnsemble(std::vector<double> probs, std::vector<DensityOperator> states);

  const std::vector<double>& probs() const { return probs_; }
  const std::vector<DensityOperator>& states() const { return states_; }
  std::size_t size() const { return probs_.size(); }
  const HilbertSpace& space() const { return states_.front().space(); }
  // sum_k p_k phi_k
  Matrix average() const;

 private:
  std::vector<double> probs_;
  std::vector<DensityOperator> states_;
};

double holevo_information(const CqEnsemble& e);

// S(B) - S(AB) where B is `b_labels` and AB is the whole space of rho.
double coherent_information(const DensityOperator& rho, const Labels& b_labels);
double quantum_mutual_information(const DensityOperator& rho, const Labels& a, const Labels& b);

// Classical helpers on a joint table p(x, y) (rows x, columns y).
double conditional_entropy(const Eigen::MatrixXd& joint);  // H(X|Y)
double mutual_information(const Eigen::MatrixXd& joint);   // I(X:Y)

// Outcome X of `povm` on rho against the quantum system `cond`:
// S(X|E) = S(sum_x p_x |x><x| (x) rho_E|x) - S(E) and I(X:E) = S(E) - sum_x p_x S(rho_E|x).
double cq_conditional_entropy(const DensityOperator& rho, const Povm& povm, const Labels& cond);
double cq_mutual_information(const DensityOperator& rho, const Povm& povm, const Labels& cond);

enum class AuditMode { MaassenUffink, Cit, QuantumCit };
const char* audit_mode_name(AuditMode mode);
AuditMode parse_audit_mode(const std::string& name);

struct AuditWitness {
  std::optional<Povm> lambda_c;  // cit: guesses the conjugate outcome
  std::optional<Povm> gamma_d;   // cit: guesses the standard outcome
  Labels b_labels;               // quantum_cit: conditioning for the conjugate term
  Labels e_labels;               // quantum_cit: conditioning for the standard term
};

struct AuditRecord {
  AuditMode mode = AuditMode::MaassenUffink;
  std::vector<double> lhs_terms;  // standard-basis term first
  double lhs = 0.0;
  double rhs = 0.0;  // log2 d
  double slack = 0.0;
  // cit only: sum over witness outcomes (j, k) of p_jk [H(Z)_jk + H(X~)_jk],
  // the per-outcome relation averaged over the joint witness outcomes.
  std::optional<double> averaged_terms;
};

AuditRecord uncertainty_audit(const DensityOperator& rho, const std::string& a_label, const ConjugateBasis& basis,
                              AuditMode mode, const AuditWitness& witness = {});

}  // namespace privlab

#endif  // PRIVLAB_INFO_HPP

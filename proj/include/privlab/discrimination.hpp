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


#ifndef PRIVLAB_DISCRIMINATION_HPP
#define PRIVLAB_DISCRIMINATION_HPP

#include <optional>
#include <vector>

#include "privlab/info.hpp"
#include "privlab/povm.hpp"

namespace privlab {

struct HelstromResult {
  Povm povm;  // outcome 0 = positive part (zero eigenvalues included)
  double error = 0.0;
};

HelstromResult helstrom_pair(const DensityOperator& rho0, const DensityOperator& rho1, double p0, double p1);
// Minimum error for subnormalized hypotheses w0, w1 (tr w0 + tr w1 = total
// mass): (tr w0 + tr w1 - ||w0 - w1||_1) / 2.
double helstrom_error_weighted(const Matrix& w0, const Matrix& w1);

// Square-root measurement S^{-1/2} p_k phi_k S^{-1/2}, plus a final "fail"
// outcome holding the projector onto ker S.
Povm pgm(const CqEnsemble& e);
// sum_k p_k (1 - Tr[M_k phi_k]); outcomes past e.size() (fail) count as errors.
double pgm_error(const CqEnsemble& e, const Povm& m);

struct HswConfig {
  double delta = 0.0;
  bool use_typicality = false;
};

// Letter ensemble behind an i.i.d. string ensemble (string index read in base
// letters.size(), first letter most significant).
struct IidLetters {
  std::vector<double> probs;
  std::vector<DensityOperator> states;
  int n = 1;
};

using Partition = std::vector<std::vector<std::size_t>>;

struct ClassDecoder {
  Partition classes;
  // povms[c] has one outcome per member of classes[c], in order, then "fail".
  std::vector<Povm> povms;
  std::vector<double> class_errors;  // sum over members of p_k Pr[wrong | k]
  double average_error = 0.0;
  std::vector<bool> typical;  // per string; all true without typicality
};

ClassDecoder hsw_class_decoder(const CqEnsemble& e, const Partition& classes, const HswConfig& cfg,
                               const std::optional<IidLetters>& iid = std::nullopt);

// Groups indices by label value: class c holds every i with labels[i] == c.
Partition partition_by(const std::vector<Eigen::Index>& labels, std::size_t num_classes);

// Typical projectors used by the typicality path (exposed for checks).
struct TypicalProjectors {
  Matrix q;                 // average-state typical projector
  std::vector<Matrix> q_k;  // conditionally typical projector per string
  std::vector<bool> typical;
  double average_entropy = 0.0;  // S(sum p_i phi_i)
  double conditional_entropy = 0.0;  // sum p_i S(phi_i)
};
TypicalProjectors typical_projectors(const IidLetters& iid, double delta);

}  // namespace privlab

#endif  // PRIVLAB_DISCRIMINATION_HPP

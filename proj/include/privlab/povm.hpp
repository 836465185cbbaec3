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


#ifndef PRIVLAB_POVM_HPP
#define PRIVLAB_POVM_HPP

#include <optional>
#include <string>
#include <vector>

#include "privlab/tensor.hpp"

namespace privlab {

inline constexpr const char* kFailOutcome = "fail";

// Finite POVM on the subsystems of `space`. Elements are checked for
// positivity (>= -1e-10) and completeness (1e-9) on construction.
class Povm {
 public:
  Povm(HilbertSpace space, const std::vector<Matrix>& elements, std::vector<std::string> outcome_labels = {});

  const HilbertSpace& space() const { return space_; }
  const Labels& acts_on() const { return space_.labels(); }
  const std::vector<LinearOperator>& elements() const { return elements_; }
  const Matrix& element(std::size_t i) const { return elements_.at(i).matrix(); }
  const std::vector<std::string>& outcome_labels() const { return outcome_labels_; }
  std::size_t size() const { return elements_.size(); }
  // Index of the outcome labelled "fail", if any.
  std::optional<std::size_t> fail_index() const;

  Povm relabeled(const std::string& from, const std::string& to) const;
  // Same elements, reinterpreted on a space with identical total dimension.
  Povm on_space(HilbertSpace space) const;
  // Same measurement with its subsystems permuted into `order`.
  Povm reordered(const Labels& order) const;

 private:
  HilbertSpace space_;
  std::vector<LinearOperator> elements_;
  std::vector<std::string> outcome_labels_;
};

// Product POVM; outcome (i, j) has index i * b.size() + j.
Povm tensor_product(const Povm& a, const Povm& b);
// Rank-one projective measurement onto the columns of `basis`.
Povm projective_povm(HilbertSpace space, const Matrix& basis);
Povm standard_basis_povm(const std::string& label, int d);
// Single-outcome trivial measurement.
Povm trivial_povm(HilbertSpace space);

struct MeasurementResult {
  std::vector<std::size_t> shape;
  std::vector<double> probabilities;  // row-major over outcome tuples
  HilbertSpace remaining;             // unmeasured subsystems (may be empty)
  // One entry per outcome tuple; empty when the probability is ~0 or when
  // conditionals were not requested or nothing is left unmeasured.
  std::vector<std::optional<DensityOperator>> conditionals;

  std::size_t flat_index(const std::vector<std::size_t>& outcome) const;
  double probability(const std::vector<std::size_t>& outcome) const;
  // For two POVMs, the shape[0] x shape[1] table; for one, a column.
  Eigen::MatrixXd table() const;
  std::vector<double> marginal(std::size_t which) const;
};

// Probabilities below this are treated as zero (no conditional state).
inline constexpr double kZeroProbability = 1e-14;

MeasurementResult measure(const DensityOperator& rho, const std::vector<Povm>& povms, bool conditionals = true);
MeasurementResult measure(const StateVector& psi, const std::vector<Povm>& povms, bool conditionals = true);

// Sum_k (sqrt(Lambda_k) (x) |k>^out) |psi>, with `out` appended last.
StateVector coherent_measure(const StateVector& psi, const Povm& povm, const std::string& out_label);

}  // namespace privlab

#endif  // PRIVLAB_POVM_HPP

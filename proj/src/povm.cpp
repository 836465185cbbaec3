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


#include "privlab/povm.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace privlab {

namespace {

constexpr double kCompletenessTol = 1e-9;

// Tr_front[(E (x) I) M] where M is ordered (front, tail) with tail dimension t.
Matrix contract_front(const Matrix& m, const Matrix& e, Eigen::Index t) {
  const Eigen::Index f = e.rows();
  Matrix out = Matrix::Zero(t, t);
  for (Eigen::Index a = 0; a < f; ++a) {
    for (Eigen::Index b = 0; b < f; ++b) {
      const Complex w = e(b, a);
      if (w != Complex(0.0)) out.noalias() += w * m.block(a * t, b * t, t, t);
    }
  }
  return out;
}

Labels measured_labels(const HilbertSpace& space, const std::vector<Povm>& povms) {
  if (povms.empty()) throw std::invalid_argument("measure: no POVMs given");
  Labels all;
  std::set<std::string> seen;
  for (const auto& p : povms) {
    for (std::size_t i = 0; i < p.space().size(); ++i) {
      const auto& l = p.space().labels()[i];
      if (!seen.insert(l).second) throw std::invalid_argument("measure: POVMs overlap on subsystem " + l);
      if (space.dim(l) != p.space().dims()[i]) throw std::invalid_argument("measure: dimension mismatch on " + l);
      all.push_back(l);
    }
  }
  return all;
}

std::vector<std::size_t> shape_of(const std::vector<Povm>& povms) {
  std::vector<std::size_t> s;
  for (const auto& p : povms) s.push_back(p.size());
  return s;
}

std::size_t outcome_count(const std::vector<std::size_t>& shape) {
  std::size_t n = 1;
  for (auto s : shape) n *= s;
  return n;
}

std::vector<std::size_t> unflatten(std::size_t idx, const std::vector<std::size_t>& shape) {
  std::vector<std::size_t> out(shape.size());
  for (std::size_t i = shape.size(); i-- > 0;) {
    out[i] = idx % shape[i];
    idx /= shape[i];
  }
  return out;
}

}  // namespace

// ----------------------------------------------------------------------- Povm

Povm::Povm(HilbertSpace space, const std::vector<Matrix>& elements, std::vector<std::string> outcome_labels)
    : space_(std::move(space)), outcome_labels_(std::move(outcome_labels)) {
  if (elements.empty()) throw std::invalid_argument("Povm: no elements");
  const Eigen::Index n = space_.total_dim();
  Matrix sum = Matrix::Zero(n, n);
  for (const auto& e : elements) {
    if (e.rows() != n || e.cols() != n) throw std::invalid_argument("Povm: element shape does not match space");
    elements_.emplace_back(space_, 0.5 * (e + e.adjoint()), LinearOperator::Kind::PovmElement);
    sum += elements_.back().matrix();
  }
  if (max_abs(sum - Matrix::Identity(n, n)) > kCompletenessTol) {
    throw std::invalid_argument("Povm: elements do not sum to identity");
  }
  if (outcome_labels_.empty()) {
    for (std::size_t i = 0; i < elements_.size(); ++i) outcome_labels_.push_back(std::to_string(i));
  }
  if (outcome_labels_.size() != elements_.size()) throw std::invalid_argument("Povm: label count mismatch");
}

std::optional<std::size_t> Povm::fail_index() const {
  for (std::size_t i = 0; i < outcome_labels_.size(); ++i) {
    if (outcome_labels_[i] == kFailOutcome) return i;
  }
  return std::nullopt;
}

Povm Povm::relabeled(const std::string& from, const std::string& to) const {
  return on_space(space_.relabeled(from, to));
}

Povm Povm::on_space(HilbertSpace space) const {
  if (space.total_dim() != space_.total_dim()) throw std::invalid_argument("Povm::on_space: dimension mismatch");
  std::vector<Matrix> els;
  for (const auto& e : elements_) els.push_back(e.matrix());
  return Povm(std::move(space), els, outcome_labels_);
}

Povm Povm::reordered(const Labels& order) const {
  if (order.size() != space_.size()) throw std::invalid_argument("Povm::reordered: order must list every subsystem");
  Reordering r(space_, order);
  std::vector<Matrix> els;
  for (const auto& e : elements_) els.push_back(r.forward(e.matrix()));
  return Povm(r.target(), els, outcome_labels_);
}

Povm tensor_product(const Povm& a, const Povm& b) {
  std::vector<Matrix> els;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      els.push_back(kron(a.element(i), b.element(j)));
      labels.push_back(a.outcome_labels()[i] + "," + b.outcome_labels()[j]);
    }
  }
  return Povm(a.space().concat(b.space()), els, labels);
}

Povm projective_povm(HilbertSpace space, const Matrix& basis) {
  std::vector<Matrix> els;
  for (Eigen::Index c = 0; c < basis.cols(); ++c) els.push_back(basis.col(c) * basis.col(c).adjoint());
  return Povm(std::move(space), els);
}

Povm standard_basis_povm(const std::string& label, int d) {
  return projective_povm(HilbertSpace({d}, {label}), Matrix::Identity(d, d));
}

Povm trivial_povm(HilbertSpace space) {
  const Eigen::Index n = space.total_dim();
  return Povm(std::move(space), {Matrix::Identity(n, n)});
}

// ---------------------------------------------------------- MeasurementResult

std::size_t MeasurementResult::flat_index(const std::vector<std::size_t>& outcome) const {
  if (outcome.size() != shape.size()) throw std::invalid_argument("MeasurementResult: outcome arity mismatch");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (outcome[i] >= shape[i]) throw std::invalid_argument("MeasurementResult: outcome out of range");
    idx = idx * shape[i] + outcome[i];
  }
  return idx;
}

double MeasurementResult::probability(const std::vector<std::size_t>& outcome) const {
  return probabilities[flat_index(outcome)];
}

Eigen::MatrixXd MeasurementResult::table() const {
  if (shape.size() == 1) {
    Eigen::MatrixXd t(shape[0], 1);
    for (std::size_t i = 0; i < shape[0]; ++i) t(i, 0) = probabilities[i];
    return t;
  }
  if (shape.size() != 2) throw std::invalid_argument("MeasurementResult::table: needs one or two POVMs");
  Eigen::MatrixXd t(shape[0], shape[1]);
  for (std::size_t i = 0; i < shape[0]; ++i) {
    for (std::size_t j = 0; j < shape[1]; ++j) t(i, j) = probabilities[i * shape[1] + j];
  }
  return t;
}

std::vector<double> MeasurementResult::marginal(std::size_t which) const {
  std::vector<double> m(shape.at(which), 0.0);
  for (std::size_t idx = 0; idx < probabilities.size(); ++idx) m[unflatten(idx, shape)[which]] += probabilities[idx];
  return m;
}

// -------------------------------------------------------------------- measure

MeasurementResult measure(const DensityOperator& rho, const std::vector<Povm>& povms, bool conditionals) {
  Labels front = measured_labels(rho.space(), povms);
  Reordering r(rho.space(), front);
  Matrix m = r.forward(rho.matrix());

  MeasurementResult res;
  res.shape = shape_of(povms);
  const Labels rest = rho.space().complement(front);
  if (!rest.empty()) res.remaining = rho.space().select(rest);
  const std::size_t total = outcome_count(res.shape);
  res.probabilities.assign(total, 0.0);
  res.conditionals.resize(total);

  // tails[i] = dimension of everything after POVM i
  std::vector<Eigen::Index> tails(povms.size());
  Eigen::Index t = r.rest_dim();
  for (std::size_t i = povms.size(); i-- > 0;) {
    tails[i] = t;
    t *= povms[i].space().total_dim();
  }

  // Depth-first contraction, one POVM at a time.
  std::vector<std::size_t> outcome(povms.size(), 0);
  auto recurse = [&](auto&& self, const Matrix& cur, std::size_t level) -> void {
    if (level == povms.size()) {
      const std::size_t idx = res.flat_index(outcome);
      const double p = cur.trace().real();
      res.probabilities[idx] = p;
      if (conditionals && !rest.empty() && p > kZeroProbability) {
        res.conditionals[idx] = DensityOperator::from_positive(res.remaining, cur);
      }
      return;
    }
    for (std::size_t k = 0; k < povms[level].size(); ++k) {
      outcome[level] = k;
      self(self, contract_front(cur, povms[level].element(k), tails[level]), level + 1);
    }
  };
  recurse(recurse, m, 0);

  double sum = 0.0;
  for (auto& p : res.probabilities) {
    if (p < 0.0) p = 0.0;
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-10) throw std::invalid_argument("measure: outcome distribution does not sum to 1");
  return res;
}

MeasurementResult measure(const StateVector& psi, const std::vector<Povm>& povms, bool conditionals) {
  Labels front = measured_labels(psi.space(), povms);
  const Labels rest = psi.space().complement(front);
  if (!conditionals || rest.empty()) {
    DensityOperator reduced(psi.space().select(front), reduced_from_pure(psi.space(), psi.amplitudes(), front),
                            DensityOperator::Trusted{});
    MeasurementResult res = measure(reduced, povms, false);
    if (!rest.empty()) res.remaining = psi.space().select(rest);
    return res;
  }
  Reordering r(psi.space(), front);
  Vector p = r.forward(psi.amplitudes());
  using RowMat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Matrix big = Eigen::Map<const RowMat>(p.data(), r.front_dim(), r.rest_dim());

  MeasurementResult res;
  res.shape = shape_of(povms);
  res.remaining = psi.space().select(rest);
  const std::size_t total = outcome_count(res.shape);
  res.probabilities.assign(total, 0.0);
  res.conditionals.resize(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    auto o = unflatten(idx, res.shape);
    Matrix e = povms[0].element(o[0]);
    for (std::size_t i = 1; i < povms.size(); ++i) e = kron(e, povms[i].element(o[i]));
    // out(r, r') = sum_ab E(b,a) psi_{a r} conj(psi_{b r'})
    Matrix cond = big.transpose() * e.transpose() * big.conjugate();
    const double prob = std::max(0.0, cond.trace().real());
    res.probabilities[idx] = prob;
    if (prob > kZeroProbability) res.conditionals[idx] = DensityOperator::from_positive(res.remaining, cond);
  }
  double sum = 0.0;
  for (double q : res.probabilities) sum += q;
  if (std::abs(sum - 1.0) > 1e-10) throw std::invalid_argument("measure: outcome distribution does not sum to 1");
  return res;
}

StateVector coherent_measure(const StateVector& psi, const Povm& povm, const std::string& out_label) {
  if (psi.space().contains(out_label)) throw std::invalid_argument("coherent_measure: label collision on " + out_label);
  const auto k = static_cast<Eigen::Index>(povm.size());
  const Eigen::Index n = psi.space().total_dim();
  Vector out = Vector::Zero(n * k);
  for (Eigen::Index j = 0; j < k; ++j) {
    Matrix root = matrix_function(povm.element(static_cast<std::size_t>(j)), SpectralFunction::Sqrt);
    Vector branch = apply_local(psi.space(), psi.amplitudes(), povm.acts_on(), root);
    for (Eigen::Index i = 0; i < n; ++i) out(i * k + j) = branch(i);
  }
  HilbertSpace space = psi.space().concat(HilbertSpace({static_cast<int>(k)}, {out_label}));
  const double norm = out.norm();
  if (std::abs(norm - 1.0) > 1e-10) throw std::invalid_argument("coherent_measure: norm not preserved");
  return StateVector::normalized(space, out);
}

}  // namespace privlab

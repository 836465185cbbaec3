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


#include "privlab/info.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace privlab {

namespace {

constexpr double kEigClamp = 1e-12;

double entropy_of_spectrum(const RealVector& ev) {
  double h = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    const double l = ev(i);
    if (l > kEigClamp) h -= l * std::log2(l);
  }
  return h;
}

void require_labels(const HilbertSpace& space, const Labels& labels, const char* what) {
  if (labels.empty()) throw std::invalid_argument(std::string(what) + ": empty label set");
  for (const auto& l : labels) {
    if (!space.contains(l)) throw std::invalid_argument(std::string(what) + ": unknown label " + l);
  }
}

struct CqParts {
  std::vector<double> p;
  double weighted_conditional = 0.0;  // sum_x p_x S(rho_E|x)
  double s_cond = 0.0;                // S(E)
};

CqParts cq_parts(const DensityOperator& rho, const Povm& povm, const Labels& cond) {
  require_labels(rho.space(), cond, "cq entropy");
  Labels keep = povm.acts_on();
  keep.insert(keep.end(), cond.begin(), cond.end());
  DensityOperator sub = rho.reduced(keep);
  MeasurementResult m = measure(sub, {povm});
  CqParts parts;
  parts.p = m.probabilities;
  for (std::size_t x = 0; x < m.probabilities.size(); ++x) {
    if (m.conditionals[x]) parts.weighted_conditional += m.probabilities[x] * von_neumann_entropy(*m.conditionals[x]);
  }
  parts.s_cond = von_neumann_entropy(rho.reduced(cond));
  return parts;
}

double shannon_of(const Eigen::VectorXd& v) {
  std::vector<double> p(v.data(), v.data() + v.size());
  return shannon_entropy(p);
}

}  // namespace

double shannon_entropy(const std::vector<double>& p) {
  double total = 0.0, h = 0.0;
  for (double x : p) {
    if (x < -1e-12) throw std::invalid_argument("shannon_entropy: negative probability");
    total += x;
    if (x > 0.0) h -= x * std::log2(x);
  }
  if (std::abs(total - 1.0) > 1e-9) throw std::invalid_argument("shannon_entropy: probabilities do not sum to 1");
  return h;
}

double von_neumann_entropy(const Matrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (rho + rho.adjoint()), Eigen::EigenvaluesOnly);
  return entropy_of_spectrum(es.eigenvalues());
}

double von_neumann_entropy(const DensityOperator& rho) { return von_neumann_entropy(rho.matrix()); }

// ----------------------------------------------------------------- CqEnsemble

CqEnsemble::CqEnsemble(std::vector<double> probs, std::vector<DensityOperator> states)
    : probs_(std::move(probs)), states_(std::move(states)) {
  if (probs_.empty() || probs_.size() != states_.size()) throw std::invalid_argument("CqEnsemble: size mismatch");
  double total = 0.0;
  for (double p : probs_) {
    if (p < 0.0) throw std::invalid_argument("CqEnsemble: negative probability");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12) throw std::invalid_argument("CqEnsemble: probabilities do not sum to 1");
  for (const auto& s : states_) {
    if (!(s.space() == states_.front().space())) throw std::invalid_argument("CqEnsemble: states on different spaces");
  }
}

Matrix CqEnsemble::average() const {
  Matrix avg = Matrix::Zero(space().total_dim(), space().total_dim());
  for (std::size_t k = 0; k < size(); ++k) avg += probs_[k] * states_[k].matrix();
  return avg;
}

double holevo_information(const CqEnsemble& e) {
  double chi = von_neumann_entropy(e.average());
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e.probs()[k] > 0.0) chi -= e.probs()[k] * von_neumann_entropy(e.states()[k]);
  }
  return std::max(0.0, chi);
}

double coherent_information(const DensityOperator& rho, const Labels& b_labels) {
  require_labels(rho.space(), b_labels, "coherent_information");
  return von_neumann_entropy(rho.reduced(b_labels)) - von_neumann_entropy(rho);
}

double quantum_mutual_information(const DensityOperator& rho, const Labels& a, const Labels& b) {
  require_labels(rho.space(), a, "quantum_mutual_information");
  require_labels(rho.space(), b, "quantum_mutual_information");
  Labels ab = a;
  ab.insert(ab.end(), b.begin(), b.end());
  return von_neumann_entropy(rho.reduced(a)) + von_neumann_entropy(rho.reduced(b)) -
         von_neumann_entropy(rho.reduced(ab));
}

double conditional_entropy(const Eigen::MatrixXd& joint) {
  Eigen::VectorXd flat = Eigen::Map<const Eigen::VectorXd>(joint.data(), joint.size());
  Eigen::VectorXd py = joint.colwise().sum().transpose();
  return shannon_of(flat) - shannon_of(py);
}

double mutual_information(const Eigen::MatrixXd& joint) {
  Eigen::VectorXd px = joint.rowwise().sum();
  return shannon_of(px) - conditional_entropy(joint);
}

double cq_conditional_entropy(const DensityOperator& rho, const Povm& povm, const Labels& cond) {
  CqParts c = cq_parts(rho, povm, cond);
  return shannon_entropy(c.p) + c.weighted_conditional - c.s_cond;
}

double cq_mutual_information(const DensityOperator& rho, const Povm& povm, const Labels& cond) {
  CqParts c = cq_parts(rho, povm, cond);
  return c.s_cond - c.weighted_conditional;
}

// ------------------------------------------------------------ uncertainty audit

const char* audit_mode_name(AuditMode mode) {
  switch (mode) {
    case AuditMode::MaassenUffink: return "maassen_uffink";
    case AuditMode::Cit: return "cit";
    case AuditMode::QuantumCit: return "quantum_cit";
  }
  return "maassen_uffink";
}

AuditMode parse_audit_mode(const std::string& name) {
  if (name == "maassen_uffink") return AuditMode::MaassenUffink;
  if (name == "cit") return AuditMode::Cit;
  if (name == "quantum_cit") return AuditMode::QuantumCit;
  throw std::invalid_argument("unknown uncertainty mode '" + name + "'");
}

AuditRecord uncertainty_audit(const DensityOperator& rho, const std::string& a_label, const ConjugateBasis& basis,
                              AuditMode mode, const AuditWitness& witness) {
  const int d = rho.space().dim(a_label);
  if (basis.dim() != d) throw std::invalid_argument("uncertainty_audit: basis dimension mismatch");
  Povm z = standard_basis_povm(a_label, d);
  Povm x = basis.as_povm(a_label);

  AuditRecord rec;
  rec.mode = mode;
  rec.rhs = std::log2(static_cast<double>(d));

  switch (mode) {
    case AuditMode::MaassenUffink: {
      DensityOperator ra = rho.reduced({a_label});
      rec.lhs_terms = {shannon_entropy(measure(ra, {z}, false).probabilities),
                       shannon_entropy(measure(ra, {x}, false).probabilities)};
      break;
    }
    case AuditMode::Cit: {
      if (!witness.lambda_c || !witness.gamma_d) throw std::invalid_argument("uncertainty_audit: cit needs both witnesses");
      const Povm& lam = *witness.lambda_c;
      const Povm& gam = *witness.gamma_d;
      std::set<std::string> used{a_label};
      for (const auto* p : {&lam, &gam}) {
        for (const auto& l : p->acts_on()) {
          if (!used.insert(l).second) throw std::invalid_argument("uncertainty_audit: witness subsystems overlap on " + l);
        }
      }
      double hz = conditional_entropy(measure(rho, {z, gam}, false).table());
      double hx = conditional_entropy(measure(rho, {x, lam}, false).table());
      rec.lhs_terms = {hz, hx};

      // Per-outcome relation on the conditional marginals of A.
      Labels keep{a_label};
      for (const auto& l : lam.acts_on()) keep.push_back(l);
      for (const auto& l : gam.acts_on()) keep.push_back(l);
      DensityOperator sub = rho.reduced(keep);
      MeasurementResult joint = measure(sub, {lam, gam});
      double avg = 0.0;
      for (std::size_t i = 0; i < joint.probabilities.size(); ++i) {
        if (!joint.conditionals[i]) continue;
        const auto& ca = *joint.conditionals[i];
        avg += joint.probabilities[i] * (shannon_entropy(measure(ca, {z}, false).probabilities) +
                                         shannon_entropy(measure(ca, {x}, false).probabilities));
      }
      rec.averaged_terms = avg;
      break;
    }
    case AuditMode::QuantumCit: {
      if (witness.b_labels.empty() || witness.e_labels.empty()) {
        throw std::invalid_argument("uncertainty_audit: quantum_cit needs B and E label sets");
      }
      rec.lhs_terms = {cq_conditional_entropy(rho, z, witness.e_labels),
                       cq_conditional_entropy(rho, x, witness.b_labels)};
      break;
    }
  }
  rec.lhs = rec.lhs_terms[0] + rec.lhs_terms[1];
  rec.slack = rec.lhs - rec.rhs;
  return rec;
}

}  // namespace privlab

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


#include "privlab/discrimination.hpp"

#include <cmath>
#include <stdexcept>

#include "privlab/parallel.hpp"

namespace privlab {

namespace {

// Eigenpairs of a product of letter states, eigenvalue list in product order.
struct ProductSpectrum {
  std::vector<double> values;
  Matrix vectors;
};

ProductSpectrum product_spectrum(const std::vector<const Matrix*>& letters) {
  ProductSpectrum ps{{1.0}, Matrix::Identity(1, 1)};
  for (const Matrix* m : letters) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (*m + m->adjoint()));
    std::vector<double> vals;
    for (double a : ps.values) {
      for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) vals.push_back(a * std::max(0.0, es.eigenvalues()(i)));
    }
    ps.values = std::move(vals);
    ps.vectors = kron(ps.vectors, es.eigenvectors());
  }
  return ps;
}

Matrix window_projector(const ProductSpectrum& ps, int n, double center, double delta) {
  const Eigen::Index dim = ps.vectors.rows();
  Matrix p = Matrix::Zero(dim, dim);
  for (std::size_t i = 0; i < ps.values.size(); ++i) {
    const double l = ps.values[i];
    if (l <= 0.0) continue;
    if (std::abs(-std::log2(l) / n - center) <= delta + 1e-12) {
      const auto c = static_cast<Eigen::Index>(i);
      p += ps.vectors.col(c) * ps.vectors.col(c).adjoint();
    }
  }
  return p;
}

Povm class_pgm(const HilbertSpace& space, const std::vector<Matrix>& weighted) {
  const Eigen::Index n = space.total_dim();
  Matrix s = Matrix::Zero(n, n);
  for (const auto& w : weighted) s += w;
  auto dec = hermitian_decompose(s, SpectralFunction::InvSqrtOnSupport);
  std::vector<Matrix> els;
  std::vector<std::string> labels;
  Matrix sum = Matrix::Zero(n, n);
  for (std::size_t k = 0; k < weighted.size(); ++k) {
    Matrix e = dec.applied * weighted[k] * dec.applied;
    e = 0.5 * (e + e.adjoint()).eval();
    sum += e;
    els.push_back(e);
    labels.push_back(std::to_string(k));
  }
  Matrix fail = Matrix::Identity(n, n) - sum;
  els.push_back(0.5 * (fail + fail.adjoint()));
  labels.push_back(kFailOutcome);
  return Povm(space, els, labels);
}

Eigen::Index pow_int_local(int base, int exp) {
  Eigen::Index r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

HelstromResult helstrom_pair(const DensityOperator& rho0, const DensityOperator& rho1, double p0, double p1) {
  if (p0 < 0.0 || p1 < 0.0 || std::abs(p0 + p1 - 1.0) > 1e-12) throw std::invalid_argument("helstrom_pair: priors must be a distribution");
  if (!(rho0.space() == rho1.space())) throw std::invalid_argument("helstrom_pair: space mismatch");
  Matrix delta = p0 * rho0.matrix() - p1 * rho1.matrix();
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (delta + delta.adjoint()));
  const Eigen::Index n = delta.rows();
  Matrix pos = Matrix::Zero(n, n);
  double norm = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double l = es.eigenvalues()(i);
    norm += std::abs(l);
    if (l >= -kSupportTol) pos += es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();
  }
  Povm povm(rho0.space(), {pos, Matrix::Identity(n, n) - pos});
  return {povm, std::clamp(0.5 - 0.5 * norm, 0.0, 0.5)};
}

double helstrom_error_weighted(const Matrix& w0, const Matrix& w1) {
  const double mass = w0.trace().real() + w1.trace().real();
  return std::max(0.0, 0.5 * (mass - trace_norm(w0 - w1)));
}

Povm pgm(const CqEnsemble& e) {
  std::vector<Matrix> weighted;
  for (std::size_t k = 0; k < e.size(); ++k) weighted.push_back(e.probs()[k] * e.states()[k].matrix());
  return class_pgm(e.space(), weighted);
}

double pgm_error(const CqEnsemble& e, const Povm& m) {
  if (m.size() < e.size()) throw std::invalid_argument("pgm_error: POVM has fewer outcomes than the ensemble");
  if (!(m.space().total_dim() == e.space().total_dim())) throw std::invalid_argument("pgm_error: dimension mismatch");
  double err = 0.0;
  for (std::size_t k = 0; k < e.size(); ++k) {
    const double ok = (m.element(k) * e.states()[k].matrix()).trace().real();
    err += e.probs()[k] * (1.0 - ok);
  }
  return std::clamp(err, 0.0, 1.0);
}

Partition partition_by(const std::vector<Eigen::Index>& labels, std::size_t num_classes) {
  Partition p(num_classes);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto c = static_cast<std::size_t>(labels[i]);
    if (c >= num_classes) throw std::invalid_argument("partition_by: label out of range");
    p[c].push_back(i);
  }
  return p;
}

TypicalProjectors typical_projectors(const IidLetters& iid, double delta) {
  if (iid.n < 1 || iid.probs.size() != iid.states.size() || iid.probs.empty()) {
    throw std::invalid_argument("typical_projectors: malformed letter ensemble");
  }
  CqEnsemble letters(iid.probs, iid.states);
  TypicalProjectors tp;
  const Matrix avg = letters.average();
  tp.average_entropy = von_neumann_entropy(avg);
  for (std::size_t i = 0; i < letters.size(); ++i) tp.conditional_entropy += iid.probs[i] * von_neumann_entropy(iid.states[i]);
  const double h = shannon_entropy(iid.probs);

  std::vector<const Matrix*> avg_letters(static_cast<std::size_t>(iid.n), &avg);
  tp.q = window_projector(product_spectrum(avg_letters), iid.n, tp.average_entropy, delta);

  const auto a = static_cast<int>(iid.probs.size());
  const Eigen::Index total = pow_int_local(a, iid.n);
  for (Eigen::Index idx = 0; idx < total; ++idx) {
    std::vector<int> word = digits_of(idx, std::vector<int>(static_cast<std::size_t>(iid.n), a));
    double logp = 0.0;
    std::vector<const Matrix*> ls;
    for (int w : word) {
      logp += iid.probs[w] > 0.0 ? std::log2(iid.probs[w]) : -INFINITY;
      ls.push_back(&iid.states[w].matrix());
    }
    tp.typical.push_back(std::isfinite(logp) && std::abs(-logp / iid.n - h) <= delta + 1e-12);
    tp.q_k.push_back(window_projector(product_spectrum(ls), iid.n, tp.conditional_entropy, delta));
  }
  return tp;
}

ClassDecoder hsw_class_decoder(const CqEnsemble& e, const Partition& classes, const HswConfig& cfg,
                               const std::optional<IidLetters>& iid) {
  if (cfg.delta < 0.0) throw std::invalid_argument("HswConfig: delta must be nonnegative");
  std::vector<int> owner(e.size(), -1);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (std::size_t k : classes[c]) {
      if (k >= e.size() || owner[k] >= 0) throw std::invalid_argument("hsw_class_decoder: classes do not partition the ensemble");
      owner[k] = static_cast<int>(c);
    }
  }
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (owner[k] < 0) throw std::invalid_argument("hsw_class_decoder: string " + std::to_string(k) + " belongs to no class");
  }

  std::optional<TypicalProjectors> tp;
  if (cfg.use_typicality) {
    if (!iid) throw std::invalid_argument("hsw_class_decoder: typicality needs the i.i.d. letter ensemble");
    tp = typical_projectors(*iid, cfg.delta);
    if (tp->typical.size() != e.size()) throw std::invalid_argument("hsw_class_decoder: letter ensemble does not match");
  }

  ClassDecoder dec;
  dec.classes = classes;
  dec.povms.resize(classes.size(), trivial_povm(e.space()));
  dec.class_errors.assign(classes.size(), 0.0);
  dec.typical.assign(e.size(), true);
  if (tp) dec.typical = tp->typical;

  parallel_for(classes.size(), [&](std::size_t c) {
    std::vector<Matrix> weighted;
    for (std::size_t k : classes[c]) {
      if (!tp) {
        weighted.push_back(e.probs()[k] * e.states()[k].matrix());
      } else if (tp->typical[k]) {
        weighted.push_back(tp->q * tp->q_k[k] * tp->q);
      } else {
        weighted.push_back(Matrix::Zero(e.space().total_dim(), e.space().total_dim()));
      }
    }
    Povm m = class_pgm(e.space(), weighted);
    double err = 0.0;
    for (std::size_t j = 0; j < classes[c].size(); ++j) {
      const std::size_t k = classes[c][j];
      const double ok = (m.element(j) * e.states()[k].matrix()).trace().real();
      err += e.probs()[k] * (1.0 - ok);
    }
    dec.povms[c] = m;
    dec.class_errors[c] = err;
  });
  for (double x : dec.class_errors) dec.average_error += x;
  dec.average_error = std::clamp(dec.average_error, 0.0, 1.0);
  return dec;
}

}  // namespace privlab

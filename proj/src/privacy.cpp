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


#include "privlab/privacy.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "privlab/errors.hpp"

namespace privlab {

namespace {

int key_dim(const HilbertSpace& space, const KeyLabels& keys) {
  const int d = space.dim(keys.a);
  if (space.dim(keys.b) != d) throw std::invalid_argument("key registers must have equal dimension");
  if (d < 2) throw std::invalid_argument("key dimension must be at least 2");
  return d;
}

// Row-major (rows x cols) view of a flat vector.
Matrix as_matrix(const Vector& v, Eigen::Index rows, Eigen::Index cols) {
  using RowMat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  return Eigen::Map<const RowMat>(v.data(), rows, cols);
}

Matrix closest_unitary(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

}  // namespace

KeyReadout identity_readout(const HilbertSpace& space, const std::string& label) {
  KeyReadout r;
  r.labels = {label};
  const int d = space.dim(label);
  for (int k = 0; k < d; ++k) r.value_of.push_back(k);
  r.num_values = static_cast<std::size_t>(d);
  return r;
}

double epsilon_secret_ccq(const StateVector& psi, const KeyReadout& alice, const KeyReadout& bob, const Labels& eve) {
  if (alice.num_values != bob.num_values || alice.num_values == 0) throw std::invalid_argument("epsilon_secret_ccq: key alphabets differ");
  Labels front = alice.labels;
  front.insert(front.end(), bob.labels.begin(), bob.labels.end());
  front.insert(front.end(), eve.begin(), eve.end());
  Reordering r(psi.space(), front);
  const Eigen::Index na = psi.space().dim_of(alice.labels);
  const Eigen::Index nb = psi.space().dim_of(bob.labels);
  const Eigen::Index ne = eve.empty() ? 1 : psi.space().dim_of(eve);
  const Eigen::Index nr = r.rest_dim();
  if (static_cast<Eigen::Index>(alice.value_of.size()) != na || static_cast<Eigen::Index>(bob.value_of.size()) != nb) {
    throw std::invalid_argument("epsilon_secret_ccq: readout size mismatch");
  }
  const Vector v = r.forward(psi.amplitudes());
  const auto kk = static_cast<Eigen::Index>(alice.num_values);
  std::vector<Matrix> blocks(static_cast<std::size_t>(kk * kk), Matrix::Zero(ne, ne));
  for (Eigen::Index a = 0; a < na; ++a) {
    for (Eigen::Index b = 0; b < nb; ++b) {
      Matrix m = as_matrix(v.segment((a * nb + b) * ne * nr, ne * nr), ne, nr);
      const Eigen::Index j = alice.value_of[static_cast<std::size_t>(a)];
      const Eigen::Index l = bob.value_of[static_cast<std::size_t>(b)];
      blocks[static_cast<std::size_t>(j * kk + l)] += m * m.adjoint();
    }
  }
  Matrix rho_e = Matrix::Zero(ne, ne);
  for (const auto& blk : blocks) rho_e += blk;
  double dist = 0.0;
  for (Eigen::Index j = 0; j < kk; ++j) {
    for (Eigen::Index l = 0; l < kk; ++l) {
      Matrix diff = blocks[static_cast<std::size_t>(j * kk + l)];
      if (j == l) diff -= rho_e / static_cast<double>(kk);
      dist += trace_norm(diff);
    }
  }
  return std::clamp(0.5 * dist, 0.0, 1.0);
}

double epsilon_secret_direct(const DensityOperator& psi, const KeyLabels& keys) {
  key_dim(psi.space(), keys);
  std::string e = "E";
  while (psi.space().contains(e)) e += "'";
  StateVector pure = purify(psi, e);
  return epsilon_secret_ccq(pure, identity_readout(pure.space(), keys.a), identity_readout(pure.space(), keys.b), {e});
}

KeyErrorRates key_error_rates(const DensityOperator& psi, const ConjugateBasis& basis, const Povm& conj_povm,
                              const KeyLabels& keys) {
  const int d = key_dim(psi.space(), keys);
  if (basis.dim() != d) throw std::invalid_argument("key_error_rates: basis dimension mismatch");
  if (conj_povm.size() < static_cast<std::size_t>(d)) throw std::invalid_argument("key_error_rates: conjugate POVM needs d outcomes");
  for (const auto& l : conj_povm.acts_on()) {
    if (l == keys.a) throw std::invalid_argument("key_error_rates: conjugate POVM may not act on A");
  }
  KeyErrorRates r;
  // Sum the mismatches rather than 1 - matches, so an exact key gives an
  // error of zero instead of a rounding residue that the square root inflates.
  auto mismatch = [](const Eigen::MatrixXd& t) {
    double err = 0.0;
    for (Eigen::Index i = 0; i < t.rows(); ++i) {
      for (Eigen::Index j = 0; j < t.cols(); ++j) err += i == j ? 0.0 : t(i, j);
    }
    return std::clamp(err, 0.0, 1.0);
  };
  r.p_e = mismatch(measure(psi, {standard_basis_povm(keys.a, d), standard_basis_povm(keys.b, d)}, false).table());
  r.p_tilde_e = mismatch(measure(psi, {basis.as_povm(keys.a), conj_povm}, false).table());
  return r;
}

PrivacyReport certify_private(const DensityOperator& psi, const ConjugateBasis& basis, const Povm& conj_povm,
                              const KeyLabels& keys) {
  KeyErrorRates r = key_error_rates(psi, basis, conj_povm, keys);
  PrivacyReport rep;
  rep.p_e = r.p_e;
  rep.p_tilde_e = r.p_tilde_e;
  rep.eps_certified = r.p_e + std::sqrt(r.p_tilde_e);
  rep.eps_direct = epsilon_secret_direct(psi, keys);
  std::ostringstream os;
  os << conj_povm.size() << "-outcome POVM on ";
  for (std::size_t i = 0; i < conj_povm.acts_on().size(); ++i) os << (i ? "," : "") << conj_povm.acts_on()[i];
  rep.measurement = os.str();
  if (rep.eps_direct > rep.eps_certified + 1e-6) {
    throw NumericalError("certify_private: eps_direct " + std::to_string(rep.eps_direct) + " exceeds certified " +
                         std::to_string(rep.eps_certified));
  }
  return rep;
}

Povm twisting_conjugate_measurement(const TwistingOperator& t, const ConjugateBasis& basis) {
  const int d = t.key_dim(), s = t.shield_dim();
  if (basis.dim() != d) throw std::invalid_argument("twisting_conjugate_measurement: basis dimension mismatch");
  Matrix u = Matrix::Zero(d * s, d * s);
  for (int k = 0; k < d; ++k) u.block(k * s, k * s, s, s) = t.block(k, k);
  ConjugateBasis star = basis.conj_in_standard_basis();
  std::vector<Matrix> els;
  for (int y = 0; y < d; ++y) els.push_back(u * kron(star.projector(y), Matrix::Identity(s, s)) * u.adjoint());
  return Povm(HilbertSpace({d, s}, {t.b_label(), t.s_label()}), els);
}

UhlmannResult uhlmann_conjugate_measurement(const DensityOperator& psi_in, double eps, const KeyLabels& keys) {
  return uhlmann_conjugate_measurement(psi_in, eps, ConjugateBasis::fourier(key_dim(psi_in.space(), keys)), keys);
}

UhlmannResult uhlmann_conjugate_measurement(const DensityOperator& psi_in, double eps, const ConjugateBasis& basis,
                                            const KeyLabels& keys) {
  const int d = key_dim(psi_in.space(), keys);
  if (basis.dim() != d) throw std::invalid_argument("uhlmann_conjugate_measurement: basis dimension mismatch");
  if (!(eps >= 0.0 && eps <= 1.0)) throw std::invalid_argument("uhlmann_conjugate_measurement: eps must lie in [0, 1]");

  // Bring the input to A, B, S with S the grouped shield (possibly trivial).
  Labels shield = psi_in.space().complement({keys.a, keys.b});
  DensityOperator psi = psi_in;
  std::string s_label = shield.size() == 1 ? shield[0] : "S";
  while (shield.size() != 1 && psi_in.space().contains(s_label)) s_label += "'";
  if (shield.empty()) {
    psi = tensor_product(psi_in, DensityOperator(HilbertSpace({1}, {s_label}), Matrix::Ones(1, 1)));
  } else if (shield.size() > 1) {
    psi = psi_in.grouped(shield, s_label);
  }
  psi = psi.reordered({keys.a, keys.b, s_label});
  const int ds = psi.space().dim(s_label);

  // |psi>^{ABSE}; E last.
  StateVector pure = purify(psi, "E");
  const int de = pure.space().dim("E");
  const Eigen::Index dabe = static_cast<Eigen::Index>(d) * d * de;

  // Ideal key kappa^{ABE} with the dephased state's own Eve marginal.
  Matrix rho_e = reduced_from_pure(pure.space(), pure.amplitudes(), {"E"});
  DensityOperator rho_e_op = DensityOperator::from_positive(HilbertSpace({de}, {"E"}), rho_e);
  StateVector omega = purify(rho_e_op, "R2");
  const int r2 = omega.space().dim("R2");
  const Eigen::Index rk = static_cast<Eigen::Index>(d) * r2;  // purifier of kappa: R1 (d) x R2

  // Purifying register for psi-bar: R = S A' B' R''.
  const Eigen::Index base_r = static_cast<Eigen::Index>(ds) * d * d;
  int extra = 1;
  while (base_r * extra < rk) ++extra;
  const Eigen::Index dr = base_r * extra;

  // |psi>^{ABER} = C^{AA'} C^{BB'} |psi>^{ABSE}|00>|0>, as a (ABE) x R matrix.
  Matrix m_psi = Matrix::Zero(dabe, dr);
  {
    HilbertSpace sp = pure.space();  // A B S E
    for (Eigen::Index idx = 0; idx < sp.total_dim(); ++idx) {
      const Complex amp = pure.amplitudes()(idx);
      if (amp == Complex(0.0)) continue;
      auto dg = digits_of(idx, sp.dims());
      const int a = dg[0], b = dg[1], s = dg[2], e = dg[3];
      const Eigen::Index row = (static_cast<Eigen::Index>(a) * d + b) * de + e;
      const Eigen::Index col = ((static_cast<Eigen::Index>(s) * d + a) * d + b) * extra;
      m_psi(row, col) += amp;
    }
  }
  // |kappa_0> = d^{-1/2} sum_k |k>^A |k>^B |k>^{R1} |omega>^{E R2}, as (ABE) x (R1 R2).
  Matrix m_kappa = Matrix::Zero(dabe, rk);
  for (int k = 0; k < d; ++k) {
    for (int e = 0; e < de; ++e) {
      for (int j = 0; j < r2; ++j) {
        const Complex amp = omega.amplitudes()(static_cast<Eigen::Index>(e) * r2 + j) / std::sqrt(static_cast<double>(d));
        m_kappa((static_cast<Eigen::Index>(k) * d + k) * de + e, static_cast<Eigen::Index>(k) * r2 + j) = amp;
      }
    }
  }

  // Uhlmann partner: maximize |Tr[G W^T]| over isometries W: R_kappa -> R.
  Matrix g = m_psi.adjoint() * m_kappa;  // R x R_kappa
  Eigen::JacobiSVD<Matrix> svd(g, Eigen::ComputeFullU | Eigen::ComputeFullV);
  UhlmannResult res{trivial_povm(HilbertSpace({d, ds}, {keys.b, s_label}))};
  const auto& sv = svd.singularValues();
  res.fidelity = sv.sum();
  res.rank_deficient = sv.size() > 0 && sv(sv.size() - 1) <= kSupportTol * std::max(1.0, sv(0));
  // W^T = V U^dagger restricted to the first R_kappa columns of U.
  Matrix wt = svd.matrixV() * svd.matrixU().leftCols(rk).adjoint();  // R_kappa x R
  Matrix m_kappa_opt = m_kappa * wt;                                  // (ABE) x R

  // kappa' = C^dagger C^dagger |kappa>; then chi_k^{ER} = sqrt(d) <kk|kappa'>.
  std::vector<Matrix> chi(static_cast<std::size_t>(d));  // R x E
  for (int k = 0; k < d; ++k) chi[static_cast<std::size_t>(k)] = Matrix::Zero(dr, de);
  for (Eigen::Index row = 0; row < dabe; ++row) {
    const int e = static_cast<int>(row % de);
    const int b = static_cast<int>((row / de) % d);
    const int a = static_cast<int>(row / (static_cast<Eigen::Index>(de) * d));
    for (Eigen::Index col = 0; col < dr; ++col) {
      const Complex amp = m_kappa_opt(row, col);
      if (amp == Complex(0.0)) continue;
      if (a != b) {
        if (std::abs(amp) > 1e-8) throw NumericalError("uhlmann_conjugate_measurement: ideal key purification is not correlated");
        continue;
      }
      const int rx = static_cast<int>(col % extra);
      const Eigen::Index rest = col / extra;
      const int bp = static_cast<int>(rest % d);
      const int ap = static_cast<int>((rest / d) % d);
      const int s = static_cast<int>(rest / (static_cast<Eigen::Index>(d) * d));
      // undo the copies: A' -> A' - a, B' -> B' - b
      const int ap0 = ((ap - a) % d + d) % d;
      const int bp0 = ((bp - b) % d + d) % d;
      const Eigen::Index col0 = ((static_cast<Eigen::Index>(s) * d + ap0) * d + bp0) * extra + rx;
      chi[static_cast<std::size_t>(a)](col0, e) += std::sqrt(static_cast<double>(d)) * amp;
    }
  }
  // chi_k = V_k chi_0 on R; Procrustes gives V_k.
  std::vector<Matrix> v(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) v[static_cast<std::size_t>(k)] = closest_unitary(chi[static_cast<std::size_t>(k)] * chi[0].adjoint());

  // Lambda'_y = U^{BR} (P~*_y (x) 1) U^{BR dagger}, compressed to A'=B'=R''=0.
  ConjugateBasis star = basis.conj_in_standard_basis();
  std::vector<Matrix> els;
  for (int y = 0; y < d; ++y) {
    // <k, s00| Lambda'_y |l, t00> = P~*_y(k, l) (V_k V_l^dagger)(s00, t00)
    Matrix lam = Matrix::Zero(static_cast<Eigen::Index>(d) * ds, static_cast<Eigen::Index>(d) * ds);
    const Matrix py = star.projector(y);
    for (int k = 0; k < d; ++k) {
      for (int l = 0; l < d; ++l) {
        if (py(k, l) == Complex(0.0)) continue;
        for (int s = 0; s < ds; ++s) {
          for (int t = 0; t < ds; ++t) {
            const Eigen::Index rs = static_cast<Eigen::Index>(s) * d * d * extra;
            const Eigen::Index rt = static_cast<Eigen::Index>(t) * d * d * extra;
            const Complex val = py(k, l) * v[static_cast<std::size_t>(l)].row(rt).dot(v[static_cast<std::size_t>(k)].row(rs));
            lam(static_cast<Eigen::Index>(k) * ds + s, static_cast<Eigen::Index>(l) * ds + t) += val;
          }
        }
      }
    }
    els.push_back(lam);
  }
  // Report the POVM on the caller's own registers: B followed by the shield labels in their original order.
  std::vector<int> out_dims{d};
  Labels out_labels{keys.b};
  for (const auto& l : shield) {
    out_dims.push_back(psi_in.space().dim(l));
    out_labels.push_back(l);
  }
  res.povm = Povm(HilbertSpace(out_dims, out_labels), els);

  KeyErrorRates rates = key_error_rates(psi_in, basis, res.povm, KeyLabels{keys.a, keys.b});
  res.p_e = rates.p_e;
  res.p_tilde_e = rates.p_tilde_e;
  res.eps = eps;
  res.eps_direct = epsilon_secret_ccq(pure, identity_readout(pure.space(), keys.a), identity_readout(pure.space(), keys.b), {"E"});
  res.extra_purifier_dim = extra;
  res.bound = 2.0 * eps - eps * eps;
  if (res.p_tilde_e > res.bound + 1e-6) {
    throw NumericalError("uhlmann_conjugate_measurement: p~_e " + std::to_string(res.p_tilde_e) + " exceeds 2eps-eps^2 = " +
                         std::to_string(res.bound));
  }
  if (res.p_e > eps + 1e-9) {
    throw NumericalError("uhlmann_conjugate_measurement: p_e " + std::to_string(res.p_e) + " exceeds eps " + std::to_string(eps));
  }
  return res;
}

}  // namespace privlab

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


#include "privlab/distillation.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "privlab/errors.hpp"
#include "privlab/info.hpp"

namespace privlab {

namespace {

Labels joined(Labels a, const Labels& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::string fresh_label(const HilbertSpace& space, std::string base) {
  while (space.contains(base)) base += "'";
  return base;
}

bool same_set(Labels a, Labels b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

Matrix diagonal_projector(const std::vector<Eigen::Index>& cls, Eigen::Index value) {
  const auto n = static_cast<Eigen::Index>(cls.size());
  Matrix p = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (cls[static_cast<std::size_t>(i)] == value) p(i, i) = 1.0;
  }
  return p;
}

std::vector<Eigen::Index> identity_classes(Eigen::Index n) {
  std::vector<Eigen::Index> out(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = i;
  return out;
}

// sum_i sum_{y : m_class[y] != a_class[i]} Tr[M_y <i|rho|i>], where |i> runs
// over the columns of a_basis on register a and rho = |v><v| may be
// subnormalized.
double readout_mismatch(const HilbertSpace& space, const Vector& v, const std::string& a, const Matrix& a_basis,
                        const std::vector<Eigen::Index>& a_class, const Povm& m,
                        const std::vector<Eigen::Index>& m_class) {
  Reordering r(space, joined({a}, m.acts_on()));
  const Eigen::Index na = space.dim(a);
  const Eigen::Index nm = m.space().total_dim();
  const Eigen::Index nrest = r.rest_dim();
  const Vector w = r.forward(v);
  using RowMajor = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Eigen::Map<const RowMajor> rows(w.data(), na, nm * nrest);
  double total = 0.0;
  for (Eigen::Index i = 0; i < a_basis.cols(); ++i) {
    RowMajor u = a_basis.col(i).adjoint() * rows;
    Eigen::Map<const RowMajor> um(u.data(), nm, nrest);
    const Matrix sigma = um * um.adjoint();
    for (std::size_t y = 0; y < m.size(); ++y) {
      const bool wrong = y >= m_class.size() || m_class[y] != a_class[static_cast<std::size_t>(i)];
      if (wrong) total += (m.element(y) * sigma).trace().real();
    }
  }
  return std::max(total, 0.0);
}

// Appends register `r_label` holding the syndrome pair (alpha, beta) of A:
// sum Pi_alpha Pi~_beta |v> |alpha * nt + beta>.
StateVector attach_syndromes(const StateVector& v, const std::string& a, const std::vector<Matrix>& pa,
                             const std::vector<Matrix>& pb, const std::string& r_label) {
  const auto nr = static_cast<Eigen::Index>(pa.size());
  const auto nt = static_cast<Eigen::Index>(pb.size());
  HilbertSpace out = v.space().concat(HilbertSpace({static_cast<int>(nr * nt)}, {r_label}));
  Vector amp = Vector::Zero(out.total_dim());
  for (Eigen::Index ia = 0; ia < nr; ++ia) {
    for (Eigen::Index ib = 0; ib < nt; ++ib) {
      const Vector comp = apply_local(v.space(), v.amplitudes(), {a}, pa[static_cast<std::size_t>(ia)] * pb[static_cast<std::size_t>(ib)]);
      for (Eigen::Index i = 0; i < comp.size(); ++i) amp(i * nr * nt + ia * nt + ib) = comp(i);
    }
  }
  return StateVector::normalized(out, amp);
}

struct SyndromeProjectors {
  std::vector<Matrix> alpha, beta;
};

SyndromeProjectors syndrome_projectors(const CssCode& code) {
  const int d = code.d();
  const auto alpha = class_of_strings(code, ClassKind::Alpha);
  const auto beta = class_of_strings(code, ClassKind::Beta);
  const Matrix f = fourier_matrix(d, code.n());
  SyndromeProjectors sp;
  for (Eigen::Index v = 0; v < pow_int(d, code.m_z()); ++v) sp.alpha.push_back(diagonal_projector(alpha, v));
  for (Eigen::Index v = 0; v < pow_int(d, code.m_x()); ++v) sp.beta.push_back(f * diagonal_projector(beta, v) * f.adjoint());
  return sp;
}

// Controlled POVM sum_r M^{(r)}_k (x) |r><r| on (acts_on of the family, r_label).
Povm controlled_povm(const std::vector<Povm>& family, const std::vector<std::size_t>& which, const HilbertSpace& space,
                     const std::string& r_label) {
  const Labels on = family.front().acts_on();
  HilbertSpace target = space.select(joined(on, {r_label}));
  const auto nr = static_cast<Eigen::Index>(which.size());
  const std::size_t outcomes = family.front().size();
  std::vector<Matrix> els;
  for (std::size_t k = 0; k < outcomes; ++k) {
    Matrix e = Matrix::Zero(target.total_dim(), target.total_dim());
    for (Eigen::Index r = 0; r < nr; ++r) {
      Matrix proj = Matrix::Zero(nr, nr);
      proj(r, r) = 1.0;
      e += kron(family[which[static_cast<std::size_t>(r)]].reordered(on).element(k), proj);
    }
    els.push_back(e);
  }
  return Povm(target, els);
}

// Maximally mixed placeholder for strings that never occur.
DensityOperator conditional_or_mixed(const std::optional<DensityOperator>& c, const HilbertSpace& remaining,
                                     const Labels& keep) {
  if (c) {
    DensityOperator r = c->reduced(keep);
    return keep.size() > 1 ? r.reordered(keep) : r;
  }
  HilbertSpace s = remaining.select(keep);
  const Eigen::Index n = s.total_dim();
  return DensityOperator(s, Matrix::Identity(n, n) / static_cast<double>(n), DensityOperator::Trusted{});
}

CqEnsemble ensemble_from(const StateVector& psi, const Povm& on_a, const Labels& keep) {
  MeasurementResult m = measure(psi, {on_a}, true);
  std::vector<DensityOperator> states;
  for (std::size_t i = 0; i < m.probabilities.size(); ++i) {
    states.push_back(conditional_or_mixed(m.conditionals[i], m.remaining, keep));
  }
  return CqEnsemble(m.probabilities, states);
}

void require_labels(const HilbertSpace& space, const Labels& labels, const char* what) {
  for (const auto& l : labels) {
    if (!space.contains(l)) throw std::invalid_argument(std::string(what) + ": missing subsystem " + l);
  }
}

}  // namespace

StateVector tensor_power(const StateVector& one, int n) {
  if (n < 1) throw std::invalid_argument("tensor_power: n must be positive");
  const Labels base = one.space().labels();
  auto tag = [](const std::string& l, int i) { return l + "#" + std::to_string(i); };
  auto copy = [&](int i) {
    StateVector c = one;
    for (const auto& l : base) c = c.relabeled(l, tag(l, i));
    return c;
  };
  StateVector all = copy(0);
  for (int i = 1; i < n; ++i) all = tensor_product(all, copy(i));
  Labels order;
  for (const auto& l : base) {
    for (int i = 0; i < n; ++i) order.push_back(tag(l, i));
  }
  all = all.reordered(order);
  for (const auto& l : base) {
    Labels members;
    for (int i = 0; i < n; ++i) members.push_back(tag(l, i));
    all = all.grouped(members, l);
  }
  return all;
}

StateVector extend_with_copy(const StateVector& psi, int d, const std::string& a, const std::string& c) {
  if (!psi.space().contains(a) || psi.space().dim(a) != d) throw std::invalid_argument("extend_with_copy: dim(A) must equal d");
  if (psi.space().contains(c)) throw std::invalid_argument("extend_with_copy: label " + c + " already in use");
  Reordering r(psi.space(), {a});
  const Vector v = r.forward(psi.amplitudes());
  const Eigen::Index rest = r.rest_dim();
  HilbertSpace front({d, d}, {a, c});
  HilbertSpace tail = r.target().select(psi.space().complement({a}));
  Vector out = Vector::Zero(static_cast<Eigen::Index>(d) * d * rest);
  for (Eigen::Index k = 0; k < d; ++k) out.segment((k * d + k) * rest, rest) = v.segment(k * rest, rest);
  StateVector ext(front.concat(tail), out);
  Labels order;
  for (const auto& l : psi.space().labels()) {
    order.push_back(l);
    if (l == a) order.push_back(c);
  }
  return ext.reordered(order);
}

RateBreakdown distillable_rate(const StateVector& psi, const ConjugateBasis& x, const DistillLabels& labels) {
  const HilbertSpace& space = psi.space();
  require_labels(space, joined(joined({labels.a}, labels.b), labels.e), "distillable_rate");
  const int d = space.dim(labels.a);
  if (x.dim() != d) throw std::invalid_argument("distillable_rate: conjugate basis dimension mismatch");
  const Labels shield = space.complement(joined(joined({labels.a}, labels.b), labels.e));
  const DensityOperator rho = psi.density();
  const Povm z = standard_basis_povm(labels.a, d);

  RateBreakdown r;
  r.i_zb = cq_mutual_information(rho, z, labels.b);
  r.h_z = shannon_entropy(measure(rho, {z}, false).probabilities);
  r.i_ze = labels.e.empty() ? 0.0 : cq_mutual_information(rho, z, labels.e);
  const std::string c = fresh_label(space, "C");
  const StateVector ext = extend_with_copy(psi, d, labels.a, c);
  r.i_x_cbs = cq_mutual_information(ext.density(), x.as_povm(labels.a), joined(joined({c}, labels.b), shield));
  r.rate = r.i_zb - r.h_z + r.i_x_cbs;
  r.ck_rate = r.i_zb - r.i_ze;
  r.coherent_info = von_neumann_entropy(psi.reduced(labels.b)) - von_neumann_entropy(psi.reduced(joined({labels.a}, labels.b)));
  r.lemma2_residual = std::abs(r.i_x_cbs - (r.h_z - r.i_ze));
  return r;
}

RateBreakdown distillable_rate(const DensityOperator& rho, const ConjugateBasis& x, const std::string& a, const Labels& b) {
  const std::string e = fresh_label(rho.space(), "E");
  return distillable_rate(purify(rho, e), x, DistillLabels{a, b, {e}});
}

Corollary1Check corollary1_check(const DensityOperator& rho, const std::string& a, const Labels& b) {
  require_labels(rho.space(), joined({a}, b), "corollary1_check");
  if (!rho.space().complement(joined({a}, b)).empty()) throw std::invalid_argument("corollary1_check: expects only A and B");
  const std::string e = fresh_label(rho.space(), "E");
  StateVector pure = purify(rho, e);
  Corollary1Check c;
  c.via_entropies = von_neumann_entropy(pure.reduced(b)) - von_neumann_entropy(pure.reduced({e}));
  // Rotate the eigenbasis of rho^A onto the standard basis.
  const SpectralDecomposition sd = hermitian_decompose(pure.reduced({a}).matrix(), SpectralFunction::Identity);
  const StateVector rotated(pure.space(), apply_local(pure.space(), pure.amplitudes(), {a}, sd.eigenvectors.adjoint()));
  const DensityOperator rr = rotated.density();
  const Povm z = standard_basis_povm(a, rho.space().dim(a));
  c.via_basis = cq_mutual_information(rr, z, b) - cq_mutual_information(rr, z, {e});
  c.residual = std::abs(c.via_entropies - c.via_basis);
  return c;
}

Povm expand_class_povm(const Povm& class_povm, const std::vector<std::size_t>& members, Eigen::Index num_strings) {
  if (members.empty()) throw std::invalid_argument("expand_class_povm: empty class");
  const bool has_fail = class_povm.size() == members.size() + 1;
  if (!has_fail && class_povm.size() != members.size()) throw std::invalid_argument("expand_class_povm: outcome count mismatch");
  const Eigen::Index dim = class_povm.space().total_dim();
  std::vector<Matrix> els(static_cast<std::size_t>(num_strings), Matrix::Zero(dim, dim));
  for (std::size_t j = 0; j < members.size(); ++j) {
    if (static_cast<Eigen::Index>(members[j]) >= num_strings) throw std::invalid_argument("expand_class_povm: member out of range");
    els[members[j]] = class_povm.element(j);
  }
  if (has_fail) els[members.front()] += class_povm.element(members.size());
  std::vector<std::string> names;
  for (Eigen::Index i = 0; i < num_strings; ++i) names.push_back(std::to_string(i));
  return Povm(class_povm.space(), els, names);
}

HswDecoders make_hsw_decoders(const StateVector& psi, const CssCode& code, const HswConfig& cfg,
                              const DistillLabels& labels) {
  const HilbertSpace& space = psi.space();
  const Eigen::Index strings = pow_int(code.d(), code.n());
  require_labels(space, joined(joined({labels.a}, labels.b), labels.e), "make_hsw_decoders");
  if (space.dim(labels.a) != strings) throw std::invalid_argument("make_hsw_decoders: dim(A) must be d^n");
  const Labels shield = space.complement(joined(joined({labels.a}, labels.b), labels.e));

  HswDecoders out;
  const CqEnsemble ez = ensemble_from(psi, standard_basis_povm(labels.a, static_cast<int>(strings)), labels.b);
  const Partition za = partition_by(class_of_strings(code, ClassKind::Alpha), static_cast<std::size_t>(pow_int(code.d(), code.m_z())));
  const ClassDecoder dz = hsw_class_decoder(ez, za, cfg);
  for (std::size_t c = 0; c < za.size(); ++c) out.families.key.push_back(expand_class_povm(dz.povms[c], za[c], strings));
  out.eps_z = dz.average_error;

  const Povm fa = projective_povm(space.select({labels.a}), fourier_matrix(code.d(), code.n()));
  const CqEnsemble ex = ensemble_from(psi, fa, joined(labels.b, shield));
  const Partition xb = partition_by(class_of_strings(code, ClassKind::Beta), static_cast<std::size_t>(pow_int(code.d(), code.m_x())));
  const ClassDecoder dx = hsw_class_decoder(ex, xb, cfg);
  for (std::size_t c = 0; c < xb.size(); ++c) out.families.conj.push_back(expand_class_povm(dx.povms[c], xb[c], strings));
  out.eps_x = dx.average_error;
  return out;
}

DistillationOutcome one_shot_distill(const StateVector& psi, const CssCode& code, const DecoderFamilies& decoders,
                                     const DistillLabels& labels) {
  const HilbertSpace& space = psi.space();
  const int d = code.d();
  const Eigen::Index strings = pow_int(d, code.n());
  require_labels(space, joined(joined({labels.a}, labels.b), labels.e), "one_shot_distill");
  if (labels.b.empty()) throw std::invalid_argument("one_shot_distill: Bob needs a register");
  if (space.dim(labels.a) != strings) throw std::invalid_argument("one_shot_distill: dim(A) must be d^n for the code");
  for (const char* reserved : {"R", "T", "B2"}) {
    if (space.contains(reserved)) throw std::invalid_argument(std::string("one_shot_distill: label ") + reserved + " is reserved");
  }
  const Labels shield = space.complement(joined(joined({labels.a}, labels.b), labels.e));
  const Eigen::Index nr = pow_int(d, code.m_z()), nt = pow_int(d, code.m_x());
  if (static_cast<Eigen::Index>(decoders.key.size()) != nr || static_cast<Eigen::Index>(decoders.conj.size()) != nt) {
    throw std::invalid_argument("one_shot_distill: decoder family incomplete");
  }
  for (const auto& m : decoders.key) {
    if (static_cast<Eigen::Index>(m.size()) != strings || !same_set(m.acts_on(), labels.b)) {
      throw std::invalid_argument("one_shot_distill: key decoders need d^n outcomes on Bob's key registers");
    }
  }
  for (const auto& m : decoders.conj) {
    if (static_cast<Eigen::Index>(m.size()) != strings || !same_set(m.acts_on(), joined(labels.b, shield))) {
      throw std::invalid_argument("one_shot_distill: conjugate decoders need d^n outcomes on Bob's registers and the shield");
    }
  }

  const auto lambda = class_of_strings(code, ClassKind::Lambda);
  const auto mu = class_of_strings(code, ClassKind::Mu);
  const auto id = identity_classes(strings);
  const Matrix f = fourier_matrix(d, code.n());
  const Matrix eye = Matrix::Identity(strings, strings);
  const SyndromeProjectors sp = syndrome_projectors(code);

  // |Psi1> with alpha in R and beta in T.
  HilbertSpace s1 = space.concat(HilbertSpace({static_cast<int>(nr), static_cast<int>(nt)}, {"R", "T"}));
  Vector v1 = Vector::Zero(s1.total_dim());
  Transcript transcript;
  for (Eigen::Index ia = 0; ia < nr; ++ia) {
    for (Eigen::Index ib = 0; ib < nt; ++ib) {
      const Vector comp = apply_local(space, psi.amplitudes(), {labels.a}, sp.alpha[static_cast<std::size_t>(ia)] * sp.beta[static_cast<std::size_t>(ib)]);
      for (Eigen::Index i = 0; i < comp.size(); ++i) v1((i * nr + ia) * nt + ib) = comp(i);
    }
  }
  double p_e_str = 0.0, p_tilde_str = 0.0;
  for (Eigen::Index ia = 0; ia < nr; ++ia) {
    const Vector proj = apply_local(space, psi.amplitudes(), {labels.a}, sp.alpha[static_cast<std::size_t>(ia)]);
    transcript.alpha.push_back({string_of(ia, d, code.m_z()), proj.squaredNorm()});
    p_e_str += readout_mismatch(space, proj, labels.a, eye, id, decoders.key[static_cast<std::size_t>(ia)], id);
  }
  for (Eigen::Index ib = 0; ib < nt; ++ib) {
    const Vector proj = apply_local(space, psi.amplitudes(), {labels.a}, sp.beta[static_cast<std::size_t>(ib)]);
    transcript.beta.push_back({string_of(ib, d, code.m_x()), proj.squaredNorm()});
    p_tilde_str += readout_mismatch(space, proj, labels.a, f, id, decoders.conj[static_cast<std::size_t>(ib)], id);
  }
  const StateVector psi1 = StateVector::normalized(s1, v1);

  // Bob reads alpha from R and measures Lambda_{alpha, .} coherently into B2.
  std::vector<std::size_t> which(static_cast<std::size_t>(nr));
  for (std::size_t i = 0; i < which.size(); ++i) which[i] = i;
  const StateVector psi2 = coherent_measure(psi1, controlled_povm(decoders.key, which, s1, "R"), "B2");

  const Eigen::Index key_dims = pow_int(d, code.k());
  const double p_prime = readout_mismatch(psi2.space(), psi2.amplitudes(), labels.a, eye, lambda,
                                          standard_basis_povm("B2", static_cast<int>(strings)), lambda);
  // Conjugate side on Psi1, i.e. after undoing Bob's coherent measurement.
  double p_tilde_prime = 0.0;
  for (Eigen::Index ib = 0; ib < nt; ++ib) {
    Vector vb = psi1.amplitudes();
    for (Eigen::Index i = 0; i < vb.size(); ++i) {
      if (i % nt != ib) vb(i) = 0.0;
    }
    p_tilde_prime += readout_mismatch(s1, vb, labels.a, f, mu, decoders.conj[static_cast<std::size_t>(ib)], mu);
  }
  p_tilde_prime = std::min(p_tilde_prime, 1.0);

  KeyReadout alice{{labels.a}, lambda, static_cast<std::size_t>(key_dims)};
  KeyReadout bob{{"B2"}, lambda, static_cast<std::size_t>(key_dims)};
  PrivacyReport rep;
  rep.p_e = std::min(p_prime, 1.0);
  rep.p_tilde_e = p_tilde_prime;
  rep.eps_certified = rep.p_e + std::sqrt(rep.p_tilde_e);
  rep.eps_direct = epsilon_secret_ccq(psi2, alice, bob, joined(labels.e, {"R"}));
  std::ostringstream os;
  os << nt << " conjugate decoder(s) with " << strings << " outcomes on ";
  const Labels on = decoders.conj.front().acts_on();
  for (std::size_t i = 0; i < on.size(); ++i) os << (i ? "," : "") << on[i];
  rep.measurement = os.str();

  if (rep.p_e > p_e_str + 1e-9 || rep.p_tilde_e > p_tilde_str + 1e-9) {
    throw NumericalError("one_shot_distill: encoded error exceeds the string-level error");
  }
  if (rep.eps_direct > rep.eps_certified + 1e-6) {
    throw NumericalError("one_shot_distill: eps_direct " + std::to_string(rep.eps_direct) + " exceeds certified " +
                         std::to_string(rep.eps_certified));
  }
  return DistillationOutcome{psi2, key_dims, rep, transcript, p_e_str, p_tilde_str};
}

HashingResult coherent_hashing_sim(const DensityOperator& rho, int n, const CssCode& code) {
  if (n < 1 || n > 3) throw std::invalid_argument("coherent_hashing_sim: n must be 1, 2 or 3");
  if (rho.space().labels() != Labels{"A", "B"}) throw std::invalid_argument("coherent_hashing_sim: expects subsystems A, B");
  if (code.n() != n) throw std::invalid_argument("coherent_hashing_sim: code length must equal n");
  const int p = code.d();
  const int da = rho.space().dim("A"), db = rho.space().dim("B");
  if (da > p) throw std::invalid_argument("coherent_hashing_sim: code alphabet smaller than dim(A)");

  // Zero-probability levels make dim(A) prime.
  Matrix padded = Matrix::Zero(static_cast<Eigen::Index>(p) * db, static_cast<Eigen::Index>(p) * db);
  padded.topLeftCorner(static_cast<Eigen::Index>(da) * db, static_cast<Eigen::Index>(da) * db) = rho.matrix();
  const DensityOperator rp(HilbertSpace({p, db}, {"A", "B"}), padded, DensityOperator::Trusted{});

  const SpectralDecomposition sd = hermitian_decompose(rp.matrix(), SpectralFunction::Identity);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sd.eigenvalues.size(); ++i) rank += sd.eigenvalues(i) > kSupportTol ? 1 : 0;
  const Eigen::Index strings = pow_int(p, n);
  const Eigen::Index nr = pow_int(p, code.m_z()), nt = pow_int(p, code.m_x());
  const double total = static_cast<double>(strings) * std::pow(static_cast<double>(db), n) *
                       std::pow(static_cast<double>(rank), n) * static_cast<double>(nr * nt) *
                       static_cast<double>(strings) * static_cast<double>(strings);
  if (total > static_cast<double>(kHashingAmplitudeCap)) {
    std::ostringstream os;
    os << "coherent_hashing_sim: " << total << " amplitudes exceed the cap of " << kHashingAmplitudeCap
       << " (A,C,D " << strings << " each, B " << std::pow(db, n) << ", E " << std::pow(rank, n) << ", R " << nr * nt << ")";
    throw std::length_error(os.str());
  }

  HashingResult res;
  res.d = p;
  res.n = n;
  res.total_dim = static_cast<Eigen::Index>(total);
  res.key_dims = pow_int(p, code.k());

  const StateVector psi = tensor_power(purify(rp, "E"), n);  // A B E
  const Matrix f = fourier_matrix(p, n);
  const SyndromeProjectors sp = syndrome_projectors(code);
  std::vector<std::size_t> alpha_of(static_cast<std::size_t>(nr * nt)), beta_of(static_cast<std::size_t>(nr * nt));
  for (Eigen::Index r = 0; r < nr * nt; ++r) {
    alpha_of[static_cast<std::size_t>(r)] = static_cast<std::size_t>(r / nt);
    beta_of[static_cast<std::size_t>(r)] = static_cast<std::size_t>(r % nt);
  }

  // Key decoder: PGM per alpha class on B.
  const CqEnsemble ez = ensemble_from(psi, standard_basis_povm("A", static_cast<int>(strings)), {"B"});
  const Partition za = partition_by(class_of_strings(code, ClassKind::Alpha), static_cast<std::size_t>(nr));
  const ClassDecoder dz = hsw_class_decoder(ez, za, {});
  std::vector<Povm> key;
  for (std::size_t c = 0; c < za.size(); ++c) key.push_back(expand_class_povm(dz.povms[c], za[c], strings));
  res.eps_z = dz.average_error;

  const StateVector psi1 = attach_syndromes(psi, "A", sp.alpha, sp.beta, "R");  // A B E R
  const StateVector psi2 = coherent_measure(psi1, controlled_povm(key, alpha_of, psi1.space(), "R"), "C");
  const StateVector psi_a = extend_with_copy(psi, static_cast<int>(strings), "A", "C").reordered({"A", "B", "E", "C"});
  const StateVector psi2p = attach_syndromes(psi_a, "A", sp.alpha, sp.beta, "R").reordered({"A", "B", "E", "R", "C"});
  res.overlap_2 = psi2.amplitudes().dot(psi2p.amplitudes()).real();
  res.distance_2 = trace_norm_pure_difference(psi2.amplitudes(), psi2p.amplitudes());

  // Conjugate decoder: PGM per beta class on B C, built from psi_a.
  const Povm fa = projective_povm(psi_a.space().select({"A"}), f);
  const CqEnsemble ex = ensemble_from(psi_a, fa, {"B", "C"});
  const Partition xb = partition_by(class_of_strings(code, ClassKind::Beta), static_cast<std::size_t>(nt));
  const ClassDecoder dx = hsw_class_decoder(ex, xb, {});
  std::vector<Povm> conj;
  for (std::size_t c = 0; c < xb.size(); ++c) conj.push_back(expand_class_povm(dx.povms[c], xb[c], strings));
  res.eps_x = dx.average_error;

  auto measure_conj = [&](const StateVector& s) {
    StateVector m = coherent_measure(s, controlled_povm(conj, beta_of, s.space(), "R"), "D");
    return StateVector(m.space(), apply_local(m.space(), m.amplitudes(), {"D"}, f));
  };
  const StateVector psi3 = measure_conj(psi2);
  const StateVector psi3p = measure_conj(psi2p);

  // Psi3'': the conjugate value of A copied into D, then the syndromes.
  StateVector rot(psi_a.space(), apply_local(psi_a.space(), psi_a.amplitudes(), {"A"}, f.adjoint()));
  StateVector copied = extend_with_copy(rot, static_cast<int>(strings), "A", "D");
  copied = StateVector(copied.space(), apply_local(copied.space(), copied.amplitudes(), {"A"}, f));
  copied = StateVector(copied.space(), apply_local(copied.space(), copied.amplitudes(), {"D"}, f));
  const StateVector psi3pp =
      attach_syndromes(copied.reordered({"A", "B", "E", "C", "D"}), "A", sp.alpha, sp.beta, "R").reordered({"A", "B", "E", "R", "C", "D"});
  res.distance_3 = trace_norm_pure_difference(psi3p.amplitudes(), psi3pp.amplitudes());

  // Decoupler sum_{k,x} w^{x.k} P~_x^D (x) P_k^C.
  Matrix u = Matrix::Zero(strings * strings, strings * strings);
  for (Eigen::Index k = 0; k < strings; ++k) {
    const GfVector ks = string_of(k, p, n);
    Vector phases(strings);
    for (Eigen::Index x = 0; x < strings; ++x) phases(x) = root_of_unity(p, dot_mod(string_of(x, p, n), ks, p));
    u.block(k * strings, k * strings, strings, strings) = f * phases.asDiagonal() * f.adjoint();
  }
  const Vector psi4 = apply_local(psi3.space(), psi3.amplitudes(), {"C", "D"}, u);
  const Vector psi4pp = apply_local(psi3pp.space(), psi3pp.amplitudes(), {"C", "D"}, u);
  res.distance_4 = trace_norm_pure_difference(psi4, psi4pp);

  res.bound_2 = 2.0 * std::sqrt(2.0 * res.eps_z);
  res.bound_3 = 2.0 * std::sqrt(2.0 * res.eps_x);
  res.bound_rhs = res.bound_2 + res.bound_3;

  // Encoded marginal: A and D split into (lambda, rest) by the code coordinates.
  const int k = code.k();
  const Eigen::Index kd = res.key_dims, qd = strings / kd;
  std::vector<Eigen::Index> lam(static_cast<std::size_t>(strings)), rest(static_cast<std::size_t>(strings));
  for (Eigen::Index i = 0; i < strings; ++i) {
    const GfVector c = code.coordinates().apply(string_of(i, p, n));
    lam[static_cast<std::size_t>(i)] = index_of_string(GfVector(c.begin(), c.begin() + k), p);
    rest[static_cast<std::size_t>(i)] = index_of_string(GfVector(c.begin() + k, c.end()), p);
  }
  Reordering r(psi3.space(), {"A", "D"});
  const Vector w = r.forward(psi4);
  const Eigen::Index other = r.rest_dim();
  Matrix wm = Matrix::Zero(kd * kd, qd * qd * other);
  for (Eigen::Index ia = 0; ia < strings; ++ia) {
    for (Eigen::Index id = 0; id < strings; ++id) {
      const Eigen::Index row = lam[static_cast<std::size_t>(ia)] * kd + lam[static_cast<std::size_t>(id)];
      const Eigen::Index col = (rest[static_cast<std::size_t>(ia)] * qd + rest[static_cast<std::size_t>(id)]) * other;
      wm.block(row, col, 1, other) = w.segment((ia * strings + id) * other, other).transpose();
    }
  }
  const Matrix enc = wm * wm.adjoint();
  Vector target = Vector::Zero(kd * kd);
  for (Eigen::Index l = 0; l < kd; ++l) {
    GfVector neg = string_of(l, p, k);
    for (int& x : neg) x = (p - x) % p;
    target(l * kd + index_of_string(neg, p)) = 1.0 / std::sqrt(static_cast<double>(kd));
  }
  res.encoded_fidelity = std::sqrt(std::max(0.0, target.dot(enc * target).real()));
  res.encoded_distance = trace_norm(enc - target * target.adjoint());

  const double tol = 1e-9;
  auto check = [&](bool ok, const std::string& what) {
    if (!ok) throw NumericalError("coherent_hashing_sim: " + what);
  };
  check(res.overlap_2 >= 1.0 - res.eps_z - tol, "<Psi2|Psi2'> below 1 - eps_z");
  check(res.distance_2 <= res.bound_2 + tol, "||Psi2 - Psi2'|| above 2 sqrt(2 eps_z)");
  check(res.distance_3 <= res.bound_3 + tol, "||Psi3' - Psi3''|| above 2 sqrt(2 eps_x)");
  check(res.distance_4 <= res.bound_rhs + tol, "||Psi4 - Psi4''|| above the bound");
  check(res.encoded_distance <= res.distance_4 + tol, "encoded distance above ||Psi4 - Psi4''||");
  return res;
}

const char* stabilizer_choice_name(StabilizerChoice c) {
  switch (c) {
    case StabilizerChoice::XX: return "XX";
    case StabilizerChoice::XI: return "XI";
    case StabilizerChoice::IX: return "IX";
  }
  return "?";
}

StabilizerChoice parse_stabilizer_choice(const std::string& name) {
  if (name == "XX") return StabilizerChoice::XX;
  if (name == "XI") return StabilizerChoice::XI;
  if (name == "IX") return StabilizerChoice::IX;
  throw std::invalid_argument("unknown stabilizer choice: " + name);
}

std::pair<StateVector, StateVector> appendix_d_shields(double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw std::invalid_argument("appendix_d_shields: overlap must lie in [0, 1]");
  HilbertSpace sp({2}, {"S"});
  Vector v0(2), v1(2);
  v0 << 1.0, 0.0;
  v1 << s, std::sqrt(1.0 - s * s);
  return {StateVector(sp, v0), StateVector::normalized(sp, v1)};
}

StateVector appendix_d_copy(const StateVector& phi0, const StateVector& phi1) {
  if (phi0.space().size() != 1 || phi0.space().total_dim() != phi1.space().total_dim()) {
    throw std::invalid_argument("appendix_d_copy: shields must be single registers of equal dimension");
  }
  const Eigen::Index ds = phi0.space().total_dim();
  HilbertSpace one({2, 2, static_cast<int>(ds), 2}, {"A", "B", "S", "E"});
  Vector v = Vector::Zero(one.total_dim());
  for (int j = 0; j < 2; ++j) {
    const double sign = j == 0 ? 1.0 : -1.0;
    for (Eigen::Index s = 0; s < ds; ++s) {
      const Eigen::Index base = ((j * 2 + j) * ds + s) * 2;
      v(base) += 0.5 * phi0.amplitudes()(s);
      v(base + 1) += 0.5 * sign * phi1.amplitudes()(s);
    }
  }
  return StateVector::normalized(one, v);
}

StateVector appendix_d_state(const StateVector& phi0, const StateVector& phi1) {
  return tensor_power(appendix_d_copy(phi0, phi1), 2);
}

CssCode appendix_d_code(StabilizerChoice choice) {
  GfVector row = choice == StabilizerChoice::XX ? GfVector{1, 1} : choice == StabilizerChoice::XI ? GfVector{1, 0} : GfVector{0, 1};
  return CssCode::from_stabilizers(GfMatrix(2, 0, 2), GfMatrix::from_rows(2, 2, {row}));
}

AppendixDResult appendix_d_scenario(const StateVector& phi0, const StateVector& phi1, StabilizerChoice choice,
                                    bool adaptive) {
  const StateVector psi = appendix_d_state(phi0, phi1);
  const CssCode code = appendix_d_code(choice);
  const Eigen::Index ds = phi0.space().total_dim();
  const double s = std::abs(phi0.amplitudes().dot(phi1.amplitudes()));

  DecoderFamilies fam;
  fam.key.push_back(standard_basis_povm("B", 4));
  std::ostringstream desc;
  if (adaptive) {
    const CqEnsemble ex = ensemble_from(psi, projective_povm(psi.space().select({"A"}), fourier_matrix(2, 2)), {"B", "S"});
    const Partition xb = partition_by(class_of_strings(code, ClassKind::Beta), 2);
    for (const auto& cls : xb) {
      if (cls.size() != 2) throw std::logic_error("appendix_d_scenario: expected pairs of strings per syndrome");
      const double q0 = ex.probs()[cls[0]], q1 = ex.probs()[cls[1]];
      const double mass = q0 + q1 > 0.0 ? q0 + q1 : 1.0;
      const HelstromResult h = helstrom_pair(ex.states()[cls[0]], ex.states()[cls[1]], q0 / mass, q1 / mass);
      fam.conj.push_back(expand_class_povm(h.povm, cls, 4));
    }
    desc << "per-syndrome Helstrom measurement on B,S";
  } else {
    // One copy of the state, conjugate outcome of A against B S.
    const StateVector single = appendix_d_copy(phi0, phi1);
    const CqEnsemble e1 = ensemble_from(single, ConjugateBasis::fourier(2).as_povm("A"), {"B", "S"});
    const Povm h = helstrom_pair(e1.states()[0], e1.states()[1], e1.probs()[0], e1.probs()[1]).povm;
    const Povm h1 = h.relabeled("B", "B#0").relabeled("S", "S#0");
    const Povm h2 = h.relabeled("B", "B#1").relabeled("S", "S#1");
    const Povm prod = tensor_product(h1, h2).reordered({"B#0", "B#1", "S#0", "S#1"});
    const Povm grouped = prod.on_space(HilbertSpace({4, static_cast<int>(ds * ds)}, {"B", "S"}));
    fam.conj.assign(2, grouped);
    desc << "product of single-copy Helstrom measurements, independent of the syndrome";
  }

  DistillationOutcome outcome = one_shot_distill(psi, code, fam, DistillLabels{"A", {"B"}, {"E"}});
  outcome.report.measurement = desc.str();

  // Shield-only projectors onto the positive and negative parts.
  const Vector a = phi0.amplitudes(), b = phi1.amplitudes();
  const Vector aa = kron(a, a), bb = kron(b, b), ab = kron(a, b), ba = kron(b, a);
  auto parts = [](const Matrix& m) {
    const SpectralDecomposition sd = hermitian_decompose(m, SpectralFunction::Identity);
    Matrix plus = Matrix::Zero(m.rows(), m.cols()), minus = plus;
    for (Eigen::Index i = 0; i < sd.eigenvalues.size(); ++i) {
      const Vector c = sd.eigenvectors.col(i);
      if (sd.eigenvalues(i) > kSupportTol) plus += c * c.adjoint();
      if (sd.eigenvalues(i) < -kSupportTol) minus += c * c.adjoint();
    }
    return std::pair{plus, minus};
  };
  const auto [p0_plus, p0_minus] = parts(aa * aa.adjoint() - bb * bb.adjoint());
  const auto [p1_plus, p1_minus] = parts(ab * ab.adjoint() - ba * ba.adjoint());
  (void)p0_minus;

  AppendixDResult r{outcome.report.p_tilde_e,
                    0.5 - 0.5 * std::sqrt(std::max(0.0, 1.0 - s * s)),
                    0.5 - 0.5 * std::sqrt(std::max(0.0, 1.0 - s * s * s * s)),
                    s,
                    outcome,
                    (p0_plus * p1_plus).trace().real(),
                    (p0_plus * p1_minus).trace().real(),
                    false,
                    desc.str()};
  r.beta_dependent = r.overlap_plus_plus > 1e-9 && r.overlap_plus_minus > 1e-9;
  return r;
}

}  // namespace privlab

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


#include "privlab/css.hpp"

#include <cmath>
#include <stdexcept>

#include "privlab/parallel.hpp"
#include "privlab/qudit.hpp"

namespace privlab {

namespace {

bool all_orthogonal(const GfMatrix& a, const GfMatrix& b) {
  if (a.rows() == 0 || b.rows() == 0) return true;
  return (a * b.transpose()).is_zero();
}

// Extends the row space of `base` by rows of `candidates`, in order, until
// `count` new independent rows are found.
GfMatrix extend_basis(const GfMatrix& base, const GfMatrix& candidates, int count) {
  GfMatrix acc = base;
  std::vector<GfVector> chosen;
  int r = acc.rank();
  for (int i = 0; i < candidates.rows() && static_cast<int>(chosen.size()) < count; ++i) {
    GfMatrix trial = acc.stacked(GfMatrix::from_rows(base.modulus(), base.cols(), {candidates.row(i)}));
    int tr = trial.rank();
    if (tr > r) {
      acc = trial;
      r = tr;
      chosen.push_back(candidates.row(i));
    }
  }
  if (static_cast<int>(chosen.size()) != count) throw std::logic_error("CssCode: could not complete logical basis");
  return GfMatrix::from_rows(base.modulus(), base.cols(), chosen);
}

// One solution X of A X = B (A full row rank).
GfMatrix particular_solution(const GfMatrix& a, const GfMatrix& b) {
  const int d = a.modulus();
  const int n = a.cols();
  GfMatrix x(d, n, b.cols());
  GfMatrix aug(d, a.rows(), n + b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < n; ++c) aug.set(r, c, a.at(r, c));
    for (int c = 0; c < b.cols(); ++c) aug.set(r, n + c, b.at(r, c));
  }
  std::vector<int> piv;
  GfMatrix red = aug.rref(&piv);
  for (std::size_t i = 0; i < piv.size(); ++i) {
    if (piv[i] >= n) throw std::logic_error("CssCode: inconsistent system");
    for (int c = 0; c < b.cols(); ++c) x.set(piv[i], c, red.at(static_cast<int>(i), n + c));
  }
  return x;
}

GfMatrix build_coordinates(const GfMatrix& mz, const GfMatrix& mx, const GfMatrix& lz, const GfMatrix& lx) {
  const int d = mz.modulus(), n = mz.cols();
  const int k = lz.rows(), m_z = mz.rows();
  // columns: logical_x^T | U | M_x^T with [S; M_z] U = [0; I]
  GfMatrix top = lz.stacked(mz);
  GfMatrix rhs(d, k + m_z, m_z);
  for (int i = 0; i < m_z; ++i) rhs.set(k + i, i, 1);
  GfMatrix u = m_z > 0 ? particular_solution(top, rhs) : GfMatrix(d, n, 0);
  GfMatrix basis(d, n, n);
  int col = 0;
  for (int j = 0; j < k; ++j, ++col) {
    for (int r = 0; r < n; ++r) basis.set(r, col, lx.at(j, r));
  }
  for (int j = 0; j < m_z; ++j, ++col) {
    for (int r = 0; r < n; ++r) basis.set(r, col, u.at(r, j));
  }
  for (int j = 0; j < mx.rows(); ++j, ++col) {
    for (int r = 0; r < n; ++r) basis.set(r, col, mx.at(j, r));
  }
  auto inv = basis.inverse();
  if (!inv) throw std::logic_error("CssCode: coordinate basis is singular");
  return *inv;
}

}  // namespace

Eigen::Index pow_int(int base, int exp) {
  Eigen::Index r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

GfVector string_of(Eigen::Index index, int d, int n) {
  GfVector s(static_cast<std::size_t>(n));
  for (int i = n; i-- > 0;) {
    s[i] = static_cast<int>(index % d);
    index /= d;
  }
  return s;
}

Eigen::Index index_of_string(const GfVector& s, int d) {
  Eigen::Index idx = 0;
  for (int v : s) {
    if (v < 0 || v >= d) throw std::invalid_argument("string entry out of range");
    idx = idx * d + v;
  }
  return idx;
}

// -------------------------------------------------------------------- CssCode

CssCode::CssCode(GfMatrix mz, GfMatrix mx, GfMatrix logical_z, GfMatrix logical_x)
    : mz_(std::move(mz)), mx_(std::move(mx)), lz_(std::move(logical_z)), lx_(std::move(logical_x)), coords_(mz_.modulus(), 0, 0) {
  const int d = mz_.modulus(), n = mz_.cols();
  auto same_field = [&](const GfMatrix& m) { return m.modulus() == d && m.cols() == n; };
  if (!same_field(mx_) || !same_field(lz_) || !same_field(lx_)) throw std::invalid_argument("CssCode: inconsistent modulus or length");
  if (m_z() + m_x() > n) throw std::invalid_argument("CssCode: m_z + m_x exceeds n");
  if (!all_orthogonal(mz_, mx_)) throw std::invalid_argument("CssCode: Z and X stabilizers do not commute");
  if (mz_.stacked(mx_).rank() != m_z() + m_x()) throw std::invalid_argument("CssCode: stabilizer rows are dependent");
  if (lz_.rows() != k() || lx_.rows() != k()) throw std::invalid_argument("CssCode: wrong number of logical rows");
  if (!all_orthogonal(lz_, mx_)) throw std::invalid_argument("CssCode: logical Z does not commute with X stabilizers");
  if (!all_orthogonal(lx_, mz_)) throw std::invalid_argument("CssCode: logical X does not commute with Z stabilizers");
  if (mz_.stacked(lz_).rank() != m_z() + k()) throw std::invalid_argument("CssCode: logical Z depends on Z stabilizers");
  if (mx_.stacked(lx_).rank() != m_x() + k()) throw std::invalid_argument("CssCode: logical X depends on X stabilizers");
  if (k() > 0 && !(lz_ * lx_.transpose() == GfMatrix::identity(d, k()))) {
    throw std::invalid_argument("CssCode: logical pairing is not the identity");
  }
  coords_ = build_coordinates(mz_, mx_, lz_, lx_);
}

CssCode CssCode::from_stabilizers(GfMatrix mz, GfMatrix mx) {
  const int d = mz.modulus(), n = mz.cols();
  if (mx.modulus() != d || mx.cols() != n) throw std::invalid_argument("CssCode: inconsistent stabilizer shapes");
  if (!all_orthogonal(mz, mx)) throw std::invalid_argument("CssCode: Z and X stabilizers do not commute");
  const int m_total = mz.rows() + mx.rows();
  if (m_total > n || mz.stacked(mx).rank() != m_total) throw std::invalid_argument("CssCode: stabilizer rows are dependent");
  const int k = n - m_total;
  GfMatrix s = extend_basis(mz, mx.nullspace(), k);
  GfMatrix t = extend_basis(mx, mz.nullspace(), k);
  if (k > 0) {
    auto ginv = (s * t.transpose()).inverse();
    if (!ginv) throw std::logic_error("CssCode: logical pairing is degenerate");
    t = ginv->transpose() * t;
  }
  return CssCode(std::move(mz), std::move(mx), std::move(s), std::move(t));
}

CssCode CssCode::trivial(int d, int n) { return from_stabilizers(GfMatrix(d, 0, n), GfMatrix(d, 0, n)); }

GfVector CssCode::syndrome(const GfVector& s, StringBasis basis) const {
  if (static_cast<int>(s.size()) != n()) throw std::invalid_argument("syndrome: string length must be n");
  return basis == StringBasis::Standard ? mz_.apply(s) : mx_.apply(s);
}

GfVector CssCode::logical_value(const GfVector& s, StringBasis basis) const {
  if (static_cast<int>(s.size()) != n()) throw std::invalid_argument("logical_value: string length must be n");
  return basis == StringBasis::Standard ? lz_.apply(s) : lx_.apply(s);
}

GfVector CssCode::class_value(const GfVector& s, ClassKind kind) const {
  switch (kind) {
    case ClassKind::Alpha: return syndrome(s, StringBasis::Standard);
    case ClassKind::Beta: return syndrome(s, StringBasis::Conjugate);
    case ClassKind::Lambda: return logical_value(s, StringBasis::Standard);
    case ClassKind::Mu: return logical_value(s, StringBasis::Conjugate);
  }
  return {};
}

int CssCode::value_length(ClassKind kind) const {
  switch (kind) {
    case ClassKind::Alpha: return m_z();
    case ClassKind::Beta: return m_x();
    case ClassKind::Lambda:
    case ClassKind::Mu: return k();
  }
  return 0;
}

// ------------------------------------------------------------------- sampling

GfMatrix sample_orthogonal_rows(int d, int n, int m, Rng& rng) {
  if (!is_prime(d)) throw std::invalid_argument("d must be prime, got " + std::to_string(d));
  if (n < 1 || m < 0 || m > n) throw std::invalid_argument("sample_orthogonal_rows: need 0 <= m <= n");
  std::vector<GfVector> rows;
  for (int i = 0; i < m; ++i) {
    GfMatrix basis = rows.empty() ? GfMatrix::identity(d, n) : GfMatrix::from_rows(d, n, rows).nullspace();
    GfVector r(static_cast<std::size_t>(n), 0);
    for (int b = 0; b < basis.rows(); ++b) {
      const auto c = static_cast<long long>(rng.below(static_cast<std::uint64_t>(d)));
      for (int j = 0; j < n; ++j) r[j] = static_cast<int>((r[j] + c * basis.at(b, j)) % d);
    }
    rows.push_back(r);
  }
  return GfMatrix::from_rows(d, n, rows);
}

CssCode sample_universal_css(int d, int n, int m_z, int m_x, Rng& rng, int max_attempts) {
  if (!is_prime(d)) throw std::invalid_argument("d must be prime, got " + std::to_string(d));
  if (m_z < 0 || m_x < 0 || m_z + m_x > n) throw std::invalid_argument("sample_universal_css: need m_z + m_x <= n");
  const int m = m_z + m_x;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    GfMatrix r = sample_orthogonal_rows(d, n, m, rng);
    if (r.rank() != m) continue;
    std::vector<GfVector> rows = r.row_list();
    GfMatrix mz = GfMatrix::from_rows(d, n, std::vector<GfVector>(rows.begin(), rows.begin() + m_z));
    GfMatrix mx = GfMatrix::from_rows(d, n, std::vector<GfVector>(rows.begin() + m_z, rows.end()));
    return CssCode::from_stabilizers(std::move(mz), std::move(mx));
  }
  throw InfeasibleCode("sample_universal_css: no independent draw in " + std::to_string(max_attempts) + " attempts");
}

// ----------------------------------------------------------------- projectors

Matrix fourier_matrix(int d, int n) {
  Matrix f = ConjugateBasis::fourier(d).vectors();
  Matrix out = Matrix::Identity(1, 1);
  for (int i = 0; i < n; ++i) out = kron(out, f);
  return out;
}

std::vector<Eigen::Index> class_of_strings(const CssCode& code, ClassKind kind) {
  const Eigen::Index total = pow_int(code.d(), code.n());
  std::vector<Eigen::Index> out(static_cast<std::size_t>(total));
  for (Eigen::Index i = 0; i < total; ++i) {
    out[static_cast<std::size_t>(i)] = index_of_string(code.class_value(string_of(i, code.d(), code.n()), kind), code.d());
  }
  return out;
}

LinearOperator class_projector(const CssCode& code, const GfVector& value, ClassKind kind, const std::string& label) {
  const int d = code.d(), n = code.n();
  if (static_cast<int>(value.size()) != code.value_length(kind)) throw std::invalid_argument("class_projector: value length mismatch");
  for (int v : value) {
    if (v < 0 || v >= d) throw std::invalid_argument("class_projector: value entry out of range");
  }
  const Eigen::Index target = index_of_string(value, d);
  const auto classes = class_of_strings(code, kind);
  const Eigen::Index total = pow_int(d, n);
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(total);
  for (Eigen::Index i = 0; i < total; ++i) diag(i) = classes[static_cast<std::size_t>(i)] == target ? 1.0 : 0.0;
  Matrix p = diag.cast<Complex>().asDiagonal();
  if (kind == ClassKind::Beta || kind == ClassKind::Mu) {
    Matrix f = fourier_matrix(d, n);
    p = f * p * f.adjoint();
  }
  return LinearOperator(HilbertSpace(std::vector<int>(static_cast<std::size_t>(n), d), [&] {
                          Labels l;
                          for (int i = 0; i < n; ++i) l.push_back(n == 1 ? label : label + std::to_string(i));
                          return l;
                        }()),
                        p, LinearOperator::Kind::Projector);
}

Matrix z_string(int d, const GfVector& a) {
  Matrix out = Matrix::Identity(1, 1);
  Matrix z = pauli_z(d);
  for (int e : a) {
    Matrix f = Matrix::Identity(d, d);
    for (int i = 0; i < e; ++i) f = f * z;
    out = kron(out, f);
  }
  return out;
}

Matrix x_string(int d, const GfVector& a) {
  Matrix out = Matrix::Identity(1, 1);
  Matrix x = pauli_x(d);
  for (int e : a) {
    Matrix f = Matrix::Identity(d, d);
    for (int i = 0; i < e; ++i) f = f * x;
    out = kron(out, f);
  }
  return out;
}

LogicalOperators logical_operators(const CssCode& code, const std::string& label) {
  const int d = code.d(), n = code.n();
  Labels labels;
  for (int i = 0; i < n; ++i) labels.push_back(n == 1 ? label : label + std::to_string(i));
  HilbertSpace space(std::vector<int>(static_cast<std::size_t>(n), d), labels);
  LogicalOperators ops;
  for (int j = 0; j < code.k(); ++j) {
    ops.z.emplace_back(space, z_string(d, code.logical_z().row(j)), LinearOperator::Kind::Unitary);
    ops.x.emplace_back(space, x_string(d, code.logical_x().row(j)), LinearOperator::Kind::Unitary);
  }
  return ops;
}

// --------------------------------------------------------------- universality

UniversalityEstimate universality_estimate(int d, int n, int m_z, int m_x, RowSlice slice, std::size_t trials,
                                           Rng& rng, std::optional<std::pair<GfVector, GfVector>> pair) {
  if (trials < 1) throw std::invalid_argument("universality_estimate: trials must be positive");
  if (!is_prime(d)) throw std::invalid_argument("d must be prime, got " + std::to_string(d));
  if (m_z < 0 || m_x < 0 || m_z + m_x > n) throw std::invalid_argument("universality_estimate: need m_z + m_x <= n");
  UniversalityEstimate est;
  if (pair) {
    est.k = pair->first;
    est.k_prime = pair->second;
    if (static_cast<int>(est.k.size()) != n || static_cast<int>(est.k_prime.size()) != n || est.k == est.k_prime) {
      throw std::invalid_argument("universality_estimate: need two distinct strings of length n");
    }
  } else {
    const auto total = static_cast<std::uint64_t>(pow_int(d, n));
    const auto a = static_cast<Eigen::Index>(rng.below(total));
    auto b = static_cast<Eigen::Index>(rng.below(total - 1));
    if (b >= a) ++b;
    est.k = string_of(a, d, n);
    est.k_prime = string_of(b, d, n);
  }
  const int m = slice == RowSlice::Z ? m_z : m_x;
  const int offset = slice == RowSlice::Z ? 0 : m_z;
  GfVector diff(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) diff[i] = ((est.k[i] - est.k_prime[i]) % d + d) % d;

  std::vector<char> hit(trials, 0);
  parallel_for(trials, [&](std::size_t t) {
    Rng sub = rng.substream(t);
    GfMatrix r = sample_orthogonal_rows(d, n, m_z + m_x, sub);
    bool same = true;
    for (int i = 0; i < m && same; ++i) same = dot_mod(r.row(offset + i), diff, d) == 0;
    hit[t] = same ? 1 : 0;
  });
  for (char h : hit) est.collisions += static_cast<std::size_t>(h);
  est.trials = trials;
  est.estimate = static_cast<double>(est.collisions) / static_cast<double>(trials);
  est.std_error = std::sqrt(est.estimate * (1.0 - est.estimate) / static_cast<double>(trials));
  est.bound = std::pow(static_cast<double>(d), -m);
  return est;
}

}  // namespace privlab

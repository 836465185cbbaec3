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


#include "privlab/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace privlab {

namespace {

constexpr double kStateTol = 1e-12;
constexpr double kPsdTol = 1e-10;
constexpr double kKindTol = 1e-10;

Eigen::SelfAdjointEigenSolver<Matrix> eigen_of(const Matrix& m) {
  Matrix h = 0.5 * (m + m.adjoint());
  return Eigen::SelfAdjointEigenSolver<Matrix>(h);
}

void require_same_space(const HilbertSpace& a, const HilbertSpace& b, const char* what) {
  if (!(a == b)) {
    throw std::invalid_argument(std::string(what) + ": space mismatch " + a.describe() +
                                " vs " + b.describe());
  }
}

// Order that places `members` contiguously where the first member sits.
Labels grouping_order(const HilbertSpace& space, const Labels& members) {
  if (members.empty()) throw std::invalid_argument("grouped: no members");
  std::set<std::string> member_set(members.begin(), members.end());
  if (member_set.size() != members.size()) throw std::invalid_argument("grouped: duplicate member");
  for (const auto& m : members) space.index_of(m);
  std::size_t first = space.size();
  for (const auto& m : members) first = std::min(first, space.index_of(m));
  Labels order;
  for (std::size_t i = 0; i < space.size(); ++i) {
    const auto& l = space.labels()[i];
    if (i == first) order.insert(order.end(), members.begin(), members.end());
    if (!member_set.count(l)) order.push_back(l);
  }
  return order;
}

HilbertSpace grouped_space(const HilbertSpace& reordered, const Labels& members, const std::string& label) {
  std::vector<int> dims;
  Labels labels;
  bool placed = false;
  std::set<std::string> member_set(members.begin(), members.end());
  int merged = 1;
  for (const auto& m : members) merged *= reordered.dim(m);
  for (std::size_t i = 0; i < reordered.size(); ++i) {
    const auto& l = reordered.labels()[i];
    if (member_set.count(l)) {
      if (!placed) {
        dims.push_back(merged);
        labels.push_back(label);
        placed = true;
      }
      continue;
    }
    dims.push_back(reordered.dims()[i]);
    labels.push_back(l);
  }
  return HilbertSpace(dims, labels);
}

void check_permutation(const HilbertSpace& space, const Labels& order) {
  if (order.size() != space.size()) throw std::invalid_argument("reordered: order must list every label");
  std::set<std::string> seen;
  for (const auto& l : order) {
    space.index_of(l);
    if (!seen.insert(l).second) throw std::invalid_argument("reordered: duplicate label " + l);
  }
}

}  // namespace

// ---------------------------------------------------------------- HilbertSpace

HilbertSpace::HilbertSpace(std::vector<int> dims, Labels labels)
    : dims_(std::move(dims)), labels_(std::move(labels)) {
  if (dims_.size() != labels_.size()) throw std::invalid_argument("HilbertSpace: dims/labels length mismatch");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (dims_[i] < 1) throw std::invalid_argument("HilbertSpace: dimension must be positive");
    if (labels_[i].empty()) throw std::invalid_argument("HilbertSpace: empty label");
    if (!seen.insert(labels_[i]).second) throw std::invalid_argument("HilbertSpace: duplicate label " + labels_[i]);
    total_ *= dims_[i];
  }
}

bool HilbertSpace::contains(const std::string& label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

std::size_t HilbertSpace::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw std::invalid_argument("unknown subsystem label '" + label + "' in " + describe());
  return static_cast<std::size_t>(it - labels_.begin());
}

int HilbertSpace::dim(const std::string& label) const { return dims_[index_of(label)]; }

Eigen::Index HilbertSpace::dim_of(const Labels& labels) const {
  Eigen::Index d = 1;
  for (const auto& l : labels) d *= dim(l);
  return d;
}

HilbertSpace HilbertSpace::concat(const HilbertSpace& other) const {
  std::vector<int> dims = dims_;
  Labels labels = labels_;
  for (std::size_t i = 0; i < other.size(); ++i) {
    if (contains(other.labels_[i])) throw std::invalid_argument("tensor product: label collision on " + other.labels_[i]);
    dims.push_back(other.dims_[i]);
    labels.push_back(other.labels_[i]);
  }
  return HilbertSpace(dims, labels);
}

HilbertSpace HilbertSpace::select(const Labels& labels) const {
  std::vector<int> dims;
  for (const auto& l : labels) dims.push_back(dim(l));
  return HilbertSpace(dims, labels);
}

Labels HilbertSpace::complement(const Labels& labels) const {
  for (const auto& l : labels) index_of(l);
  Labels rest;
  for (const auto& l : labels_) {
    if (std::find(labels.begin(), labels.end(), l) == labels.end()) rest.push_back(l);
  }
  return rest;
}

HilbertSpace HilbertSpace::relabeled(const std::string& from, const std::string& to) const {
  Labels labels = labels_;
  labels[index_of(from)] = to;
  return HilbertSpace(dims_, labels);
}

std::string HilbertSpace::describe() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) os << ",";
    os << labels_[i] << ":" << dims_[i];
  }
  os << "]";
  return os.str();
}

// ------------------------------------------------------------------ Reordering

Reordering::Reordering(const HilbertSpace& space, const Labels& front) : source_(space) {
  std::set<std::string> seen;
  for (const auto& l : front) {
    space.index_of(l);
    if (!seen.insert(l).second) throw std::invalid_argument("duplicate label " + l);
  }
  Labels order = front;
  for (const auto& l : space.complement(front)) order.push_back(l);
  target_ = space.select(order);
  front_dim_ = space.dim_of(front);
  rest_dim_ = space.total_dim() / front_dim_;

  const std::size_t m = space.size();
  std::vector<Eigen::Index> old_stride(m);
  Eigen::Index s = 1;
  for (std::size_t i = m; i-- > 0;) {
    old_stride[i] = s;
    s *= space.dims()[i];
  }
  std::vector<std::size_t> src(m);
  for (std::size_t j = 0; j < m; ++j) src[j] = space.index_of(order[j]);

  const Eigen::Index n = space.total_dim();
  old_of_new_.resize(static_cast<std::size_t>(n));
  std::vector<int> digit(m, 0);
  Eigen::Index old = 0;
  for (Eigen::Index t = 0; t < n; ++t) {
    old_of_new_[static_cast<std::size_t>(t)] = old;
    // odometer increment over the target digits, tracking the source index
    for (std::size_t j = m; j-- > 0;) {
      const int dj = target_.dims()[j];
      if (++digit[j] < dj) {
        old += old_stride[src[j]];
        break;
      }
      digit[j] = 0;
      old -= old_stride[src[j]] * (dj - 1);
    }
  }
}

Vector Reordering::forward(const Vector& v) const {
  Vector out(v.size());
  for (std::size_t t = 0; t < old_of_new_.size(); ++t) out(static_cast<Eigen::Index>(t)) = v(old_of_new_[t]);
  return out;
}

Vector Reordering::backward(const Vector& v) const {
  Vector out(v.size());
  for (std::size_t t = 0; t < old_of_new_.size(); ++t) out(old_of_new_[t]) = v(static_cast<Eigen::Index>(t));
  return out;
}

Matrix Reordering::forward(const Matrix& m) const {
  const auto n = static_cast<Eigen::Index>(old_of_new_.size());
  Matrix out(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const Eigen::Index oj = old_of_new_[static_cast<std::size_t>(j)];
    for (Eigen::Index i = 0; i < n; ++i) out(i, j) = m(old_of_new_[static_cast<std::size_t>(i)], oj);
  }
  return out;
}

Matrix Reordering::backward(const Matrix& m) const {
  const auto n = static_cast<Eigen::Index>(old_of_new_.size());
  Matrix out(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const Eigen::Index oj = old_of_new_[static_cast<std::size_t>(j)];
    for (Eigen::Index i = 0; i < n; ++i) out(old_of_new_[static_cast<std::size_t>(i)], oj) = m(i, j);
  }
  return out;
}

std::vector<int> digits_of(Eigen::Index index, const std::vector<int>& dims) {
  std::vector<int> d(dims.size());
  for (std::size_t i = dims.size(); i-- > 0;) {
    d[i] = static_cast<int>(index % dims[i]);
    index /= dims[i];
  }
  return d;
}

Eigen::Index index_of_digits(const std::vector<int>& digits, const std::vector<int>& dims) {
  if (digits.size() != dims.size()) throw std::invalid_argument("digit count mismatch");
  Eigen::Index idx = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (digits[i] < 0 || digits[i] >= dims[i]) throw std::invalid_argument("digit out of range");
    idx = idx * dims[i] + digits[i];
  }
  return idx;
}

// ----------------------------------------------------------------- StateVector

StateVector::StateVector(HilbertSpace space, Vector amplitudes)
    : space_(std::move(space)), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != space_.total_dim()) throw std::invalid_argument("StateVector: length does not match space");
  double norm = amplitudes_.norm();
  if (std::abs(norm - 1.0) > kStateTol) {
    throw std::invalid_argument("StateVector: norm " + std::to_string(norm) + " is not 1");
  }
}

StateVector StateVector::normalized(HilbertSpace space, const Vector& v) {
  double norm = v.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) throw std::invalid_argument("StateVector: cannot normalize a zero vector");
  return StateVector(std::move(space), v / norm);
}

StateVector StateVector::basis(HilbertSpace space, const std::vector<int>& digits) {
  Vector v = Vector::Zero(space.total_dim());
  v(index_of_digits(digits, space.dims())) = 1.0;
  return StateVector(std::move(space), v);
}

DensityOperator StateVector::density() const {
  return DensityOperator(space_, amplitudes_ * amplitudes_.adjoint(), DensityOperator::Trusted{});
}

DensityOperator StateVector::reduced(const Labels& keep) const {
  if (keep.empty()) throw std::invalid_argument("reduced: keep set is empty");
  Labels ordered;
  for (const auto& l : space_.labels()) {
    if (std::find(keep.begin(), keep.end(), l) != keep.end()) ordered.push_back(l);
  }
  for (const auto& l : keep) space_.index_of(l);
  return DensityOperator(space_.select(ordered), reduced_from_pure(space_, amplitudes_, keep),
                         DensityOperator::Trusted{});
}

StateVector StateVector::reordered(const Labels& order) const {
  check_permutation(space_, order);
  Reordering r(space_, order);
  return StateVector(r.target(), r.forward(amplitudes_));
}

StateVector StateVector::relabeled(const std::string& from, const std::string& to) const {
  return StateVector(space_.relabeled(from, to), amplitudes_);
}

StateVector StateVector::grouped(const Labels& members, const std::string& label) const {
  StateVector r = reordered(grouping_order(space_, members));
  return StateVector(grouped_space(r.space(), members, label), r.amplitudes_);
}

// ------------------------------------------------------------- DensityOperator

DensityOperator::DensityOperator(HilbertSpace space, Matrix matrix, Trusted)
    : space_(std::move(space)), matrix_(std::move(matrix)) {
  const Eigen::Index n = space_.total_dim();
  if (matrix_.rows() != n || matrix_.cols() != n) throw std::invalid_argument("DensityOperator: shape does not match space");
  if (!is_hermitian(matrix_, kStateTol)) throw std::invalid_argument("DensityOperator: matrix is not Hermitian");
  matrix_ = 0.5 * (matrix_ + matrix_.adjoint()).eval();
  double tr = matrix_.trace().real();
  if (std::abs(tr - 1.0) > kStateTol) throw std::invalid_argument("DensityOperator: trace " + std::to_string(tr) + " is not 1");
}

DensityOperator::DensityOperator(HilbertSpace space, Matrix matrix)
    : DensityOperator(std::move(space), std::move(matrix), Trusted{}) {
  double min_eig = eigen_of(matrix_).eigenvalues().minCoeff();
  if (min_eig < -kPsdTol) {
    throw std::invalid_argument("DensityOperator: negative eigenvalue " + std::to_string(min_eig));
  }
}

DensityOperator DensityOperator::from_positive(HilbertSpace space, const Matrix& m) {
  Matrix h = 0.5 * (m + m.adjoint());
  double tr = h.trace().real();
  if (!(tr > 0.0)) throw std::invalid_argument("DensityOperator: nonpositive trace");
  h /= tr;
  auto es = eigen_of(h);
  if (es.eigenvalues().minCoeff() < -kPsdTol) {
    RealVector ev = es.eigenvalues().cwiseMax(0.0);
    h = es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
    h /= h.trace().real();
  }
  return DensityOperator(std::move(space), h, Trusted{});
}

DensityOperator DensityOperator::reduced(const Labels& keep) const { return partial_trace(*this, keep); }

DensityOperator DensityOperator::reordered(const Labels& order) const {
  check_permutation(space_, order);
  Reordering r(space_, order);
  return DensityOperator(r.target(), r.forward(matrix_), Trusted{});
}

DensityOperator DensityOperator::relabeled(const std::string& from, const std::string& to) const {
  return DensityOperator(space_.relabeled(from, to), matrix_, Trusted{});
}

DensityOperator DensityOperator::grouped(const Labels& members, const std::string& label) const {
  DensityOperator r = reordered(grouping_order(space_, members));
  return DensityOperator(grouped_space(r.space(), members, label), r.matrix_, Trusted{});
}

// -------------------------------------------------------------- LinearOperator

const char* kind_name(LinearOperator::Kind kind) {
  switch (kind) {
    case LinearOperator::Kind::General: return "general";
    case LinearOperator::Kind::Hermitian: return "hermitian";
    case LinearOperator::Kind::Unitary: return "unitary";
    case LinearOperator::Kind::Projector: return "projector";
    case LinearOperator::Kind::PovmElement: return "povm-element";
  }
  return "general";
}

LinearOperator::LinearOperator(HilbertSpace space, Matrix matrix, Kind kind)
    : space_(std::move(space)), matrix_(std::move(matrix)), kind_(kind) {
  const Eigen::Index n = space_.total_dim();
  if (matrix_.rows() != n || matrix_.cols() != n) throw std::invalid_argument("LinearOperator: shape does not match space");
  auto fail = [&](const char* why) {
    throw std::invalid_argument(std::string("LinearOperator tagged ") + kind_name(kind_) + ": " + why);
  };
  switch (kind_) {
    case Kind::General:
      break;
    case Kind::Hermitian:
      if (!is_hermitian(matrix_, kKindTol)) fail("not Hermitian");
      break;
    case Kind::Unitary:
      if (!is_unitary(matrix_, kKindTol)) fail("not unitary");
      break;
    case Kind::Projector:
      if (!is_hermitian(matrix_, kKindTol)) fail("not Hermitian");
      if (max_abs(matrix_ * matrix_ - matrix_) > kKindTol) fail("not idempotent");
      break;
    case Kind::PovmElement:
      if (!is_hermitian(matrix_, kKindTol)) fail("not Hermitian");
      if (n > 0 && eigen_of(matrix_).eigenvalues().minCoeff() < -kPsdTol) fail("not positive semidefinite");
      break;
  }
}

// ---------------------------------------------------------- tensor products

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

StateVector tensor_product(const StateVector& a, const StateVector& b) {
  return StateVector::normalized(a.space().concat(b.space()), kron(a.amplitudes(), b.amplitudes()));
}

DensityOperator tensor_product(const DensityOperator& a, const DensityOperator& b) {
  return DensityOperator(a.space().concat(b.space()), kron(a.matrix(), b.matrix()), DensityOperator::Trusted{});
}

LinearOperator tensor_product(const LinearOperator& a, const LinearOperator& b) {
  using K = LinearOperator::Kind;
  K kind = K::General;
  if (a.kind() == b.kind()) {
    kind = a.kind();
  } else {
    auto hermitian_like = [](K k) { return k == K::Hermitian || k == K::Projector || k == K::PovmElement; };
    auto positive_like = [](K k) { return k == K::Projector || k == K::PovmElement; };
    if (positive_like(a.kind()) && positive_like(b.kind())) {
      kind = K::PovmElement;
    } else if (hermitian_like(a.kind()) && hermitian_like(b.kind())) {
      kind = K::Hermitian;
    }
  }
  return LinearOperator(a.space().concat(b.space()), kron(a.matrix(), b.matrix()), kind);
}

// -------------------------------------------------------------- partial trace

Matrix partial_trace(const HilbertSpace& space, const Matrix& m, const Labels& keep) {
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep set is empty");
  Labels ordered;
  for (const auto& l : space.labels()) {
    if (std::find(keep.begin(), keep.end(), l) != keep.end()) ordered.push_back(l);
  }
  for (const auto& l : keep) space.index_of(l);
  Reordering r(space, ordered);
  Matrix p = r.forward(m);
  const Eigen::Index a = r.front_dim(), b = r.rest_dim();
  Matrix out = Matrix::Zero(a, a);
  for (Eigen::Index i = 0; i < a; ++i) {
    for (Eigen::Index j = 0; j < a; ++j) {
      Complex s = 0.0;
      for (Eigen::Index k = 0; k < b; ++k) s += p(i * b + k, j * b + k);
      out(i, j) = s;
    }
  }
  return out;
}

DensityOperator partial_trace(const DensityOperator& rho, const Labels& keep) {
  Matrix m = partial_trace(rho.space(), rho.matrix(), keep);
  Labels ordered;
  for (const auto& l : rho.space().labels()) {
    if (std::find(keep.begin(), keep.end(), l) != keep.end()) ordered.push_back(l);
  }
  return DensityOperator(rho.space().select(ordered), m, DensityOperator::Trusted{});
}

Matrix reduced_from_pure(const HilbertSpace& space, const Vector& psi, const Labels& keep) {
  Labels ordered;
  for (const auto& l : space.labels()) {
    if (std::find(keep.begin(), keep.end(), l) != keep.end()) ordered.push_back(l);
  }
  Reordering r(space, ordered);
  Vector p = r.forward(psi);
  // row-major reshape: row = kept index, column = traced index
  Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> mat(
      p.data(), r.front_dim(), r.rest_dim());
  return mat * mat.adjoint();
}

Vector apply_local(const HilbertSpace& space, const Vector& psi, const Labels& on, const Matrix& op) {
  Reordering r(space, on);
  if (op.rows() != r.front_dim() || op.cols() != r.front_dim()) throw std::invalid_argument("apply_local: operator shape mismatch");
  Vector p = r.forward(psi);
  using RowMat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Eigen::Map<RowMat> mat(p.data(), r.front_dim(), r.rest_dim());
  RowMat res = op * mat;
  Vector q = Eigen::Map<Vector>(res.data(), res.size());
  return r.backward(q);
}

Matrix embed(const HilbertSpace& space, const Labels& on, const Matrix& op) {
  Reordering r(space, on);
  if (op.rows() != r.front_dim() || op.cols() != r.front_dim()) throw std::invalid_argument("embed: operator shape mismatch");
  return r.backward(kron(op, Matrix::Identity(r.rest_dim(), r.rest_dim())));
}

StateVector purify(const DensityOperator& rho, const std::string& new_label) {
  if (rho.space().contains(new_label)) throw std::invalid_argument("purify: label collision on " + new_label);
  auto es = eigen_of(rho.matrix());
  std::vector<Eigen::Index> support;
  for (Eigen::Index i = es.eigenvalues().size(); i-- > 0;) {
    if (es.eigenvalues()(i) > kSupportTol) support.push_back(i);
  }
  const auto rank = static_cast<Eigen::Index>(support.size());
  const Eigen::Index n = rho.space().total_dim();
  Vector psi = Vector::Zero(n * rank);
  for (Eigen::Index j = 0; j < rank; ++j) {
    const Eigen::Index col = support[static_cast<std::size_t>(j)];
    const double w = std::sqrt(es.eigenvalues()(col));
    for (Eigen::Index a = 0; a < n; ++a) psi(a * rank + j) = w * es.eigenvectors()(a, col);
  }
  HilbertSpace space = rho.space().concat(HilbertSpace({static_cast<int>(rank)}, {new_label}));
  return StateVector::normalized(space, psi);
}

// ------------------------------------------------------------------- spectra

SpectralDecomposition hermitian_decompose(const Matrix& m, SpectralFunction f) {
  if (!is_hermitian(m, kKindTol)) throw std::invalid_argument("hermitian_decompose: operator is not Hermitian");
  auto es = eigen_of(m);
  SpectralDecomposition out{es.eigenvalues(), es.eigenvectors(), Matrix()};
  RealVector fv(out.eigenvalues.size());
  for (Eigen::Index i = 0; i < fv.size(); ++i) {
    const double l = out.eigenvalues(i);
    switch (f) {
      case SpectralFunction::Identity: fv(i) = l; break;
      case SpectralFunction::Sqrt: fv(i) = l > kRootFloor ? std::sqrt(l) : 0.0; break;
      case SpectralFunction::InvSqrtOnSupport: fv(i) = std::abs(l) > kSupportTol ? 1.0 / std::sqrt(std::abs(l)) : 0.0; break;
      case SpectralFunction::Log2Clamped: fv(i) = l > kSupportTol ? std::log2(l) : 0.0; break;
    }
  }
  out.applied = out.eigenvectors * fv.asDiagonal() * out.eigenvectors.adjoint();
  return out;
}

SpectralDecomposition hermitian_decompose(const LinearOperator& op, SpectralFunction f) {
  return hermitian_decompose(op.matrix(), f);
}

Matrix matrix_function(const Matrix& hermitian, SpectralFunction f) {
  return hermitian_decompose(hermitian, f).applied;
}

double trace_norm(const Matrix& hermitian) { return eigen_of(hermitian).eigenvalues().cwiseAbs().sum(); }

double trace_distance(const DensityOperator& rho, const DensityOperator& sigma) {
  require_same_space(rho.space(), sigma.space(), "trace_distance");
  return std::clamp(0.5 * trace_norm(rho.matrix() - sigma.matrix()), 0.0, 1.0);
}

double fidelity(const Matrix& rho, const Matrix& sigma) {
  Matrix s = matrix_function(0.5 * (rho + rho.adjoint()), SpectralFunction::Sqrt);
  Matrix inner = s * sigma * s;
  RealVector ev = eigen_of(inner).eigenvalues();
  double f = 0.0;
  // Roundoff eigenvalues would otherwise add sqrt(1e-16) each.
  for (Eigen::Index i = 0; i < ev.size(); ++i) f += ev(i) > kRootFloor ? std::sqrt(ev(i)) : 0.0;
  return f;
}

double fidelity(const DensityOperator& rho, const DensityOperator& sigma) {
  require_same_space(rho.space(), sigma.space(), "fidelity");
  return std::clamp(fidelity(rho.matrix(), sigma.matrix()), 0.0, 1.0);
}

double trace_norm_pure_difference(const Vector& a, const Vector& b) {
  // (na + nb)^2 - 4 |<a|b>|^2 = (na - nb)^2 + 4 na |b_perp|^2, which avoids
  // cancellation when a and b nearly coincide.
  const double na = a.squaredNorm(), nb = b.squaredNorm();
  if (na == 0.0) return nb;
  const Vector perp = b - (a.dot(b) / na) * a;
  return std::sqrt((na - nb) * (na - nb) + 4.0 * na * perp.squaredNorm());
}

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

bool is_hermitian(const Matrix& m, double tol) {
  return m.rows() == m.cols() && max_abs(m - m.adjoint()) <= tol;
}

bool is_unitary(const Matrix& m, double tol) {
  return m.rows() == m.cols() && max_abs(m.adjoint() * m - Matrix::Identity(m.rows(), m.cols())) <= tol;
}

}  // namespace privlab

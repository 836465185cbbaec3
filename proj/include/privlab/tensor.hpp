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


#ifndef PRIVLAB_TENSOR_HPP
#define PRIVLAB_TENSOR_HPP

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace privlab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Labels = std::vector<std::string>;

// Eigenvalues at or below this magnitude are treated as zero.
inline constexpr double kSupportTol = 1e-10;
// Rounding noise below this would otherwise turn into 1e-8 sized square roots.
inline constexpr double kRootFloor = 1e-13;

// Ordered list of named subsystems. The first subsystem is the most
// significant digit of the flat index, so |01> on two qubits is e_1.
//
// Dimension 1 is allowed: purifying a pure state yields a trivial register.
class HilbertSpace {
 public:
  HilbertSpace() = default;
  HilbertSpace(std::vector<int> dims, Labels labels);

  const std::vector<int>& dims() const { return dims_; }
  const Labels& labels() const { return labels_; }
  std::size_t size() const { return dims_.size(); }
  Eigen::Index total_dim() const { return total_; }

  bool contains(const std::string& label) const;
  std::size_t index_of(const std::string& label) const;
  int dim(const std::string& label) const;
  Eigen::Index dim_of(const Labels& labels) const;

  HilbertSpace concat(const HilbertSpace& other) const;
  // Subsystems named in `labels`, in that order.
  HilbertSpace select(const Labels& labels) const;
  // Everything except `labels`, in the original order.
  Labels complement(const Labels& labels) const;
  HilbertSpace relabeled(const std::string& from, const std::string& to) const;

  std::string describe() const;

  bool operator==(const HilbertSpace& other) const {
    return dims_ == other.dims_ && labels_ == other.labels_;
  }

 private:
  std::vector<int> dims_;
  Labels labels_;
  Eigen::Index total_ = 1;
};

// Index permutation bringing `front` to the front of `space`, the remaining
// subsystems following in their original order.
class Reordering {
 public:
  Reordering(const HilbertSpace& space, const Labels& front);

  const HilbertSpace& source() const { return source_; }
  const HilbertSpace& target() const { return target_; }
  Eigen::Index front_dim() const { return front_dim_; }
  Eigen::Index rest_dim() const { return rest_dim_; }

  Vector forward(const Vector& v) const;
  Vector backward(const Vector& v) const;
  Matrix forward(const Matrix& m) const;
  Matrix backward(const Matrix& m) const;

 private:
  HilbertSpace source_;
  HilbertSpace target_;
  Eigen::Index front_dim_ = 1;
  Eigen::Index rest_dim_ = 1;
  std::vector<Eigen::Index> old_of_new_;
};

// Multi-index helpers (first digit most significant).
std::vector<int> digits_of(Eigen::Index index, const std::vector<int>& dims);
Eigen::Index index_of_digits(const std::vector<int>& digits, const std::vector<int>& dims);

class DensityOperator;

class StateVector {
 public:
  StateVector(HilbertSpace space, Vector amplitudes);
  static StateVector normalized(HilbertSpace space, const Vector& v);
  static StateVector basis(HilbertSpace space, const std::vector<int>& digits);

  const HilbertSpace& space() const { return space_; }
  const Vector& amplitudes() const { return amplitudes_; }

  DensityOperator density() const;
  DensityOperator reduced(const Labels& keep) const;
  // `order` must be a permutation of the labels.
  StateVector reordered(const Labels& order) const;
  StateVector relabeled(const std::string& from, const std::string& to) const;
  // Merges `members` into one subsystem placed where the first member was.
  StateVector grouped(const Labels& members, const std::string& label) const;

 private:
  HilbertSpace space_;
  Vector amplitudes_;
};

class DensityOperator {
 public:
  struct Trusted {};

  // Validates Hermiticity (1e-12), unit trace (1e-12) and min eigenvalue
  // (>= -1e-10), then stores the symmetrized matrix.
  DensityOperator(HilbertSpace space, Matrix matrix);
  // Positivity known by construction; Hermiticity and trace still checked.
  DensityOperator(HilbertSpace space, Matrix matrix, Trusted);
  // Normalizes the trace and clamps rounding-level negative eigenvalues. For
  // matrices that are positive in exact arithmetic (conditional states).
  static DensityOperator from_positive(HilbertSpace space, const Matrix& m);

  const HilbertSpace& space() const { return space_; }
  const Matrix& matrix() const { return matrix_; }

  DensityOperator reduced(const Labels& keep) const;
  DensityOperator reordered(const Labels& order) const;
  DensityOperator relabeled(const std::string& from, const std::string& to) const;
  DensityOperator grouped(const Labels& members, const std::string& label) const;

 private:
  HilbertSpace space_;
  Matrix matrix_;
};

class LinearOperator {
 public:
  enum class Kind { General, Hermitian, Unitary, Projector, PovmElement };

  LinearOperator(HilbertSpace space, Matrix matrix, Kind kind = Kind::General);

  const HilbertSpace& space() const { return space_; }
  const Matrix& matrix() const { return matrix_; }
  Kind kind() const { return kind_; }

 private:
  HilbertSpace space_;
  Matrix matrix_;
  Kind kind_;
};

const char* kind_name(LinearOperator::Kind kind);

StateVector tensor_product(const StateVector& a, const StateVector& b);
DensityOperator tensor_product(const DensityOperator& a, const DensityOperator& b);
LinearOperator tensor_product(const LinearOperator& a, const LinearOperator& b);
Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& a, const Vector& b);

DensityOperator partial_trace(const DensityOperator& rho, const Labels& keep);
// Raw versions; the kept subsystems stay in their original relative order.
Matrix partial_trace(const HilbertSpace& space, const Matrix& m, const Labels& keep);
Matrix reduced_from_pure(const HilbertSpace& space, const Vector& psi, const Labels& keep);

// Applies `op` (acting on `on`, in that order) to a vector or as a full matrix.
Vector apply_local(const HilbertSpace& space, const Vector& psi, const Labels& on, const Matrix& op);
Matrix embed(const HilbertSpace& space, const Labels& on, const Matrix& op);

// Purifying register of dimension rank(rho), appended last.
StateVector purify(const DensityOperator& rho, const std::string& new_label);

enum class SpectralFunction { Identity, Sqrt, InvSqrtOnSupport, Log2Clamped };

struct SpectralDecomposition {
  RealVector eigenvalues;  // ascending
  Matrix eigenvectors;     // columns
  Matrix applied;          // f(op)
};

// Off-support eigenvalues (|lambda| <= kSupportTol) map to 0 under
// InvSqrtOnSupport and Log2Clamped; Sqrt sends eigenvalues at or below kRootFloor to 0.
SpectralDecomposition hermitian_decompose(const LinearOperator& op, SpectralFunction f);
SpectralDecomposition hermitian_decompose(const Matrix& m, SpectralFunction f);
Matrix matrix_function(const Matrix& hermitian, SpectralFunction f);

double trace_distance(const DensityOperator& rho, const DensityOperator& sigma);
double fidelity(const DensityOperator& rho, const DensityOperator& sigma);
// Sum of |eigenvalues| of a Hermitian matrix (unnormalized trace norm).
double trace_norm(const Matrix& hermitian);
double fidelity(const Matrix& rho, const Matrix& sigma);
// Trace norm of |a><a| - |b><b| for (possibly subnormalized) vectors.
double trace_norm_pure_difference(const Vector& a, const Vector& b);

double max_abs(const Matrix& m);
bool is_hermitian(const Matrix& m, double tol);
bool is_unitary(const Matrix& m, double tol);

}  // namespace privlab

#endif  // PRIVLAB_TENSOR_HPP

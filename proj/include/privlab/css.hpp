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


#ifndef PRIVLAB_CSS_HPP
#define PRIVLAB_CSS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "privlab/gf.hpp"
#include "privlab/rng.hpp"
#include "privlab/tensor.hpp"

namespace privlab {

// Raised when no valid code can be drawn for the requested parameters.
class InfeasibleCode : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class StringBasis { Standard, Conjugate };
enum class ClassKind { Alpha, Beta, Lambda, Mu };

// CSS code over GF(d): Z-type rows M_z (m_z x n), X-type rows M_x (m_x x n),
// and k = n - m_z - m_x logical pairs with logical_z . logical_x^T = I.
class CssCode {
 public:
  CssCode(GfMatrix mz, GfMatrix mx, GfMatrix logical_z, GfMatrix logical_x);
  // Logicals by deterministic elimination, normalized to pair to the identity.
  static CssCode from_stabilizers(GfMatrix mz, GfMatrix mx);
  static CssCode trivial(int d, int n);

  int d() const { return mz_.modulus(); }
  int n() const { return mz_.cols(); }
  int m_z() const { return mz_.rows(); }
  int m_x() const { return mx_.rows(); }
  int k() const { return n() - m_z() - m_x(); }
  const GfMatrix& mz() const { return mz_; }
  const GfMatrix& mx() const { return mx_; }
  const GfMatrix& logical_z() const { return lz_; }
  const GfMatrix& logical_x() const { return lx_; }

  GfVector syndrome(const GfVector& s, StringBasis basis) const;
  GfVector logical_value(const GfVector& s, StringBasis basis) const;
  // Value of `kind` on a string (alpha/lambda read standard strings,
  // beta/mu read conjugate strings).
  GfVector class_value(const GfVector& s, ClassKind kind) const;
  int value_length(ClassKind kind) const;

  // Invertible G with G k = (lambda, alpha, gamma): the first k coordinates
  // are the logical value, the next m_z the Z syndrome.
  const GfMatrix& coordinates() const { return coords_; }

 private:
  GfMatrix mz_, mx_, lz_, lx_;
  GfMatrix coords_;
};

// Strings of length n over Z_d indexed with the first entry most significant.
GfVector string_of(Eigen::Index index, int d, int n);
Eigen::Index index_of_string(const GfVector& s, int d);
Eigen::Index pow_int(int base, int exp);

// Rows r_1..r_m, each uniform over the orthogonal complement of the earlier
// rows. Zero and dependent rows are possible.
GfMatrix sample_orthogonal_rows(int d, int n, int m, Rng& rng);

CssCode sample_universal_css(int d, int n, int m_z, int m_x, Rng& rng, int max_attempts = 10000);

// Projector onto the fiber of `value` on n qudits labelled `label`.
LinearOperator class_projector(const CssCode& code, const GfVector& value, ClassKind kind,
                               const std::string& label = "A");
// Index of the class of every string (value vectors read as base-d integers).
std::vector<Eigen::Index> class_of_strings(const CssCode& code, ClassKind kind);

struct LogicalOperators {
  std::vector<LinearOperator> z;  // Z^{s_j}
  std::vector<LinearOperator> x;  // X^{t_j}
};
LogicalOperators logical_operators(const CssCode& code, const std::string& label = "A");
// Z^{a} and X^{a} on n qudits for an exponent vector a.
Matrix z_string(int d, const GfVector& a);
Matrix x_string(int d, const GfVector& a);
// F^{(x)n} with columns |x~> for the Fourier basis.
Matrix fourier_matrix(int d, int n);

enum class RowSlice { Z, X };

struct UniversalityEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  double bound = 0.0;  // d^{-m}
  std::size_t trials = 0;
  std::size_t collisions = 0;
  GfVector k, k_prime;
};

// Collision probability of the sliced rows (Z: first m_z rows, X: last m_x)
// on a fixed pair k != k', over draws of sample_orthogonal_rows. The pair is
// drawn from rng when not given.
UniversalityEstimate universality_estimate(int d, int n, int m_z, int m_x, RowSlice slice, std::size_t trials,
                                           Rng& rng, std::optional<std::pair<GfVector, GfVector>> pair = {});

}  // namespace privlab

#endif  // PRIVLAB_CSS_HPP

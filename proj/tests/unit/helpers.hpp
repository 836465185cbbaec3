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


#ifndef PRIVLAB_TESTS_HELPERS_HPP
#define PRIVLAB_TESTS_HELPERS_HPP

#include <cmath>
#include <vector>

#include <Eigen/Eigenvalues>

#include "privlab/tensor.hpp"

namespace privlab::testing {

// Brute-force reduction over explicit digit loops. Slow, but shares nothing
// with the library's reordering machinery.
inline Matrix naive_partial_trace(const HilbertSpace& space, const Matrix& m, const std::vector<bool>& keep) {
  const auto& dims = space.dims();
  Eigen::Index kept = 1;
  std::vector<int> kept_dims;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (keep[i]) {
      kept *= dims[i];
      kept_dims.push_back(dims[i]);
    }
  }
  Matrix out = Matrix::Zero(kept, kept);
  const Eigen::Index n = space.total_dim();
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      auto dr = digits_of(r, dims), dc = digits_of(c, dims);
      bool diagonal_on_traced = true;
      std::vector<int> kr, kc;
      for (std::size_t i = 0; i < dims.size(); ++i) {
        if (keep[i]) {
          kr.push_back(dr[i]);
          kc.push_back(dc[i]);
        } else if (dr[i] != dc[i]) {
          diagonal_on_traced = false;
        }
      }
      if (!diagonal_on_traced) continue;
      out(index_of_digits(kr, kept_dims), index_of_digits(kc, kept_dims)) += m(r, c);
    }
  }
  return out;
}

// Entropy from scratch: eigenvalues through Eigen's generic complex solver.
inline double naive_entropy(const Matrix& rho) {
  Eigen::ComplexEigenSolver<Matrix> es(rho);
  double h = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double p = es.eigenvalues()(i).real();
    if (p > 1e-14) h -= p * std::log2(p);
  }
  return h;
}

inline double naive_trace_norm(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues().sum();
}

}  // namespace privlab::testing

#endif  // PRIVLAB_TESTS_HELPERS_HPP

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


#ifndef PRIVLAB_GF_HPP
#define PRIVLAB_GF_HPP

#include <optional>
#include <vector>

namespace privlab {

bool is_prime(int d);

using GfVector = std::vector<int>;

// Dense matrix over GF(d), d prime. Entries are kept reduced into [0, d).
class GfMatrix {
 public:
  GfMatrix(int d, int rows, int cols);
  static GfMatrix from_rows(int d, int cols, const std::vector<GfVector>& rows);
  static GfMatrix identity(int d, int n);

  int modulus() const { return d_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int at(int r, int c) const { return entries_[static_cast<std::size_t>(r * cols_ + c)]; }
  void set(int r, int c, long long v);
  GfVector row(int r) const;
  std::vector<GfVector> row_list() const;

  GfMatrix transpose() const;
  GfMatrix stacked(const GfMatrix& below) const;
  GfMatrix operator*(const GfMatrix& rhs) const;
  GfVector apply(const GfVector& v) const;  // M v
  bool is_zero() const;

  // Reduced row echelon form; pivot columns are chosen left to right.
  GfMatrix rref(std::vector<int>* pivots = nullptr) const;
  int rank() const;
  // Rows form a basis of {v : M v = 0}.
  GfMatrix nullspace() const;
  std::optional<GfMatrix> inverse() const;

  bool operator==(const GfMatrix& other) const {
    return d_ == other.d_ && rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
  }

 private:
  int d_, rows_, cols_;
  std::vector<int> entries_;
};

int mod_inverse(int a, int d);
int dot_mod(const GfVector& a, const GfVector& b, int d);

}  // namespace privlab

#endif  // PRIVLAB_GF_HPP

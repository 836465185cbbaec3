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


#include "privlab/gf.hpp"

#include <stdexcept>
#include <string>

namespace privlab {

bool is_prime(int d) {
  if (d < 2) return false;
  for (int f = 2; f * f <= d; ++f) {
    if (d % f == 0) return false;
  }
  return true;
}

int mod_inverse(int a, int d) {
  a %= d;
  if (a < 0) a += d;
  if (a == 0) throw std::invalid_argument("mod_inverse: zero has no inverse");
  // extended Euclid
  long long t = 0, new_t = 1, r = d, new_r = a;
  while (new_r != 0) {
    long long q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw std::invalid_argument("mod_inverse: not invertible");
  return static_cast<int>((t % d + d) % d);
}

int dot_mod(const GfVector& a, const GfVector& b, int d) {
  if (a.size() != b.size()) throw std::invalid_argument("dot_mod: length mismatch");
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * b[i];
  return static_cast<int>(((s % d) + d) % d);
}

GfMatrix::GfMatrix(int d, int rows, int cols) : d_(d), rows_(rows), cols_(cols) {
  if (!is_prime(d)) throw std::invalid_argument("GF(d) arithmetic: d must be prime, got " + std::to_string(d));
  if (rows < 0 || cols < 0) throw std::invalid_argument("GfMatrix: negative shape");
  entries_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
}

GfMatrix GfMatrix::from_rows(int d, int cols, const std::vector<GfVector>& rows) {
  GfMatrix m(d, static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows_; ++r) {
    if (static_cast<int>(rows[r].size()) != cols) throw std::invalid_argument("GfMatrix: row length mismatch");
    for (int c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

GfMatrix GfMatrix::identity(int d, int n) {
  GfMatrix m(d, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

void GfMatrix::set(int r, int c, long long v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("GfMatrix index");
  entries_[static_cast<std::size_t>(r * cols_ + c)] = static_cast<int>(((v % d_) + d_) % d_);
}

GfVector GfMatrix::row(int r) const {
  return GfVector(entries_.begin() + r * cols_, entries_.begin() + (r + 1) * cols_);
}

std::vector<GfVector> GfMatrix::row_list() const {
  std::vector<GfVector> out;
  for (int r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

GfMatrix GfMatrix::transpose() const {
  GfMatrix t(d_, cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
  }
  return t;
}

GfMatrix GfMatrix::stacked(const GfMatrix& below) const {
  if (below.d_ != d_ || below.cols_ != cols_) throw std::invalid_argument("GfMatrix::stacked: shape mismatch");
  GfMatrix s(d_, rows_ + below.rows_, cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) s.set(r, c, at(r, c));
  }
  for (int r = 0; r < below.rows_; ++r) {
    for (int c = 0; c < cols_; ++c) s.set(rows_ + r, c, below.at(r, c));
  }
  return s;
}

GfMatrix GfMatrix::operator*(const GfMatrix& rhs) const {
  if (rhs.d_ != d_ || rhs.rows_ != cols_) throw std::invalid_argument("GfMatrix product: shape mismatch");
  GfMatrix p(d_, rows_, rhs.cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < rhs.cols_; ++c) {
      long long s = 0;
      for (int k = 0; k < cols_; ++k) s += static_cast<long long>(at(r, k)) * rhs.at(k, c);
      p.set(r, c, s);
    }
  }
  return p;
}

GfVector GfMatrix::apply(const GfVector& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("GfMatrix::apply: length mismatch");
  GfVector out(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) {
    long long s = 0;
    for (int c = 0; c < cols_; ++c) s += static_cast<long long>(at(r, c)) * v[c];
    out[r] = static_cast<int>(((s % d_) + d_) % d_);
  }
  return out;
}

bool GfMatrix::is_zero() const {
  for (int e : entries_) {
    if (e != 0) return false;
  }
  return true;
}

GfMatrix GfMatrix::rref(std::vector<int>* pivots) const {
  GfMatrix m = *this;
  std::vector<int> piv;
  int lead_row = 0;
  for (int c = 0; c < cols_ && lead_row < rows_; ++c) {
    int sel = -1;
    for (int r = lead_row; r < rows_; ++r) {
      if (m.at(r, c) != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != lead_row) {
      for (int k = 0; k < cols_; ++k) {
        int tmp = m.at(sel, k);
        m.set(sel, k, m.at(lead_row, k));
        m.set(lead_row, k, tmp);
      }
    }
    const int inv = mod_inverse(m.at(lead_row, c), d_);
    for (int k = 0; k < cols_; ++k) m.set(lead_row, k, static_cast<long long>(m.at(lead_row, k)) * inv);
    for (int r = 0; r < rows_; ++r) {
      if (r == lead_row || m.at(r, c) == 0) continue;
      const int f = m.at(r, c);
      for (int k = 0; k < cols_; ++k) {
        m.set(r, k, m.at(r, k) - static_cast<long long>(f) * m.at(lead_row, k));
      }
    }
    piv.push_back(c);
    ++lead_row;
  }
  if (pivots) *pivots = piv;
  return m;
}

int GfMatrix::rank() const {
  std::vector<int> piv;
  rref(&piv);
  return static_cast<int>(piv.size());
}

GfMatrix GfMatrix::nullspace() const {
  std::vector<int> piv;
  GfMatrix r = rref(&piv);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
  for (int c : piv) is_pivot[c] = true;
  std::vector<GfVector> basis;
  for (int f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    GfVector v(static_cast<std::size_t>(cols_), 0);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = (d_ - r.at(static_cast<int>(i), f)) % d_;
    basis.push_back(v);
  }
  return from_rows(d_, cols_, basis);
}

std::optional<GfMatrix> GfMatrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  const int n = rows_;
  GfMatrix aug(d_, n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug.set(r, c, at(r, c));
    aug.set(r, n + r, 1);
  }
  std::vector<int> piv;
  GfMatrix red = aug.rref(&piv);
  if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) return std::nullopt;
  GfMatrix inv(d_, n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) inv.set(r, c, red.at(r, n + c));
  }
  return inv;
}

}  // namespace privlab

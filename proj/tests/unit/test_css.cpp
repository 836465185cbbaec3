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


#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <functional>

#include "privlab/css.hpp"
#include "privlab/gf.hpp"
#include "privlab/qudit.hpp"

namespace privlab {
namespace {

TEST(Gf, PrimesAndInverses) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(97));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
  for (int d : {3, 5, 7}) {
    for (int a = 1; a < d; ++a) EXPECT_EQ((a * mod_inverse(a, d)) % d, 1);
  }
  EXPECT_THROW(GfMatrix(4, 2, 2), std::invalid_argument);
}

TEST(Gf, RankNullspaceInverse) {
  Rng rng(1);
  for (int d : {2, 3, 5}) {
    for (int t = 0; t < 20; ++t) {
      GfMatrix m(d, 3, 5);
      for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 5; ++c) m.set(r, c, static_cast<long long>(rng.below(d)));
      }
      GfMatrix ns = m.nullspace();
      EXPECT_EQ(ns.rows() + m.rank(), 5);
      EXPECT_TRUE((m * ns.transpose()).is_zero());
      GfMatrix sq(d, 4, 4);
      for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) sq.set(r, c, static_cast<long long>(rng.below(d)));
      }
      auto inv = sq.inverse();
      EXPECT_EQ(inv.has_value(), sq.rank() == 4);
      if (inv) {
        EXPECT_EQ(sq * *inv, GfMatrix::identity(d, 4));
      }
    }
  }
  // Entries are reduced on the way in.
  GfMatrix m(3, 1, 1);
  m.set(0, 0, -1);
  EXPECT_EQ(m.at(0, 0), 2);
}

TEST(Strings, IndexRoundTrip) {
  for (Eigen::Index i = 0; i < 27; ++i) EXPECT_EQ(index_of_string(string_of(i, 3, 3), 3), i);
  EXPECT_EQ(string_of(5, 2, 3), (GfVector{1, 0, 1}));
}

void expect_valid(const CssCode& c) {
  EXPECT_TRUE((c.mz() * c.mx().transpose()).is_zero());
  EXPECT_EQ(c.mz().stacked(c.mx()).rank(), c.m_z() + c.m_x());
  EXPECT_EQ(c.logical_z() * c.logical_x().transpose(), GfMatrix::identity(c.d(), c.k()));
  EXPECT_TRUE((c.logical_z() * c.mx().transpose()).is_zero());
  EXPECT_TRUE((c.mz() * c.logical_x().transpose()).is_zero());
  EXPECT_TRUE(c.coordinates().inverse().has_value());
}

TEST(CssCode, SampledCodesAreValid) {
  Rng rng(2);
  for (auto [d, n, mz, mx] : std::vector<std::array<int, 4>>{{2, 3, 1, 0}, {2, 4, 1, 1}, {3, 3, 1, 1}, {5, 4, 2, 1}}) {
    for (int t = 0; t < 30; ++t) expect_valid(sample_universal_css(d, n, mz, mx, rng));
  }
  expect_valid(CssCode::trivial(3, 2));
  EXPECT_THROW(sample_universal_css(4, 3, 1, 0, rng), std::invalid_argument);
}

TEST(CssCode, ExhaustedAttemptsRaiseInfeasible) {
  // d = 2, n = 2, two rows: a draw is independent only for r1 in {10, 01}
  // (prob 1/2) followed by the other unit vector (prob 1/2). With a single
  // attempt allowed, 3/4 of the seeds must fail.
  int failures = 0;
  const int seeds = 400;
  for (int s = 0; s < seeds; ++s) {
    Rng rng(static_cast<std::uint64_t>(s));
    try {
      sample_universal_css(2, 2, 1, 1, rng, 1);
    } catch (const InfeasibleCode&) {
      ++failures;
    }
  }
  EXPECT_NEAR(failures / static_cast<double>(seeds), 0.75, 4.0 * std::sqrt(0.75 * 0.25 / seeds));
}

TEST(CssCode, CoordinatesSplitIntoLogicalAndSyndrome) {
  Rng rng(4);
  CssCode c = sample_universal_css(3, 4, 1, 1, rng);
  for (Eigen::Index i = 0; i < 81; ++i) {
    GfVector s = string_of(i, 3, 4);
    GfVector g = c.coordinates().apply(s);
    GfVector lam = c.class_value(s, ClassKind::Lambda), alpha = c.class_value(s, ClassKind::Alpha);
    for (int j = 0; j < c.k(); ++j) EXPECT_EQ(g[j], lam[j]);
    for (int j = 0; j < c.m_z(); ++j) EXPECT_EQ(g[c.k() + j], alpha[j]);
  }
}

TEST(CssCode, ClassProjectorsAreStabilizerEigenspaces) {
  Rng rng(5);
  const int d = 3;
  CssCode c = sample_universal_css(d, 3, 1, 1, rng);
  const Complex w = root_of_unity(d);
  const Matrix zs = z_string(d, c.mz().row(0)), xs = x_string(d, c.mx().row(0));
  Matrix sum_a = Matrix::Zero(27, 27), sum_b = Matrix::Zero(27, 27);
  for (int v = 0; v < d; ++v) {
    const Matrix pa = class_projector(c, {v}, ClassKind::Alpha).matrix();
    const Matrix pb = class_projector(c, {v}, ClassKind::Beta).matrix();
    // Z^{m}|s> = w^{m.s}|s>; X^{m}|t~> = w^{-m.t}|t~>.
    EXPECT_LT(max_abs(zs * pa - std::pow(w, v) * pa), 1e-10);
    EXPECT_LT(max_abs(xs * pb - std::pow(w, -v) * pb), 1e-10);
    EXPECT_LT(max_abs(pa * pa - pa), 1e-10);
    sum_a += pa;
    sum_b += pb;
  }
  EXPECT_LT(max_abs(sum_a - Matrix::Identity(27, 27)), 1e-10);
  EXPECT_LT(max_abs(sum_b - Matrix::Identity(27, 27)), 1e-10);
  // Alpha and beta projectors commute because the stabilizer rows are orthogonal.
  const Matrix pa = class_projector(c, {1}, ClassKind::Alpha).matrix();
  const Matrix pb = class_projector(c, {2}, ClassKind::Beta).matrix();
  EXPECT_LT(max_abs(pa * pb - pb * pa), 1e-10);
}

TEST(CssCode, LogicalOperatorAlgebra) {
  Rng rng(6);
  for (int d : {2, 3}) {
    CssCode c = sample_universal_css(d, 4, 1, 1, rng);
    LogicalOperators ops = logical_operators(c);
    ASSERT_EQ(static_cast<int>(ops.z.size()), c.k());
    const Complex w = root_of_unity(d);
    const Matrix sz = z_string(d, c.mz().row(0)), sx = x_string(d, c.mx().row(0));
    for (int j = 0; j < c.k(); ++j) {
      for (int k = 0; k < c.k(); ++k) {
        const Matrix& z = ops.z[static_cast<std::size_t>(k)].matrix();
        const Matrix& x = ops.x[static_cast<std::size_t>(j)].matrix();
        // Zbar_k Xbar_j = w^{delta_jk} Xbar_j Zbar_k.
        EXPECT_LT(max_abs(z * x - (j == k ? w : Complex(1.0)) * x * z), 1e-10);
      }
      // Logicals commute with the stabilizers.
      const Matrix& z = ops.z[static_cast<std::size_t>(j)].matrix();
      const Matrix& x = ops.x[static_cast<std::size_t>(j)].matrix();
      EXPECT_LT(max_abs(z * sx - sx * z), 1e-10);
      EXPECT_LT(max_abs(x * sz - sz * x), 1e-10);
    }
  }
}

TEST(CssCode, ClassIndicesPartitionStrings) {
  CssCode c = CssCode::from_stabilizers(GfMatrix::from_rows(2, 3, {{1, 1, 0}}), GfMatrix::from_rows(2, 3, {}));
  auto alpha = class_of_strings(c, ClassKind::Alpha);
  std::vector<int> sizes(2, 0);
  for (auto a : alpha) ++sizes[static_cast<std::size_t>(a)];
  EXPECT_EQ(sizes[0], 4);
  EXPECT_EQ(sizes[1], 4);
  EXPECT_EQ(alpha[static_cast<std::size_t>(index_of_string({1, 0, 0}, 2))], 1);
  EXPECT_EQ(alpha[static_cast<std::size_t>(index_of_string({1, 1, 1}, 2))], 0);
}

TEST(CssCode, RejectsNonOrthogonalStabilizers) {
  EXPECT_THROW(CssCode::from_stabilizers(GfMatrix::from_rows(2, 2, {{1, 0}}), GfMatrix::from_rows(2, 2, {{1, 0}})),
               std::invalid_argument);
}

// Exact collision probability for the sequential sampler: row i is uniform
// over vectors orthogonal to rows 1..i-1. Brute-force enumeration, no linear
// algebra shared with the library.
double exact_collision(int d, int n, int m, const GfVector& delta) {
  std::vector<GfVector> all;
  for (Eigen::Index i = 0; i < pow_int(d, n); ++i) all.push_back(string_of(i, d, n));
  auto dot = [&](const GfVector& a, const GfVector& b) {
    int s = 0;
    for (int i = 0; i < n; ++i) s += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(i)];
    return s % d;
  };
  std::function<double(std::vector<GfVector>&, int)> rec = [&](std::vector<GfVector>& rows, int left) -> double {
    if (left == 0) return 1.0;
    std::size_t count = 0;
    double hit = 0.0;
    for (const auto& v : all) {
      bool ok = true;
      for (const auto& r : rows) ok = ok && dot(v, r) == 0;
      if (!ok) continue;
      ++count;
      if (dot(v, delta) != 0) continue;
      rows.push_back(v);
      hit += rec(rows, left - 1);
      rows.pop_back();
    }
    return hit / static_cast<double>(count);
  };
  std::vector<GfVector> rows;
  return rec(rows, m);
}

struct UniCase {
  int d, n, m;
};

class UniversalityTest : public ::testing::TestWithParam<UniCase> {};

TEST_P(UniversalityTest, UnitVectorDifferenceMeetsBoundExactly) {
  const auto [d, n, m] = GetParam();
  GfVector e0(static_cast<std::size_t>(n), 0);
  e0[0] = 1;
  EXPECT_NEAR(exact_collision(d, n, m, e0), std::pow(d, -m), 1e-12);
}

TEST_P(UniversalityTest, EstimatorAgreesWithEnumeration) {
  const auto [d, n, m] = GetParam();
  GfVector zero(static_cast<std::size_t>(n), 0), e0 = zero;
  e0[0] = 1;
  Rng rng(7);
  UniversalityEstimate u = universality_estimate(d, n, m, 0, RowSlice::Z, 20000, rng, std::make_pair(zero, e0));
  const double exact = exact_collision(d, n, m, e0);
  EXPECT_LE(std::abs(u.estimate - exact), 4.0 * std::sqrt(exact * (1 - exact) / 20000.0));
  EXPECT_DOUBLE_EQ(u.bound, std::pow(d, -m));
}

INSTANTIATE_TEST_SUITE_P(Cases, UniversalityTest,
                         ::testing::Values(UniCase{2, 3, 1}, UniCase{2, 4, 2}, UniCase{3, 3, 2}));

TEST(Universality, SelfOrthogonalDifferencesExceedTheBound) {
  // Once the first row is orthogonal to a self-orthogonal difference, later
  // rows drawn from its complement are biased toward it as well. Values are
  // exact rationals from enumeration.
  EXPECT_NEAR(exact_collision(2, 4, 2, {1, 1, 0, 0}), 9.0 / 32.0, 1e-12);
  EXPECT_NEAR(exact_collision(3, 3, 2, {1, 1, 1}), 13.0 / 81.0, 1e-12);
  // A single row is exactly universal for every nonzero difference.
  EXPECT_NEAR(exact_collision(3, 3, 1, {1, 1, 1}), 1.0 / 3.0, 1e-12);
}

}  // namespace
}  // namespace privlab

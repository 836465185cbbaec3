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

#include <cmath>

#include "helpers.hpp"
#include "privlab/random.hpp"
#include "privlab/rng.hpp"
#include "privlab/tensor.hpp"

namespace privlab {
namespace {

using testing::naive_partial_trace;
using testing::naive_trace_norm;

TEST(HilbertSpace, RejectsBadShapes) {
  EXPECT_THROW(HilbertSpace({2, 2}, {"A"}), std::invalid_argument);
  EXPECT_THROW(HilbertSpace({2, 2}, {"A", "A"}), std::invalid_argument);
  EXPECT_THROW(HilbertSpace({0}, {"A"}), std::invalid_argument);
  // Dimension one is a legal placeholder register.
  EXPECT_NO_THROW(HilbertSpace({1, 3}, {"A", "B"}));
}

TEST(HilbertSpace, DigitsAreMostSignificantFirst) {
  const std::vector<int> dims{2, 3, 4};
  EXPECT_EQ(index_of_digits({1, 2, 3}, dims), 1 * 12 + 2 * 4 + 3);
  for (Eigen::Index i = 0; i < 24; ++i) EXPECT_EQ(index_of_digits(digits_of(i, dims), dims), i);
}

TEST(StateVector, BasisStateLandsOnFlatIndex) {
  StateVector s = StateVector::basis(HilbertSpace({2, 3}, {"A", "B"}), {1, 2});
  EXPECT_DOUBLE_EQ(std::abs(s.amplitudes()(5)), 1.0);
}

TEST(StateVector, RejectsUnnormalized) {
  Vector v = Vector::Ones(2);
  EXPECT_THROW(StateVector(HilbertSpace({2}, {"A"}), v), std::invalid_argument);
}

TEST(PartialTrace, MatchesBruteForce) {
  Rng rng(11);
  HilbertSpace space({2, 3, 2}, {"A", "B", "C"});
  for (int t = 0; t < 5; ++t) {
    DensityOperator rho = random_density(space, rng);
    Matrix lib = partial_trace(rho, {"A", "C"}).matrix();
    Matrix ref = naive_partial_trace(space, rho.matrix(), {true, false, true});
    EXPECT_LT(max_abs(lib - ref), 1e-12);
    Matrix b = partial_trace(rho, {"B"}).matrix();
    EXPECT_LT(max_abs(b - naive_partial_trace(space, rho.matrix(), {false, true, false})), 1e-12);
  }
}

TEST(PartialTrace, PureReductionAgreesWithDensity) {
  Rng rng(12);
  HilbertSpace space({3, 2, 2}, {"A", "B", "E"});
  StateVector psi = random_pure_state(space, rng);
  // Kept factors stay in their original order whatever order they are named in.
  Matrix a = reduced_from_pure(space, psi.amplitudes(), {"E", "A"});
  Matrix b = naive_partial_trace(space, psi.density().matrix(), {true, false, true});
  EXPECT_LT(max_abs(a - b), 1e-12);
}

TEST(Reordering, RoundTrips) {
  Rng rng(13);
  HilbertSpace space({2, 3, 4}, {"A", "B", "C"});
  StateVector psi = random_pure_state(space, rng);
  StateVector back = psi.reordered({"C", "A", "B"}).reordered({"A", "B", "C"});
  EXPECT_LT((back.amplitudes() - psi.amplitudes()).norm(), 1e-14);
  // |a>|b> reordered is |b>|a>.
  StateVector a = random_pure_state(HilbertSpace({2}, {"A"}), rng);
  StateVector b = random_pure_state(HilbertSpace({3}, {"B"}), rng);
  StateVector ba = tensor_product(b, a);
  EXPECT_LT((tensor_product(a, b).reordered({"B", "A"}).amplitudes() - ba.amplitudes()).norm(), 1e-14);
}

TEST(Embed, LocalOperatorActsOnNamedFactor) {
  Rng rng(14);
  HilbertSpace space({2, 3}, {"A", "B"});
  Matrix u = random_unitary(3, rng);
  Matrix full = embed(space, {"B"}, u);
  EXPECT_LT(max_abs(full - kron(Matrix::Identity(2, 2), u)), 1e-14);
  StateVector psi = random_pure_state(space, rng);
  EXPECT_LT((apply_local(space, psi.amplitudes(), {"B"}, u) - full * psi.amplitudes()).norm(), 1e-13);
}

TEST(Purify, ReproducesStateAndUsesRank) {
  Rng rng(15);
  HilbertSpace space({2, 2}, {"A", "B"});
  DensityOperator rho = random_density(space, rng, 2);
  StateVector psi = purify(rho, "E");
  EXPECT_EQ(psi.space().dim("E"), 2);
  EXPECT_LT(max_abs(psi.reduced({"A", "B"}).matrix() - rho.matrix()), 1e-12);
}

TEST(Distances, TraceNormAgreesWithSingularValues) {
  Rng rng(16);
  HilbertSpace space({2, 2}, {"A", "B"});
  for (int t = 0; t < 10; ++t) {
    DensityOperator r = random_density(space, rng), s = random_density(space, rng);
    const Matrix diff = r.matrix() - s.matrix();
    EXPECT_NEAR(trace_norm(diff), naive_trace_norm(diff), 1e-12);
  }
}

TEST(Distances, FuchsVanDeGraafHolds) {
  Rng rng(17);
  HilbertSpace space({3}, {"A"});
  for (int t = 0; t < 50; ++t) {
    DensityOperator r = random_density(space, rng), s = random_density(space, rng);
    const double td = trace_distance(r, s), f = fidelity(r, s);
    EXPECT_LE(1.0 - f, td + 1e-12);
    EXPECT_LE(td, std::sqrt(1.0 - f * f) + 1e-12);
  }
}

TEST(Distances, PureStateFidelityIsOverlap) {
  Rng rng(18);
  HilbertSpace space({4}, {"A"});
  StateVector a = random_pure_state(space, rng), b = random_pure_state(space, rng);
  const double overlap = std::abs(a.amplitudes().dot(b.amplitudes()));
  EXPECT_NEAR(fidelity(a.density(), b.density()), overlap, 1e-10);
  EXPECT_NEAR(trace_distance(a.density(), b.density()), std::sqrt(1.0 - overlap * overlap), 1e-10);
}

TEST(Distances, PureDifferenceFormulaMatchesDenseNorm) {
  Rng rng(19);
  for (int t = 0; t < 20; ++t) {
    Vector a = ginibre(5, 1, rng).col(0) * 0.3, b = ginibre(5, 1, rng).col(0) * 0.2;
    Matrix dense = a * a.adjoint() - b * b.adjoint();
    EXPECT_NEAR(trace_norm_pure_difference(a, b), naive_trace_norm(dense), 1e-12);
  }
  // Nearly identical vectors: no catastrophic cancellation.
  Vector a = Vector::Zero(3);
  a(0) = 1.0;
  Vector b = a;
  b(1) = 1e-9;
  EXPECT_NEAR(trace_norm_pure_difference(a, b), 2e-9, 1e-15);
}

TEST(Spectral, SqrtSquaresBackAndClampsRoundoff) {
  Rng rng(20);
  DensityOperator rho = random_density(HilbertSpace({3}, {"A"}), rng);
  Matrix s = matrix_function(rho.matrix(), SpectralFunction::Sqrt);
  EXPECT_LT(max_abs(s * s - rho.matrix()), 1e-12);
  Matrix tiny = Matrix::Zero(2, 2);
  tiny(0, 0) = 1.0;
  tiny(1, 1) = -1e-16;
  EXPECT_EQ(matrix_function(tiny, SpectralFunction::Sqrt)(1, 1), Complex(0.0));
}

TEST(Random, UnitaryAndDensityAreValid) {
  Rng rng(21);
  EXPECT_TRUE(is_unitary(random_unitary(4, rng), 1e-12));
  DensityOperator r = random_density(HilbertSpace({2, 2}, {"A", "B"}), rng, 1);
  EXPECT_NEAR(r.matrix().trace().real(), 1.0, 1e-12);
  EXPECT_NEAR((r.matrix() * r.matrix()).trace().real(), 1.0, 1e-12);
  auto p = random_distribution(6, rng);
  double sum = 0.0;
  for (double x : p) {
    EXPECT_GE(x, 0.0);
    sum += x;
  }
  EXPECT_NEAR(sum, 1.0, 1e-12);
}

TEST(Rng, FrozenStreamValues) {
  // Outputs of the named generator, computed by an independent SplitMix64
  // script. Other implementations must reproduce them exactly.
  Rng a(0);
  EXPECT_EQ(a(), 0x568a9b0b1a2c05ecULL);
  EXPECT_EQ(a(), 0x44e5b8b147ef718bULL);
  EXPECT_EQ(a(), 0x458563ab55521133ULL);
  Rng b(42);
  EXPECT_EQ(b(), 0xca685846b557f0fcULL);
  Rng sub = b.substream(0);
  EXPECT_EQ(sub(), 0x33aa906d7b87bf0eULL);
  EXPECT_EQ(sub(), 0xdf307a5b580bbdc1ULL);
  Rng u(7);
  EXPECT_DOUBLE_EQ(u.uniform(), 0.4813487918628434);
}

TEST(Rng, BelowStaysInRange) {
  Rng r(5);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) ++hits[r.below(7)];
  for (int h : hits) EXPECT_GT(h, 800);
}

}  // namespace
}  // namespace privlab

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
#include "privlab/discrimination.hpp"
#include "privlab/random.hpp"

namespace privlab {
namespace {

const HilbertSpace kQubit({2}, {"A"});

StateVector qubit(double theta) {
  Vector v(2);
  v << std::cos(theta), std::sin(theta);
  return StateVector(kQubit, v);
}

TEST(Helstrom, PurePairMatchesClosedForm) {
  for (double theta : {0.1, 0.4, 0.9}) {
    for (double p0 : {0.5, 0.3}) {
      StateVector a = qubit(0.0), b = qubit(theta);
      const double ov = std::cos(theta);
      const double closed = 0.5 * (1.0 - std::sqrt(1.0 - 4.0 * p0 * (1 - p0) * ov * ov));
      HelstromResult h = helstrom_pair(a.density(), b.density(), p0, 1.0 - p0);
      EXPECT_NEAR(h.error, closed, 1e-12);
      // The returned POVM achieves the value it reports.
      const double achieved = p0 * (h.povm.element(1) * a.density().matrix()).trace().real() +
                              (1 - p0) * (h.povm.element(0) * b.density().matrix()).trace().real();
      EXPECT_NEAR(achieved, h.error, 1e-12);
    }
  }
}

TEST(Helstrom, MixedPairMatchesTraceNorm) {
  Rng rng(1);
  HilbertSpace space({3}, {"A"});
  for (int t = 0; t < 10; ++t) {
    DensityOperator r0 = random_density(space, rng), r1 = random_density(space, rng);
    const double p0 = 0.2 + 0.6 * rng.uniform();
    const double ref = 0.5 * (1.0 - testing::naive_trace_norm(p0 * r0.matrix() - (1 - p0) * r1.matrix()));
    EXPECT_NEAR(helstrom_pair(r0, r1, p0, 1 - p0).error, ref, 1e-10);
    EXPECT_NEAR(helstrom_error_weighted(p0 * r0.matrix(), (1 - p0) * r1.matrix()), ref, 1e-10);
  }
}

TEST(Helstrom, RejectsBadPriors) {
  DensityOperator r = qubit(0).density();
  EXPECT_THROW(helstrom_pair(r, r, 0.5, 0.6), std::invalid_argument);
  EXPECT_THROW(helstrom_pair(r, r, -0.1, 1.1), std::invalid_argument);
}

TEST(Pgm, OptimalForTwoEquiprobablePureStates) {
  const double theta = 0.5;
  CqEnsemble e({0.5, 0.5}, {qubit(0).density(), qubit(theta).density()});
  Povm m = pgm(e);
  const double ov = std::cos(theta);
  EXPECT_NEAR(pgm_error(e, m), 0.5 * (1.0 - std::sqrt(1.0 - ov * ov)), 1e-12);
}

TEST(Pgm, CompleteWithFailOnKernel) {
  // Two states spanning one direction of a qutrit leave a 2-dimensional kernel.
  HilbertSpace a({3}, {"A"});
  CqEnsemble e({0.6, 0.4}, {StateVector::basis(a, {0}).density(), StateVector::basis(a, {0}).density()});
  Povm m = pgm(e);
  ASSERT_TRUE(m.fail_index().has_value());
  Matrix sum = Matrix::Zero(3, 3);
  for (std::size_t i = 0; i < m.size(); ++i) sum += m.element(i);
  EXPECT_LT(max_abs(sum - Matrix::Identity(3, 3)), 1e-12);
  EXPECT_NEAR(m.element(*m.fail_index()).trace().real(), 2.0, 1e-12);
  // Identical states: the PGM splits by prior.
  EXPECT_NEAR(pgm_error(e, m), 1.0 - (0.6 * 0.6 + 0.4 * 0.4), 1e-12);
}

TEST(Pgm, NeverBeatsHelstrom) {
  Rng rng(2);
  for (int t = 0; t < 20; ++t) {
    DensityOperator r0 = random_density(kQubit, rng), r1 = random_density(kQubit, rng);
    CqEnsemble e({0.4, 0.6}, {r0, r1});
    EXPECT_GE(pgm_error(e, pgm(e)), helstrom_pair(r0, r1, 0.4, 0.6).error - 1e-12);
  }
}

TEST(ClassDecoder, ErrorsAddUpAndPovmsAreComplete) {
  Rng rng(3);
  HilbertSpace space({4}, {"B"});
  std::vector<DensityOperator> states;
  for (int k = 0; k < 6; ++k) states.push_back(random_density(space, rng, 1));
  CqEnsemble e(random_distribution(6, rng), states);
  Partition classes = partition_by({0, 1, 0, 1, 2, 2}, 3);
  ASSERT_EQ(classes[1], (std::vector<std::size_t>{1, 3}));
  ClassDecoder dec = hsw_class_decoder(e, classes, {});
  double total = 0.0;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    Matrix sum = Matrix::Zero(4, 4);
    for (std::size_t i = 0; i < dec.povms[c].size(); ++i) sum += dec.povms[c].element(i);
    EXPECT_LT(max_abs(sum - Matrix::Identity(4, 4)), 1e-10);
    EXPECT_EQ(dec.povms[c].size(), classes[c].size() + 1);
    total += dec.class_errors[c];
  }
  EXPECT_NEAR(dec.average_error, total, 1e-14);
}

TEST(ClassDecoder, OrthogonalMembersDecodePerfectly) {
  HilbertSpace space({4}, {"B"});
  std::vector<DensityOperator> states;
  for (int k = 0; k < 4; ++k) states.push_back(StateVector::basis(space, {k}).density());
  CqEnsemble e({0.25, 0.25, 0.25, 0.25}, states);
  ClassDecoder dec = hsw_class_decoder(e, partition_by({0, 0, 1, 1}, 2), {});
  EXPECT_NEAR(dec.average_error, 0.0, 1e-12);
  EXPECT_THROW(hsw_class_decoder(e, {{0, 1}, {1, 2}}, {}), std::invalid_argument);
  EXPECT_THROW(hsw_class_decoder(e, {{0, 1}, {2}}, {}), std::invalid_argument);
}

TEST(Typicality, ProjectorsAreProjectors) {
  Rng rng(4);
  IidLetters iid;
  iid.probs = {0.7, 0.3};
  iid.states = {random_density(kQubit, rng), random_density(kQubit, rng)};
  iid.n = 3;
  TypicalProjectors tp = typical_projectors(iid, 0.3);
  EXPECT_LT(max_abs(tp.q * tp.q - tp.q), 1e-10);
  EXPECT_EQ(tp.q_k.size(), 8u);
  for (const auto& qk : tp.q_k) EXPECT_LT(max_abs(qk * qk - qk), 1e-10);
  EXPECT_GE(tp.average_entropy, tp.conditional_entropy - 1e-12);
}

}  // namespace
}  // namespace privlab

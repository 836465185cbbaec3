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


#ifndef PRIVLAB_PRIVACY_HPP
#define PRIVLAB_PRIVACY_HPP

#include <optional>
#include <string>
#include <vector>

#include "privlab/povm.hpp"
#include "privlab/qudit.hpp"
#include "privlab/tensor.hpp"

namespace privlab {

// Key registers; every other subsystem of a psi^{ABS} input is shield.
struct KeyLabels {
  std::string a = "A";
  std::string b = "B";
};

struct PrivacyReport {
  double p_e = 0.0;
  double p_tilde_e = 0.0;
  double eps_certified = 0.0;  // p_e + sqrt(p_tilde_e)
  double eps_direct = 0.0;     // 1/2 ||rho^{ABE} - kappa^{ABE}||_1
  std::string measurement;     // description of the conjugate POVM
};

struct KeyErrorRates {
  double p_e = 0.0;
  double p_tilde_e = 0.0;
};

// p_e from standard-basis readout of A and B; p_tilde_e from the conjugate
// basis on A against conj_povm (first d outcomes are guesses, anything after
// them, e.g. "fail", counts as an error).
KeyErrorRates key_error_rates(const DensityOperator& psi, const ConjugateBasis& basis, const Povm& conj_povm,
                              const KeyLabels& keys = {});

// Throws NumericalError when eps_direct exceeds eps_certified + 1e-6.
PrivacyReport certify_private(const DensityOperator& psi, const ConjugateBasis& basis, const Povm& conj_povm,
                              const KeyLabels& keys = {});

// Purify over E, read A and B in the standard basis and compare with
// kappa = (1/d) sum_k |kk><kk| (x) rho^E, rho^E the ccq state's own marginal.
double epsilon_secret_direct(const DensityOperator& psi, const KeyLabels& keys = {});

// Standard-basis readout of `labels`, coarse-grained to key values.
struct KeyReadout {
  Labels labels;
  std::vector<Eigen::Index> value_of;  // per basis index of `labels`
  std::size_t num_values = 0;
};
KeyReadout identity_readout(const HilbertSpace& space, const std::string& label);

// Trace distance between the ccq state (alice, bob, eve) of a pure state and
// the ideal key with the same Eve marginal. Other subsystems are traced out.
double epsilon_secret_ccq(const StateVector& psi, const KeyReadout& alice, const KeyReadout& bob, const Labels& eve);

// Lambda_y = U^{BS} (P~*_y (x) 1) U^{BS dagger}, U^{BS} = sum_k P_k (x) V_kk.
Povm twisting_conjugate_measurement(const TwistingOperator& t, const ConjugateBasis& basis);

struct UhlmannResult {
  Povm povm;  // on B and the shield
  double p_e = 0.0;
  double p_tilde_e = 0.0;
  double eps = 0.0;          // value the bound was checked against
  double eps_direct = 0.0;   // own estimate for the same state
  double fidelity = 0.0;     // achieved overlap of the two purifications
  double bound = 0.0;        // 2 eps - eps^2
  int extra_purifier_dim = 1;  // dimension of R'' added to S A' B'
  bool rank_deficient = false;
};

// Builds the conjugate measurement from the fidelity-achieving purification of
// the ideal key state. Throws NumericalError if p_tilde_e > 2 eps - eps^2 + 1e-6
// or p_e > eps + 1e-9.
UhlmannResult uhlmann_conjugate_measurement(const DensityOperator& psi, double eps,
                                            const ConjugateBasis& basis, const KeyLabels& keys = {});
// Fourier conjugate basis.
UhlmannResult uhlmann_conjugate_measurement(const DensityOperator& psi, double eps, const KeyLabels& keys = {});

}  // namespace privlab

#endif  // PRIVLAB_PRIVACY_HPP

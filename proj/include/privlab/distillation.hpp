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


#ifndef PRIVLAB_DISTILLATION_HPP
#define PRIVLAB_DISTILLATION_HPP

#include <string>
#include <vector>

#include "privlab/css.hpp"
#include "privlab/discrimination.hpp"
#include "privlab/povm.hpp"
#include "privlab/privacy.hpp"
#include "privlab/qudit.hpp"
#include "privlab/tensor.hpp"

namespace privlab {

// Alice's register, Bob's key registers and Eve. Every other subsystem is
// shield. Eve may be empty when the input is already pure on A B S.
struct DistillLabels {
  std::string a = "A";
  Labels b = {"B"};
  Labels e = {"E"};
};

// n copies of psi with every subsystem grouped over the copies, copy 0 the
// most significant digit.
StateVector tensor_power(const StateVector& psi, int n);

// |psi_a> = sum_k sqrt(p_k) |k>^A |k>^C |phi_k>, C inserted right after A.
StateVector extend_with_copy(const StateVector& psi, int d, const std::string& a = "A", const std::string& c = "C");

struct RateBreakdown {
  double i_zb = 0.0;     // I(Z^A : B)
  double h_z = 0.0;      // H(Z^A)
  double i_x_cbs = 0.0;  // I(X^A : C B S) on the copy extension
  double i_ze = 0.0;     // I(Z^A : E)
  double rate = 0.0;     // i_zb - h_z + i_x_cbs, not clamped
  double ck_rate = 0.0;  // i_zb - i_ze
  double coherent_info = 0.0;  // S(B) - S(AB)
  double lemma2_residual = 0.0;  // |i_x_cbs - (h_z - i_ze)|
};

// Z is the standard basis of A, X the given conjugate basis.
RateBreakdown distillable_rate(const StateVector& psi, const ConjugateBasis& x, const DistillLabels& labels = {});
// Purifies into a fresh Eve register first. Subsystems other than a and b are shield.
RateBreakdown distillable_rate(const DensityOperator& rho, const ConjugateBasis& x, const std::string& a = "A",
                               const Labels& b = {"B"});

struct Corollary1Check {
  double via_entropies = 0.0;  // S(B) - S(E)
  double via_basis = 0.0;      // I(Z:B) - I(Z:E), Z the eigenbasis of rho^A
  double residual = 0.0;
};
Corollary1Check corollary1_check(const DensityOperator& rho, const std::string& a = "A", const Labels& b = {"B"});

// Decoders indexed by syndrome. key[alpha] acts on the key registers of Bob,
// conj[beta] on Bob's registers plus the shield; both have d^n outcomes, one
// per string.
struct DecoderFamilies {
  std::vector<Povm> key;
  std::vector<Povm> conj;
};

struct SyndromeRecord {
  GfVector value;
  double probability = 0.0;
};

// Remaining room for two-way reconciliation or encrypted syndromes: both
// lists are complete, only the flags say who holds them.
struct Transcript {
  std::vector<SyndromeRecord> alpha;
  std::vector<SyndromeRecord> beta;
  bool alpha_public = true;
  bool beta_public = false;
};

struct DistillationOutcome {
  StateVector final_state;  // registers of the input, then R, T and B2
  Eigen::Index key_dims = 1;
  PrivacyReport report;     // on the encoded key lambda (and mu for p_tilde_e)
  Transcript transcript;
  // The two hypotheses of the protocol evaluated on the string level.
  double p_e_strings = 0.0;
  double p_tilde_e_strings = 0.0;
};

// Runs the one-way protocol: syndrome projections with alpha kept in a
// public register R and beta in Alice's register T, Bob's coherent key
// measurement into B2, then certification on the encoded key. Throws
// NumericalError if eps_direct exceeds the certified value or a proof step
// fails numerically.
DistillationOutcome one_shot_distill(const StateVector& psi, const CssCode& code, const DecoderFamilies& decoders,
                                     const DistillLabels& labels = {});

struct HswDecoders {
  DecoderFamilies families;
  double eps_z = 0.0;  // average error of the key decoder
  double eps_x = 0.0;  // average error of the conjugate decoder
};

// Class decoders from hsw_class_decoder for both bases. The "fail" element
// of each class is folded into its first member.
HswDecoders make_hsw_decoders(const StateVector& psi, const CssCode& code, const HswConfig& cfg = {},
                              const DistillLabels& labels = {});

// Expands a class POVM (members then fail) to one outcome per string.
Povm expand_class_povm(const Povm& class_povm, const std::vector<std::size_t>& members, Eigen::Index num_strings);

struct HashingResult {
  int d = 2;  // after padding
  int n = 1;
  Eigen::Index total_dim = 0;
  Eigen::Index key_dims = 1;
  double eps_z = 0.0;
  double eps_x = 0.0;
  double overlap_2 = 0.0;       // Re <Psi2|Psi2'>
  double distance_2 = 0.0;      // ||Psi2 - Psi2'||_1
  double distance_3 = 0.0;      // ||Psi3' - Psi3''||_1
  double distance_4 = 0.0;      // ||Psi4 - Psi4''||_1
  double bound_2 = 0.0;         // 2 sqrt(2 eps_z)
  double bound_3 = 0.0;         // 2 sqrt(2 eps_x)
  double bound_rhs = 0.0;       // 2 (sqrt(2 eps_z) + sqrt(2 eps_x))
  double encoded_fidelity = 0.0;  // root fidelity of the encoded A D marginal with the target
  double encoded_distance = 0.0;  // ||rho - target||_1 on the encoded pair
};

inline constexpr Eigen::Index kHashingAmplitudeCap = Eigen::Index{1} << 20;

// Simulates the coherent hashing protocol on n copies of rho^{AB} with PGM
// decoders. The encoded target is sum_l |l>|-l>, which is Phi after Bob
// relabels l -> -l on his encoded register. Throws std::length_error past
// the amplitude cap and NumericalError if a step of the chain fails.
HashingResult coherent_hashing_sim(const DensityOperator& rho, int n, const CssCode& code);

enum class StabilizerChoice { XX, XI, IX };
const char* stabilizer_choice_name(StabilizerChoice c);
StabilizerChoice parse_stabilizer_choice(const std::string& name);

// phi0 = |0>, phi1 = s|0> + sqrt(1 - s^2)|1> on a qubit shield.
std::pair<StateVector, StateVector> appendix_d_shields(double s);
// (|00>+|11>)|phi0>|0>/2 + (|00>-|11>)|phi1>|1>/2 on A, B, S, E.
StateVector appendix_d_copy(const StateVector& phi0, const StateVector& phi1);
// Two copies of the above grouped into A, B, S, E.
StateVector appendix_d_state(const StateVector& phi0, const StateVector& phi1);
CssCode appendix_d_code(StabilizerChoice choice);

struct AppendixDResult {
  double error = 0.0;           // conjugate error on the encoded value
  double analytic_single = 0.0;  // 1/2 - 1/2 sqrt(1 - |<phi0|phi1>|^2)
  double analytic_pair = 0.0;    // 1/2 - 1/2 sqrt(1 - |<phi0|phi1>|^4)
  double overlap = 0.0;          // |<phi0|phi1>|
  DistillationOutcome outcome;
  // Tr[P^{0}_+ P^{1}_+] and Tr[P^{0}_+ P^{1}_-] for the shield-only
  // projectors onto positive and negative parts of the beta = 0, 1 differences.
  double overlap_plus_plus = 0.0;
  double overlap_plus_minus = 0.0;
  bool beta_dependent = false;
  std::string measurement;
};

// adaptive: per-syndrome Helstrom measurement on B and S. Otherwise the
// product of single-copy Helstrom measurements, the same for every beta.
AppendixDResult appendix_d_scenario(const StateVector& phi0, const StateVector& phi1, StabilizerChoice choice,
                                    bool adaptive);

}  // namespace privlab

#endif  // PRIVLAB_DISTILLATION_HPP

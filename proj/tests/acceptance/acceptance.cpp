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


// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli/config.hpp"
#include "cli/dispatch.hpp"
#include "cli/report.hpp"
#include "privlab/distillation.hpp"
#include "privlab/info.hpp"
#include "privlab/privacy.hpp"
#include "privlab/random.hpp"

using namespace privlab;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Accumulates failed checks with a readable reason.
class Checks {
 public:
  void require(bool cond, const std::string& what) {
    if (!cond && failures_.size() < 5) failures_.push_back(what);
    ok_ = ok_ && cond;
  }
  Outcome done(const std::string& summary) const {
    std::string d = summary;
    for (const auto& f : failures_) d += "; FAILED " + f;
    return {ok_, d};
  }

 private:
  bool ok_ = true;
  std::vector<std::string> failures_;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// ---------------------------------------------------------------- oracles

// Minimum error for two equiprobable pure states from an eigendecomposition
// of (|a><a| - |b><b|) / 2.
double helstrom_oracle(const Vector& a, const Vector& b) {
  const Matrix gamma = 0.5 * (a * a.adjoint() - b * b.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(gamma);
  return 0.5 - 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double entropy_of(const Matrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho);
  double h = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double p = es.eigenvalues()(i);
    if (p > 1e-15) h -= p * std::log2(p);
  }
  return h;
}

// I(X : R) for a basis measurement of the first factor (dimension d) of a
// pure vector on X R T, with the trailing factor T (dimension dt) discarded:
// S(R) - sum_x p_x S(R | x).
double holevo_from_pure(const Vector& psi, int d, const Matrix& basis, Eigen::Index dt) {
  using RowMat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  const Eigen::Index rest = psi.size() / d;
  const Matrix m = Eigen::Map<const RowMat>(psi.data(), d, rest);
  auto reduce = [&](const Vector& branch) {
    const Matrix r = Eigen::Map<const RowMat>(branch.data(), rest / dt, dt);
    return Matrix(r * r.adjoint());
  };
  Matrix avg = Matrix::Zero(rest / dt, rest / dt);
  std::vector<std::pair<double, Matrix>> parts;
  for (int x = 0; x < d; ++x) {
    const Vector branch = m.transpose() * basis.col(x).conjugate();
    const Matrix r = reduce(branch);
    avg += r;
    const double p = r.trace().real();
    if (p > 1e-15) parts.emplace_back(p, r / p);
  }
  double chi = entropy_of(avg);
  for (const auto& [p, r] : parts) chi -= p * entropy_of(r);
  return chi;
}

DensityOperator with_noise(const DensityOperator& rho, double q) {
  const Eigen::Index n = rho.space().total_dim();
  return DensityOperator(rho.space(), (1 - q) * rho.matrix() + q * Matrix::Identity(n, n) / static_cast<double>(n));
}

DensityOperator random_twisted(int d, int s, Rng& rng, TwistingOperator* keep = nullptr) {
  TwistingOperator t = TwistingOperator::random(d, s, rng);
  if (keep) *keep = t;
  return build_private_state(d, t, random_density(HilbertSpace({s}, {"S"}), rng));
}

DensityOperator werner(double p) {
  return DensityOperator(HilbertSpace({2, 2}, {"A", "B"}),
                         p * maximally_entangled(2).density().matrix() + (1 - p) * Matrix::Identity(4, 4) / 4.0);
}

// ---------------------------------------------------------------- criteria

Outcome ac1() {
  Checks c;
  auto [p0, p1] = appendix_d_shields(0.6);
  const AppendixDResult ad = appendix_d_scenario(p0, p1, StabilizerChoice::XX, true);
  const AppendixDResult na = appendix_d_scenario(p0, p1, StabilizerChoice::XX, false);
  const double single = 0.5 - 0.5 * std::sqrt(1 - 0.6 * 0.6);
  const double pair = 0.5 - 0.5 * std::sqrt(1 - std::pow(0.6, 4));
  const double oracle_single = helstrom_oracle(p0.amplitudes(), p1.amplitudes());
  const double oracle_pair = helstrom_oracle(kron(p0.amplitudes(), p0.amplitudes()), kron(p1.amplitudes(), p1.amplitudes()));
  c.require(std::abs(na.error - 0.1) <= 1e-6, "non-adaptive error " + fmt("%.9f", na.error));
  c.require(std::abs(na.error - single) <= 1e-6, "non-adaptive vs formula");
  c.require(std::abs(na.error - oracle_single) <= 1e-6, "non-adaptive vs Helstrom oracle");
  c.require(std::abs(ad.error - 0.0335239) <= 1e-6, "adaptive error " + fmt("%.9f", ad.error));
  c.require(std::abs(ad.error - pair) <= 1e-6, "adaptive vs formula");
  c.require(std::abs(ad.error - oracle_pair) <= 1e-6, "adaptive vs Helstrom oracle");
  int strict = 0;
  for (int i = 1; i <= 9; ++i) {
    auto [a, b] = appendix_d_shields(0.1 * i);
    const double e_ad = appendix_d_scenario(a, b, StabilizerChoice::XX, true).error;
    const double e_na = appendix_d_scenario(a, b, StabilizerChoice::XX, false).error;
    if (e_ad < e_na) ++strict;
  }
  c.require(strict == 9, "strict gap at " + std::to_string(strict) + "/9 points");
  return c.done("non-adaptive " + fmt("%.9f", na.error) + ", adaptive " + fmt("%.9f", ad.error) + ", strict gap " +
                std::to_string(strict) + "/9");
}

Outcome ac2() {
  Checks c;
  Rng rng(2002);
  double worst = 0.0, worst_oracle = 0.0;
  const ConjugateBasis x = ConjugateBasis::fourier(2);
  for (int t = 0; t < 200; ++t) {
    const StateVector psi = random_pure_state(HilbertSpace({2, 2, 2, 2}, {"A", "B", "S", "E"}), rng);
    const RateBreakdown r = distillable_rate(psi, x);
    worst = std::max(worst, r.lemma2_residual);
    // Oracle on the copy extension |k>^A |k>^C <k|psi>, built by hand.
    Vector ext = Vector::Zero(2 * psi.amplitudes().size());
    const Eigen::Index rest = psi.amplitudes().size() / 2;
    for (int k = 0; k < 2; ++k) ext.segment((k * 2 + k) * rest, rest) = psi.amplitudes().segment(k * rest, rest);
    const double i_x = holevo_from_pure(ext, 2, x.vectors(), 2);
    // H(Z) and I(Z:E) with E last: move E to the front by a reshape.
    const StateVector e_first = psi.reordered({"A", "E", "B", "S"});
    using RowMat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    const RowMat blocks = Eigen::Map<const RowMat>(e_first.amplitudes().data(), 2, 8);
    double hz = 0.0, i_ze;
    Matrix rho_e = Matrix::Zero(2, 2);
    std::vector<Matrix> cond;
    std::vector<double> pz;
    for (int z = 0; z < 2; ++z) {
      const Matrix mz = Eigen::Map<const RowMat>(blocks.row(z).data(), 2, 4);
      const Matrix re = mz * mz.adjoint();
      const double p = re.trace().real();
      hz -= p > 0 ? p * std::log2(p) : 0.0;
      rho_e += re;
      pz.push_back(p);
      cond.push_back(re / p);
    }
    i_ze = entropy_of(rho_e) - pz[0] * entropy_of(cond[0]) - pz[1] * entropy_of(cond[1]);
    worst_oracle = std::max(worst_oracle, std::abs(i_x - (hz - i_ze)));
    c.require(std::abs(r.i_x_cbs - i_x) <= 1e-8, "library and oracle I(X:CBS) disagree");
  }
  c.require(worst <= 1e-8, "residual " + fmt("%.3g", worst));
  c.require(worst_oracle <= 1e-8, "oracle residual " + fmt("%.3g", worst_oracle));
  return c.done("200 states, max residual " + fmt("%.2e", worst) + " (oracle " + fmt("%.2e", worst_oracle) + ")");
}

Outcome ac3() {
  Checks c;
  Rng rng(2003);
  double pe = 0, pt = 0, ed = 0;
  for (int t = 0; t < 50; ++t) {
    const int d = t % 2 ? 3 : 2;
    TwistingOperator tw = TwistingOperator::random(d, 1, rng);
    const int s = 1 + static_cast<int>(rng.below(3));
    DensityOperator g = random_twisted(d, s, rng, &tw);
    const ConjugateBasis basis = ConjugateBasis::fourier(d);
    const PrivacyReport r = certify_private(g, basis, twisting_conjugate_measurement(tw, basis));
    pe = std::max(pe, r.p_e);
    pt = std::max(pt, r.p_tilde_e);
    ed = std::max(ed, r.eps_direct);
  }
  c.require(pe <= 1e-10, "p_e " + fmt("%.3g", pe));
  c.require(pt <= 1e-10, "p~_e " + fmt("%.3g", pt));
  c.require(ed <= 1e-9, "eps_direct " + fmt("%.3g", ed));
  return c.done("50 states, max p_e " + fmt("%.1e", pe) + ", p~_e " + fmt("%.1e", pt) + ", eps_direct " + fmt("%.1e", ed));
}

Outcome ac4() {
  Checks c;
  Rng rng(2004);
  int tight = 0;
  double worst = -1.0;
  for (int t = 0; t < 200; ++t) {
    const int d = t % 2 ? 3 : 2;
    TwistingOperator tw = TwistingOperator::random(d, 2, rng);
    DensityOperator rho = random_twisted(d, 2, rng, &tw);
    const ConjugateBasis basis = ConjugateBasis::fourier(d);
    Povm m = twisting_conjugate_measurement(tw, basis);
    switch (t % 4) {
      case 0:  // near-private state, matched measurement
        rho = with_noise(rho, 0.25 * rng.uniform());
        break;
      case 1:  // near-private state, measurement built from its own Uhlmann purification
        rho = with_noise(rho, 0.25 * rng.uniform());
        m = uhlmann_conjugate_measurement(rho, epsilon_secret_direct(rho), basis).povm;
        break;
      case 2:  // arbitrary state, arbitrary measurement
        rho = random_density(rho.space(), rng);
        m = Povm(HilbertSpace({d, 2}, {"B", "S"}), random_povm_elements(2 * d, static_cast<std::size_t>(d), rng));
        break;
      default:  // private state, scrambled measurement
        rho = with_noise(rho, 0.1 * rng.uniform());
        m = Povm(HilbertSpace({d, 2}, {"B", "S"}), random_povm_elements(2 * d, static_cast<std::size_t>(d), rng));
        break;
    }
    const KeyErrorRates k = key_error_rates(rho, basis, m);
    const double bound = k.p_e + std::sqrt(k.p_tilde_e);
    const double direct = epsilon_secret_direct(rho);
    worst = std::max(worst, direct - bound);
    c.require(direct <= bound + 1e-6, "pair " + std::to_string(t) + ": " + fmt("%.6f", direct) + " > " + fmt("%.6f", bound));
    if (bound - direct <= 0.1) ++tight;
  }
  return c.done("200 pairs, max (eps_direct - bound) " + fmt("%.4f", worst) + ", within 0.1 of tight: " +
                std::to_string(tight));
}

Outcome ac5() {
  Checks c;
  Rng rng(2005);
  std::string summary;
  for (double target : {0.02, 0.05, 0.1}) {
    double worst_pt = -1, worst_pe = -1;
    for (int d : {2, 3}) {
      for (int rep = 0; rep < 2; ++rep) {
        const DensityOperator g = random_twisted(d, 2, rng);
        // Noise weight with eps_direct equal to the target, by bisection.
        double lo = 0.0, hi = 1.0;
        for (int it = 0; it < 60; ++it) {
          const double mid = 0.5 * (lo + hi);
          (epsilon_secret_direct(with_noise(g, mid)) < target ? lo : hi) = mid;
        }
        const DensityOperator rho = with_noise(g, 0.5 * (lo + hi));
        const double eps = epsilon_secret_direct(rho);
        c.require(std::abs(eps - target) <= 1e-9, "bisection missed " + fmt("%.3g", target));
        UhlmannResult u = uhlmann_conjugate_measurement(rho, eps);
        c.require(u.p_tilde_e <= 2 * eps - eps * eps + 1e-6, "p~_e " + fmt("%.6f", u.p_tilde_e) + " at eps " + fmt("%.3g", eps));
        c.require(u.p_e <= eps + 1e-9, "p_e " + fmt("%.6f", u.p_e) + " at eps " + fmt("%.3g", eps));
        worst_pt = std::max(worst_pt, u.p_tilde_e - (2 * eps - eps * eps));
        worst_pe = std::max(worst_pe, u.p_e - eps);
      }
    }
    summary += "eps " + fmt("%.2f", target) + ": max p~_e-(2e-e^2) " + fmt("%.4f", worst_pt) + ", max p_e-e " +
               fmt("%.4f", worst_pe) + "; ";
  }
  return c.done(summary);
}

Outcome ac6() {
  Checks c;
  std::string summary;
  for (const char* mode : {"maassen_uffink", "cit", "quantum_cit"}) {
    double min_slack = 1e9;
    for (int d : {2, 3, 5}) {
      cli::Json doc = cli::Json::object();
      doc["command"] = "uncertainty";
      doc["seed"] = 2006;
      doc["mode"] = mode;
      doc["d"] = d;
      doc["trials"] = 500;
      try {
        const cli::RunReport r = cli::dispatch(cli::parse_config(doc));
        min_slack = std::min(min_slack, r.results["min_slack"].get<double>());
      } catch (const std::exception& e) {
        c.require(false, std::string(mode) + " d=" + std::to_string(d) + ": " + e.what());
      }
    }
    c.require(min_slack >= -1e-9, std::string(mode) + " slack " + fmt("%.3g", min_slack));
    summary += std::string(mode) + " min slack " + fmt("%.3e", min_slack) + "; ";
  }
  return c.done("500 instances per mode and d in {2,3,5}: " + summary);
}

Outcome ac7() {
  Checks c;
  std::string summary;
  struct Case {
    int d, n, m;
  };
  for (Case k : {Case{2, 3, 1}, Case{2, 4, 2}, Case{3, 3, 2}}) {
    Rng rng(2007);
    int bad = 0;
    for (int i = 0; i < 1000; ++i) {
      Rng sub = rng.substream(static_cast<std::uint64_t>(i));
      const int mx = k.m >= 2 ? 1 : 0;
      const CssCode code = sample_universal_css(k.d, k.n, k.m - mx, mx, sub);
      const bool ok = (code.mz() * code.mx().transpose()).is_zero() && code.mz().stacked(code.mx()).rank() == k.m;
      bad += ok ? 0 : 1;
    }
    c.require(bad == 0, std::to_string(bad) + " invalid codes");
    GfVector zero(static_cast<std::size_t>(k.n), 0), e0 = zero;
    e0[0] = 1;
    Rng urng(2107);
    const UniversalityEstimate u = universality_estimate(k.d, k.n, k.m, 0, RowSlice::Z, 10000, urng, std::make_pair(zero, e0));
    const double sigma = std::sqrt(u.bound * (1 - u.bound) / 10000.0);
    c.require(u.estimate <= u.bound + 3 * sigma, "collision " + fmt("%.4f", u.estimate) + " for d=" + std::to_string(k.d));
    summary += "(" + std::to_string(k.d) + "," + std::to_string(k.n) + "," + std::to_string(k.m) + ") " +
               fmt("%.4f", u.estimate) + " <= " + fmt("%.4f", u.bound) + "+3s; ";
  }
  return c.done("1000 valid codes per case; " + summary);
}

Outcome ac8() {
  Checks c;
  const StateVector one = tensor_product(maximally_entangled(2), StateVector::basis(HilbertSpace({1}, {"E"}), {0}));
  const StateVector psi = tensor_power(one, 2);
  const CssCode code = CssCode::trivial(2, 2);
  const DistillationOutcome a = one_shot_distill(psi, code, make_hsw_decoders(psi, code).families);
  c.require(a.key_dims == 4, "key dims " + std::to_string(a.key_dims));
  c.require(a.report.eps_certified <= 1e-9 && a.report.eps_direct <= 1e-9, "Bell key eps " + fmt("%.3g", a.report.eps_certified));
  auto [p0, p1] = appendix_d_shields(0.6);
  const AppendixDResult b = appendix_d_scenario(p0, p1, StabilizerChoice::XX, true);
  c.require(b.outcome.key_dims == 2, "appendix key dims " + std::to_string(b.outcome.key_dims));
  c.require(std::abs(b.outcome.report.eps_certified - 0.18310) <= 1e-4, "certified " + fmt("%.6f", b.outcome.report.eps_certified));
  c.require(b.outcome.report.eps_direct <= b.outcome.report.eps_certified, "eps_direct above certified");
  return c.done("(a) 2-bit key eps " + fmt("%.1e", a.report.eps_certified) + "; (b) 1-bit key certified " +
                fmt("%.6f", b.outcome.report.eps_certified) + ", direct " + fmt("%.6f", b.outcome.report.eps_direct));
}

Outcome ac9() {
  Checks c;
  const CssCode parity = CssCode::from_stabilizers(GfMatrix::from_rows(2, 2, {{1, 1}}), GfMatrix::from_rows(2, 2, {}));
  const HashingResult h = coherent_hashing_sim(werner(0.95), 2, parity);
  c.require(h.total_dim <= kHashingAmplitudeCap, "amplitude cap");
  c.require(h.overlap_2 >= 1 - h.eps_z, "overlap " + fmt("%.6f", h.overlap_2));
  c.require(h.distance_3 <= h.bound_3, "step 3 " + fmt("%.6f", h.distance_3));
  c.require(h.distance_4 <= h.bound_rhs, "step 4 " + fmt("%.6f", h.distance_4));
  const HashingResult bell = coherent_hashing_sim(werner(1.0), 2, CssCode::trivial(2, 2));
  c.require(bell.encoded_fidelity >= 1 - 1e-9, "encoded fidelity " + fmt("%.12f", bell.encoded_fidelity));
  return c.done("Werner(0.95): <Psi2|Psi2'> " + fmt("%.4f", h.overlap_2) + " >= " + fmt("%.4f", 1 - h.eps_z) + ", step3 " +
                fmt("%.4f", h.distance_3) + " <= " + fmt("%.4f", h.bound_3) + ", step4 " + fmt("%.4f", h.distance_4) +
                " <= " + fmt("%.4f", h.bound_rhs) + "; Bell encoded fidelity " + fmt("%.12f", bell.encoded_fidelity));
}

Outcome ac10() {
  Checks c;
  const RateBreakdown bell = distillable_rate(werner(1.0), ConjugateBasis::fourier(2));
  c.require(std::abs(bell.rate - 1) <= 1e-9 && std::abs(bell.ck_rate - 1) <= 1e-9 && std::abs(bell.coherent_info - 1) <= 1e-9,
            "Bell rates");
  const RateBreakdown mixed = distillable_rate(werner(0.0), ConjugateBasis::fourier(2));
  c.require(std::abs(mixed.coherent_info + 1) <= 1e-9, "mixed I_c " + fmt("%.6f", mixed.coherent_info));
  Rng rng(2010);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const int da = 2 + static_cast<int>(rng.below(2)), db = 2 + static_cast<int>(rng.below(2));
    const StateVector psi = random_pure_state(HilbertSpace({da, db, 3}, {"A", "B", "X"}), rng);
    worst = std::max(worst, corollary1_check(psi.reduced({"A", "B"})).residual);
  }
  c.require(worst <= 1e-8, "corollary residual " + fmt("%.3g", worst));
  return c.done("Bell rate/ck/I_c " + fmt("%.12f", bell.rate) + "/" + fmt("%.12f", bell.ck_rate) + "/" +
                fmt("%.12f", bell.coherent_info) + ", mixed I_c " + fmt("%.12f", mixed.coherent_info) +
                ", corollary max residual " + fmt("%.2e", worst));
}

Outcome ac11() {
  Checks c;
  auto run = [](std::vector<const char*> args, std::string& out) {
    args.insert(args.begin(), "privlab");
    std::ostringstream o, e;
    const int rc = cli::run(static_cast<int>(args.size()), args.data(), o, e);
    out = o.str() + e.str();
    return rc;
  };
  auto payload = [](const std::string& text) {
    cli::Json j = cli::Json::parse(text);
    j.erase("wall_time_s");
    return j.dump();
  };
  const std::vector<std::vector<const char*>> configs{
      {"--seed", "11", "css", "--d", "3", "--n", "3", "--m-z", "1", "--m-x", "1", "--count", "50", "--trials", "2000"},
      {"--seed", "11", "uncertainty", "--mode", "cit", "--trials", "20", "--d", "3"},
      {"--seed", "11", "verify", "--state", "eq1:2", "--noise", "0.05", "--measurement", "uhlmann"},
      {"--seed", "11", "hashing-sim", "--state", "werner:0.9", "--n", "2", "--code", R"({"sample": {"m_z": 1}})"},
      {"--seed", "11", "distill", "--state", "appd:0.6"}};
  int same = 0;
  for (const auto& args : configs) {
    std::string a, b;
    const int ra = run(args, a), rb = run(args, b);
    const bool match = ra == 0 && rb == 0 && payload(a) == payload(b);
    same += match ? 1 : 0;
    c.require(match, std::string("payload differs for ") + args[2]);
  }
  std::string out;
  const int rc_config = run({"css", "--d", "4"}, out);
  c.require(rc_config == 2, "non-prime field exit " + std::to_string(rc_config));
  const int rc_num = run({"verify", "--state", "werner:0.9", "--eps", "0.001"}, out);
  c.require(rc_num == 3, "invariant failure exit " + std::to_string(rc_num));
  const int rc_io = run({"rates", "--out", "/nonexistent-privlab-dir/r.json"}, out);
  c.require(rc_io == 4, "io failure exit " + std::to_string(rc_io));
  return c.done(std::to_string(same) + "/" + std::to_string(configs.size()) + " configs reproduce; exits " +
                std::to_string(rc_config) + "/" + std::to_string(rc_num) + "/" + std::to_string(rc_io));
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    double limit_s;
    std::function<Outcome()> fn;
  };
  const std::vector<Criterion> all{{"AC1", 1, ac1},   {"AC2", 30, ac2},  {"AC3", 60, ac3}, {"AC4", 60, ac4},
                                   {"AC5", 60, ac5},  {"AC6", 120, ac6}, {"AC7", 60, ac7}, {"AC8", 30, ac8},
                                   {"AC9", 120, ac9}, {"AC10", 30, ac10}, {"AC11", 10, ac11}};
  int failed = 0;
  for (const auto& cr : all) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < cr.limit_s;
    const bool pass = o.ok && in_time;
    failed += pass ? 0 : 1;
    std::printf("%-4s %s  %s [%.2f s, limit %.0f s%s]\n", cr.id, pass ? "PASS" : "FAIL", o.detail.c_str(), secs, cr.limit_s,
                in_time ? "" : ", too slow");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed == 0 ? 0 : 1;
}

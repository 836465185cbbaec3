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


#include "cli/dispatch.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "cli/serialize.hpp"
#include "privlab/distillation.hpp"
#include "privlab/errors.hpp"
#include "privlab/gf.hpp"
#include "privlab/info.hpp"
#include "privlab/parallel.hpp"
#include "privlab/privacy.hpp"
#include "privlab/random.hpp"

namespace privlab::cli {

namespace {

int next_prime(int d) {
  while (!is_prime(d)) ++d;
  return d;
}

void require_key_pair(const DensityOperator& rho) {
  if (!rho.space().contains("A") || !rho.space().contains("B")) throw ConfigError("state needs subsystems A and B");
}

Json rates(const ExperimentConfig& cfg, Table& table) {
  Rng rng(cfg.seed);
  const BuiltState st = build_state(cfg.params["state"], cfg.params["d"].get<int>(), 0.0, rng);
  require_key_pair(st.rho);
  const int da = st.rho.space().dim("A");
  const RateBreakdown r = distillable_rate(st.rho, ConjugateBasis::fourier(da));
  Json res = Json::object();
  res["state"] = st.name;
  res["rates"] = to_json(r);
  if (st.rho.space().size() == 2) res["corollary1"] = to_json(corollary1_check(st.rho));
  table.columns = {"i_zb", "h_z", "i_x_cbs", "i_ze", "rate", "ck_rate", "coherent_info", "lemma2_residual"};
  table.rows = {{r.i_zb, r.h_z, r.i_x_cbs, r.i_ze, r.rate, r.ck_rate, r.coherent_info, r.lemma2_residual}};
  return res;
}

Json verify(const ExperimentConfig& cfg, Table& table) {
  Rng rng(cfg.seed);
  const BuiltState st = build_state(cfg.params["state"], cfg.params["d"].get<int>(), cfg.params["noise"].get<double>(), rng);
  require_key_pair(st.rho);
  const int d = st.rho.space().dim("A");
  if (st.rho.space().dim("B") != d) throw ConfigError("key registers A and B must have equal dimension");
  const ConjugateBasis basis = ConjugateBasis::fourier(d);
  std::string how = cfg.params["measurement"].get<std::string>();
  if (how == "auto") how = st.twisting ? "twisting" : "uhlmann";
  Json res = Json::object();
  res["state"] = st.name;
  res["measurement_kind"] = how;
  PrivacyReport rep;
  if (how == "twisting") {
    if (!st.twisting) throw ConfigError("the twisting measurement needs an eq1 state");
    rep = certify_private(st.rho, basis, twisting_conjugate_measurement(*st.twisting, basis));
  } else {
    const double eps = cfg.params.contains("eps") ? cfg.params["eps"].get<double>() : epsilon_secret_direct(st.rho);
    const UhlmannResult u = uhlmann_conjugate_measurement(st.rho, eps, basis);
    res["uhlmann"] = to_json(u);
    rep = certify_private(st.rho, basis, u.povm);
  }
  const double slack = tolerance(cfg, "soundness", 1e-6);
  if (rep.eps_direct > rep.eps_certified + slack) {
    throw NumericalError("eps_direct " + format_double(rep.eps_direct) + " exceeds the certified " + format_double(rep.eps_certified));
  }
  res["report"] = to_json(rep);
  table.columns = {"p_e", "p_tilde_e", "eps_certified", "eps_direct"};
  table.rows = {{rep.p_e, rep.p_tilde_e, rep.eps_certified, rep.eps_direct}};
  return res;
}

Json distill(const ExperimentConfig& cfg, Table& table) {
  Rng rng(cfg.seed);
  const Json& state = cfg.params["state"];
  const double slack = tolerance(cfg, "soundness", 1e-6);
  Json res = Json::object();
  DistillationOutcome* outcome = nullptr;
  std::optional<AppendixDResult> appd;
  std::optional<DistillationOutcome> plain;
  if (state.is_string() && state.get<std::string>().rfind("appd:", 0) == 0) {
    const std::string text = state.get<std::string>();
    double s = 0.0;
    try {
      s = std::stod(text.substr(5));
    } catch (const std::exception&) {
      throw ConfigError("state spec '" + text + "' has a bad parameter");
    }
    if (!(s >= 0.0 && s <= 1.0)) throw ConfigError("appd overlap must lie in [0, 1]");
    const auto [p0, p1] = appendix_d_shields(s);
    appd = appendix_d_scenario(p0, p1, parse_stabilizer_choice(cfg.params["stabilizer"].get<std::string>()),
                               cfg.params["adaptive"].get<bool>());
    res["state"] = text;
    res["appendix_d"] = to_json(*appd);
    outcome = &appd->outcome;
  } else {
    const BuiltState st = build_state(state, cfg.params["d"].get<int>(), 0.0, rng);
    require_key_pair(st.rho);
    const int n = cfg.params["n"].get<int>();
    const int d = st.rho.space().dim("A");
    const CssCode code = build_code(cfg.params["code"], d, n, rng);
    Labels labels = st.rho.space().labels();
    const StateVector one = purify(st.rho, "E");
    const StateVector psi = tensor_power(one, n);
    const DistillLabels dl{"A", {"B"}, {"E"}};
    const HswDecoders dec = make_hsw_decoders(psi, code, {}, dl);
    plain = one_shot_distill(psi, code, dec.families, dl);
    res["state"] = st.name;
    res["code"] = to_json(code);
    res["eps_z"] = dec.eps_z;
    res["eps_x"] = dec.eps_x;
    res["outcome"] = to_json(*plain);
    outcome = &*plain;
  }
  const PrivacyReport& rep = outcome->report;
  if (rep.eps_direct > rep.eps_certified + slack) {
    throw NumericalError("eps_direct " + format_double(rep.eps_direct) + " exceeds the certified " + format_double(rep.eps_certified));
  }
  table.columns = {"key_dims", "p_e", "p_tilde_e", "eps_certified", "eps_direct"};
  table.rows = {{static_cast<double>(outcome->key_dims), rep.p_e, rep.p_tilde_e, rep.eps_certified, rep.eps_direct}};
  return res;
}

Json hashing(const ExperimentConfig& cfg, Table& table) {
  Rng rng(cfg.seed);
  const BuiltState st = build_state(cfg.params["state"], cfg.params["d"].get<int>(), 0.0, rng);
  if (st.rho.space().labels() != Labels{"A", "B"}) throw ConfigError("hashing-sim needs a state on A and B only");
  const int n = cfg.params["n"].get<int>();
  const int p = next_prime(st.rho.space().dim("A"));
  const CssCode code = build_code(cfg.params["code"], p, n, rng);
  const HashingResult h = coherent_hashing_sim(st.rho, n, code);
  Json res = Json::object();
  res["state"] = st.name;
  res["code"] = to_json(code);
  res["hashing"] = to_json(h);
  table.columns = {"eps_z", "eps_x", "overlap_2", "distance_2", "bound_2", "distance_3", "bound_3", "distance_4",
                   "bound_rhs", "encoded_fidelity"};
  table.rows = {{h.eps_z, h.eps_x, h.overlap_2, h.distance_2, h.bound_2, h.distance_3, h.bound_3, h.distance_4,
                 h.bound_rhs, h.encoded_fidelity}};
  return res;
}

Json css(const ExperimentConfig& cfg, Table& table) {
  const int d = cfg.params["d"].get<int>(), n = cfg.params["n"].get<int>();
  const int mz = cfg.params["m_z"].get<int>(), mx = cfg.params["m_x"].get<int>();
  const auto count = cfg.params["count"].get<std::size_t>();
  const auto trials = cfg.params["trials"].get<std::size_t>();
  const Rng base(cfg.seed);
  std::vector<std::optional<CssCode>> codes(count);
  parallel_for(count, [&](std::size_t i) {
    Rng r = base.substream(i);
    codes[i] = sample_universal_css(d, n, mz, mx, r);
  });
  std::size_t valid = 0;
  Json listed = Json::array();
  for (std::size_t i = 0; i < count; ++i) {
    const CssCode& c = *codes[i];
    const bool ok = (c.mz() * c.mx().transpose()).is_zero() && c.mz().stacked(c.mx()).rank() == mz + mx;
    valid += ok ? 1 : 0;
    if (listed.size() < 50) listed.push_back(to_json(c));
  }
  Json res = Json::object();
  res["count"] = count;
  res["valid"] = valid;
  res["codes"] = listed;
  if (trials == 0) {
    table.columns = {"count", "valid"};
    table.rows = {{static_cast<double>(count), static_cast<double>(valid)}};
    return res;
  }
  table.columns = {"slice", "m", "estimate", "std_error", "bound", "trials", "collisions"};
  Json uni = Json::object();
  // A stream index no substream uses keeps these draws apart from the code samples.
  Rng ur(cfg.seed, std::numeric_limits<std::uint64_t>::max());
  for (RowSlice slice : {RowSlice::Z, RowSlice::X}) {
    const int m = slice == RowSlice::Z ? mz : mx;
    if (m == 0) continue;
    const UniversalityEstimate u = universality_estimate(d, n, mz, mx, slice, trials, ur);
    uni[slice == RowSlice::Z ? "z" : "x"] = to_json(u);
    table.rows.push_back({slice == RowSlice::Z ? 0.0 : 1.0, static_cast<double>(m), u.estimate, u.std_error, u.bound,
                          static_cast<double>(u.trials), static_cast<double>(u.collisions)});
  }
  res["universality"] = uni;
  return res;
}

// D1 F D2 with random diagonal phases: a conjugate basis other than Fourier.
ConjugateBasis random_conjugate_basis(int d, Rng& rng) {
  Eigen::VectorXd row(d), col(d);
  for (int i = 0; i < d; ++i) row(i) = 2.0 * std::numbers::pi * rng.uniform();
  for (int i = 0; i < d; ++i) col(i) = 2.0 * std::numbers::pi * rng.uniform();
  Eigen::MatrixXd theta(d, d);
  for (int x = 0; x < d; ++x) {
    for (int k = 0; k < d; ++k) theta(x, k) = 2.0 * std::numbers::pi * x * k / d + row(x) + col(k);
  }
  return ConjugateBasis(theta);
}

Json uncertainty(const ExperimentConfig& cfg, Table& table) {
  const AuditMode mode = parse_audit_mode(cfg.params["mode"].get<std::string>());
  const auto trials = cfg.params["trials"].get<std::size_t>();
  const int d = cfg.params["d"].get<int>();
  const Rng base(cfg.seed);
  std::vector<std::optional<AuditRecord>> recs(trials);
  parallel_for(trials, [&](std::size_t t) {
    Rng r = base.substream(t);
    const ConjugateBasis basis = random_conjugate_basis(d, r);
    switch (mode) {
      case AuditMode::MaassenUffink:
        recs[t] = uncertainty_audit(random_density(HilbertSpace({d}, {"A"}), r), "A", basis, mode);
        break;
      case AuditMode::Cit: {
        const DensityOperator rho = random_density(HilbertSpace({d, d, d}, {"A", "C", "D"}), r);
        AuditWitness w;
        w.lambda_c = Povm(HilbertSpace({d}, {"C"}), random_povm_elements(d, static_cast<std::size_t>(d), r));
        w.gamma_d = Povm(HilbertSpace({d}, {"D"}), random_povm_elements(d, static_cast<std::size_t>(d), r));
        recs[t] = uncertainty_audit(rho, "A", basis, mode, w);
        break;
      }
      case AuditMode::QuantumCit: {
        const StateVector psi = random_pure_state(HilbertSpace({d, d, d}, {"A", "B", "E"}), r);
        AuditWitness w;
        w.b_labels = {"B"};
        w.e_labels = {"E"};
        recs[t] = uncertainty_audit(psi.density(), "A", basis, mode, w);
        break;
      }
    }
  });
  table.columns = {"trial", "lhs", "rhs", "slack"};
  double min_slack = std::numeric_limits<double>::infinity(), sum = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const AuditRecord& a = *recs[t];
    table.rows.push_back({static_cast<double>(t), a.lhs, a.rhs, a.slack});
    min_slack = std::min(min_slack, a.slack);
    sum += a.slack;
  }
  Json res = Json::object();
  res["mode"] = audit_mode_name(mode);
  res["d"] = d;
  res["trials"] = trials;
  res["min_slack"] = min_slack;
  res["mean_slack"] = sum / static_cast<double>(trials);
  const double tol = tolerance(cfg, "slack", 1e-9);
  if (min_slack < -tol) throw NumericalError("uncertainty relation violated: min slack " + format_double(min_slack));
  return res;
}

Json appd(const ExperimentConfig& cfg, Table& table) {
  const StabilizerChoice choice = parse_stabilizer_choice(cfg.params["stabilizer"].get<std::string>());
  const bool adaptive = cfg.params["adaptive"].get<bool>();
  std::vector<double> overlaps;
  if (cfg.params["overlap"].is_array()) {
    overlaps = cfg.params["overlap"].get<std::vector<double>>();
  } else {
    overlaps = {cfg.params["overlap"].get<double>()};
  }
  table.columns = {"s", "adaptive_error", "non_adaptive_error", "analytic_pair", "analytic_single", "eps_certified"};
  Json points = Json::array();
  bool strict = true;
  for (double s : overlaps) {
    const auto [p0, p1] = appendix_d_shields(s);
    const AppendixDResult a = appendix_d_scenario(p0, p1, choice, true);
    const AppendixDResult b = appendix_d_scenario(p0, p1, choice, false);
    const AppendixDResult& chosen = adaptive ? a : b;
    if (s > 0.0 && s < 1.0 && !(a.error < b.error)) strict = false;
    table.rows.push_back({s, a.error, b.error, a.analytic_pair, a.analytic_single, chosen.outcome.report.eps_certified});
    Json pt = to_json(chosen);
    pt["s"] = s;
    pt["adaptive_error"] = a.error;
    pt["non_adaptive_error"] = b.error;
    points.push_back(pt);
  }
  Json res = Json::object();
  res["stabilizer"] = stabilizer_choice_name(choice);
  res["adaptive"] = adaptive;
  res["points"] = points;
  res["adaptive_strictly_better"] = strict;
  return res;
}

struct Failure {
  const char* kind;
  int code;
};

void print_error(std::ostream& err, const Failure& f, const std::string& message) {
  Json j = Json::object();
  j["error"] = Json{{"kind", f.kind}, {"message", message}, {"exit_code", f.code}};
  err << j.dump() << std::endl;
}

}  // namespace

RunReport dispatch(const ExperimentConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  RunReport r;
  r.version = PRIVLAB_VERSION;
  r.config = cfg.to_json();
  const std::string& c = cfg.command;
  if (c == "rates") r.results = rates(cfg, r.table);
  else if (c == "verify") r.results = verify(cfg, r.table);
  else if (c == "distill") r.results = distill(cfg, r.table);
  else if (c == "hashing-sim") r.results = hashing(cfg, r.table);
  else if (c == "css") r.results = css(cfg, r.table);
  else if (c == "uncertainty") r.results = uncertainty(cfg, r.table);
  else if (c == "appd") r.results = appd(cfg, r.table);
  else throw ConfigError("unknown command '" + c + "'");
  r.results["rng"] = Rng::kName;
  r.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  constexpr Failure kConfig{"config", 2}, kNumerical{"numerical", 3}, kIo{"io", 4}, kInternal{"internal", 1};
  std::string context = "privlab";
  try {
    std::optional<ExperimentConfig> cfg = config_from_args(argc, argv);
    if (!cfg) return 0;
    context = cfg->command;
    const RunReport report = dispatch(*cfg);
    if (cfg->out_path.empty()) {
      out << render_report(report, cfg->format);
      out.flush();
      if (!out) throw IoError("cannot write to standard output");
    } else {
      write_report(report, cfg->out_path, cfg->format);
    }
    return 0;
  } catch (const ConfigError& e) {
    print_error(err, kConfig, context + ": " + e.what());
    return kConfig.code;
  } catch (const IoError& e) {
    print_error(err, kIo, context + ": " + e.what());
    return kIo.code;
  } catch (const NumericalError& e) {
    print_error(err, kNumerical, context + ": " + e.what());
    return kNumerical.code;
  } catch (const std::invalid_argument& e) {
    print_error(err, kConfig, context + ": " + e.what());
    return kConfig.code;
  } catch (const std::domain_error& e) {  // infeasible code parameters
    print_error(err, kConfig, context + ": " + e.what());
    return kConfig.code;
  } catch (const std::length_error& e) {  // register size cap
    print_error(err, kConfig, context + ": " + e.what());
    return kConfig.code;
  } catch (const std::exception& e) {
    print_error(err, kInternal, context + ": " + e.what());
    return kInternal.code;
  }
}

}  // namespace privlab::cli

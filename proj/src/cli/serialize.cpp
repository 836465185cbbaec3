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


#include "cli/serialize.hpp"

namespace privlab::cli {

Json to_json(const CssCode& code) {
  Json j = Json::object();
  j["d"] = code.d();
  j["n"] = code.n();
  j["mz"] = code.mz().row_list();
  j["mx"] = code.mx().row_list();
  j["logical_z"] = code.logical_z().row_list();
  j["logical_x"] = code.logical_x().row_list();
  return j;
}

Json to_json(const PrivacyReport& r) {
  Json j = Json::object();
  j["p_e"] = r.p_e;
  j["p_tilde_e"] = r.p_tilde_e;
  j["eps_certified"] = r.eps_certified;
  j["eps_direct"] = r.eps_direct;
  j["measurement"] = r.measurement;
  return j;
}

Json to_json(const RateBreakdown& r) {
  Json j = Json::object();
  j["i_zb"] = r.i_zb;
  j["h_z"] = r.h_z;
  j["i_x_cbs"] = r.i_x_cbs;
  j["i_ze"] = r.i_ze;
  j["rate"] = r.rate;
  j["ck_rate"] = r.ck_rate;
  j["coherent_info"] = r.coherent_info;
  j["lemma2_residual"] = r.lemma2_residual;
  return j;
}

Json to_json(const Corollary1Check& c) {
  return Json{{"via_entropies", c.via_entropies}, {"via_basis", c.via_basis}, {"residual", c.residual}};
}

Json to_json(const Transcript& t) {
  auto list = [](const std::vector<SyndromeRecord>& recs) {
    Json a = Json::array();
    for (const auto& r : recs) a.push_back(Json{{"value", r.value}, {"probability", r.probability}});
    return a;
  };
  Json j = Json::object();
  j["alpha"] = list(t.alpha);
  j["alpha_public"] = t.alpha_public;
  j["beta"] = list(t.beta);
  j["beta_public"] = t.beta_public;
  return j;
}

Json to_json(const DistillationOutcome& o) {
  Json j = Json::object();
  j["key_dims"] = o.key_dims;
  j["report"] = to_json(o.report);
  j["p_e_strings"] = o.p_e_strings;
  j["p_tilde_e_strings"] = o.p_tilde_e_strings;
  j["transcript"] = to_json(o.transcript);
  j["final_state"] = Json{{"labels", o.final_state.space().labels()}, {"dims", o.final_state.space().dims()}};
  return j;
}

Json to_json(const HashingResult& r) {
  Json j = Json::object();
  j["d"] = r.d;
  j["n"] = r.n;
  j["total_dim"] = r.total_dim;
  j["key_dims"] = r.key_dims;
  j["eps_z"] = r.eps_z;
  j["eps_x"] = r.eps_x;
  j["overlap_2"] = r.overlap_2;
  j["distance_2"] = r.distance_2;
  j["bound_2"] = r.bound_2;
  j["distance_3"] = r.distance_3;
  j["bound_3"] = r.bound_3;
  j["distance_4"] = r.distance_4;
  j["bound_rhs"] = r.bound_rhs;
  j["encoded_fidelity"] = r.encoded_fidelity;
  j["encoded_distance"] = r.encoded_distance;
  return j;
}

Json to_json(const UniversalityEstimate& u) {
  Json j = Json::object();
  j["estimate"] = u.estimate;
  j["std_error"] = u.std_error;
  j["bound"] = u.bound;
  j["trials"] = u.trials;
  j["collisions"] = u.collisions;
  j["k"] = u.k;
  j["k_prime"] = u.k_prime;
  return j;
}

Json to_json(const AuditRecord& a) {
  Json j = Json::object();
  j["mode"] = audit_mode_name(a.mode);
  j["lhs_terms"] = a.lhs_terms;
  j["lhs"] = a.lhs;
  j["rhs"] = a.rhs;
  j["slack"] = a.slack;
  if (a.averaged_terms) j["averaged_terms"] = *a.averaged_terms;
  return j;
}

Json to_json(const AppendixDResult& r) {
  Json j = Json::object();
  j["error"] = r.error;
  j["analytic_single"] = r.analytic_single;
  j["analytic_pair"] = r.analytic_pair;
  j["overlap"] = r.overlap;
  j["overlap_plus_plus"] = r.overlap_plus_plus;
  j["overlap_plus_minus"] = r.overlap_plus_minus;
  j["beta_dependent"] = r.beta_dependent;
  j["measurement"] = r.measurement;
  j["outcome"] = to_json(r.outcome);
  return j;
}

Json to_json(const UhlmannResult& u) {
  Json j = Json::object();
  j["p_e"] = u.p_e;
  j["p_tilde_e"] = u.p_tilde_e;
  j["eps"] = u.eps;
  j["eps_direct"] = u.eps_direct;
  j["fidelity"] = u.fidelity;
  j["bound"] = u.bound;
  j["extra_purifier_dim"] = u.extra_purifier_dim;
  j["rank_deficient"] = u.rank_deficient;
  return j;
}

}  // namespace privlab::cli

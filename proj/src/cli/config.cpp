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


#include "cli/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "privlab/distillation.hpp"
#include "privlab/gf.hpp"
#include "privlab/random.hpp"

namespace privlab::cli {

namespace {

// Keys each command accepts besides command, seed, output and tolerances.
const std::map<std::string, std::set<std::string>>& allowed_keys() {
  static const std::map<std::string, std::set<std::string>> keys{
      {"rates", {"state", "d"}},
      {"verify", {"state", "d", "noise", "measurement", "eps"}},
      {"distill", {"state", "d", "n", "code", "stabilizer", "adaptive"}},
      {"hashing-sim", {"state", "d", "n", "code"}},
      {"css", {"d", "n", "m_z", "m_x", "count", "trials"}},
      {"uncertainty", {"mode", "trials", "d"}},
      {"appd", {"overlap", "stabilizer", "adaptive"}},
  };
  return keys;
}

const std::map<std::string, std::set<std::string>>& allowed_tolerances() {
  static const std::map<std::string, std::set<std::string>> keys{
      {"verify", {"soundness"}},
      {"distill", {"soundness"}},
      {"uncertainty", {"slack"}},
  };
  return keys;
}

class Reader {
 public:
  Reader(const Json& doc, Json& out) : doc_(doc), out_(out) {}

  long long integer(const std::string& key, long long fallback, long long lo, long long hi) {
    long long v = fallback;
    if (doc_.contains(key)) {
      const Json& j = doc_.at(key);
      if (!j.is_number_integer() && !(j.is_number_float() && std::floor(j.get<double>()) == j.get<double>())) {
        throw ConfigError("'" + key + "' must be an integer");
      }
      v = j.is_number_integer() ? j.get<long long>() : static_cast<long long>(j.get<double>());
    }
    if (v < lo || v > hi) {
      throw ConfigError("'" + key + "' must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    out_[key] = v;
    return v;
  }

  double number(const std::string& key, double fallback, double lo, double hi) {
    double v = fallback;
    if (doc_.contains(key)) {
      if (!doc_.at(key).is_number()) throw ConfigError("'" + key + "' must be a number");
      v = doc_.at(key).get<double>();
    }
    if (!(v >= lo && v <= hi)) {
      std::ostringstream os;
      os << "'" << key << "' must lie in [" << lo << ", " << hi << "]";
      throw ConfigError(os.str());
    }
    out_[key] = v;
    return v;
  }

  bool boolean(const std::string& key, bool fallback) {
    bool v = fallback;
    if (doc_.contains(key)) {
      if (!doc_.at(key).is_boolean()) throw ConfigError("'" + key + "' must be true or false");
      v = doc_.at(key).get<bool>();
    }
    out_[key] = v;
    return v;
  }

  std::string choice(const std::string& key, const std::string& fallback, const std::set<std::string>& options) {
    std::string v = fallback;
    if (doc_.contains(key)) {
      if (!doc_.at(key).is_string()) throw ConfigError("'" + key + "' must be a string");
      v = doc_.at(key).get<std::string>();
    }
    if (!options.count(v)) {
      std::string all;
      for (const auto& o : options) all += (all.empty() ? "" : ", ") + o;
      throw ConfigError("'" + key + "' must be one of: " + all);
    }
    out_[key] = v;
    return v;
  }

  // Strings or objects copied verbatim; checked when built.
  void spec(const std::string& key, const Json& fallback) {
    const Json& v = doc_.contains(key) ? doc_.at(key) : fallback;
    if (!v.is_string() && !v.is_object()) throw ConfigError("'" + key + "' must be a string or an object");
    out_[key] = v;
  }

 private:
  const Json& doc_;
  Json& out_;
};

void require_prime(long long d) {
  if (!is_prime(static_cast<int>(d))) throw ConfigError("d must be prime (got " + std::to_string(d) + ")");
}

bool code_is_sampled(const Json& code) { return code.is_object() && code.contains("sample"); }

Json read_params(const std::string& command, const Json& doc) {
  Json p = Json::object();
  Reader r(doc, p);
  if (command == "rates") {
    r.spec("state", "bell");
    r.integer("d", 2, 2, 7);
  } else if (command == "verify") {
    r.spec("state", "eq1:2");
    r.integer("d", 2, 2, 7);
    r.number("noise", 0.0, 0.0, 1.0);
    const std::string m = r.choice("measurement", "auto", {"auto", "twisting", "uhlmann"});
    if (doc.contains("eps")) {
      r.number("eps", 0.0, 0.0, 1.0);
      if (m == "twisting") throw ConfigError("'eps' only applies to the uhlmann measurement");
    }
  } else if (command == "distill") {
    r.spec("state", "bell");
    r.integer("d", 2, 2, 7);
    r.integer("n", 2, 1, 3);
    r.spec("code", "trivial");
    r.choice("stabilizer", "XX", {"XX", "XI", "IX"});
    r.boolean("adaptive", true);
    if (code_is_sampled(p["code"])) require_prime(p["d"].get<long long>());
  } else if (command == "hashing-sim") {
    r.spec("state", "bell");
    r.integer("d", 2, 2, 7);
    r.integer("n", 2, 1, 3);
    r.spec("code", "trivial");
  } else if (command == "css") {
    const long long d = r.integer("d", 2, 2, 97);
    require_prime(d);
    const long long n = r.integer("n", 3, 1, 16);
    const long long mz = r.integer("m_z", 1, 0, n);
    r.integer("m_x", 0, 0, n - mz);
    r.integer("count", 10, 1, 100000);
    r.integer("trials", 0, 0, 10000000);
  } else if (command == "uncertainty") {
    r.choice("mode", "maassen_uffink", {"maassen_uffink", "cit", "quantum_cit"});
    r.integer("trials", 100, 1, 100000);
    r.integer("d", 2, 2, 7);
  } else if (command == "appd") {
    if (doc.contains("overlap") && doc.at("overlap").is_array()) {
      Json list = Json::array();
      for (const auto& v : doc.at("overlap")) {
        if (!v.is_number() || v.get<double>() < 0.0 || v.get<double>() > 1.0) throw ConfigError("'overlap' entries must lie in [0, 1]");
        list.push_back(v.get<double>());
      }
      if (list.empty()) throw ConfigError("'overlap' list is empty");
      p["overlap"] = list;
    } else {
      r.number("overlap", 0.6, 0.0, 1.0);
    }
    r.choice("stabilizer", "XX", {"XX", "XI", "IX"});
    r.boolean("adaptive", true);
  }
  return p;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) throw IoError("error while reading " + path);
  return os.str();
}

Json parse_inline(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ConfigError(what + " is not valid JSON: " + e.what());
  }
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"rates", "verify", "distill", "hashing-sim", "css", "uncertainty", "appd"};
  return names;
}

Json ExperimentConfig::to_json() const {
  Json j = Json::object();
  j["command"] = command;
  j["seed"] = seed;
  for (const auto& [k, v] : params.items()) j[k] = v;
  if (!tolerances.empty()) j["tolerances"] = tolerances;
  Json out = Json::object();
  if (!out_path.empty()) out["path"] = out_path;
  out["format"] = format == OutputFormat::Json ? "json" : "csv";
  j["output"] = out;
  return j;
}

ExperimentConfig parse_config(const Json& doc) {
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  if (!doc.contains("command") || !doc.at("command").is_string()) throw ConfigError("config needs a 'command' string");
  ExperimentConfig cfg;
  cfg.command = doc.at("command").get<std::string>();
  const auto& allowed = allowed_keys();
  auto it = allowed.find(cfg.command);
  if (it == allowed.end()) throw ConfigError("unknown command '" + cfg.command + "'");
  for (const auto& [k, v] : doc.items()) {
    if (k == "command" || k == "seed" || k == "output" || k == "tolerances") continue;
    if (!it->second.count(k)) throw ConfigError("unknown key '" + k + "' for command " + cfg.command);
  }
  if (doc.contains("seed")) {
    const Json& s = doc.at("seed");
    if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<long long>() >= 0)) {
      throw ConfigError("'seed' must be a nonnegative integer");
    }
    cfg.seed = s.get<std::uint64_t>();
  }
  if (doc.contains("output")) {
    const Json& o = doc.at("output");
    if (!o.is_object()) throw ConfigError("'output' must be an object");
    for (const auto& [k, v] : o.items()) {
      if (k == "path") {
        if (!v.is_string()) throw ConfigError("'output.path' must be a string");
        cfg.out_path = v.get<std::string>();
      } else if (k == "format") {
        if (v == "json") cfg.format = OutputFormat::Json;
        else if (v == "csv") cfg.format = OutputFormat::Csv;
        else throw ConfigError("'output.format' must be json or csv");
      } else {
        throw ConfigError("unknown key 'output." + k + "'");
      }
    }
  }
  if (doc.contains("tolerances")) {
    const Json& t = doc.at("tolerances");
    if (!t.is_object()) throw ConfigError("'tolerances' must be an object");
    const auto tit = allowed_tolerances().find(cfg.command);
    for (const auto& [k, v] : t.items()) {
      if (tit == allowed_tolerances().end() || !tit->second.count(k)) {
        throw ConfigError("unknown tolerance '" + k + "' for command " + cfg.command);
      }
      if (!v.is_number() || v.get<double>() < 0.0) throw ConfigError("tolerance '" + k + "' must be a nonnegative number");
      cfg.tolerances[k] = v.get<double>();
    }
  }
  cfg.params = read_params(cfg.command, doc);
  return cfg;
}

Json load_json_file(const std::string& path) { return parse_inline(read_text(path), path); }

double tolerance(const ExperimentConfig& cfg, const std::string& name, double fallback) {
  return cfg.tolerances.contains(name) ? cfg.tolerances.at(name).get<double>() : fallback;
}

std::optional<ExperimentConfig> config_from_args(int argc, const char* const* argv) {
  CLI::App app{"privlab: private-state distillation toolkit"};
  app.set_version_flag("--version", std::string(PRIVLAB_VERSION));
  app.require_subcommand(0, 1);
  std::string config_path, out_path, format;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> tolerance_args;
  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--seed", seed, "RNG seed (default 0)");
  app.add_option("--out", out_path, "report path (default stdout)");
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--tolerance", tolerance_args, "override as name=value");

  // Every command flag lands in `flags` under its config key.
  std::map<std::string, std::string> strings;
  std::map<std::string, double> numbers;
  std::map<std::string, long long> integers;
  std::vector<double> overlaps;
  bool adaptive = false, non_adaptive = false;

  auto str = [&](CLI::App* sub, const std::string& flag, const std::string& key, const std::string& help) {
    sub->add_option_function<std::string>(flag, [&strings, key](const std::string& v) { strings[key] = v; }, help);
  };
  auto num = [&](CLI::App* sub, const std::string& flag, const std::string& key, const std::string& help) {
    sub->add_option_function<double>(flag, [&numbers, key](double v) { numbers[key] = v; }, help);
  };
  auto integer = [&](CLI::App* sub, const std::string& flag, const std::string& key, const std::string& help) {
    sub->add_option_function<long long>(flag, [&integers, key](long long v) { integers[key] = v; }, help);
  };
  auto adaptivity = [&](CLI::App* sub) {
    sub->add_flag("--adaptive", adaptive, "syndrome-dependent conjugate decoder");
    sub->add_flag("--non-adaptive", non_adaptive, "one conjugate decoder for every syndrome");
  };

  std::map<std::string, CLI::App*> subs;
  static const std::map<std::string, std::string> blurbs{
      {"rates", "key and entanglement rates of a state"},
      {"verify", "certify a state as approximately private"},
      {"distill", "one-shot key distillation with a CSS code"},
      {"hashing-sim", "coherent hashing simulation with distance checks"},
      {"css", "sample CSS codes and estimate syndrome collisions"},
      {"uncertainty", "audit entropic uncertainty relations"},
      {"appd", "adaptive vs non-adaptive conjugate guessing sweep"}};
  for (const auto& name : command_names()) {
    CLI::App* sub = app.add_subcommand(name, blurbs.at(name));
    sub->fallthrough();
    subs[name] = sub;
  }
  for (const char* name : {"rates", "verify", "distill", "hashing-sim"}) {
    str(subs[name], "--state", "state", "bell | werner:p | mixed | eq1:shield | appd:s | inline JSON | @file");
    integer(subs[name], "--d", "d", "key dimension");
  }
  num(subs["verify"], "--noise", "noise", "white-noise weight mixed into the state");
  str(subs["verify"], "--measurement", "measurement", "auto | twisting | uhlmann");
  num(subs["verify"], "--eps", "eps", "claimed distance for the uhlmann construction");
  for (const char* name : {"distill", "hashing-sim"}) {
    integer(subs[name], "--n", "n", "number of copies");
    str(subs[name], "--code", "code", "trivial | inline JSON | @file");
  }
  str(subs["distill"], "--stabilizer", "stabilizer", "XX | XI | IX (appd states)");
  adaptivity(subs["distill"]);
  integer(subs["css"], "--d", "d", "field size");
  integer(subs["css"], "--n", "n", "code length");
  integer(subs["css"], "--m-z", "m_z", "Z-type rows");
  integer(subs["css"], "--m-x", "m_x", "X-type rows");
  integer(subs["css"], "--count", "count", "codes to sample");
  integer(subs["css"], "--trials", "trials", "draws for the collision estimate");
  str(subs["uncertainty"], "--mode", "mode", "maassen_uffink | cit | quantum_cit");
  integer(subs["uncertainty"], "--trials", "trials", "random instances");
  integer(subs["uncertainty"], "--d", "d", "dimension of A");
  subs["appd"]->add_option("--overlap", overlaps, "shield overlap(s) s")->delimiter(',');
  str(subs["appd"], "--stabilizer", "stabilizer", "XX | XI | IX");
  adaptivity(subs["appd"]);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    app.exit(e);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }

  std::string command;
  for (const auto& [name, sub] : subs) {
    if (sub->parsed()) command = name;
  }
  Json doc = Json::object();
  if (!config_path.empty()) {
    doc = load_json_file(config_path);
    if (!doc.is_object()) throw ConfigError(config_path + ": config must be a JSON object");
  }
  if (!command.empty()) {
    if (doc.contains("command") && doc["command"] != command) {
      throw ConfigError("subcommand " + command + " conflicts with the config's command");
    }
    doc["command"] = command;
  }
  if (!doc.contains("command")) throw ConfigError("no command given (use a subcommand or --config)");

  auto spec_value = [](const std::string& v) -> Json {
    if (!v.empty() && v.front() == '{') return parse_inline(v, "inline spec");
    return v;
  };
  for (const auto& [k, v] : strings) doc[k] = (k == "state" || k == "code") ? spec_value(v) : Json(v);
  for (const auto& [k, v] : numbers) doc[k] = v;
  for (const auto& [k, v] : integers) doc[k] = v;
  if (!overlaps.empty()) doc["overlap"] = overlaps.size() == 1 ? Json(overlaps.front()) : Json(overlaps);
  if (adaptive && non_adaptive) throw ConfigError("--adaptive and --non-adaptive are exclusive");
  if (adaptive) doc["adaptive"] = true;
  if (non_adaptive) doc["adaptive"] = false;
  if (seed) doc["seed"] = *seed;
  if (!out_path.empty() || !format.empty()) {
    Json& o = doc["output"];
    if (!o.is_object()) o = Json::object();
    if (!out_path.empty()) o["path"] = out_path;
    if (!format.empty()) o["format"] = format;
  }
  for (const auto& t : tolerance_args) {
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw ConfigError("--tolerance expects name=value");
    double v = 0.0;
    try {
      v = std::stod(t.substr(eq + 1));
    } catch (const std::exception&) {
      throw ConfigError("--tolerance value is not a number: " + t);
    }
    doc["tolerances"][t.substr(0, eq)] = v;
  }
  return parse_config(doc);
}

namespace {

DensityOperator mix_noise(const DensityOperator& rho, double noise) {
  if (noise == 0.0) return rho;
  const Eigen::Index n = rho.space().total_dim();
  Matrix m = (1.0 - noise) * rho.matrix() + noise * Matrix::Identity(n, n) / static_cast<double>(n);
  return DensityOperator(rho.space(), m);
}

double spec_number(const std::string& text, const std::string& spec) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("state spec '" + spec + "' has a bad parameter");
  }
}

BuiltState inline_state(const Json& j) {
  if (!j.is_object()) throw ConfigError("inline state must be an object");
  for (const auto& [k, v] : j.items()) {
    if (k != "dims" && k != "labels" && k != "matrix" && k != "vector") throw ConfigError("unknown key '" + k + "' in inline state");
  }
  if (!j.contains("dims") || !j.contains("labels")) throw ConfigError("inline state needs 'dims' and 'labels'");
  std::vector<int> dims;
  Labels labels;
  try {
    dims = j.at("dims").get<std::vector<int>>();
    labels = j.at("labels").get<Labels>();
  } catch (const Json::exception&) {
    throw ConfigError("inline state 'dims' must be integers and 'labels' strings");
  }
  try {
    HilbertSpace space(dims, labels);
    if (j.contains("matrix") == j.contains("vector")) throw ConfigError("inline state needs exactly one of 'matrix' or 'vector'");
    if (j.contains("matrix")) {
      Matrix m = matrix_from_json(j.at("matrix"));
      return BuiltState{DensityOperator(space, m), std::nullopt, "inline"};
    }
    Matrix v = matrix_from_json(Json::array({j.at("vector")}));
    return BuiltState{StateVector(space, v.row(0).transpose()).density(), std::nullopt, "inline"};
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("inline state: ") + e.what());
  }
}

}  // namespace

BuiltState build_state(const Json& spec, int d, double noise, Rng& rng) {
  if (spec.is_object()) {
    BuiltState s = inline_state(spec);
    s.rho = mix_noise(s.rho, noise);
    return s;
  }
  if (!spec.is_string()) throw ConfigError("state spec must be a string or an object");
  const std::string text = spec.get<std::string>();
  if (!text.empty() && text.front() == '@') {
    BuiltState s = inline_state(load_json_file(text.substr(1)));
    s.rho = mix_noise(s.rho, noise);
    s.name = text;
    return s;
  }
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  auto need_arg = [&]() {
    if (arg.empty()) throw ConfigError("state spec '" + text + "' needs a parameter");
  };
  HilbertSpace ab({d, d}, {"A", "B"});
  const Matrix phi = maximally_entangled(d).density().matrix();
  const Matrix mixed = Matrix::Identity(d * d, d * d) / static_cast<double>(d * d);
  if (head == "bell" && arg.empty()) return BuiltState{mix_noise(DensityOperator(ab, phi), noise), std::nullopt, text};
  if (head == "mixed" && arg.empty()) return BuiltState{DensityOperator(ab, mixed), std::nullopt, text};
  if (head == "werner") {
    need_arg();
    const double p = spec_number(arg, text);
    if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("werner weight must lie in [0, 1]");
    return BuiltState{mix_noise(DensityOperator(ab, p * phi + (1.0 - p) * mixed), noise), std::nullopt, text};
  }
  if (head == "eq1") {
    need_arg();
    const double s = spec_number(arg, text);
    if (s < 1 || s > 8 || std::floor(s) != s) throw ConfigError("eq1 shield dimension must be an integer in [1, 8]");
    TwistingOperator t = TwistingOperator::random(d, static_cast<int>(s), rng);
    DensityOperator xi = random_density(HilbertSpace({static_cast<int>(s)}, {"S"}), rng);
    return BuiltState{mix_noise(build_private_state(d, t, xi), noise), t, text};
  }
  if (head == "appd") {
    need_arg();
    const double s = spec_number(arg, text);
    if (!(s >= 0.0 && s <= 1.0)) throw ConfigError("appd overlap must lie in [0, 1]");
    auto [p0, p1] = appendix_d_shields(s);
    return BuiltState{mix_noise(appendix_d_copy(p0, p1).reduced({"A", "B", "S"}), noise), std::nullopt, text};
  }
  throw ConfigError("unknown state spec '" + text + "'");
}

CssCode build_code(const Json& spec, int d, int n, Rng& rng) {
  if (spec.is_string()) {
    const std::string s = spec.get<std::string>();
    if (s == "trivial") {
      if (!is_prime(d)) throw ConfigError("d must be prime (got " + std::to_string(d) + ")");
      return CssCode::trivial(d, n);
    }
    if (!s.empty() && s.front() == '@') return build_code(load_json_file(s.substr(1)), d, n, rng);
    throw ConfigError("unknown code spec '" + s + "'");
  }
  if (!spec.is_object()) throw ConfigError("code spec must be a string or an object");
  try {
    if (spec.contains("sample")) {
      if (spec.size() != 1) throw ConfigError("a sampled code spec only takes 'sample'");
      const Json& p = spec.at("sample");
      for (const auto& [k, v] : p.items()) {
        if (k != "m_z" && k != "m_x") throw ConfigError("unknown key 'sample." + k + "'");
      }
      const int mz = p.value("m_z", 0), mx = p.value("m_x", 0);
      if (!is_prime(d)) throw ConfigError("d must be prime (got " + std::to_string(d) + ")");
      if (mz < 0 || mx < 0 || mz + mx > n) throw ConfigError("need 0 <= m_z, m_x and m_z + m_x <= n");
      return sample_universal_css(d, n, mz, mx, rng);
    }
    for (const auto& [k, v] : spec.items()) {
      static const std::set<std::string> known{"d", "n", "mz", "mx", "logical_z", "logical_x"};
      if (!known.count(k)) throw ConfigError("unknown key '" + k + "' in code spec");
    }
    const int cd = spec.value("d", d), cn = spec.value("n", n);
    if (cd != d || cn != n) throw ConfigError("code d and n must match the experiment");
    if (!is_prime(cd)) throw ConfigError("d must be prime (got " + std::to_string(cd) + ")");
    auto rows = [&](const char* key) {
      return GfMatrix::from_rows(cd, cn, spec.contains(key) ? spec.at(key).get<std::vector<GfVector>>() : std::vector<GfVector>{});
    };
    if (spec.contains("logical_z") || spec.contains("logical_x")) {
      return CssCode(rows("mz"), rows("mx"), rows("logical_z"), rows("logical_x"));
    }
    return CssCode::from_stabilizers(rows("mz"), rows("mx"));
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("code spec: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("code spec: ") + e.what());
  }
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j.front().is_array()) throw ConfigError("matrix must be a nonempty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j.front().size());
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) throw ConfigError("matrix rows differ in length");
    for (Eigen::Index c = 0; c < cols; ++c) {
      const Json& e = row[static_cast<std::size_t>(c)];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
        throw ConfigError("matrix entries must be [re, im] pairs");
      }
      m(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  }
  return m;
}

}  // namespace privlab::cli

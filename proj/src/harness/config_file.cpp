// Copyright 2026 The fodp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "fodp/core/errors.hpp"
#include "fodp/harness/csv.hpp"
#include "fodp/harness/run_config.hpp"

namespace fodp {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::size_t steps_per_epoch(double q) {
  if (!(q > 0.0 && q <= 1.0)) {
    throw ConfigError("steps_per_epoch: q must lie in (0, 1]");
  }
  // 1/q can land one ulp above an integer (q = 0.04); do not round that up.
  return static_cast<std::size_t>(std::ceil(1.0 / q - 1e-9));
}

std::string RunConfig::series_name() const {
  std::string name = label.empty() ? std::string(to_string(algorithm)) : label;
  for (char& ch : name) {
    const bool ok = std::isalnum(static_cast<unsigned char>(ch)) ||
                    ch == '_' || ch == '-' || ch == '.' || ch == '=';
    if (!ok) ch = '_';
  }
  return name;
}

void RunConfig::validate() const {
  mechanism.validate();
  effective_config(algorithm, mechanism).validate();
  privacy.validate();
  if (!(train.eta >= 0.0) || !std::isfinite(train.eta)) {
    throw ConfigError("eta must be >= 0");
  }
  if (train.eta_post && !(*train.eta_post >= 0.0)) {
    throw ConfigError("eta_post must be >= 0");
  }
  if (train.eval_every == 0) throw ConfigError("eval_every must be >= 1");
  if (hidden1 == 0 || hidden2 == 0) {
    throw ConfigError("hidden1 and hidden2 must be positive");
  }
  if (seeds.empty()) throw ConfigError("seeds must list at least one seed");
  if (std::set<std::uint64_t>(seeds.begin(), seeds.end()).size() !=
      seeds.size()) {
    throw ConfigError("seeds must be distinct");
  }
  if (out_dir.empty()) throw ConfigError("out_dir is empty");
  std::visit([](const auto& spec) { spec.validate(); }, dataset);
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

double to_real(const std::string& key, const std::string& v) {
  try {
    return parse_double_field(v);
  } catch (const FormatError&) {
    throw ConfigError("config: '" + key + "' expects a number, got '" + v + "'");
  }
}

std::size_t to_count(const std::string& key, const std::string& v) {
  try {
    return static_cast<std::size_t>(parse_uint_field(v));
  } catch (const FormatError&) {
    throw ConfigError("config: '" + key +
                      "' expects a non-negative integer, got '" + v + "'");
  }
}

SyntheticSpec& synthetic(RunConfig& c) {
  if (auto* s = std::get_if<SyntheticSpec>(&c.dataset)) return *s;
  throw ConfigError("config: synthetic-only key used with cifar10_binary");
}

}  // namespace

RunConfig parse_run_config(std::string_view text) {
  std::map<std::string, std::string> kv;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": expected 'key = value'");
    }
    const std::string key = trim(std::string_view(t).substr(0, eq));
    const std::string value = trim(std::string_view(t).substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
    }
    if (!kv.emplace(key, value).second) {
      throw ConfigError("config: duplicate key '" + key + "'");
    }
  }

  RunConfig c;
  // The dataset kind decides which struct the per-dataset keys land in.
  if (auto it = kv.find("dataset"); it != kv.end()) {
    if (it->second == "synthetic") {
      c.dataset = SyntheticSpec{};
    } else if (it->second == "cifar10_binary") {
      c.dataset = Cifar10Spec{};
    } else {
      throw ConfigError("config: unknown dataset '" + it->second + "'");
    }
    kv.erase(it);
  }

  using Setter = std::function<void(RunConfig&, const std::string&,
                                    const std::string&)>;
  const std::map<std::string, Setter> setters = {
      {"algorithm", [](RunConfig& r, auto&, auto& v) { r.algorithm = parse_algorithm(v); }},
      {"label", [](RunConfig& r, auto&, auto& v) { r.label = v; }},
      {"out_dir", [](RunConfig& r, auto&, auto& v) { r.out_dir = v; }},
      {"seeds",
       [](RunConfig& r, auto& k, auto& v) {
         r.seeds.clear();
         std::istringstream s(v);
         std::string item;
         while (std::getline(s, item, ',')) {
           r.seeds.push_back(to_count(k, trim(item)));
         }
       }},
      {"beta", [](RunConfig& r, auto& k, auto& v) { r.mechanism.beta = to_real(k, v); }},
      {"alpha", [](RunConfig& r, auto& k, auto& v) { r.mechanism.alpha = to_real(k, v); }},
      {"memory_window", [](RunConfig& r, auto& k, auto& v) { r.mechanism.memory_window = to_count(k, v); }},
      {"temper_lambda", [](RunConfig& r, auto& k, auto& v) { r.mechanism.temper_lambda = to_real(k, v); }},
      {"tau", [](RunConfig& r, auto& k, auto& v) { r.mechanism.tau = to_real(k, v); }},
      {"gamma", [](RunConfig& r, auto& k, auto& v) { r.mechanism.gamma = to_real(k, v); }},
      {"kappa", [](RunConfig& r, auto& k, auto& v) { r.mechanism.kappa = to_real(k, v); }},
      {"zeta", [](RunConfig& r, auto& k, auto& v) { r.mechanism.zeta = to_real(k, v); }},
      {"eps_stab", [](RunConfig& r, auto& k, auto& v) { r.mechanism.eps_stab = to_real(k, v); }},
      {"memory_variant", [](RunConfig& r, auto&, auto& v) { r.mechanism.memory_variant = parse_memory_variant(v); }},
      {"exp_decay", [](RunConfig& r, auto& k, auto& v) { r.mechanism.exp_decay = to_real(k, v); }},
      {"clip_c", [](RunConfig& r, auto& k, auto& v) { r.privacy.clip_c = to_real(k, v); }},
      {"sigma", [](RunConfig& r, auto& k, auto& v) { r.privacy.sigma = to_real(k, v); }},
      {"q", [](RunConfig& r, auto& k, auto& v) { r.privacy.q = to_real(k, v); }},
      {"delta", [](RunConfig& r, auto& k, auto& v) { r.privacy.delta = to_real(k, v); }},
      {"eta", [](RunConfig& r, auto& k, auto& v) { r.train.eta = to_real(k, v); }},
      {"eta_post", [](RunConfig& r, auto& k, auto& v) { r.train.eta_post = to_real(k, v); }},
      {"epochs", [](RunConfig& r, auto& k, auto& v) { r.train.epochs = to_count(k, v); }},
      {"eval_every", [](RunConfig& r, auto& k, auto& v) { r.train.eval_every = to_count(k, v); }},
      {"hidden1", [](RunConfig& r, auto& k, auto& v) { r.hidden1 = to_count(k, v); }},
      {"hidden2", [](RunConfig& r, auto& k, auto& v) { r.hidden2 = to_count(k, v); }},
      {"num_classes", [](RunConfig& r, auto& k, auto& v) { synthetic(r).num_classes = to_count(k, v); }},
      {"dim", [](RunConfig& r, auto& k, auto& v) { synthetic(r).dim = to_count(k, v); }},
      {"per_class_count", [](RunConfig& r, auto& k, auto& v) { synthetic(r).per_class_count = to_count(k, v); }},
      {"cluster_std", [](RunConfig& r, auto& k, auto& v) { synthetic(r).cluster_std = to_real(k, v); }},
      {"center_scale", [](RunConfig& r, auto& k, auto& v) { synthetic(r).center_scale = to_real(k, v); }},
      {"train_count",
       [](RunConfig& r, auto& k, auto& v) {
         std::visit([&](auto& s) { s.train_count = to_count(k, v); }, r.dataset);
       }},
      {"test_count",
       [](RunConfig& r, auto& k, auto& v) {
         std::visit([&](auto& s) { s.test_count = to_count(k, v); }, r.dataset);
       }},
      {"path",
       [](RunConfig& r, auto&, auto& v) {
         auto* s = std::get_if<Cifar10Spec>(&r.dataset);
         if (!s) throw ConfigError("config: 'path' needs dataset = cifar10_binary");
         s->path = v;
       }},
  };

  for (const auto& [key, value] : kv) {
    const auto it = setters.find(key);
    if (it == setters.end()) throw ConfigError("config: unknown key '" + key + "'");
    it->second(c, key, value);
  }
  c.privacy.steps_T =
      std::max<std::size_t>(1, c.train.epochs * steps_per_epoch(c.privacy.q));
  c.validate();
  return c;
}

RunConfig load_run_config(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ConfigError("cannot open config file " + file.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_run_config(ss.str());
}

std::string format_run_config(const RunConfig& c) {
  std::ostringstream os;
  const auto& m = c.mechanism;
  os << "algorithm = " << to_string(c.algorithm) << "\n";
  if (!c.label.empty()) os << "label = " << c.label << "\n";
  os << "seeds = ";
  for (std::size_t i = 0; i < c.seeds.size(); ++i) {
    os << (i ? "," : "") << c.seeds[i];
  }
  os << "\nout_dir = " << c.out_dir << "\n";
  os << "beta = " << format_double(m.beta) << "\n"
     << "alpha = " << format_double(m.alpha) << "\n"
     << "memory_window = " << m.memory_window << "\n"
     << "temper_lambda = " << format_double(m.temper_lambda) << "\n"
     << "tau = " << format_double(m.tau) << "\n"
     << "gamma = " << format_double(m.gamma) << "\n"
     << "kappa = " << format_double(m.kappa) << "\n"
     << "zeta = " << format_double(m.zeta) << "\n"
     << "eps_stab = " << format_double(m.eps_stab) << "\n"
     << "memory_variant = " << to_string(m.memory_variant) << "\n"
     << "exp_decay = " << format_double(m.exp_decay) << "\n";
  os << "clip_c = " << format_double(c.privacy.clip_c) << "\n"
     << "sigma = " << format_double(c.privacy.sigma) << "\n"
     << "q = " << format_double(c.privacy.q) << "\n"
     << "delta = " << format_double(c.privacy.delta) << "\n";
  os << "eta = " << format_double(c.train.eta) << "\n";
  if (c.train.eta_post) os << "eta_post = " << format_double(*c.train.eta_post) << "\n";
  os << "epochs = " << c.train.epochs << "\n"
     << "eval_every = " << c.train.eval_every << "\n"
     << "hidden1 = " << c.hidden1 << "\n"
     << "hidden2 = " << c.hidden2 << "\n";
  if (const auto* s = std::get_if<SyntheticSpec>(&c.dataset)) {
    os << "dataset = synthetic\n"
       << "num_classes = " << s->num_classes << "\n"
       << "dim = " << s->dim << "\n"
       << "per_class_count = " << s->per_class_count << "\n"
       << "cluster_std = " << format_double(s->cluster_std) << "\n"
       << "center_scale = " << format_double(s->center_scale) << "\n"
       << "train_count = " << s->train_count << "\n"
       << "test_count = " << s->test_count << "\n";
  } else {
    const auto& cf = std::get<Cifar10Spec>(c.dataset);
    os << "dataset = cifar10_binary\n"
       << "path = " << cf.path << "\n"
       << "train_count = " << cf.train_count << "\n"
       << "test_count = " << cf.test_count << "\n";
  }
  return os.str();
}

}  // namespace fodp

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

#include <algorithm>
#include <sstream>

#include "fodp/data/dataset_spec.hpp"
#include "fodp/model/mlp.hpp"
#include "fodp/oracle/oracle.hpp"

namespace fodp::oracle {

SensitivityInstance random_sensitivity_instance(Rng& rng, double beta,
                                                double clip_c, std::size_t n,
                                                std::size_t dim) {
  SensitivityInstance inst;
  for (std::size_t i = 0; i < n; ++i) {
    GradientVector g = gaussian_vector(rng, dim, 1.0);
    const double target = clip_c * (0.2 + 2.8 * rng.uniform());
    inst.grads.push_back(vec_scale(target / std::max(vec_norm2(g), 1e-12), g));
  }
  inst.mask = draw_mask(rng, n, 0.5);
  const auto prefix_len = static_cast<std::size_t>(rng.uniform_index(12));
  for (std::size_t t = 0; t < prefix_len; ++t) {
    inst.transcript_prefix.push_back(gaussian_vector(rng, dim, 2.0 * clip_c));
  }
  MechanismConfig& c = inst.config;
  c.beta = beta;
  c.alpha = 0.1 + 0.9 * rng.uniform();
  c.memory_window = 8;
  c.temper_lambda = 0.5 * rng.uniform();
  c.tau = 2.0 * rng.uniform();
  c.gamma = 0.05 + 0.95 * rng.uniform();
  return inst;
}

namespace {

std::string describe(double value, const char* label) {
  std::ostringstream os;
  os.precision(12);
  os << label << "=" << value;
  return os.str();
}

}  // namespace

std::vector<VerifyOutcome> verify_suite(std::uint64_t seed,
                                        std::size_t trials) {
  std::vector<VerifyOutcome> out;
  const Rng master(seed);
  const double clip_c = 1.0;

  for (double beta : {1.0, 0.9, 0.5}) {
    Rng rng = master.substream(static_cast<std::uint64_t>(beta * 1000) + 17);
    double worst_ratio = 0.0;
    bool ok = true;
    for (std::size_t k = 0; k < trials; ++k) {
      const SensitivityInstance inst =
          random_sensitivity_instance(rng, beta, clip_c);
      const SensitivityReport rep = brute_force_sensitivity(
          inst.grads, inst.mask, inst.transcript_prefix, inst.config, clip_c);
      ok = ok && !rep.violation();
      worst_ratio = std::max(worst_ratio, rep.max_observed / rep.bound);
    }
    out.push_back({"sensitivity_beta_" + std::to_string(beta).substr(0, 4),
                   ok, describe(worst_ratio, "max_observed/bound")});
  }

  {
    const Rng sub = master.substream(Stream::kData);
    Rng data_rng = sub;
    SyntheticSpec spec;
    spec.num_classes = 3;
    spec.dim = 4;
    spec.per_class_count = 40;
    spec.train_count = 100;
    spec.test_count = 20;
    const DataSplit data = generate_synthetic(spec, data_rng);
    const MlpShape shape{spec.dim, 6, 5, spec.num_classes};
    Rng init = master.substream(Stream::kInit);
    const GradientVector theta0 = init_params(shape, init);
    const MlpGradientSource source(shape, data.train);
    MechanismConfig cfg;
    cfg.beta = 0.9;
    cfg.memory_window = 8;
    PrivacyConfig privacy;
    privacy.q = 0.2;
    StepOptions keep;
    keep.retain_internals = true;
    const Transcript t = run_transcript(Algorithm::kFoDpSgd, cfg, privacy, 0.5,
                                        theta0, source, 30, seed, keep);
    const DecompositionReport rep = check_decomposition(t);
    out.push_back({"decomposition_k8_beta0.9", rep.max_relative_error < 1e-9,
                   describe(rep.max_relative_error, "max_relative_error")});
  }

  PrivacyConfig privacy;
  privacy.q = 0.2;
  for (const ReductionResult& r :
       check_reductions(seed, MechanismConfig{}, privacy)) {
    out.push_back({"reduction_" + r.name, r.passed, r.detail});
  }
  return out;
}

}  // namespace fodp::oracle

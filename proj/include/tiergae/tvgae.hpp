// Copyright 2026 The tiergae Authors.
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

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tiergae/autodiff.hpp"
#include "tiergae/gnn.hpp"
#include "tiergae/rng.hpp"
#include "tiergae/tgae.hpp"

namespace tiergae {

inline constexpr double kLogSigmaMin = -20.0;
inline constexpr double kLogSigmaMax = 20.0;

// Per-tier variational model: independent GCNs for μ and log σ of a
// diagonal Gaussian posterior over node embeddings.
struct VariationalTierModel {
  int tier = 1;
  GnnEncoder encoder_mu;
  GnnEncoder encoder_logsigma;

  // The μ encoder draws from the same stream as TierModel::create with the
  // same seed (role 0); log σ uses role 1.
  static VariationalTierModel create(int tier, const ModelDims& dims, std::uint64_t seed);
  std::vector<Param*> params();
};

struct TvgaeModel {
  std::array<VariationalTierModel, kNumTiers> tiers;

  static TvgaeModel create(const ModelDims& dims, std::uint64_t seed);
  VariationalTierModel& tier(int t) { return tiers.at(static_cast<std::size_t>(t - 1)); }
  std::vector<Param*> params();
};

struct Posterior {
  Var mu;
  Var logsigma;  // already clamped
};

Posterior encode_posterior(VariationalTierModel& model, Tape& tape, Var x, Var a_norm,
                           double logsigma_min = kLogSigmaMin,
                           double logsigma_max = kLogSigmaMax);

// z = μ + exp(log σ) ⊙ ε. The noise is a constant on the tape, so gradients
// reach μ and log σ only.
Var reparameterize(Var mu, Var logsigma, const Matrix& noise);
Var reparameterize(Var mu, Var logsigma, Rng& rng);
Matrix reparameterize(const Matrix& mu, const Matrix& logsigma, Rng& rng);

// KL(N(μ, σ²) ‖ N(0, I)) summed over nodes and dimensions, divided by the
// node count N.
double kl_divergence(const Matrix& mu, const Matrix& logsigma);
Var kl_divergence(Var mu, Var logsigma);

// Negative ELBO: reconstruction_loss + kl_weight · kl_divergence.
Var elbo_loss(Var a_hat, const Matrix& target, Var mu, Var logsigma, double kl_weight);

struct VariationalTrainConfig {
  TrainConfig base;
  // Unset means 1/N per graph.
  std::optional<double> kl_weight;
  double logsigma_min = kLogSigmaMin;
  double logsigma_max = kLogSigmaMax;
};

struct VariationalHistory {
  std::vector<double> loss;            // negative ELBO
  std::vector<double> reconstruction;  // reconstruction term only
  std::vector<double> kl;              // unweighted KL term
};

// Negative ELBO of one graph with caller-supplied noise.
struct VariationalTerms {
  Var loss;
  Var reconstruction;
  Var kl;
};
VariationalTerms variational_tier_loss(VariationalTierModel& model, Tape& tape,
                                       const TierInput& input, const Matrix& noise,
                                       const VariationalTrainConfig& config);

// Full-batch Adam on the mean per-graph negative ELBO, one posterior sample
// per graph per epoch drawn from Rng(config.base.seed) in graph order.
VariationalHistory train_tier_variational(VariationalTierModel& model,
                                          std::span<const TierInput> graphs,
                                          const VariationalTrainConfig& config);

// Inference-time tiered encoding: z_t = μ_t, and pooling consumes μ.
// No randomness is involved.
TieredRepresentation encode_tiered_variational(const Graph& graph, const MembershipMatrix& m1,
                                               TvgaeModel& model);

}  // namespace tiergae

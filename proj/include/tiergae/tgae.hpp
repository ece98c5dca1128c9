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
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tiergae/autodiff.hpp"
#include "tiergae/gnn.hpp"
#include "tiergae/graph.hpp"
#include "tiergae/matrix.hpp"

namespace tiergae {

inline constexpr int kNumTiers = 3;
inline constexpr double kProbabilityClamp = 1e-12;

// Training-ready view of one graph at one tier.
struct TierInput {
  Matrix x;       // N × d
  Matrix a_norm;  // gcn_norm of the binary existence adjacency
  Matrix target;  // binary existence adjacency; see reconstruction_loss
};

// Collapses every edge channel to existence, normalizes for the encoder and
// binarizes the reconstruction target.
TierInput make_tier_input(const Matrix& x, const DenseAdj& a);

// Â = σ(Z Zᵀ).
Matrix decode_adjacency(const Matrix& z);
Var decode_adjacency(Var z);

// Weighted binary cross-entropy between a predicted adjacency and a binary
// target, averaged over the scored entries.
//
// Scored entries are the off-diagonal ones; a 1-node graph has none, so its
// single diagonal entry is scored instead. Positive terms are weighted by
// pos_weight = #negatives / #positives among scored entries, falling back
// to 1 when either count is zero. Predictions are clamped to
// [1e-12, 1 - 1e-12] before the logarithm.
//
// Throws Error(kShapeMismatch) for mismatched or non-square inputs and
// Error(kDomainError) for non-binary targets.
double reconstruction_loss(const Matrix& a_hat, const Matrix& target);
Var reconstruction_loss(Var a_hat, const Matrix& target);

double positive_weight(const Matrix& target);

// Area under the ROC curve of a_hat scores over the off-diagonal pairs
// i < j, ties counted as one half. Returns NaN without both classes.
double reconstruction_auc(const Matrix& a_hat, const Matrix& target);

struct ModelDims {
  std::size_t input = 0;
  std::size_t hidden = 32;
  std::size_t latent = 16;
  int layers = 2;

  // Tier 1 reads molecular features; tiers 2 and 3 read pooled embeddings.
  EncoderDims tier(int t) const {
    return EncoderDims{t == 1 ? input : latent, hidden, latent, layers};
  }
};

struct TierModel {
  int tier = 1;
  GnnEncoder encoder;

  // Encoder parameters are named "tier<t>.encoder.layer<k>.*" and drawn
  // from derive_seed(seed, t, 0).
  static TierModel create(int tier, const ModelDims& dims, std::uint64_t seed);
  std::vector<Param*> params() { return encoder.params(); }
};

struct TgaeModel {
  std::array<TierModel, kNumTiers> tiers;

  static TgaeModel create(const ModelDims& dims, std::uint64_t seed);
  TierModel& tier(int t) { return tiers.at(static_cast<std::size_t>(t - 1)); }
  std::vector<Param*> params();
};

struct TrainConfig {
  int epochs = 200;
  AdamConfig adam;
  std::uint64_t seed = 42;
};

struct TrainHistory {
  // Objective at each epoch, evaluated before that epoch's update.
  std::vector<double> loss;
};

// Per-graph reconstruction loss recorded on tape.
Var tier_loss(TierModel& model, Tape& tape, const TierInput& input);

// Full-batch Adam on the mean per-graph loss. Touches only this model's
// parameters. Throws Error(kInvalidConfig) for negative epochs / empty input.
TrainHistory train_tier(TierModel& model, std::span<const TierInput> graphs,
                        const TrainConfig& config);

// Everything one tier exposes for a molecule.
struct TierBundle {
  Matrix x;
  DenseAdj adjacency;
  std::vector<Edge> edge_index;
  Matrix edge_attr;
  std::optional<MembershipMatrix> membership;  // absent at tier 3
  Matrix z;
  std::optional<Matrix> logsigma;  // variational models only
};

struct TieredRepresentation {
  std::array<TierBundle, kNumTiers> tiers;
  TierBundle& tier(int t) { return tiers.at(static_cast<std::size_t>(t - 1)); }
  const TierBundle& tier(int t) const { return tiers.at(static_cast<std::size_t>(t - 1)); }
};

// Node -> group -> graph encoding with DiffGroupPool between tiers. The
// tier-2 membership is graph_tier_membership(G).
TieredRepresentation encode_tiered(const Graph& graph, const MembershipMatrix& m1,
                                   TgaeModel& model);

// Pools one tier's bundle into the next tier's features and adjacency.
TierBundle pool_to_next_tier(const TierBundle& bundle, const MembershipMatrix& m);

}  // namespace tiergae

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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "tiergae/serialize.hpp"
#include "tiergae/tgae.hpp"
#include "tiergae/tvgae.hpp"

namespace tiergae {

struct RunConfig {
  ModelKind model = ModelKind::kTgae;
  std::uint64_t seed = 42;
  int epochs = 200;  // per tier
  double lr = 0.01;
  std::size_t hidden = 32;
  std::size_t latent = 16;
  int layers = 2;
  std::optional<double> kl_weight;  // tvgae only; unset means 1/N per graph
  std::string corpus = "corpus.json";
  std::string checkpoint = "checkpoint.json";
  std::string output = "export.jsonl";
};

// Applies "key = value" lines on top of base. Blank lines and lines starting
// with '#' are ignored. Keys: model, seed, epochs, lr, hidden, latent,
// layers, kl_weight, corpus, checkpoint, output. Unknown keys and
// unparsable values throw Error(kInvalidConfig) naming the key and line.
RunConfig parse_config(std::string_view text, RunConfig base = {});

// Throws Error(kInvalidConfig) naming the first offending field: epochs,
// lr, hidden, latent and kl_weight must be strictly positive and layers
// must lie in [2, 6].
void validate_config(const RunConfig& config);

ModelDims model_dims(const RunConfig& config, std::size_t input_dim);
TrainConfig train_config(const RunConfig& config);
VariationalTrainConfig variational_train_config(const RunConfig& config);

}  // namespace tiergae

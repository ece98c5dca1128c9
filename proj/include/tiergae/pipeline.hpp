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
#include <string>
#include <vector>

#include "tiergae/fgroups.hpp"
#include "tiergae/graph.hpp"
#include "tiergae/molecule.hpp"
#include "tiergae/tgae.hpp"
#include "tiergae/tvgae.hpp"

namespace tiergae {

// One ingested molecule: featurized graph plus its functional-group partition.
struct CorpusEntry {
  std::string id;
  std::optional<std::int64_t> cid;
  std::optional<std::string> inchi;
  std::optional<std::string> name;
  Graph graph;
  GroupPartition partition;

  MembershipMatrix membership() const {
    return membership_from_partition(partition, graph.num_nodes());
  }
};

struct IngestReport {
  std::size_t atoms = 0;
  std::size_t groups = 0;
  std::size_t functional_groups = 0;
  std::vector<std::string> unknown_elements;
};

// Featurizes, marks and partitions one parsed molecule.
CorpusEntry make_corpus_entry(const Molecule& mol, IngestReport* report = nullptr);

template <typename Model>
struct TieredHistory {
  std::array<Model, kNumTiers> tiers;
};

// Trains the three tiers bottom-up: tier t+1 inputs are pooled from the
// trained tier-t embeddings of every molecule. Tier t trains on Adam with
// TrainConfig::seed unchanged; the variational noise stream of tier t is
// seeded with derive_seed(seed, t, 2).
TieredHistory<TrainHistory> train_tiered(TgaeModel& model, const std::vector<CorpusEntry>& corpus,
                                         const TrainConfig& config);
TieredHistory<VariationalHistory> train_tiered(TvgaeModel& model,
                                               const std::vector<CorpusEntry>& corpus,
                                               const VariationalTrainConfig& config);

TieredRepresentation embed(const CorpusEntry& entry, TgaeModel& model);
TieredRepresentation embed(const CorpusEntry& entry, TvgaeModel& model);

}  // namespace tiergae

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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tiergae/autodiff.hpp"
#include "tiergae/graph.hpp"
#include "tiergae/matrix.hpp"
#include "tiergae/pipeline.hpp"
#include "tiergae/tgae.hpp"

namespace tiergae {

using Json = nlohmann::json;

inline constexpr int kFormatVersion = 1;
inline constexpr std::string_view kCorpusFormat = "tiergae-corpus";
inline constexpr std::string_view kCheckpointFormat = "tiergae-checkpoint";
inline constexpr std::string_view kExportFormat = "tiergae-export";

enum class ModelKind { kTgae, kTvgae };
std::string_view to_string(ModelKind kind);
// Throws Error(kInvalidConfig) for anything but "tgae" / "tvgae".
ModelKind parse_model_kind(std::string_view text);

// {"shape": [rows, cols], "data": [[row 0], [row 1], ...]}. Doubles are
// written in shortest round-trip form, so reading recovers them exactly.
// Readers throw Error(kFormatError) for malformed or inconsistent arrays.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);
// Shape [2, E]: sources in row 0, targets in row 1.
Json edge_index_to_json(std::span<const Edge> edges);
std::vector<Edge> edge_index_from_json(const Json& j);

// Corpus container. Readers reject another format tag with
// Error(kFormatError) and another version with Error(kVersionMismatch).
std::string write_corpus(const std::vector<CorpusEntry>& corpus);
std::vector<CorpusEntry> read_corpus(std::string_view text);

struct Checkpoint {
  ModelKind model = ModelKind::kTgae;
  ModelDims dims;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, Matrix>> params;  // model parameter order
};

std::string write_checkpoint(ModelKind model, const ModelDims& dims, std::uint64_t seed,
                             const std::vector<Param*>& params);
Checkpoint read_checkpoint(std::string_view text);
// Copies checkpoint values into params, which must carry the same names and
// shapes in the same order. Throws Error(kFormatError) otherwise.
void load_params(const Checkpoint& checkpoint, const std::vector<Param*>& params);

struct ExportDocument {
  std::string id;
  std::optional<std::int64_t> cid;
  std::optional<std::string> inchi;
  ModelKind model = ModelKind::kTgae;
  TieredRepresentation tiers;
};

// One compact JSON document, no trailing newline. An export file holds one
// document per line.
std::string write_export_document(const ExportDocument& doc);
ExportDocument read_export_document(std::string_view text);

// "epoch,tier,loss" with epochs counted from 0.
std::string write_history_csv(const TieredHistory<TrainHistory>& history);
std::string write_history_csv(const TieredHistory<VariationalHistory>& history);

}  // namespace tiergae

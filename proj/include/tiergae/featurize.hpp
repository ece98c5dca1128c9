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
#include <string>
#include <string_view>
#include <vector>

#include "tiergae/graph.hpp"
#include "tiergae/molecule.hpp"

namespace tiergae {

// Node feature layout, per atom:
//   [0, 11)  one-hot element over kElementVocabulary ("other" last)
//   11       formal charge
//   12       degree (bonded neighbours, hydrogens included)
// Edge feature layout, per directed entry: one-hot bond order over
// {single, double, triple, aromatic}.
inline constexpr std::array<std::string_view, 11> kElementVocabulary = {
    "C", "N", "O", "S", "P", "F", "Cl", "Br", "I", "H", "other"};
inline constexpr std::size_t kOtherElement = kElementVocabulary.size() - 1;
inline constexpr std::size_t kChargeFeature = kElementVocabulary.size();
inline constexpr std::size_t kDegreeFeature = kElementVocabulary.size() + 1;
inline constexpr std::size_t kNodeFeatureWidth = kElementVocabulary.size() + 2;
inline constexpr std::size_t kEdgeFeatureWidth = 4;

std::size_t element_index(std::string_view element);

struct FeaturizeResult {
  Graph graph;
  // Elements that fell into the "other" bucket, in atom order.
  std::vector<std::string> unknown_elements;
};

// 1-based bonds become 0-based index pairs, each emitted in both directions
// (a1 -> a2 first). The molecule's id is the CID when present, else its name.
FeaturizeResult featurize(const Molecule& mol);

// Hill formula recomputed from the one-hot block. Atoms in the "other"
// bucket are counted under the symbol "X".
std::string formula_from_features(const Graph& g);

}  // namespace tiergae

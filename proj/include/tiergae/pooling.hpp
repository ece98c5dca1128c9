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
#include <vector>

#include "tiergae/autodiff.hpp"
#include "tiergae/graph.hpp"
#include "tiergae/matrix.hpp"

namespace tiergae {

// Coarsened graph for the next tier.
struct PoolResult {
  Matrix x_next;      // G × d, exactly Mᵀ Z
  DenseAdj a_next;    // G × G × s, Mᵀ A[·][·][c] M per channel
  std::vector<Edge> edge_index_next;
  Matrix edge_attr_next;
};

// DiffGroupPool with a fixed hard-partition membership matrix.
//
// Within-group edge mass lands on the diagonal of a_next and is kept there.
// Every output entry accumulates its terms in ascending node order, so the
// result equals a plain dense Mᵀ Z / Mᵀ A M evaluated in the same order.
// Throws Error(kShapeMismatch) when z or a disagree with m on N.
PoolResult diff_group_pool(const Matrix& z, const DenseAdj& a, const MembershipMatrix& m);

// Differentiable feature pooling Mᵀ Z on a tape; M is recorded as a
// constant so gradients reach Z only.
Var pool_features(Tape& tape, Var z, const MembershipMatrix& m);

// The graph-tier membership: G×1 all ones, collapsing every group into a
// single molecule node. Throws Error(kInvalidConfig) for g_count == 0.
MembershipMatrix graph_tier_membership(std::size_t g_count);

}  // namespace tiergae

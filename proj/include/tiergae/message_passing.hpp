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

#include <functional>
#include <span>
#include <vector>

#include "tiergae/graph.hpp"
#include "tiergae/matrix.hpp"

namespace tiergae {

enum class Aggregation { kAdd, kMean, kMax };
enum class Flow { kSourceToTarget, kTargetToSource };

// Generic value-level message passing over a COO edge list:
//
//   x_i' = update(x_i, AGG_{j in N(i)} message(x_i, x_j, e_ij))
//
// With kSourceToTarget an entry (j, i) delivers to i; kTargetToSource
// reverses that. Nodes with no incoming messages aggregate to zeros.
// The GCN layers in gnn.hpp are the shipped instantiation; see
// gcn_message_passing().
struct MessagePassing {
  using MessageFn = std::function<std::vector<double>(
      std::span<const double> x_i, std::span<const double> x_j, std::span<const double> e_ij)>;
  using UpdateFn = std::function<std::vector<double>(std::span<const double> x_i,
                                                     std::span<const double> aggregated)>;

  Aggregation aggregation = Aggregation::kAdd;
  Flow flow = Flow::kSourceToTarget;
  MessageFn message;
  UpdateFn update;

  Matrix propagate(const Matrix& x, std::span<const Edge> edges, const Matrix& edge_attr) const;
};

// GCN propagation Â·H as message passing: edge_attr column 0 carries the
// normalized coefficient, message = coeff * x_j, aggregation = add,
// update = identity.
MessagePassing gcn_message_passing();

// Builds the weighted COO list of a square matrix (one entry per nonzero),
// suitable as input to gcn_message_passing().
CooAdjacency weighted_coo(const Matrix& a);

}  // namespace tiergae

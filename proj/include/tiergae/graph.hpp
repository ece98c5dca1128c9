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
#include <span>
#include <string>
#include <vector>

#include "tiergae/matrix.hpp"

namespace tiergae {

// One COO column of the edge index: a directed entry src -> dst (0-based).
struct Edge {
  std::int64_t src = 0;
  std::int64_t dst = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// A graph in sparse-adjacency-tuple form: node features X (N×d), edge index
// I (U directed entries) and edge features E (U×s). Undirected edges are
// stored as both directed entries with identical feature rows.
//
// pos and y are carried through unchanged; no model reads them.
struct Graph {
  Matrix x;
  std::vector<Edge> edge_index;
  Matrix edge_attr;
  std::optional<Matrix> pos;
  std::optional<std::vector<double>> y;
  std::optional<std::string> id;

  std::size_t num_nodes() const noexcept { return x.rows(); }
  std::size_t num_edges() const noexcept { return edge_index.size(); }
  std::size_t num_edge_features() const noexcept { return edge_attr.cols(); }
};

// Dense N×N×s adjacency, one channel per edge feature.
class DenseAdj {
 public:
  DenseAdj() = default;
  DenseAdj(std::size_t n, std::size_t channels)
      : n_(n), channels_(channels), data_(n * n * channels, 0.0) {}

  std::size_t num_nodes() const noexcept { return n_; }
  std::size_t channels() const noexcept { return channels_; }

  double& at(std::size_t i, std::size_t j, std::size_t c) {
    return data_[(i * n_ + j) * channels_ + c];
  }
  double at(std::size_t i, std::size_t j, std::size_t c) const {
    return data_[(i * n_ + j) * channels_ + c];
  }

  // The s-vector of entry (i, j).
  std::span<const double> entry(std::size_t i, std::size_t j) const {
    return std::span<const double>(data_).subspan((i * n_ + j) * channels_, channels_);
  }

  // Single-channel N×N view of channel c.
  Matrix channel(std::size_t c) const;
  // 1 where any channel is nonzero, else 0.
  Matrix existence() const;
  // Sum of every entry of channel c.
  double channel_total(std::size_t c) const;

  bool has_nonzero(std::size_t i, std::size_t j) const;

  friend bool operator==(const DenseAdj&, const DenseAdj&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t channels_ = 0;
  std::vector<double> data_;
};

// Binary N×G node-to-group matrix with hard-partition semantics: every row
// has exactly one 1 and every column has at least one.
class MembershipMatrix {
 public:
  MembershipMatrix() = default;
  // Throws Error(kInvalidMembership) for non-binary entries or rows that do
  // not sum to 1, and Error(kEmptyGroup) for an empty column.
  MembershipMatrix(Matrix m, int tier);
  // Builds from group ids in [0, num_groups).
  static MembershipMatrix from_assignment(std::span<const std::size_t> group_of,
                                          std::size_t num_groups, int tier);

  std::size_t num_nodes() const noexcept { return m_.rows(); }
  std::size_t num_groups() const noexcept { return m_.cols(); }
  int tier() const noexcept { return tier_; }
  const Matrix& matrix() const noexcept { return m_; }
  std::size_t group_of(std::size_t node) const { return group_of_[node]; }
  std::span<const std::size_t> assignment() const noexcept { return group_of_; }

  friend bool operator==(const MembershipMatrix&, const MembershipMatrix&) = default;

 private:
  Matrix m_;
  int tier_ = 1;
  std::vector<std::size_t> group_of_;
};

enum class ViolationKind {
  kIndexOutOfRange,
  kShapeMismatch,
  kDuplicateEdge,
  kAsymmetricEdge,
  kNonFinite,
};

struct Violation {
  ViolationKind kind;
  // Offending edge column, or node row for feature-shape problems.
  std::size_t index = 0;
  std::string message;
};

std::string_view to_string(ViolationKind kind);

// Reports every broken Graph invariant; empty iff the graph is well formed.
std::vector<Violation> validate(const Graph& g);

// Throws the Error matching the first violation reported by validate.
DenseAdj coo_to_dense(const Graph& g);

struct CooAdjacency {
  std::vector<Edge> edge_index;
  Matrix edge_attr;
};

// One entry per (i, j) with any nonzero channel, row-major order.
CooAdjacency dense_to_coo(const DenseAdj& a);

// Relabels node i as perm[i] in features, edges and optional positions.
// Edge order is preserved.
Graph permute_graph(const Graph& g, std::span<const std::size_t> perm);
DenseAdj permute_dense(const DenseAdj& a, std::span<const std::size_t> perm);

}  // namespace tiergae

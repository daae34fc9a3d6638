// Copyright 2026 The graphcode Authors
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

/// @file graph.hpp
/// Complete undirected graphs with self loops whose edges carry field labels.
///
/// Edges are named (i, j) with i >= j. The label store is the lower triangle
/// in row-major order, so edge (i, j) lives at i(i+1)/2 + j; this is also the
/// lexicographic order used for every edge vector and every parity-check
/// column in the library.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphcode/finite_field.hpp"

namespace graphcode {

using NodeId = std::uint32_t;

/// Sorted, duplicate-free set of node indices.
using NodeSet = std::vector<NodeId>;
NodeSet make_node_set(std::vector<NodeId> nodes);

struct EdgeId {
  NodeId i = 0;  // i >= j
  NodeId j = 0;

  /// Normalizes the endpoint order.
  static constexpr EdgeId make(NodeId a, NodeId b) noexcept {
    return a >= b ? EdgeId{a, b} : EdgeId{b, a};
  }
  constexpr bool is_loop() const noexcept { return i == j; }
  friend constexpr auto operator<=>(EdgeId, EdgeId) = default;

  std::string to_string() const;  // "i:j"
};

constexpr std::size_t edge_count(std::size_t n) noexcept { return n * (n + 1) / 2; }

constexpr std::size_t edge_index(EdgeId e) noexcept {
  return static_cast<std::size_t>(e.i) * (e.i + 1) / 2 + e.j;
}
/// Checked variant: throws kOutOfRange unless j <= i < n.
std::size_t edge_index(EdgeId e, std::size_t n);
EdgeId edge_unindex(std::size_t index) noexcept;

/// Lexicographically ordered set of normalized edges.
class EdgeSet {
 public:
  EdgeSet() = default;
  EdgeSet(std::initializer_list<EdgeId> edges);
  explicit EdgeSet(std::vector<EdgeId> edges);

  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  auto begin() const noexcept { return edges_.begin(); }
  auto end() const noexcept { return edges_.end(); }
  EdgeId operator[](std::size_t k) const { return edges_[k]; }
  const std::vector<EdgeId>& edges() const noexcept { return edges_; }

  bool contains(EdgeId e) const noexcept;
  EdgeSet intersect(const EdgeSet& other) const;
  EdgeSet unite(const EdgeSet& other) const;
  EdgeSet minus(const EdgeSet& other) const;

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  std::vector<EdgeId> edges_;
};

/// N_m: the n edges joining v_m to every node; the l-th entry joins v_m, v_l.
EdgeSet neighborhood(std::size_t n, NodeId m);
/// Union of the neighborhoods of the failed nodes.
EdgeSet failure_edges(std::size_t n, std::span<const NodeId> failed);
/// Edge count erased by rho node failures: rho n - C(rho, 2).
std::size_t erased_edge_count(std::size_t n, std::size_t rho) noexcept;

class LabeledGraph {
 public:
  static constexpr std::size_t kMinNodes = 3;
  static constexpr std::size_t kMaxNodes = 10000;

  LabeledGraph() = default;
  /// All-zero graph, no erasures.
  LabeledGraph(std::size_t n, FieldPtr field);
  /// Labels in lexicographic edge order.
  LabeledGraph(std::size_t n, FieldPtr field, std::vector<FieldElement> labels);

  std::size_t node_count() const noexcept { return n_; }
  const FieldPtr& field() const noexcept { return field_; }

  /// Throws kErasedAccess if the edge is erased.
  FieldElement label(EdgeId e) const;
  FieldElement label(NodeId a, NodeId b) const { return label(EdgeId::make(a, b)); }
  /// Writes a label and clears the erasure flag of that edge.
  void set_label(EdgeId e, FieldElement value);

  bool is_erased(EdgeId e) const;
  void erase(EdgeId e);
  bool has_erasures() const noexcept { return erased_count_ > 0; }
  std::size_t erased_count() const noexcept { return erased_count_; }
  EdgeSet erased_edges() const;

  /// Raw store including placeholder zeros at erased positions.
  std::span<const FieldElement> labels() const noexcept { return labels_; }
  std::span<const std::uint8_t> erasure_mask() const noexcept { return erased_; }

  /// Symmetric n x n adjacency matrix A_G. Requires no erasures.
  FieldMatrix adjacency() const;
  /// A'_G: A_G with entries above the diagonal zeroed.
  FieldMatrix lower_triangle_adjacency() const;

  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b);

 private:
  std::size_t checked_index(EdgeId e) const;
  void require_unerased(const char* what) const;

  std::size_t n_ = 0;
  FieldPtr field_;
  std::vector<FieldElement> labels_;
  std::vector<std::uint8_t> erased_;
  std::size_t erased_count_ = 0;
};

/// c_U: labels of U in lexicographic order. Throws kErasedAccess.
std::vector<FieldElement> edge_vector(const LabeledGraph& g, const EdgeSet& u);

LabeledGraph graph_add(const LabeledGraph& a, const LabeledGraph& b);
LabeledGraph graph_scale(FieldElement alpha, const LabeledGraph& g);

/// Copy of g with every edge incident to a failed node erased (zeroed and
/// masked). Existing erasures are kept.
LabeledGraph apply_erasure(const LabeledGraph& g, std::span<const NodeId> failed);

/// Nodes whose whole neighborhood is erased.
NodeSet fully_erased_nodes(const LabeledGraph& g);

/// The failed-node set if the erasure mask is exactly a union of
/// neighborhoods, nullopt for any other pattern.
std::optional<NodeSet> node_failure_pattern(const LabeledGraph& g);

}  // namespace graphcode

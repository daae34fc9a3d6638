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

#include "graphcode/graph.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <utility>

namespace graphcode {

NodeSet make_node_set(std::vector<NodeId> nodes) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  return nodes;
}

std::string EdgeId::to_string() const { return std::to_string(i) + ":" + std::to_string(j); }

std::size_t edge_index(EdgeId e, std::size_t n) {
  if (e.j > e.i || e.i >= n) {
    throw GraphCodeError(ErrorCode::kOutOfRange,
                         "edge " + e.to_string() + " invalid for n=" + std::to_string(n));
  }
  return edge_index(e);
}

EdgeId edge_unindex(std::size_t index) noexcept {
  auto i = static_cast<std::size_t>((std::sqrt(8.0 * static_cast<double>(index) + 1.0) - 1.0) / 2.0);
  while (i * (i + 1) / 2 > index) --i;
  while ((i + 1) * (i + 2) / 2 <= index) ++i;
  return EdgeId{static_cast<NodeId>(i), static_cast<NodeId>(index - i * (i + 1) / 2)};
}

// ---------------------------------------------------------------------------
// EdgeSet

EdgeSet::EdgeSet(std::initializer_list<EdgeId> edges)
    : EdgeSet(std::vector<EdgeId>(edges)) {}

EdgeSet::EdgeSet(std::vector<EdgeId> edges) : edges_(std::move(edges)) {
  for (EdgeId& e : edges_) e = EdgeId::make(e.i, e.j);
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool EdgeSet::contains(EdgeId e) const noexcept {
  return std::binary_search(edges_.begin(), edges_.end(), EdgeId::make(e.i, e.j));
}

EdgeSet EdgeSet::intersect(const EdgeSet& other) const {
  EdgeSet out;
  std::set_intersection(edges_.begin(), edges_.end(), other.edges_.begin(), other.edges_.end(),
                        std::back_inserter(out.edges_));
  return out;
}

EdgeSet EdgeSet::unite(const EdgeSet& other) const {
  EdgeSet out;
  std::set_union(edges_.begin(), edges_.end(), other.edges_.begin(), other.edges_.end(),
                 std::back_inserter(out.edges_));
  return out;
}

EdgeSet EdgeSet::minus(const EdgeSet& other) const {
  EdgeSet out;
  std::set_difference(edges_.begin(), edges_.end(), other.edges_.begin(), other.edges_.end(),
                      std::back_inserter(out.edges_));
  return out;
}

EdgeSet neighborhood(std::size_t n, NodeId m) {
  if (m >= n) {
    throw GraphCodeError(ErrorCode::kOutOfRange,
                         "node " + std::to_string(m) + " outside [" + std::to_string(n) + "]");
  }
  std::vector<EdgeId> edges;
  edges.reserve(n);
  for (NodeId l = 0; l < n; ++l) edges.push_back(EdgeId::make(m, l));
  return EdgeSet(std::move(edges));
}

EdgeSet failure_edges(std::size_t n, std::span<const NodeId> failed) {
  std::vector<EdgeId> edges;
  for (NodeId f : failed) {
    if (f >= n) {
      throw GraphCodeError(ErrorCode::kOutOfRange, "failed node " + std::to_string(f) +
                                                       " outside [" + std::to_string(n) + "]");
    }
    for (NodeId l = 0; l < n; ++l) edges.push_back(EdgeId::make(f, l));
  }
  return EdgeSet(std::move(edges));
}

std::size_t erased_edge_count(std::size_t n, std::size_t rho) noexcept {
  return rho * n - rho * (rho - (rho > 0 ? 1 : 0)) / 2;
}

// ---------------------------------------------------------------------------
// LabeledGraph

LabeledGraph::LabeledGraph(std::size_t n, FieldPtr field)
    : n_(n), field_(std::move(field)) {
  if (n_ < kMinNodes || n_ > kMaxNodes) {
    throw GraphCodeError(ErrorCode::kOutOfRange,
                         "node count " + std::to_string(n) + " outside [3, 10000]");
  }
  if (!field_) throw GraphCodeError(ErrorCode::kInvalidArgument, "graph needs a field");
  labels_.assign(edge_count(n_), field_->zero());
  erased_.assign(edge_count(n_), 0);
}

LabeledGraph::LabeledGraph(std::size_t n, FieldPtr field, std::vector<FieldElement> labels)
    : LabeledGraph(n, std::move(field)) {
  if (labels.size() != labels_.size()) {
    throw GraphCodeError(ErrorCode::kShapeMismatch,
                         "expected " + std::to_string(labels_.size()) + " labels, got " +
                             std::to_string(labels.size()));
  }
  for (FieldElement v : labels) {
    if (!field_->contains(v)) {
      throw GraphCodeError(ErrorCode::kFieldMismatch, "label outside " + field_->to_string());
    }
  }
  labels_ = std::move(labels);
}

std::size_t LabeledGraph::checked_index(EdgeId e) const {
  return edge_index(EdgeId::make(e.i, e.j), n_);
}

void LabeledGraph::require_unerased(const char* what) const {
  if (erased_count_ > 0) {
    throw GraphCodeError(ErrorCode::kErasedAccess, std::string(what) + " on a graph with erasures");
  }
}

FieldElement LabeledGraph::label(EdgeId e) const {
  const std::size_t k = checked_index(e);
  if (erased_[k]) {
    throw GraphCodeError(ErrorCode::kErasedAccess, "edge " + edge_unindex(k).to_string() +
                                                       " is erased");
  }
  return labels_[k];
}

void LabeledGraph::set_label(EdgeId e, FieldElement value) {
  const std::size_t k = checked_index(e);
  if (!field_->contains(value)) {
    throw GraphCodeError(ErrorCode::kFieldMismatch, "label outside " + field_->to_string());
  }
  labels_[k] = value;
  if (erased_[k]) {
    erased_[k] = 0;
    --erased_count_;
  }
}

bool LabeledGraph::is_erased(EdgeId e) const { return erased_[checked_index(e)] != 0; }

void LabeledGraph::erase(EdgeId e) {
  const std::size_t k = checked_index(e);
  labels_[k] = field_->zero();
  if (!erased_[k]) {
    erased_[k] = 1;
    ++erased_count_;
  }
}

EdgeSet LabeledGraph::erased_edges() const {
  std::vector<EdgeId> out;
  out.reserve(erased_count_);
  for (std::size_t k = 0; k < erased_.size(); ++k) {
    if (erased_[k]) out.push_back(edge_unindex(k));
  }
  return EdgeSet(std::move(out));
}

FieldMatrix LabeledGraph::adjacency() const {
  require_unerased("adjacency view");
  FieldMatrix a(field_, n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const FieldElement v = labels_[i * (i + 1) / 2 + j];
      a(i, j) = v;
      a(j, i) = v;
    }
  }
  return a;
}

FieldMatrix LabeledGraph::lower_triangle_adjacency() const {
  require_unerased("adjacency view");
  FieldMatrix a(field_, n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j <= i; ++j) a(i, j) = labels_[i * (i + 1) / 2 + j];
  }
  return a;
}

bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
  return a.n_ == b.n_ && same_field(a.field_, b.field_) && a.labels_ == b.labels_ &&
         a.erased_ == b.erased_;
}

std::vector<FieldElement> edge_vector(const LabeledGraph& g, const EdgeSet& u) {
  std::vector<FieldElement> out;
  out.reserve(u.size());
  for (EdgeId e : u) out.push_back(g.label(e));
  return out;
}

namespace {

void require_compatible(const LabeledGraph& a, const LabeledGraph& b) {
  if (a.node_count() != b.node_count()) {
    throw GraphCodeError(ErrorCode::kShapeMismatch, "graphs differ in node count");
  }
  if (!same_field(a.field(), b.field())) {
    throw GraphCodeError(ErrorCode::kFieldMismatch, "graphs differ in field");
  }
  if (a.has_erasures() || b.has_erasures()) {
    throw GraphCodeError(ErrorCode::kErasedAccess, "arithmetic on a graph with erasures");
  }
}

}  // namespace

LabeledGraph graph_add(const LabeledGraph& a, const LabeledGraph& b) {
  require_compatible(a, b);
  const Field& f = *a.field();
  std::vector<FieldElement> out(a.labels().size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = f.add(a.labels()[k], b.labels()[k]);
  return LabeledGraph(a.node_count(), a.field(), std::move(out));
}

LabeledGraph graph_scale(FieldElement alpha, const LabeledGraph& g) {
  require_compatible(g, g);
  const Field& f = *g.field();
  std::vector<FieldElement> out(g.labels().size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = f.mul(alpha, g.labels()[k]);
  return LabeledGraph(g.node_count(), g.field(), std::move(out));
}

LabeledGraph apply_erasure(const LabeledGraph& g, std::span<const NodeId> failed) {
  LabeledGraph out = g;
  for (EdgeId e : failure_edges(g.node_count(), failed)) out.erase(e);
  return out;
}

NodeSet fully_erased_nodes(const LabeledGraph& g) {
  NodeSet out;
  const std::size_t n = g.node_count();
  const auto mask = g.erasure_mask();
  for (NodeId m = 0; m < n; ++m) {
    bool all = true;
    for (NodeId l = 0; l < n && all; ++l) all = mask[edge_index(EdgeId::make(m, l))] != 0;
    if (all) out.push_back(m);
  }
  return out;
}

std::optional<NodeSet> node_failure_pattern(const LabeledGraph& g) {
  NodeSet failed = fully_erased_nodes(g);
  if (g.erased_count() != erased_edge_count(g.node_count(), failed.size())) return std::nullopt;
  return failed;
}

}  // namespace graphcode

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

#include <set>

#include "doctest.h"
#include "graphcode/graph.hpp"

using namespace graphcode;

TEST_CASE("edge index is the lower-triangle row-major position") {
  std::size_t k = 0;
  for (NodeId i = 0; i < 200; ++i) {
    for (NodeId j = 0; j <= i; ++j, ++k) {
      REQUIRE(edge_index(EdgeId{i, j}) == k);
      REQUIRE(edge_unindex(k) == EdgeId{i, j});
    }
  }
  CHECK(edge_count(4) == 10);
  CHECK(edge_index(EdgeId{3, 2}) == 8);
  CHECK(EdgeId::make(2, 5) == EdgeId{5, 2});
  CHECK(EdgeId{7, 5}.to_string() == "7:5");
  CHECK_THROWS_AS(edge_index(EdgeId{4, 0}, 4), GraphCodeError);
}

TEST_CASE("edge sets") {
  const EdgeSet a{EdgeId{3, 1}, EdgeId{1, 1}, EdgeId{3, 1}};
  const EdgeSet b{EdgeId{3, 1}, EdgeId{2, 0}};
  CHECK(a.size() == 2);
  CHECK(a[0] == EdgeId{1, 1});
  CHECK(a.intersect(b) == EdgeSet{EdgeId{3, 1}});
  CHECK(a.unite(b).size() == 3);
  CHECK(a.minus(b) == EdgeSet{EdgeId{1, 1}});
  CHECK(EdgeSet{EdgeId::make(1, 3)}.contains(EdgeId{3, 1}));
}

TEST_CASE("failure edge counts match rho n - C(rho, 2) exhaustively") {
  for (std::size_t n = 3; n <= 12; ++n) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<NodeId> failed;
      for (NodeId v = 0; v < n; ++v) {
        if (mask >> v & 1) failed.push_back(v);
      }
      // Count edges with at least one failed endpoint by direct enumeration.
      std::size_t direct = 0;
      for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = 0; j <= i; ++j) direct += ((mask >> i & 1) || (mask >> j & 1)) ? 1 : 0;
      }
      const std::size_t rho = failed.size();
      REQUIRE(failure_edges(n, failed).size() == direct);
      REQUIRE(erased_edge_count(n, rho) == rho * n - rho * (rho - 1) / 2);
      REQUIRE(direct == erased_edge_count(n, rho));
    }
  }
}

TEST_CASE("neighborhood entries are ordered by the other endpoint") {
  for (std::size_t n = 3; n <= 12; ++n) {
    for (NodeId m = 0; m < n; ++m) {
      const EdgeSet nm = neighborhood(n, m);
      REQUIRE(nm.size() == n);
      for (NodeId l = 0; l < n; ++l) REQUIRE(nm[l] == EdgeId::make(m, l));
    }
  }
}

TEST_CASE("labeled graphs keep an erasure mask separate from labels") {
  const FieldPtr f = Field::make(5);
  LabeledGraph g(4, f);
  g.set_label(EdgeId{2, 1}, FieldElement{3});
  CHECK(g.label(1, 2).value == 3);
  g.erase(EdgeId{0, 0});
  CHECK(g.is_erased(EdgeId{0, 0}));
  CHECK_THROWS_AS(g.label(EdgeId{0, 0}), GraphCodeError);
  CHECK(g.erased_count() == 1);
  g.set_label(EdgeId{0, 0}, FieldElement{0});
  CHECK_FALSE(g.has_erasures());
  CHECK(g.label(EdgeId{0, 0}).value == 0);
  CHECK_THROWS_AS(LabeledGraph(2, f), GraphCodeError);
  CHECK_THROWS_AS(g.set_label(EdgeId{4, 0}, f->one()), GraphCodeError);
}

TEST_CASE("adjacency and lower-triangle adjacency") {
  const FieldPtr f = Field::make(7);
  LabeledGraph g(3, f);
  g.set_label(EdgeId{1, 0}, FieldElement{2});
  g.set_label(EdgeId{2, 2}, FieldElement{5});
  const FieldMatrix a = g.adjacency();
  CHECK(a(0, 1).value == 2);
  CHECK(a(1, 0).value == 2);
  CHECK(a(2, 2).value == 5);
  const FieldMatrix lt = g.lower_triangle_adjacency();
  CHECK(lt(1, 0).value == 2);
  CHECK(lt(0, 1).value == 0);
  g.erase(EdgeId{1, 1});
  CHECK_THROWS_AS(g.adjacency(), GraphCodeError);
}

TEST_CASE("apply_erasure and failure pattern recognition") {
  const FieldPtr f = Field::make(3);
  LabeledGraph g(6, f);
  for (std::size_t k = 0; k < edge_count(6); ++k) g.set_label(edge_unindex(k), FieldElement{1});
  const std::vector<NodeId> failed{1, 4};
  const LabeledGraph e = apply_erasure(g, failed);
  CHECK(e.erased_count() == 2 * 6 - 1);
  CHECK(e.erased_edges() == failure_edges(6, failed));
  CHECK(fully_erased_nodes(e) == NodeSet{1, 4});
  CHECK(node_failure_pattern(e) == NodeSet{1, 4});
  for (EdgeId x : e.erased_edges()) CHECK(e.labels()[edge_index(x)].value == 0);
  LabeledGraph partial = g;
  partial.erase(EdgeId{3, 2});
  CHECK_FALSE(node_failure_pattern(partial).has_value());
  CHECK(node_failure_pattern(g) == NodeSet{});
}

TEST_CASE("graph arithmetic") {
  const FieldPtr f = Field::make(5);
  LabeledGraph a(3, f), b(3, f);
  a.set_label(EdgeId{1, 0}, FieldElement{3});
  b.set_label(EdgeId{1, 0}, FieldElement{4});
  CHECK(graph_add(a, b).label(1, 0).value == 2);
  CHECK(graph_scale(FieldElement{2}, a).label(1, 0).value == 1);
  CHECK(edge_vector(a, EdgeSet{EdgeId{1, 0}, EdgeId{0, 0}}) ==
        std::vector<FieldElement>{FieldElement{0}, FieldElement{3}});
  LabeledGraph c(3, Field::make(7));
  CHECK_THROWS_AS(graph_add(a, c), GraphCodeError);
}

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

#include "doctest.h"
#include "graphcode/families.hpp"
#include "graphcode/single_parity.hpp"

using namespace graphcode;

TEST_CASE("neighborhood parity code is optimal for one failure") {
  for (std::size_t n = 3; n <= 20; ++n) {
    const GraphCodeSpec s = single_parity::build_spec(n, Field::make(2));
    const CodeMetrics m = code_metrics(s, 1);
    CHECK(m.redundancy == n);
    CHECK(m.optimality_gap == 0);
    CHECK(s.row_labels.front() == "N_0");
  }
  CHECK_THROWS_AS(single_parity::build_spec(2, Field::make(2)), GraphCodeError);
}

TEST_CASE("three-node binary example: parity of every neighborhood") {
  const GraphCodeSpec s = single_parity::build_spec(3, Field::make(2));
  // Information on (0,0), (1,0), (1,1) = 1, 0, 1.
  const InfoMap info{{EdgeId{0, 0}, FieldElement{1}},
                     {EdgeId{1, 0}, FieldElement{0}},
                     {EdgeId{1, 1}, FieldElement{1}}};
  const LabeledGraph g = single_parity::encode(s, info);
  // Each neighborhood sums to zero: (2,0) = 1, (2,1) = 1, (2,2) = 0.
  CHECK(g.label(2, 0).value == 1);
  CHECK(g.label(2, 1).value == 1);
  CHECK(g.label(2, 2).value == 0);
}

TEST_CASE("encoder agrees with the generic solver and decoder with the oracle") {
  std::mt19937_64 rng(17);
  for (std::uint32_t q : {2u, 3u, 7u, 16u}) {
    for (std::size_t n : {3u, 4u, 9u, 12u}) {
      const GraphCodeSpec s = single_parity::build_spec(n, Field::make(q));
      for (int t = 0; t < 10; ++t) {
        const InfoMap info = random_info(s, rng);
        const LabeledGraph g = single_parity::encode(s, info);
        REQUIRE(g == encode_systematic_generic(s, info));
        for (NodeId v = 0; v < n; ++v) {
          const NodeId failed[] = {v};
          const LabeledGraph e = apply_erasure(g, failed);
          const DecodeReport r = single_parity::decode(s, e);
          REQUIRE(r.ok());
          REQUIRE(r.recovered == g);
          REQUIRE(r.provenance.size() == n);
          REQUIRE(r.provenance.back().edge == EdgeId{v, v});
          REQUIRE(oracle_decode(s, e).recovered == g);
        }
      }
    }
  }
}

TEST_CASE("two failures fall back to the oracle and are underdetermined") {
  const GraphCodeSpec s = single_parity::build_spec(5, Field::make(2));
  const LabeledGraph g(5, s.field);
  const NodeId failed[] = {1, 3};
  const DecodeReport r = single_parity::decode(s, apply_erasure(g, failed));
  CHECK(r.status == DecodeStatus::kUnderdetermined);
}

TEST_CASE("encoder rejects malformed information") {
  const GraphCodeSpec s = single_parity::build_spec(4, Field::make(2));
  InfoMap info;
  CHECK_THROWS_AS(single_parity::encode(s, info), GraphCodeError);
  for (EdgeId e : information_edges(3)) info.emplace(e, FieldElement{0});
  info.erase(EdgeId{2, 2});
  info.emplace(EdgeId{3, 0}, FieldElement{0});
  CHECK_THROWS_AS(single_parity::encode(s, info), GraphCodeError);
}

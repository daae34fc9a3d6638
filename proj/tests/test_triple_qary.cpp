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

#include <map>
#include <set>

#include "doctest.h"
#include "graphcode/families.hpp"
#include "graphcode/triple_qary.hpp"

using namespace graphcode;

namespace {

FieldElement power(const Field& f, FieldElement a, std::size_t e) {
  FieldElement r = f.one();
  for (std::size_t k = 0; k < e; ++k) r = f.mul(r, a);
  return r;
}

// Parity-check matrix assembled entry by entry from the construction:
// three Vandermonde rows per neighborhood N_m (m < n-2), then three rows over
// the cross edges with columns alpha_{(i+j) mod n}^t and a unit block.
FieldMatrix reference_h(std::size_t n, const FieldPtr& f) {
  const auto nn = static_cast<NodeId>(n);
  std::vector<FieldElement> alpha;
  for (std::size_t l = 0; l < n; ++l) alpha.push_back(f->element(l + 1));
  FieldMatrix h(f, 3 * n - 3, edge_count(n));
  for (NodeId m = 0; m + 2 < nn; ++m) {
    for (NodeId l = 0; l < nn; ++l) {
      const EdgeId e = l <= m ? EdgeId{m, l} : EdgeId{l, m};
      for (std::size_t t = 0; t < 3; ++t) h(3 * m + t, edge_index(e)) = power(*f, alpha[l], t);
    }
  }
  const std::size_t base = 3 * (n - 2);
  for (NodeId i = 1; i + 2 < nn; ++i) {
    for (NodeId j = 0; j < i; ++j) {
      for (std::size_t t = 0; t < 3; ++t) {
        h(base + t, edge_index(EdgeId{i, j})) = power(*f, alpha[(i + j) % n], t);
      }
    }
  }
  h(base + 0, edge_index(EdgeId{nn - 2, nn - 2})) = f->one();
  h(base + 1, edge_index(EdgeId{nn - 1, nn - 2})) = f->one();
  h(base + 2, edge_index(EdgeId{nn - 1, nn - 1})) = f->one();
  return h;
}

}  // namespace

TEST_CASE("parity-check matrix matches an entrywise rebuild") {
  for (auto [n, q] : {std::pair<std::size_t, std::uint32_t>{5, 7}, {7, 8}, {7, 11}, {10, 11},
                      {8, 9}, {12, 13}}) {
    CAPTURE(n);
    CAPTURE(q);
    const FieldPtr f = Field::make(q);
    const GraphCodeSpec s = triple_qary::build_spec(n, f);
    CHECK(s.parity_check == reference_h(n, f));
    CHECK(s.row_labels[3] == "N_1.0");
    CHECK(s.row_labels.back() == "P.2");
    CHECK(s.info_nodes == n - 3);
  }
}

TEST_CASE("parameters are validated") {
  try {
    triple_qary::build_spec(10, Field::make(7));
    FAIL("expected FieldTooSmall");
  } catch (const GraphCodeError& e) {
    CHECK(e.code() == ErrorCode::kFieldTooSmall);
  }
  CHECK_THROWS_AS(triple_qary::build_spec(4, Field::make(5)), GraphCodeError);
  CHECK_NOTHROW(triple_qary::build_spec(10, Field::make(11)));
  const auto p = triple_qary::build_params(7, Field::make(8));
  CHECK(p.cross.size() == 10);  // C(5, 2)
  CHECK(p.cross_ext.size() == 13);
  CHECK_THROWS_AS(triple_qary::cross_column(p, EdgeId{3, 3}), GraphCodeError);
}

TEST_CASE("redundancy is 3n-3 and dimension C(n-2,2)") {
  for (std::size_t n = 5; n <= 16; ++n) {
    const GraphCodeSpec s =
        triple_qary::build_spec(n, Field::make(smallest_prime_power_at_least(n + 1)));
    const CodeMetrics m = code_metrics(s, 3);
    CHECK(m.redundancy == 3 * n - 3);
    CHECK(m.dimension == (n - 2) * (n - 3) / 2);
    CHECK(m.optimality_gap == 0);
  }
}

TEST_CASE("staged encoder agrees with the generic solver") {
  std::mt19937_64 rng(31);
  for (auto [n, q] : {std::pair<std::size_t, std::uint32_t>{6, 7}, {7, 8}, {9, 16}, {10, 11}}) {
    const GraphCodeSpec s = triple_qary::build_spec(n, Field::make(q));
    for (int t = 0; t < 10; ++t) {
      const InfoMap info = random_info(s, rng);
      CHECK(info.size() == (n - 2) * (n - 3) / 2);
      REQUIRE(triple_qary::encode(s, info) == encode_systematic_generic(s, info));
    }
  }
}

TEST_CASE("decoding {1,2,6} at n=7 goes through the three stages") {
  const GraphCodeSpec s = triple_qary::build_spec(7, Field::make(8));
  std::mt19937_64 rng(6);
  const LabeledGraph g = triple_qary::encode(s, random_info(s, rng));
  const NodeId failed[] = {1, 2, 6};
  const DecodeReport r = triple_qary::decode(s, apply_erasure(g, failed));
  REQUIRE(r.ok());
  CHECK(r.recovered == g);
  std::map<std::string, std::set<EdgeId>> by_stage;
  std::set<std::string> stage1_constraints;
  for (const auto& step : r.provenance) {
    by_stage[step.stage].insert(step.edge);
    if (step.stage == "stage1") stage1_constraints.insert(step.constraint);
  }
  CHECK(stage1_constraints == std::set<std::string>{"N_0", "N_3", "N_4"});
  CHECK(by_stage["stage1"].size() == 9);
  CHECK(by_stage["stage2"] == std::set<EdgeId>{EdgeId{2, 1}, EdgeId{6, 5}, EdgeId{6, 6}});
  CHECK(by_stage["stage3"] == std::set<EdgeId>{EdgeId{1, 1}, EdgeId{2, 2}, EdgeId{5, 1},
                                               EdgeId{5, 2}, EdgeId{6, 1}, EdgeId{6, 2}});
  CHECK(r.provenance.size() == erased_edge_count(7, 3));
}

TEST_CASE("every triple failure decodes and matches the oracle") {
  for (auto [n, q] : {std::pair<std::size_t, std::uint32_t>{7, 8}, {10, 11}}) {
    const GraphCodeSpec s = triple_qary::build_spec(n, Field::make(q));
    VerifyOptions o;
    o.trials = 5;
    o.seed = 12;
    o.decoder = triple_qary::decode;
    const VerifyReport r = verify_exhaustive(s, 3, o);
    CHECK(r.patterns_total == binomial(n, 3));
    CHECK(r.all_ok());
    CHECK(verify_exhaustive(s, 2, o).all_ok());
  }
}

TEST_CASE("corrupted survivors: silent at three failures, caught at two") {
  const GraphCodeSpec s = triple_qary::build_spec(8, Field::make(9));
  std::mt19937_64 rng(2);
  const LabeledGraph g = triple_qary::encode(s, random_info(s, rng));
  const EdgeId flip{2, 1};

  // Three failures use every check exactly once; a wrong codeword comes back.
  const NodeId three[] = {0, 3, 5};
  LabeledGraph e = apply_erasure(g, three);
  e.set_label(flip, s.field->add(e.label(flip), s.field->one()));
  const DecodeReport r = triple_qary::decode(s, e);
  REQUIRE(r.ok());
  CHECK(is_codeword(s, r.recovered));
  CHECK_FALSE(r.recovered == g);

  const NodeId two[] = {0, 3};
  LabeledGraph e2 = apply_erasure(g, two);
  e2.set_label(flip, s.field->add(e2.label(flip), s.field->one()));
  CHECK(triple_qary::decode(s, e2).status == DecodeStatus::kInconsistent);
}

TEST_CASE("property suites pass") {
  for (std::size_t n = 5; n <= 14; ++n) {
    const auto p = triple_qary::build_params(n, Field::make(smallest_prime_power_at_least(n + 1)));
    CHECK(triple_qary::check_cross_independence(p).passed());
    CHECK(triple_qary::check_neighborhood_overlap(n).passed());
  }
}

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
#include "graphcode/code.hpp"
#include "graphcode/families.hpp"

using namespace graphcode;

namespace {

// Every edge in one check: corrects exactly one erased edge.
GraphCodeSpec total_parity(std::size_t n, const FieldPtr& f) {
  FieldMatrix h(f, 1, edge_count(n));
  for (std::size_t c = 0; c < h.cols(); ++c) h(0, c) = f->one();
  return make_code_spec(n, f, h, Family::kCustom, 0);
}

}  // namespace

TEST_CASE("spec construction validates shapes") {
  const FieldPtr f = Field::make(2);
  CHECK_THROWS_AS(make_code_spec(4, f, FieldMatrix(f, 2, 9), Family::kCustom, 0), GraphCodeError);
  CHECK_THROWS_AS(make_code_spec(4, f, FieldMatrix(f, 2, 10), Family::kCustom, 0, {"a"}),
                  GraphCodeError);
  const GraphCodeSpec s = make_code_spec(4, f, FieldMatrix(f, 2, 10), Family::kCustom, 0);
  CHECK(s.row_labels == std::vector<std::string>{"row_0", "row_1"});
  CHECK(parse_family("double") == Family::kDoublePrime);
  CHECK(parse_family("triple_qary") == Family::kTripleQary);
  CHECK(family_name(Family::kExtreme) == "extreme");
  CHECK_THROWS_AS(parse_family("quadruple"), GraphCodeError);
}

TEST_CASE("metrics of a single total parity check") {
  const GraphCodeSpec s = total_parity(5, Field::make(3));
  const CodeMetrics m = code_metrics(s, 1);
  CHECK(m.redundancy == 1);
  CHECK(m.dimension == 14);
  CHECK(m.rate_numerator == 14);
  CHECK(m.rate_denominator == 15);
  CHECK(m.optimal_bound == 5);
  CHECK(m.optimality_gap == -4);
}

TEST_CASE("oracle decoding statuses") {
  const FieldPtr f = Field::make(3);
  const GraphCodeSpec s = total_parity(4, f);
  LabeledGraph g(4, f);
  g.set_label(EdgeId{1, 0}, FieldElement{1});
  g.set_label(EdgeId{2, 2}, FieldElement{2});
  REQUIRE(is_codeword(s, g));

  LabeledGraph one = g;
  one.erase(EdgeId{1, 0});
  DecodeReport r = oracle_decode(s, one);
  CHECK(r.ok());
  CHECK(r.recovered == g);
  REQUIRE(r.provenance.size() == 1);
  CHECK(r.provenance[0].constraint == "H");
  CHECK(r.provenance[0].stage == "oracle");

  LabeledGraph two = one;
  two.erase(EdgeId{3, 3});
  r = oracle_decode(s, two);
  CHECK(r.status == DecodeStatus::kUnderdetermined);
  CHECK(r.recovered == two);

  CHECK(oracle_decode(s, g).ok());
  CHECK(oracle_decode(s, g).provenance.empty());
}

TEST_CASE("inconsistent erasure systems are reported") {
  const FieldPtr f = Field::make(2);
  // Two checks over the same single edge (1,0), plus (0,0) in one of them.
  FieldMatrix h(f, 2, edge_count(3));
  h(0, edge_index(EdgeId{1, 0})) = f->one();
  h(1, edge_index(EdgeId{1, 0})) = f->one();
  h(1, edge_index(EdgeId{0, 0})) = f->one();
  const GraphCodeSpec s = make_code_spec(3, f, h, Family::kCustom, 0);
  LabeledGraph g(3, f);
  g.set_label(EdgeId{0, 0}, f->one());  // not a codeword
  g.erase(EdgeId{1, 0});
  CHECK(oracle_decode(s, g).status == DecodeStatus::kInconsistent);
}

TEST_CASE("correctability predicates") {
  const GraphCodeSpec s = make_family_spec(FamilyParams{Family::kSingle, 6, {}, 0});
  for (NodeId v = 0; v < 6; ++v) {
    const NodeId failed[] = {v};
    CHECK(failure_correctable(s, failed));
  }
  const NodeId pair[] = {0, 1};
  CHECK_FALSE(failure_correctable(s, pair));
  CHECK(erasures_correctable(s, EdgeSet{EdgeId{3, 2}}));
}

TEST_CASE("systematic encoding by solving") {
  const GraphCodeSpec s = make_family_spec(FamilyParams{Family::kTripleQary, 7, {}, 0});
  std::mt19937_64 rng(5);
  const InfoMap info = random_info(s, rng);
  const LabeledGraph g = encode_systematic_generic(s, info);
  CHECK(is_codeword(s, g));
  for (const auto& [e, v] : info) CHECK(g.label(e) == v);
  CHECK(information_edges(4).size() == 10);
  // All-ones check: the last node's edges cannot all be solved from one row.
  const GraphCodeSpec t = total_parity(4, Field::make(2));
  GraphCodeSpec t3 = t;
  t3.info_nodes = 2;
  InfoMap zero;
  for (EdgeId e : information_edges(2)) zero.emplace(e, FieldElement{0});
  CHECK_THROWS_AS(encode_systematic_generic(t3, zero), GraphCodeError);
}

TEST_CASE("sampled codewords lie in the code and span it") {
  const GraphCodeSpec s = make_family_spec(FamilyParams{Family::kDoublePrime, 7, {}, 0});
  const CodewordSampler sampler(s);
  CHECK(sampler.dimension() == code_dimension(s));
  std::mt19937_64 rng(1);
  for (int k = 0; k < 50; ++k) CHECK(is_codeword(s, sampler.sample(rng)));
}

TEST_CASE("seed mixing is deterministic and input sensitive") {
  CHECK(mix_seed(1, 2, 3) == mix_seed(1, 2, 3));
  CHECK(mix_seed(1, 2, 3) != mix_seed(1, 3, 2));
  CHECK(mix_seed(0, 0) != mix_seed(1, 0));
}

TEST_CASE("exhaustive verification") {
  const GraphCodeSpec s = make_family_spec(FamilyParams{Family::kSingle, 8, {}, 0});
  VerifyOptions o;
  o.trials = 3;
  o.seed = 9;
  VerifyReport r = verify_exhaustive(s, 1, o);
  CHECK(r.patterns_total == 8);
  CHECK(r.all_ok());
  r = verify_exhaustive(s, 2, o);
  CHECK(r.patterns_total == 28);
  CHECK(r.patterns_ok == 0);
  CHECK(r.failures.front().reason == "underdetermined");

  o.jobs = 4;
  o.decoder = family_decoder(Family::kSingle);
  const VerifyReport par = verify_exhaustive(s, 1, o);
  CHECK(par.all_ok());

  o.decoder = [](const GraphCodeSpec&, const LabeledGraph&) -> DecodeReport {
    throw GraphCodeError(ErrorCode::kInvalidArgument, "boom");
  };
  const VerifyReport thrown = verify_exhaustive(s, 1, o);
  CHECK(thrown.patterns_ok == 0);
  CHECK(thrown.failures.front().reason.rfind("error: ", 0) == 0);
}

TEST_CASE("subsets and binomials") {
  CHECK(node_subsets(5, 2).size() == 10);
  CHECK(node_subsets(5, 2).front() == NodeSet{0, 1});
  CHECK(node_subsets(5, 2).back() == NodeSet{3, 4});
  CHECK(node_subsets(4, 0).size() == 1);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("completing a constraint") {
  const FieldPtr f = Field::make(7);
  LabeledGraph g(3, f);
  g.set_label(EdgeId{1, 0}, FieldElement{2});
  g.set_label(EdgeId{2, 0}, FieldElement{4});
  const EdgeSet c{EdgeId{1, 0}, EdgeId{2, 0}, EdgeId{2, 2}};
  CHECK(complete_constraint(g, c, EdgeId{2, 2}).value == 1);
}

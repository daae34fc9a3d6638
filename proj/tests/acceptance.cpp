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

// Acceptance runner: one PASS/FAIL line per criterion, each with its own
// wall-clock budget. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "graphcode/double_prime.hpp"
#include "graphcode/extreme.hpp"
#include "graphcode/families.hpp"
#include "graphcode/single_parity.hpp"
#include "graphcode/triple_qary.hpp"

using namespace graphcode;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

unsigned worker_count() { return std::max(1u, std::thread::hardware_concurrency()); }

std::vector<NodeId> all_but(std::size_t n, NodeId a, NodeId b) {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < n; ++v) {
    if (v != a && v != b) out.push_back(v);
  }
  return out;
}

// Encodes random information, erases each failure set of size rho, and
// compares the structured decoder and the oracle with the original.
void round_trips(Outcome& out, const GraphCodeSpec& s, std::size_t rho, std::size_t trials,
                 std::uint64_t seed) {
  const Decoder decode = family_decoder(s.family);
  std::mt19937_64 rng(seed);
  const auto patterns = node_subsets(s.n, rho);
  for (std::size_t t = 0; t < trials && out.ok; ++t) {
    const LabeledGraph g = family_encode(s, random_info(s, rng));
    out.require(is_codeword(s, g), "encoder output is not a codeword");
    for (const NodeSet& f : patterns) {
      const LabeledGraph e = apply_erasure(g, f);
      const DecodeReport r = decode(s, e);
      const DecodeReport o = oracle_decode(s, e);
      std::ostringstream at;
      at << "n=" << s.n << " trial " << t << " failed {";
      for (std::size_t k = 0; k < f.size(); ++k) at << (k ? "," : "") << f[k];
      at << "}";
      out.require(r.ok() && r.recovered == g, "decoder mismatch at " + at.str());
      out.require(o.ok() && o.recovered == g, "oracle mismatch at " + at.str());
      if (!out.ok) return;
    }
  }
}

Outcome criterion1() {
  Outcome out;
  for (std::size_t n : {5u, 7u, 11u, 13u}) {
    const GraphCodeSpec s = double_prime::build_spec(n);
    const std::size_t r = rank(s.parity_check);
    out.require(r == 2 * n - 1, "n=" + std::to_string(n) + " rank " + std::to_string(r));
    out.require(code_metrics(s, 2).optimality_gap == 0, "n=" + std::to_string(n) + " gap != 0");
  }
  if (out.ok) out.detail = "rank(H) = 2n-1 for n in {5,7,11,13}";
  return out;
}

Outcome criterion2() {
  Outcome out;
  std::size_t decodes = 0;
  for (std::size_t n : {5u, 7u, 11u, 13u}) {
    const GraphCodeSpec s = double_prime::build_spec(n);
    round_trips(out, s, 2, 100, mix_seed(2, n));
    decodes += 100 * binomial(n, 2);
  }
  if (out.ok) out.detail = std::to_string(decodes) + " pair decodes equal original and oracle";
  return out;
}

Outcome criterion3() {
  Outcome out;
  const auto sch = double_prime::make_schedule(11, 3, 5);
  out.require(sch.d == 2 && sch.x == 4 && sch.y == 5, "schedule d/x/y differ");

  const GraphCodeSpec s = double_prime::build_spec(11);
  std::mt19937_64 rng(3);
  const LabeledGraph g = double_prime::encode(s, random_info(s, rng));
  const NodeId failed[] = {3, 5};
  const DecodeReport r = double_prime::decode(s, apply_erasure(g, failed));
  out.require(r.ok() && r.recovered == g, "decode failed");

  std::vector<std::string> loop1, loop2;
  std::set<std::string> finish;
  for (const RecoveryStep& st : r.provenance) {
    if (st.stage == "1") loop1.push_back(st.edge.to_string());
    if (st.stage == "2") loop2.push_back(st.edge.to_string());
    if (st.stage == "finish") finish.insert(st.edge.to_string());
  }
  out.require(!loop1.empty() && loop1.front() == "7:5", "first loop does not start at 7:5");
  out.require(!loop1.empty() && loop1.back() == "10:5", "first loop does not end at 10:5");
  out.require(!loop2.empty() && loop2.front() == "3:0", "second loop does not start at 3:0");
  out.require(!loop2.empty() && loop2.back() == "10:3", "second loop does not end at 10:3");
  out.require(finish == std::set<std::string>{"5:3", "9:3", "9:5"}, "pre-finish residual differs");

  // Full log, in order: edge and the constraint that fixed it.
  const std::vector<std::string> log{
      "7:5/D_1",  "7:3/S_7", "5:5/D_10", "3:3/S_9", "5:1/D_6", "3:1/S_1",  "10:5/D_4",
      "3:0/D_3",  "5:0/S_0", "3:2/D_5",  "5:2/S_2", "4:3/D_7", "5:4/S_4",  "6:3/D_9",
      "6:5/S_6",  "8:3/D_0", "8:5/S_8",  "10:3/D_2", "5:3/D_8", "9:3/S_3", "9:5/S_5"};
  std::vector<std::string> got;
  for (const RecoveryStep& st : r.provenance) got.push_back(st.edge.to_string() + "/" + st.constraint);
  out.require(got == log, "provenance log differs from the frozen trace");
  if (out.ok) out.detail = "d=2 x=4 y=5, loops 7:5..10:5 and 3:0..10:3, residual {5:3,9:3,9:5}";
  return out;
}

Outcome criterion4() {
  Outcome out;
  std::size_t checks = 0;
  for (std::size_t n : {5u, 7u, 11u, 13u, 17u, 19u, 23u}) {
    for (const SuiteResult& r :
         {double_prime::check_set_identities(n), double_prime::check_schedule_invariants(n)}) {
      checks += r.checks;
      out.require(r.passed(), r.name + ": " + std::to_string(r.violations) + " violations" +
                                  (r.examples.empty() ? "" : " e.g. " + r.examples.front()));
    }
  }
  if (out.ok) out.detail = std::to_string(checks) + " checks, 0 violations";
  return out;
}

Outcome criterion5() {
  Outcome out;
  for (auto [n, q] : {std::pair<std::size_t, std::uint32_t>{7, 8}, {7, 11}, {10, 11}, {12, 13}}) {
    const std::string at = "(" + std::to_string(n) + "," + std::to_string(q) + ")";
    const auto p = triple_qary::build_params(n, Field::make(q));
    const GraphCodeSpec s = triple_qary::build_spec(p);
    out.require(rank(s.parity_check) == 3 * n - 3, at + " rank != 3n-3");
    out.require(code_dimension(s) == binomial(n - 2, 2), at + " k_G != C(n-2,2)");
    round_trips(out, s, 3, 50, mix_seed(5, n, q));
    out.require(triple_qary::check_cross_independence(p).passed(), at + " cross-independence suite");
    out.require(triple_qary::check_neighborhood_overlap(n).passed(), at + " neighborhood-overlap suite");
  }
  if (out.ok) out.detail = "rank 3n-3, all triples x 50 codewords, property suites clean";
  return out;
}

Outcome criterion6() {
  Outcome out;
  for (std::size_t n = 3; n <= 20; ++n) {
    const GraphCodeSpec s = single_parity::build_spec(n, Field::make(2));
    out.require(code_metrics(s, 1).redundancy == n, "n=" + std::to_string(n) + " r_G != n");
    out.require(code_metrics(s, 1).optimality_gap == 0, "n=" + std::to_string(n) + " gap");
    round_trips(out, s, 1, 5, mix_seed(6, n));
  }
  if (out.ok) out.detail = "r_G = n and all single failures recovered for n = 3..20";
  return out;
}

Outcome criterion7() {
  Outcome out;
  const unsigned jobs = worker_count();
  const std::uint64_t found = extreme::count_exhaustive(3, Field::make(2), jobs);
  out.require(extreme::BigInt(found) == extreme::count_formula(3, 2),
              "exhaustive count " + std::to_string(found));
  std::ostringstream d;
  d << "exhaustive " << found;
  for (auto [n, q] : {std::pair<std::size_t, std::uint32_t>{4, 2}, {3, 3}}) {
    const auto est = extreme::count_montecarlo(n, Field::make(q), 1000000, 7, jobs);
    const double total = std::pow(static_cast<double>(q), 3.0 * static_cast<double>(edge_count(n)));
    const double rate = extreme::count_formula(n, q).convert_to<double>() / total;
    const double z = std::abs(est.rate - rate) / est.std_error;
    out.require(z <= 4.0, "(" + std::to_string(n) + "," + std::to_string(q) + ") z=" +
                              std::to_string(z));
    char buf[96];
    std::snprintf(buf, sizeof buf, "; (%zu,%u) rate %.6f vs %.6f, z=%.2f", n, q, est.rate, rate, z);
    d << buf;
  }
  if (out.ok) out.detail = d.str();
  return out;
}

Outcome criterion8() {
  Outcome out;
  const auto gen = extreme::construct_extreme(7, 2, 0);
  out.require(extreme::check_extreme(gen), "constructed (7,2) generator is not valid");
  try {
    extreme::construct_extreme(8, 2, 0);
    out.require(false, "(8,2) did not raise NoSuchCode");
  } catch (const GraphCodeError& e) {
    out.require(e.code() == ErrorCode::kNoSuchCode, "(8,2) raised the wrong error");
  }
  std::mt19937_64 rng(8);
  for (int t = 0; t < 100 && out.ok; ++t) {
    const extreme::Message u{random_element(*gen.field, rng), random_element(*gen.field, rng),
                             random_element(*gen.field, rng)};
    const LabeledGraph g = extreme::encode(gen, u);
    for (NodeId i = 0; i < 7; ++i) {
      for (NodeId j = i + 1; j < 7; ++j) {
        const auto back = extreme::decode_extreme(gen, i, j, g.label(EdgeId{i, i}),
                                                  g.label(EdgeId{j, i}), g.label(EdgeId{j, j}));
        out.require(back == u, "pair " + std::to_string(i) + "," + std::to_string(j));
        const DecodeReport r =
            extreme::decode(extreme::build_spec(gen), apply_erasure(g, all_but(7, i, j)));
        out.require(r.ok() && r.recovered == g, "graph decode at pair " + std::to_string(i) +
                                                    "," + std::to_string(j));
      }
    }
  }
  if (out.ok) out.detail = "(7,2) built, (8,2) NoSuchCode, 21 pairs x 100 messages";
  return out;
}

Outcome criterion9() {
  Outcome out;
  const std::vector<FamilyParams> families{
      {Family::kSingle, 9, 5, 0},
      {Family::kDoublePrime, 11, {}, 0},
      {Family::kTripleQary, 10, 11, 0},
      {Family::kExtreme, 7, 4, 0},
  };
  for (const FamilyParams& p : families) {
    const GraphCodeSpec s = make_family_spec(p);
    const Field& f = *s.field;
    std::mt19937_64 rng(mix_seed(9, static_cast<std::uint64_t>(p.family)));
    for (int t = 0; t < 1000; ++t) {
      const LabeledGraph a = family_encode(s, random_info(s, rng));
      const LabeledGraph b = family_encode(s, random_info(s, rng));
      const FieldElement alpha = random_element(f, rng);
      const FieldElement beta = random_element(f, rng);
      const LabeledGraph c = graph_add(graph_scale(alpha, a), graph_scale(beta, b));
      out.require(is_codeword(s, c), std::string(family_name(s.family)) + " not closed");
      if (!out.ok) return out;
    }
  }
  for (std::size_t n = 3; n <= 12; ++n) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<NodeId> failed;
      for (NodeId v = 0; v < n; ++v) {
        if (mask >> v & 1) failed.push_back(v);
      }
      const std::size_t rho = failed.size();
      out.require(failure_edges(n, failed).size() == rho * n - rho * (rho - 1) / 2,
                  "failure edge count at n=" + std::to_string(n));
    }
  }
  if (out.ok) out.detail = "4 families x 1000 combinations closed; edge counts for n <= 12";
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, 1.0, criterion1},  {2, 30.0, criterion2}, {3, 1.0, criterion3},
      {4, 10.0, criterion4}, {5, 60.0, criterion5}, {6, 5.0, criterion6},
      {7, 60.0, criterion7}, {8, 5.0, criterion8},  {9, 10.0, criterion9},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.budget_s;
    const bool pass = o.ok && in_time;
    if (!pass) ++failed;
    char head[96];
    std::snprintf(head, sizeof head, "criterion %d: %s (%.3f s, limit %.0f s) ", c.id,
                  pass ? "PASS" : "FAIL", secs, c.budget_s);
    std::cout << head << (in_time ? "" : "over time limit; ") << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}

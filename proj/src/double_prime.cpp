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

#include "graphcode/double_prime.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

namespace graphcode::double_prime {

namespace {

NodeId mod(long long a, std::size_t n) {
  const auto nn = static_cast<long long>(n);
  return static_cast<NodeId>(((a % nn) + nn) % nn);
}

void require_prime(std::size_t n) {
  if (n < 5 || !is_prime(n)) {
    throw GraphCodeError(ErrorCode::kNonPrimeN,
                         "double-node code needs a prime n >= 5, got " + std::to_string(n));
  }
}

std::string s_label(std::size_t m) { return "S_" + std::to_string(m); }
std::string d_label(std::size_t m) { return "D_" + std::to_string(m); }

}  // namespace

ConstraintFamily build_sets(std::size_t n) {
  require_prime(n);
  ConstraintFamily fam;
  fam.n = n;
  const auto last = static_cast<NodeId>(n - 1);
  const auto skip = static_cast<NodeId>(n - 2);
  for (NodeId m = 0; m + 1 < n; ++m) {
    std::vector<EdgeId> edges;
    for (NodeId l = 0; l + 1 < n; ++l) {
      edges.push_back(m == skip ? EdgeId{l, l} : EdgeId::make(m, l));
    }
    fam.s.emplace_back(std::move(edges));
  }
  for (NodeId m = 0; m < n; ++m) {
    std::vector<EdgeId> edges{EdgeId{last, skip}};
    for (NodeId k = 0; k < n; ++k) {
      if (k == skip) continue;
      const NodeId l = mod(static_cast<long long>(m) - k, n);
      if (l == skip) continue;
      edges.push_back(EdgeId::make(k, l));
    }
    fam.d.emplace_back(std::move(edges));
  }
  return fam;
}

GraphCodeSpec build_spec(std::size_t n) {
  const ConstraintFamily fam = build_sets(n);
  const FieldPtr gf2 = Field::make(2);
  FieldMatrix h(gf2, 2 * n - 1, edge_count(n));
  std::vector<std::string> labels;
  std::size_t row = 0;
  for (std::size_t m = 0; m < fam.s.size(); ++m, ++row) {
    for (EdgeId e : fam.s[m]) h(row, edge_index(e)) = gf2->one();
    labels.push_back(s_label(m));
  }
  for (std::size_t m = 0; m < fam.d.size(); ++m, ++row) {
    for (EdgeId e : fam.d[m]) h(row, edge_index(e)) = gf2->one();
    labels.push_back(d_label(m));
  }
  return make_code_spec(n, gf2, std::move(h), Family::kDoublePrime, n - 2, std::move(labels));
}

LabeledGraph encode(const GraphCodeSpec& spec, const InfoMap& info) {
  const std::size_t n = spec.n;
  const ConstraintFamily fam = build_sets(n);
  if (info.size() != edge_count(n - 2)) {
    throw GraphCodeError(ErrorCode::kShapeMismatch,
                         "expected " + std::to_string(edge_count(n - 2)) + " information symbols");
  }
  LabeledGraph g(n, spec.field);
  for (const auto& [e, v] : info) {
    if (std::max(e.i, e.j) >= n - 2) {
      throw GraphCodeError(ErrorCode::kShapeMismatch, e.to_string() + " is not an information edge");
    }
    g.set_label(EdgeId::make(e.i, e.j), v);
  }
  const auto last = static_cast<NodeId>(n - 1);
  const auto skip = static_cast<NodeId>(n - 2);
  for (NodeId l = 0; l < skip; ++l) {
    const EdgeId e{skip, l};
    g.set_label(e, complete_constraint(g, fam.s[l], e));
  }
  g.set_label(EdgeId{skip, skip}, complete_constraint(g, fam.s[skip], EdgeId{skip, skip}));
  g.set_label(EdgeId{last, skip}, complete_constraint(g, fam.d[n - 3], EdgeId{last, skip}));
  for (NodeId l = 0; l < n; ++l) {
    if (l == skip) continue;
    const EdgeId e = EdgeId::make(last, l);
    g.set_label(e, complete_constraint(g, fam.d[mod(static_cast<long long>(n) - 1 + l, n)], e));
  }
  return g;
}

Syndromes compute_syndromes(const ConstraintFamily& family, const LabeledGraph& g, NodeId i,
                            NodeId j) {
  const Field& f = *g.field();
  auto survives = [&](EdgeId e) { return e.i != i && e.i != j && e.j != i && e.j != j; };
  auto sum = [&](const EdgeSet& set) {
    FieldElement acc = f.zero();
    for (EdgeId e : set) {
      if (survives(e)) acc = f.add(acc, g.label(e));
    }
    return acc;
  };
  Syndromes out;
  out.s.resize(family.s.size());
  for (NodeId m = 0; m < family.s.size(); ++m) {
    if (m != i && m != j) out.s[m] = sum(family.s[m]);
  }
  for (const EdgeSet& set : family.d) out.d.push_back(sum(set));
  return out;
}

DecodeSchedule make_schedule(std::size_t n, NodeId i, NodeId j) {
  require_prime(n);
  if (!(i < j && j < n - 2)) {
    throw GraphCodeError(ErrorCode::kOutsideAlgorithmDomain,
                         "zig-zag schedule needs i < j < n-2, got {" + std::to_string(i) + "," +
                             std::to_string(j) + "}");
  }
  DecodeSchedule s;
  s.n = n;
  s.i = i;
  s.j = j;
  s.d = mod(static_cast<long long>(j) - i, n);
  for (std::size_t v = 1; v < n; ++v) {
    if (s.d * v % n == 1) s.d_inv = v;
  }
  const auto d = static_cast<long long>(s.d);
  const auto d_inv = static_cast<long long>(s.d_inv);
  s.x = mod(-1 - d_inv, n);
  s.y = mod(-1 + d_inv, n);
  for (long long t = 0; t <= static_cast<long long>(s.x); ++t) {
    const NodeId s1 = mod(-d * (t + 1) - 2, n);
    s.first_s1.push_back(s1);
    s.first_s2.push_back(mod(static_cast<long long>(s1) + j, n));
  }
  for (long long t = 0; t <= static_cast<long long>(s.y); ++t) {
    const NodeId s1 = mod(d * (t + 1) - 2, n);
    s.second_s1.push_back(s1);
    s.second_s2.push_back(mod(static_cast<long long>(s1) + i, n));
  }
  return s;
}

namespace {

// Writes recovered labels while enforcing that each step only reads edges
// that survived or were recovered earlier.
class Recovery {
 public:
  Recovery(const ConstraintFamily& fam, DecodeReport& report)
      : fam_(fam), report_(report), known_(report.recovered.erasure_mask().size()) {
    const auto mask = report.recovered.erasure_mask();
    for (std::size_t k = 0; k < mask.size(); ++k) known_[k] = mask[k] == 0;
  }

  void from_s(std::size_t m, EdgeId e, FieldElement v, const char* stage, int t) {
    put(fam_.s[m], s_label(m), e, v, stage, t);
  }
  void from_d(std::size_t m, EdgeId e, FieldElement v, const char* stage, int t) {
    put(fam_.d[m], d_label(m), e, v, stage, t);
  }
  FieldElement get(EdgeId e) const { return report_.recovered.label(e); }

 private:
  void put(const EdgeSet& constraint, const std::string& name, EdgeId e, FieldElement v,
           const char* stage, int t) {
    const std::size_t k = edge_index(e);
    if (known_[k]) {
      throw GraphCodeError(ErrorCode::kCorruptedInput, "edge " + e.to_string() + " recovered twice");
    }
    if (!constraint.contains(e)) {
      throw GraphCodeError(ErrorCode::kCorruptedInput, name + " does not cover " + e.to_string());
    }
    for (EdgeId c : constraint) {
      if (c != e && !known_[edge_index(c)]) {
        throw GraphCodeError(ErrorCode::kCorruptedInput,
                             name + " read unknown edge " + c.to_string() + " while solving " +
                                 e.to_string());
      }
    }
    report_.recovered.set_label(e, v);
    known_[k] = true;
    report_.provenance.push_back(RecoveryStep{e, name, stage, t});
  }

  const ConstraintFamily& fam_;
  DecodeReport& report_;
  std::vector<bool> known_;
};

// One zig-zag loop. `far` plays the role of j in the first loop and i in
// the second; `near` the other failed node.
void run_loop(Recovery& rec, const Syndromes& syn, const std::vector<NodeId>& s1s,
              const std::vector<NodeId>& s2s, NodeId near, NodeId far, std::size_t n,
              const Field& f, const char* stage) {
  const auto last = static_cast<NodeId>(n - 1);
  const auto skip = static_cast<NodeId>(n - 2);
  FieldElement b_prev = f.zero();
  for (std::size_t t = 0; t < s1s.size(); ++t) {
    const NodeId s1 = s1s[t];
    const NodeId s2 = s2s[t];
    const int ti = static_cast<int>(t);
    if (s1 != near && s1 != far && s1 != last) {
      const EdgeId to_far = EdgeId::make(s1, far);
      const EdgeId to_near = EdgeId::make(s1, near);
      rec.from_d(s2, to_far, f.add(syn.d[s2], b_prev), stage, ti);
      rec.from_s(s1, to_near, f.add(*syn.s[s1], rec.get(to_far)), stage, ti);
      b_prev = rec.get(to_near);
    }
    if (s1 == far) {
      rec.from_d(s2, EdgeId{far, far}, f.add(syn.d[s2], b_prev), stage, ti);
      rec.from_s(skip, EdgeId{near, near}, f.add(*syn.s[skip], rec.get(EdgeId{far, far})), stage,
                 ti);
      b_prev = rec.get(EdgeId{near, near});
    }
    if (s1 == last) {
      rec.from_d(s2, EdgeId::make(last, far), f.add(syn.d[s2], b_prev), stage, ti);
    }
  }
}

}  // namespace

DecodeReport decode(const GraphCodeSpec& spec, const LabeledGraph& g) {
  const auto failed = node_failure_pattern(g);
  const std::size_t n = spec.n;
  if (!failed || failed->size() != 2 || g.node_count() != n || (*failed)[1] >= n - 2) {
    return oracle_decode(spec, g);
  }
  const NodeId i = (*failed)[0];
  const NodeId j = (*failed)[1];
  const ConstraintFamily fam = build_sets(n);
  const DecodeSchedule sched = make_schedule(n, i, j);
  const Syndromes syn = compute_syndromes(fam, g, i, j);
  const Field& f = *spec.field;

  DecodeReport report;
  report.recovered = g;
  try {
    Recovery rec(fam, report);
    run_loop(rec, syn, sched.first_s1, sched.first_s2, i, j, n, f, "1");
    run_loop(rec, syn, sched.second_s1, sched.second_s2, j, i, n, f, "2");

    const auto skip = static_cast<NodeId>(n - 2);
    const EdgeId ij = EdgeId::make(i, j);
    const NodeId diag = mod(static_cast<long long>(i) + j, n);
    rec.from_d(diag, ij, syn.d[diag], "finish", -1);
    for (NodeId v : {i, j}) {
      const EdgeId e{skip, v};
      rec.from_s(v, e, complete_constraint(report.recovered, fam.s[v], e), "finish", -1);
    }
  } catch (const GraphCodeError& err) {
    if (err.code() != ErrorCode::kCorruptedInput && err.code() != ErrorCode::kErasedAccess) throw;
    report.status = DecodeStatus::kCorrupted;
    report.reason = err.what();
    report.recovered = g;
    return report;
  }
  if (report.recovered.has_erasures() || !is_codeword(spec, report.recovered)) {
    report.status = DecodeStatus::kCorrupted;
    report.reason = "recovered graph violates a parity constraint";
    report.recovered = g;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Property suites

SuiteResult check_set_identities(std::size_t n) {
  const ConstraintFamily fam = build_sets(n);
  SuiteResult r;
  r.name = "set_identities(n=" + std::to_string(n) + ")";
  const auto top = static_cast<NodeId>(n - 2);
  auto fail = [n](std::initializer_list<NodeId> nodes) {
    return failure_edges(n, std::vector<NodeId>(nodes));
  };
  auto tag = [](const char* claim, std::initializer_list<NodeId> idx) {
    std::string s = claim;
    for (NodeId v : idx) s += " " + std::to_string(v);
    return s;
  };

  for (std::size_t m = 0; m < fam.s.size(); ++m) r.record(fam.s[m].size() == n - 1, tag("|S|", {NodeId(m)}));
  for (std::size_t m = 0; m < fam.d.size(); ++m) {
    r.record(fam.d[m].size() == (n + 1) / 2, tag("|D|", {NodeId(m)}));
  }
  for (NodeId i = 0; i < top; ++i) {
    for (NodeId j = 0; j < top; ++j) {
      if (i == j) continue;
      const EdgeSet fij = fail({i, j});
      for (NodeId h = 0; h < top; ++h) {
        if (h == i || h == j) continue;
        r.record(fam.s[h].intersect(fij) == EdgeSet{EdgeId::make(h, i), EdgeId::make(h, j)},
                 tag("(a)", {h, i, j}));
      }
      r.record(fam.s[top].intersect(fij) == EdgeSet{EdgeId{i, i}, EdgeId{j, j}}, tag("(b)", {i, j}));
      const NodeId dj = mod(static_cast<long long>(j) - 2, n);
      r.record(fam.d[dj].intersect(fij) ==
                   EdgeSet{EdgeId::make(mod(static_cast<long long>(j) - i - 2, n), i)},
               tag("(d)", {i, j}));
      const NodeId dij = mod(static_cast<long long>(i) + j, n);
      r.record(fam.d[dij].intersect(fij) == EdgeSet{EdgeId::make(i, j)}, tag("(e)", {i, j}));
    }
    const EdgeSet fi = fail({i});
    for (NodeId s = 0; s < n; ++s) {
      if (s == mod(static_cast<long long>(i) - 2, n)) continue;
      r.record(fam.d[s].intersect(fi) ==
                   EdgeSet{EdgeId::make(mod(static_cast<long long>(s) - i, n), i)},
               tag("(c)", {i, s}));
    }
  }
  return r;
}

SuiteResult check_schedule_invariants(std::size_t n) {
  SuiteResult r;
  r.name = "schedule_invariants(n=" + std::to_string(n) + ")";
  const auto last = static_cast<NodeId>(n - 1);
  const auto skip = static_cast<NodeId>(n - 2);
  for (NodeId i = 0; i < skip; ++i) {
    for (NodeId j = i + 1; j < skip; ++j) {
      const DecodeSchedule s = make_schedule(n, i, j);
      const std::string at = " i=" + std::to_string(i) + " j=" + std::to_string(j);
      r.record(s.x != s.y && s.x + s.y == n - 2, "(a)" + at);
      r.record(s.first_s1.back() == last && s.second_s1.back() == last, "(b)" + at);
      const std::set<NodeId> a(s.first_s1.begin(), s.first_s1.end());
      const std::set<NodeId> b(s.second_s1.begin(), s.second_s1.end());
      const bool in_a = a.count(i) && a.count(j);
      const bool in_b = b.count(i) && b.count(j);
      const bool none_b = !b.count(i) && !b.count(j);
      const bool none_a = !a.count(i) && !a.count(j);
      r.record((in_a && none_b) || (in_b && none_a), "(c)" + at);
      r.record(!a.count(skip) && !b.count(skip), "(d)" + at);
      std::vector<NodeId> common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
      r.record(a.size() == s.x + 1 && b.size() == s.y + 1 && common == std::vector<NodeId>{last},
               "(e)" + at);
    }
  }
  return r;
}

SuiteResult check_decode_trace(std::size_t n, std::uint64_t seed) {
  const GraphCodeSpec spec = build_spec(n);
  const CodewordSampler sampler(spec);
  SuiteResult r;
  r.name = "decode_trace(n=" + std::to_string(n) + ")";
  const auto skip = static_cast<NodeId>(n - 2);
  for (NodeId i = 0; i < skip; ++i) {
    for (NodeId j = i + 1; j < skip; ++j) {
      std::mt19937_64 rng(mix_seed(seed, i, j));
      const LabeledGraph original = sampler.sample(rng);
      const NodeSet failed{i, j};
      const DecodeReport rep = decode(spec, apply_erasure(original, failed));
      std::vector<EdgeId> finish;
      for (const RecoveryStep& step : rep.provenance) {
        if (step.stage == "finish") finish.push_back(step.edge);
      }
      const std::string at = " i=" + std::to_string(i) + " j=" + std::to_string(j);
      r.record(rep.ok() && rep.recovered == original, "roundtrip" + at);
      r.record(EdgeSet(finish) == EdgeSet{EdgeId::make(i, j), EdgeId{skip, i}, EdgeId{skip, j}},
               "residual" + at);
      r.record(rep.provenance.size() == erased_edge_count(n, 2), "count" + at);
    }
  }
  return r;
}

}  // namespace graphcode::double_prime

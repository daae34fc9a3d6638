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

#include "graphcode/triple_qary.hpp"

#include <algorithm>
#include <string>

namespace graphcode::triple_qary {

TripleParams build_params(std::size_t n, const FieldPtr& field) {
  if (n < 5) throw GraphCodeError(ErrorCode::kInvalidArgument, "triple code needs n >= 5");
  if (field->order() < n + 1) {
    throw GraphCodeError(ErrorCode::kFieldTooSmall, "triple code needs q >= n+1 = " +
                                                        std::to_string(n + 1) + ", got " +
                                                        field->to_string());
  }
  TripleParams p;
  p.n = n;
  p.field = field;
  for (std::size_t l = 0; l < n; ++l) p.alpha.push_back(field->element(l + 1));
  std::vector<EdgeId> cross;
  for (NodeId a = 0; a + 2 < n; ++a) {
    for (NodeId b = 0; b < a; ++b) cross.push_back(EdgeId{a, b});
  }
  p.cross = EdgeSet(cross);
  const auto top = static_cast<NodeId>(n - 2);
  const auto last = static_cast<NodeId>(n - 1);
  cross.push_back(EdgeId{top, top});
  cross.push_back(EdgeId{last, top});
  cross.push_back(EdgeId{last, last});
  p.cross_ext = EdgeSet(cross);
  p.h_n = vandermonde_parity(field, p.alpha, 3);
  p.h_p = FieldMatrix(field, 3, p.cross_ext.size());
  for (std::size_t c = 0; c < p.cross_ext.size(); ++c) {
    const auto col = cross_column(p, p.cross_ext[c]);
    for (std::size_t t = 0; t < 3; ++t) p.h_p(t, c) = col[t];
  }
  return p;
}

std::vector<FieldElement> cross_column(const TripleParams& params, EdgeId e) {
  const Field& f = *params.field;
  const std::size_t n = params.n;
  std::vector<FieldElement> col(3, f.zero());
  if (e.i == n - 2 && e.j == n - 2) {
    col[0] = f.one();
  } else if (e.i == n - 1 && e.j == n - 2) {
    col[1] = f.one();
  } else if (e.i == n - 1 && e.j == n - 1) {
    col[2] = f.one();
  } else if (params.cross.contains(e)) {
    const FieldElement a = params.alpha[(e.i + e.j) % n];
    col[0] = f.one();
    col[1] = a;
    col[2] = f.mul(a, a);
  } else {
    throw GraphCodeError(ErrorCode::kOutOfRange, e.to_string() + " is not a cross edge");
  }
  return col;
}

GraphCodeSpec build_spec(const TripleParams& params) {
  const std::size_t n = params.n;
  FieldMatrix h(params.field, 3 * n - 3, edge_count(n));
  std::vector<std::string> labels;
  for (NodeId m = 0; m + 2 < n; ++m) {
    for (std::size_t t = 0; t < 3; ++t) {
      const std::size_t row = 3 * m + t;
      for (NodeId l = 0; l < n; ++l) h(row, edge_index(EdgeId::make(m, l))) = params.h_n(t, l);
      labels.push_back("N_" + std::to_string(m) + "." + std::to_string(t));
    }
  }
  for (std::size_t t = 0; t < 3; ++t) {
    const std::size_t row = 3 * (n - 2) + t;
    for (std::size_t c = 0; c < params.cross_ext.size(); ++c) {
      h(row, edge_index(params.cross_ext[c])) = params.h_p(t, c);
    }
    labels.push_back("P." + std::to_string(t));
  }
  GraphCodeSpec spec =
      make_code_spec(n, params.field, std::move(h), Family::kTripleQary, n - 3, std::move(labels));
  spec.points = params.alpha;
  return spec;
}

GraphCodeSpec build_spec(std::size_t n, const FieldPtr& field) {
  return build_spec(build_params(n, field));
}

namespace {

// Fills the erased coordinates among `coords` from a 3-row local check whose
// columns are aligned with `coords`. Recovered edges are appended to `log`.
void solve_local(LabeledGraph& g, const std::vector<EdgeId>& coords, const FieldMatrix& h,
                 const std::string& constraint, const char* stage,
                 std::vector<RecoveryStep>* log) {
  const Field& f = *g.field();
  std::vector<std::size_t> unknown;
  std::vector<FieldElement> rhs(h.rows(), f.zero());
  for (std::size_t c = 0; c < coords.size(); ++c) {
    if (g.is_erased(coords[c])) {
      unknown.push_back(c);
      continue;
    }
    const FieldElement v = g.label(coords[c]);
    for (std::size_t t = 0; t < h.rows(); ++t) rhs[t] = f.sub(rhs[t], f.mul(h(t, c), v));
  }
  if (unknown.empty()) {
    if (std::any_of(rhs.begin(), rhs.end(), [](FieldElement v) { return v.value != 0; })) {
      throw GraphCodeError(ErrorCode::kInconsistentSystem, constraint + " is violated");
    }
    return;
  }
  const std::vector<FieldElement> x = solve(h.select_columns(unknown), rhs);
  for (std::size_t k = 0; k < unknown.size(); ++k) {
    const EdgeId e = coords[unknown[k]];
    g.set_label(e, x[k]);
    if (log) log->push_back(RecoveryStep{e, constraint, stage, -1});
  }
}

std::vector<EdgeId> neighborhood_coords(std::size_t n, NodeId m) {
  std::vector<EdgeId> out;
  for (NodeId l = 0; l < n; ++l) out.push_back(EdgeId::make(m, l));
  return out;
}

void solve_neighborhood(const TripleParams& p, LabeledGraph& g, NodeId m, const char* stage,
                        std::vector<RecoveryStep>* log) {
  solve_local(g, neighborhood_coords(p.n, m), p.h_n, "N_" + std::to_string(m), stage, log);
}

void solve_cross(const TripleParams& p, LabeledGraph& g, const char* stage,
                 std::vector<RecoveryStep>* log) {
  solve_local(g, p.cross_ext.edges(), p.h_p, "P", stage, log);
}

}  // namespace

LabeledGraph encode(const GraphCodeSpec& spec, const InfoMap& info) {
  const std::size_t n = spec.n;
  const TripleParams p = build_params(n, spec.field);
  if (info.size() != edge_count(n - 3)) {
    throw GraphCodeError(ErrorCode::kShapeMismatch,
                         "expected " + std::to_string(edge_count(n - 3)) + " information symbols");
  }
  LabeledGraph g(n, spec.field);
  for (std::size_t k = 0; k < edge_count(n); ++k) g.erase(edge_unindex(k));
  for (const auto& [e, v] : info) {
    if (std::max(e.i, e.j) + 3 >= n) {
      throw GraphCodeError(ErrorCode::kShapeMismatch, e.to_string() + " is not an information edge");
    }
    g.set_label(EdgeId::make(e.i, e.j), v);
  }
  for (NodeId m = 0; m + 3 < n; ++m) solve_neighborhood(p, g, m, "encode", nullptr);
  solve_cross(p, g, "encode", nullptr);
  solve_neighborhood(p, g, static_cast<NodeId>(n - 3), "encode", nullptr);
  return g;
}

DecodeReport decode(const GraphCodeSpec& spec, const LabeledGraph& g) {
  const auto failed = node_failure_pattern(g);
  const std::size_t n = spec.n;
  if (!failed || failed->size() != 3 || g.node_count() != n) return oracle_decode(spec, g);
  const TripleParams p = build_params(n, spec.field);
  const auto is_failed = [&](NodeId v) {
    return std::find(failed->begin(), failed->end(), v) != failed->end();
  };

  DecodeReport report;
  report.recovered = g;
  try {
    for (NodeId m = 0; m + 2 < n; ++m) {
      if (!is_failed(m)) solve_neighborhood(p, report.recovered, m, "stage1", &report.provenance);
    }
    solve_cross(p, report.recovered, "stage2", &report.provenance);
    for (NodeId m : *failed) {
      if (m + 2 < n) solve_neighborhood(p, report.recovered, m, "stage3", &report.provenance);
    }
  } catch (const GraphCodeError& err) {
    if (err.code() != ErrorCode::kInconsistentSystem &&
        err.code() != ErrorCode::kUnderdeterminedSystem) {
      throw;
    }
    report.status = DecodeStatus::kCorrupted;
    report.reason = err.what();
    report.recovered = g;
    report.provenance.clear();
    return report;
  }
  if (report.recovered.has_erasures() || !is_codeword(spec, report.recovered)) {
    report.status = DecodeStatus::kCorrupted;
    report.reason = "recovered graph violates a parity constraint";
    report.recovered = g;
    report.provenance.clear();
  }
  return report;
}

SuiteResult check_cross_independence(const TripleParams& params) {
  SuiteResult r;
  r.name = "cross_independence(n=" + std::to_string(params.n) + ")";
  const std::size_t n = params.n;
  const std::size_t nodes = n - 2;
  for (const NodeSet& t : node_subsets(nodes, 3)) {
    const EdgeId cols[] = {EdgeId::make(t[0], t[1]), EdgeId::make(t[0], t[2]),
                           EdgeId::make(t[1], t[2])};
    FieldMatrix m(params.field, 3, 3);
    std::vector<std::size_t> sums;
    for (std::size_t c = 0; c < 3; ++c) {
      const auto col = cross_column(params, cols[c]);
      for (std::size_t k = 0; k < 3; ++k) m(k, c) = col[k];
      sums.push_back((cols[c].i + cols[c].j) % n);
    }
    std::sort(sums.begin(), sums.end());
    const std::string at = " {" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                           std::to_string(t[2]) + "}";
    r.record(rank(m) == 3, "rank" + at);
    r.record(std::adjacent_find(sums.begin(), sums.end()) == sums.end(), "sums" + at);
  }
  return r;
}

SuiteResult check_neighborhood_overlap(std::size_t n) {
  SuiteResult r;
  r.name = "neighborhood_overlap(n=" + std::to_string(n) + ")";
  for (NodeId m = 0; m < n; ++m) {
    const EdgeSet nm = neighborhood(n, m);
    for (NodeId l = 0; l < n; ++l) {
      r.record(nm[l] == EdgeId::make(m, l), "order m=" + std::to_string(m));
    }
  }
  for (const NodeSet& t : node_subsets(n, 3)) {
    const EdgeSet f = failure_edges(n, t);
    for (NodeId m = 0; m < n; ++m) {
      if (std::find(t.begin(), t.end(), m) != t.end()) continue;
      r.record(neighborhood(n, m).intersect(f).size() == 3, "overlap m=" + std::to_string(m));
    }
  }
  return r;
}

}  // namespace graphcode::triple_qary

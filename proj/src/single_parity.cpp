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

#include "graphcode/single_parity.hpp"

#include <algorithm>
#include <string>

namespace graphcode::single_parity {

GraphCodeSpec build_spec(std::size_t n, const FieldPtr& field) {
  if (n < 3) throw GraphCodeError(ErrorCode::kInvalidArgument, "single parity needs n >= 3");
  FieldMatrix h(field, n, edge_count(n));
  std::vector<std::string> labels;
  for (NodeId m = 0; m < n; ++m) {
    for (NodeId l = 0; l < n; ++l) h(m, edge_index(EdgeId::make(m, l))) = field->one();
    labels.push_back("N_" + std::to_string(m));
  }
  return make_code_spec(n, field, std::move(h), Family::kSingle, n - 1, std::move(labels));
}

namespace {

// Negated sum of the neighborhood of m, skipping `skip`.
FieldElement complete_row(const LabeledGraph& g, NodeId m, NodeId skip) {
  const Field& f = *g.field();
  FieldElement acc = f.zero();
  for (NodeId l = 0; l < g.node_count(); ++l) {
    if (l != skip) acc = f.add(acc, g.label(m, l));
  }
  return f.neg(acc);
}

}  // namespace

LabeledGraph encode(const GraphCodeSpec& spec, const InfoMap& info) {
  const std::size_t n = spec.n;
  if (info.size() != edge_count(n - 1)) {
    throw GraphCodeError(ErrorCode::kShapeMismatch,
                         "expected " + std::to_string(edge_count(n - 1)) + " information symbols");
  }
  LabeledGraph g(n, spec.field);
  for (const auto& [e, v] : info) {
    if (std::max(e.i, e.j) >= n - 1) {
      throw GraphCodeError(ErrorCode::kShapeMismatch, e.to_string() + " is not an information edge");
    }
    g.set_label(EdgeId::make(e.i, e.j), v);
  }
  const auto last = static_cast<NodeId>(n - 1);
  for (NodeId l = 0; l < last; ++l) g.set_label(EdgeId{last, l}, complete_row(g, l, last));
  g.set_label(EdgeId{last, last}, complete_row(g, last, last));
  return g;
}

DecodeReport decode(const GraphCodeSpec& spec, const LabeledGraph& g) {
  const auto failed = node_failure_pattern(g);
  if (!failed || failed->size() != 1 || g.node_count() != spec.n) return oracle_decode(spec, g);
  const NodeId i = failed->front();

  DecodeReport report;
  report.recovered = g;
  LabeledGraph& r = report.recovered;
  for (NodeId l = 0; l < spec.n; ++l) {
    if (l == i) continue;
    r.set_label(EdgeId::make(i, l), complete_row(r, l, i));
    report.provenance.push_back(RecoveryStep{EdgeId::make(i, l), "N_" + std::to_string(l), "1", -1});
  }
  r.set_label(EdgeId{i, i}, complete_row(r, i, i));
  report.provenance.push_back(RecoveryStep{EdgeId{i, i}, "N_" + std::to_string(i), "1", -1});
  return report;
}

}  // namespace graphcode::single_parity

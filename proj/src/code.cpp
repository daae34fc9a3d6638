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

#include "graphcode/code.hpp"

#include <atomic>
#include <chrono>
#include <numeric>
#include <optional>
#include <thread>
#include <utility>

namespace graphcode {

std::string_view family_name(Family family) {
  switch (family) {
    case Family::kSingle: return "single";
    case Family::kDoublePrime: return "double";
    case Family::kTripleQary: return "triple";
    case Family::kExtreme: return "extreme";
    case Family::kCustom: return "custom";
  }
  return "custom";
}

Family parse_family(std::string_view name) {
  if (name == "single" || name == "single_parity") return Family::kSingle;
  if (name == "double" || name == "double_prime") return Family::kDoublePrime;
  if (name == "triple" || name == "triple_qary") return Family::kTripleQary;
  if (name == "extreme" || name == "extreme_codes") return Family::kExtreme;
  if (name == "custom") return Family::kCustom;
  throw GraphCodeError(ErrorCode::kInvalidArgument, "unknown family '" + std::string(name) + "'");
}

std::string_view decode_status_name(DecodeStatus status) {
  switch (status) {
    case DecodeStatus::kOk: return "ok";
    case DecodeStatus::kUnderdetermined: return "underdetermined";
    case DecodeStatus::kInconsistent: return "inconsistent";
    case DecodeStatus::kCorrupted: return "corrupted";
  }
  return "unknown";
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void SuiteResult::record(bool ok, const std::string& what) {
  ++checks;
  if (ok) return;
  ++violations;
  if (examples.size() < 8) examples.push_back(what);
}

void SuiteResult::merge(const SuiteResult& other) {
  checks += other.checks;
  violations += other.violations;
  for (const auto& e : other.examples) {
    if (examples.size() < 8) examples.push_back(e);
  }
}

FieldElement complete_constraint(const LabeledGraph& g, const EdgeSet& constraint, EdgeId target) {
  const Field& f = *g.field();
  FieldElement acc = f.zero();
  for (EdgeId e : constraint) {
    if (e != target) acc = f.add(acc, g.label(e));
  }
  return f.neg(acc);
}

GraphCodeSpec make_code_spec(std::size_t n, FieldPtr field, FieldMatrix parity_check,
                             Family family, std::size_t info_nodes,
                             std::vector<std::string> row_labels) {
  if (parity_check.cols() != edge_count(n)) {
    throw GraphCodeError(ErrorCode::kShapeMismatch,
                         "parity-check matrix needs " + std::to_string(edge_count(n)) +
                             " columns, has " + std::to_string(parity_check.cols()));
  }
  if (parity_check.rows() > 0 && !same_field(parity_check.field(), field)) {
    throw GraphCodeError(ErrorCode::kFieldMismatch, "parity-check matrix field differs");
  }
  if (info_nodes > n) throw GraphCodeError(ErrorCode::kInvalidArgument, "info_nodes > n");
  if (row_labels.empty()) {
    for (std::size_t r = 0; r < parity_check.rows(); ++r) {
      row_labels.push_back("row_" + std::to_string(r));
    }
  }
  if (row_labels.size() != parity_check.rows()) {
    throw GraphCodeError(ErrorCode::kShapeMismatch, "one label per parity-check row");
  }
  GraphCodeSpec spec;
  spec.n = n;
  spec.field = std::move(field);
  spec.parity_check = std::move(parity_check);
  spec.family = family;
  spec.info_nodes = info_nodes;
  spec.row_labels = std::move(row_labels);
  return spec;
}

std::size_t code_dimension(const GraphCodeSpec& spec) {
  return edge_count(spec.n) - rank(spec.parity_check);
}

CodeMetrics code_metrics(const GraphCodeSpec& spec, std::size_t rho) {
  CodeMetrics m;
  m.n = spec.n;
  m.rho = rho;
  const std::size_t total = edge_count(spec.n);
  m.redundancy = rank(spec.parity_check);
  m.dimension = total - m.redundancy;
  const std::size_t g = std::gcd(m.dimension, total);
  m.rate_numerator = g ? m.dimension / g : 0;
  m.rate_denominator = g ? total / g : 1;
  m.rate = static_cast<double>(m.dimension) / static_cast<double>(total);
  m.optimal_bound = erased_edge_count(spec.n, rho);
  m.optimality_gap =
      static_cast<long long>(m.redundancy) - static_cast<long long>(m.optimal_bound);
  return m;
}

namespace {

void require_matching(const GraphCodeSpec& spec, const LabeledGraph& g) {
  if (g.node_count() != spec.n) {
    throw GraphCodeError(ErrorCode::kShapeMismatch, "graph node count differs from code");
  }
  if (!same_field(g.field(), spec.field)) {
    throw GraphCodeError(ErrorCode::kFieldMismatch, "graph field differs from code");
  }
}

}  // namespace

std::vector<FieldElement> syndrome(const GraphCodeSpec& spec, const LabeledGraph& g) {
  require_matching(spec, g);
  if (g.has_erasures()) {
    throw GraphCodeError(ErrorCode::kErasedAccess, "syndrome of a graph with erasures");
  }
  return multiply(spec.parity_check, g.labels());
}

bool is_codeword(const GraphCodeSpec& spec, const LabeledGraph& g) {
  for (FieldElement s : syndrome(spec, g)) {
    if (s.value != 0) return false;
  }
  return true;
}

DecodeReport oracle_decode(const GraphCodeSpec& spec, const LabeledGraph& g) {
  require_matching(spec, g);
  DecodeReport report;
  report.recovered = g;
  if (!g.has_erasures()) return report;

  const Field& f = *spec.field;
  const FieldMatrix& h = spec.parity_check;
  const auto mask = g.erasure_mask();
  const auto labels = g.labels();
  std::vector<std::size_t> erased;
  std::vector<FieldElement> rhs(h.rows(), f.zero());
  for (std::size_t c = 0; c < mask.size(); ++c) {
    if (mask[c]) {
      erased.push_back(c);
      continue;
    }
    if (labels[c].value == 0) continue;
    for (std::size_t r = 0; r < h.rows(); ++r) {
      if (h(r, c).value != 0) rhs[r] = f.sub(rhs[r], f.mul(h(r, c), labels[c]));
    }
  }
  try {
    const std::vector<FieldElement> x = solve(h.select_columns(erased), rhs);
    for (std::size_t k = 0; k < erased.size(); ++k) {
      const EdgeId e = edge_unindex(erased[k]);
      report.recovered.set_label(e, x[k]);
      report.provenance.push_back(RecoveryStep{e, "H", "oracle", -1});
    }
  } catch (const GraphCodeError& err) {
    if (err.code() == ErrorCode::kUnderdeterminedSystem) {
      report.status = DecodeStatus::kUnderdetermined;
    } else if (err.code() == ErrorCode::kInconsistentSystem) {
      report.status = DecodeStatus::kInconsistent;
    } else {
      throw;
    }
    report.reason = err.what();
    report.recovered = g;
  }
  return report;
}

bool erasures_correctable(const GraphCodeSpec& spec, const EdgeSet& erased) {
  std::vector<std::size_t> cols;
  cols.reserve(erased.size());
  for (EdgeId e : erased) cols.push_back(edge_index(e, spec.n));
  return rank(spec.parity_check.select_columns(cols)) == cols.size();
}

bool failure_correctable(const GraphCodeSpec& spec, std::span<const NodeId> failed) {
  return erasures_correctable(spec, failure_edges(spec.n, failed));
}

EdgeSet information_edges(std::size_t k) {
  std::vector<EdgeId> edges;
  edges.reserve(edge_count(k));
  for (NodeId i = 0; i < k; ++i) {
    for (NodeId j = 0; j <= i; ++j) edges.push_back(EdgeId{i, j});
  }
  return EdgeSet(std::move(edges));
}

LabeledGraph encode_systematic_generic(const GraphCodeSpec& spec, const InfoMap& info) {
  const std::size_t k = spec.info_nodes;
  const std::size_t info_count = edge_count(k);
  if (info.size() != info_count) {
    throw GraphCodeError(ErrorCode::kShapeMismatch,
                         "expected " + std::to_string(info_count) + " information symbols, got " +
                             std::to_string(info.size()));
  }
  LabeledGraph g(spec.n, spec.field);
  for (const auto& [edge, value] : info) {
    const EdgeId e = EdgeId::make(edge.i, edge.j);
    if (e.i >= k) {
      throw GraphCodeError(ErrorCode::kShapeMismatch,
                           "edge " + e.to_string() + " is not an information edge");
    }
    g.set_label(e, value);
  }
  // Information edges occupy the first C(k+1, 2) coordinates.
  const Field& f = *spec.field;
  const FieldMatrix& h = spec.parity_check;
  std::vector<std::size_t> redundancy(edge_count(spec.n) - info_count);
  std::iota(redundancy.begin(), redundancy.end(), info_count);
  std::vector<FieldElement> rhs(h.rows(), f.zero());
  const auto labels = g.labels();
  for (std::size_t c = 0; c < info_count; ++c) {
    if (labels[c].value == 0) continue;
    for (std::size_t r = 0; r < h.rows(); ++r) {
      if (h(r, c).value != 0) rhs[r] = f.sub(rhs[r], f.mul(h(r, c), labels[c]));
    }
  }
  std::vector<FieldElement> x;
  try {
    x = solve(h.select_columns(redundancy), rhs);
  } catch (const GraphCodeError& err) {
    if (err.code() == ErrorCode::kUnderdeterminedSystem ||
        err.code() == ErrorCode::kInconsistentSystem) {
      throw GraphCodeError(ErrorCode::kNotSystematic,
                           "redundancy columns do not determine a codeword: " +
                               std::string(err.what()));
    }
    throw;
  }
  for (std::size_t idx = 0; idx < redundancy.size(); ++idx) {
    g.set_label(edge_unindex(redundancy[idx]), x[idx]);
  }
  return g;
}

// ---------------------------------------------------------------------------
// Sampling

FieldElement random_element(const Field& field, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, field.order() - 1);
  return FieldElement{static_cast<std::uint16_t>(dist(rng))};
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  auto splitmix = [](std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  };
  return splitmix(splitmix(splitmix(seed) ^ a) ^ b);
}

CodewordSampler::CodewordSampler(const GraphCodeSpec& spec)
    : n_(spec.n), basis_(null_space(spec.parity_check)) {}

LabeledGraph CodewordSampler::sample(std::mt19937_64& rng) const {
  const Field& f = *basis_.field();
  std::vector<FieldElement> labels(basis_.cols(), f.zero());
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    const FieldElement c = random_element(f, rng);
    if (c.value == 0) continue;
    const auto row = basis_.row(r);
    for (std::size_t k = 0; k < labels.size(); ++k) {
      if (row[k].value != 0) labels[k] = f.add(labels[k], f.mul(c, row[k]));
    }
  }
  return LabeledGraph(n_, basis_.field(), std::move(labels));
}

// ---------------------------------------------------------------------------
// Exhaustive verification

std::vector<NodeSet> node_subsets(std::size_t n, std::size_t k) {
  std::vector<NodeSet> out;
  if (k > n) return out;
  NodeSet cur(k);
  std::iota(cur.begin(), cur.end(), NodeId{0});
  while (true) {
    out.push_back(cur);
    std::size_t pos = k;
    while (pos > 0 && cur[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) break;
    ++cur[pos - 1];
    for (std::size_t r = pos; r < k; ++r) cur[r] = cur[r - 1] + 1;
  }
  return out;
}

namespace {

std::optional<std::string> check_pattern(const GraphCodeSpec& spec, const NodeSet& failed,
                                         std::size_t pattern, const VerifyOptions& options,
                                         const CodewordSampler& sampler) {
  for (std::size_t t = 0; t < std::max<std::size_t>(options.trials, 1); ++t) {
    std::mt19937_64 rng(mix_seed(options.seed, pattern, t));
    const LabeledGraph original = sampler.sample(rng);
    const LabeledGraph erased = apply_erasure(original, failed);
    DecodeReport got;
    try {
      got = options.decoder ? options.decoder(spec, erased) : oracle_decode(spec, erased);
    } catch (const GraphCodeError& err) {
      return "error: " + std::string(err.what());
    }
    if (!got.ok()) return std::string(decode_status_name(got.status));
    if (!(got.recovered == original)) return std::string("mismatch");
    if (options.compare_with_oracle && options.decoder) {
      const DecodeReport oracle = oracle_decode(spec, erased);
      if (!oracle.ok()) return "oracle_" + std::string(decode_status_name(oracle.status));
      if (!(oracle.recovered == got.recovered)) return std::string("oracle_mismatch");
    }
  }
  return std::nullopt;
}

}  // namespace

VerifyReport verify_exhaustive(const GraphCodeSpec& spec, std::size_t rho,
                               const VerifyOptions& options) {
  if (rho > spec.n) throw GraphCodeError(ErrorCode::kInvalidArgument, "rho > n");
  const auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  report.family = spec.family;
  report.n = spec.n;
  report.q = spec.field->order();
  report.rho = rho;

  const std::vector<NodeSet> patterns = node_subsets(spec.n, rho);
  report.patterns_total = patterns.size();
  const CodewordSampler sampler(spec);
  std::vector<std::optional<std::string>> outcome(patterns.size());

  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    for (std::size_t p = 0; p < patterns.size(); ++p) {
      outcome[p] = check_pattern(spec, patterns[p], p, options, sampler);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) {
      pool.emplace_back([&] {
        for (std::size_t p = next++; p < patterns.size(); p = next++) {
          outcome[p] = check_pattern(spec, patterns[p], p, options, sampler);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  for (std::size_t p = 0; p < patterns.size(); ++p) {
    if (outcome[p]) {
      report.failures.push_back(PatternFailure{patterns[p], *outcome[p]});
    } else {
      ++report.patterns_ok;
    }
  }
  report.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

}  // namespace graphcode

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

#include "graphcode/extreme.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

namespace graphcode::extreme {

namespace {

// Determinant of the 3x3 matrix whose columns are a, b, c.
FieldElement det_columns(const Field& f, const FieldElement* a, const FieldElement* b,
                         const FieldElement* c) {
  auto minor = [&](FieldElement p, FieldElement q, FieldElement r, FieldElement s) {
    return f.sub(f.mul(p, s), f.mul(q, r));
  };
  FieldElement d = f.mul(a[0], minor(b[1], c[1], b[2], c[2]));
  d = f.sub(d, f.mul(b[0], minor(a[1], c[1], a[2], c[2])));
  return f.add(d, f.mul(c[0], minor(a[1], b[1], a[2], b[2])));
}

// Check on a column-major 3 x C(n+1, 2) buffer.
bool passes(const Field& f, std::size_t n, const std::vector<FieldElement>& cols) {
  for (NodeId j = 1; j < n; ++j) {
    const FieldElement* gjj = &cols[3 * edge_index(EdgeId{j, j})];
    for (NodeId i = 0; i < j; ++i) {
      const FieldElement* gii = &cols[3 * edge_index(EdgeId{i, i})];
      const FieldElement* gij = &cols[3 * edge_index(EdgeId{j, i})];
      if (det_columns(f, gii, gij, gjj).value == 0) return false;
    }
  }
  return true;
}

std::vector<FieldElement> column_major(const FieldMatrix& g) {
  std::vector<FieldElement> out(3 * g.cols());
  for (std::size_t c = 0; c < g.cols(); ++c) {
    for (std::size_t r = 0; r < 3; ++r) out[3 * c + r] = g(r, c);
  }
  return out;
}

void require_shape(const ExtremeGenerator& gen) {
  if (!gen.field || gen.g.rows() != 3 || gen.g.cols() != edge_count(gen.n)) {
    throw GraphCodeError(ErrorCode::kShapeMismatch, "generator must be 3 x C(n+1,2)");
  }
}

std::array<FieldElement, 3> vector_of(const Field& f, std::uint64_t code) {
  const std::uint64_t q = f.order();
  return {f.element(code % q), f.element(code / q % q), f.element(code / q / q)};
}

void run_parallel(unsigned jobs, std::size_t tasks, const std::function<void(std::size_t)>& fn) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < tasks; t = next++) fn(t);
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks)));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

}  // namespace

FieldElement det3(const FieldMatrix& m, std::size_t a, std::size_t b, std::size_t c) {
  if (m.rows() != 3) throw GraphCodeError(ErrorCode::kShapeMismatch, "det3 needs 3 rows");
  const FieldElement ca[] = {m(0, a), m(1, a), m(2, a)};
  const FieldElement cb[] = {m(0, b), m(1, b), m(2, b)};
  const FieldElement cc[] = {m(0, c), m(1, c), m(2, c)};
  return det_columns(*m.field(), ca, cb, cc);
}

bool check_extreme(const ExtremeGenerator& gen) {
  require_shape(gen);
  return passes(*gen.field, gen.n, column_major(gen.g));
}

bool exists_extreme(std::size_t n, std::uint32_t q) {
  const std::uint64_t points = std::uint64_t{q} * q + q + 1;
  return points + 1 > n;
}

std::uint32_t smallest_field_for(std::size_t n) {
  for (std::uint32_t q = 2; q <= Field::kMaxOrder; ++q) {
    if (is_prime_power(q) && exists_extreme(n, q)) return q;
  }
  throw GraphCodeError(ErrorCode::kNoSuchCode, "no supported field for n=" + std::to_string(n));
}

ExtremeGenerator construct_extreme(std::size_t n, const FieldPtr& field, std::uint64_t seed) {
  const Field& f = *field;
  if (n < 3) throw GraphCodeError(ErrorCode::kInvalidArgument, "extreme code needs n >= 3");
  if (!exists_extreme(n, f.order())) {
    throw GraphCodeError(ErrorCode::kNoSuchCode,
                         "no code for n=" + std::to_string(n) + " over " + f.to_string() +
                             ": needs q^2+q+1 > n-1");
  }
  const std::uint64_t q = f.order();
  const std::uint64_t total = q * q * q;
  ExtremeGenerator gen{n, field, FieldMatrix(field, 3, edge_count(n))};
  auto put = [&](EdgeId e, const std::array<FieldElement, 3>& v) {
    for (std::size_t r = 0; r < 3; ++r) gen.g(r, edge_index(e)) = v[r];
  };

  NodeId next = 0;
  for (std::uint64_t code = 1; code < total && next < n; ++code) {
    const auto v = vector_of(f, code);
    const auto lead = std::find_if(v.begin(), v.end(), [](FieldElement x) { return x.value != 0; });
    if (*lead == f.one()) {
      put(EdgeId{next, next}, v);
      ++next;
    }
  }

  for (NodeId i = 1; i < n; ++i) {
    for (NodeId j = 0; j < i; ++j) {
      const EdgeId e{i, j};
      const std::size_t col = edge_index(e);
      std::mt19937_64 rng(mix_seed(seed, col));
      std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
      for (std::uint64_t scan = 0;; ++scan) {
        put(e, vector_of(f, seed == 0 ? scan : pick(rng)));
        if (det3(gen.g, edge_index(EdgeId{j, j}), col, edge_index(EdgeId{i, i})).value != 0) break;
      }
    }
  }
  return gen;
}

ExtremeGenerator construct_extreme(std::size_t n, std::uint32_t q, std::uint64_t seed) {
  return construct_extreme(n, Field::make(q), seed);
}

LabeledGraph encode(const ExtremeGenerator& gen, const Message& u) {
  require_shape(gen);
  const Field& f = *gen.field;
  std::vector<FieldElement> labels(gen.g.cols(), f.zero());
  for (std::size_t c = 0; c < labels.size(); ++c) {
    for (std::size_t r = 0; r < 3; ++r) labels[c] = f.add(labels[c], f.mul(u[r], gen.g(r, c)));
  }
  return LabeledGraph(gen.n, gen.field, std::move(labels));
}

Message decode_extreme(const ExtremeGenerator& gen, NodeId i, NodeId j, FieldElement c_ii,
                       FieldElement c_ij, FieldElement c_jj) {
  require_shape(gen);
  if (!(i < j && j < gen.n)) {
    throw GraphCodeError(ErrorCode::kInvalidArgument, "surviving nodes must satisfy i < j < n");
  }
  const std::size_t cols[] = {edge_index(EdgeId{i, i}), edge_index(EdgeId{j, i}),
                              edge_index(EdgeId{j, j})};
  // u G_sub = c  <=>  G_sub^T u^T = c^T
  const FieldMatrix sub = gen.g.select_columns(cols).transpose();
  const FieldElement rhs[] = {c_ii, c_ij, c_jj};
  try {
    const auto u = solve(sub, rhs);
    return {u[0], u[1], u[2]};
  } catch (const GraphCodeError& err) {
    if (err.code() != ErrorCode::kUnderdeterminedSystem &&
        err.code() != ErrorCode::kInconsistentSystem) {
      throw;
    }
    throw GraphCodeError(ErrorCode::kSingularSystem,
                         "columns of nodes " + std::to_string(i) + "," + std::to_string(j) +
                             " are dependent");
  }
}

GraphCodeSpec build_spec(const ExtremeGenerator& gen) {
  require_shape(gen);
  GraphCodeSpec spec = make_code_spec(gen.n, gen.field, null_space(gen.g), Family::kExtreme, 0);
  spec.generator = gen.g;
  return spec;
}

ExtremeGenerator generator_of(const GraphCodeSpec& spec) {
  ExtremeGenerator gen{spec.n, spec.field, spec.generator};
  require_shape(gen);
  return gen;
}

DecodeReport decode(const GraphCodeSpec& spec, const LabeledGraph& g) {
  const auto failed = node_failure_pattern(g);
  if (!failed || spec.n < 3 || failed->size() != spec.n - 2 || spec.generator.rows() != 3) {
    return oracle_decode(spec, g);
  }
  std::vector<NodeId> alive;
  for (NodeId v = 0; v < spec.n; ++v) {
    if (!std::binary_search(failed->begin(), failed->end(), v)) alive.push_back(v);
  }
  const NodeId i = alive[0];
  const NodeId j = alive[1];
  const ExtremeGenerator gen = generator_of(spec);
  DecodeReport report;
  report.recovered = g;
  Message u;
  try {
    u = decode_extreme(gen, i, j, g.label(EdgeId{i, i}), g.label(EdgeId{j, i}),
                       g.label(EdgeId{j, j}));
  } catch (const GraphCodeError& err) {
    if (err.code() != ErrorCode::kSingularSystem) throw;
    report.status = DecodeStatus::kUnderdetermined;
    report.reason = err.what();
    return report;
  }
  const LabeledGraph full = encode(gen, u);
  for (std::size_t k = 0; k < edge_count(spec.n); ++k) {
    const EdgeId e = edge_unindex(k);
    if (!g.is_erased(e)) continue;
    report.recovered.set_label(e, full.label(e));
    report.provenance.push_back(RecoveryStep{e, "G", "extreme", -1});
  }
  return report;
}

BigInt count_formula(std::size_t n, std::uint32_t q) {
  if (!exists_extreme(n, q)) {
    throw GraphCodeError(ErrorCode::kNoSuchCode, "existence condition fails");
  }
  const BigInt bq = q;
  BigInt out = boost::multiprecision::pow(bq, static_cast<unsigned>(2 * binomial(n, 2))) *
               boost::multiprecision::pow(BigInt(q - 1), static_cast<unsigned>(edge_count(n)));
  const std::uint64_t points = std::uint64_t{q} * q + q + 1;
  for (std::size_t k = 0; k < n; ++k) out *= points - k;
  return out;
}

BigInt gl3_order(std::uint32_t q) {
  const BigInt c = BigInt(q) * q * q;
  return (c - 1) * (c - q) * (c - BigInt(q) * q);
}

BigInt count_codes(std::size_t n, std::uint32_t q) { return count_formula(n, q) / gl3_order(q); }

std::uint64_t count_exhaustive(std::size_t n, const FieldPtr& field, unsigned jobs) {
  const Field& f = *field;
  const std::size_t entries = 3 * edge_count(n);
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < entries; ++k) {
    total *= f.order();
    if (total > kExhaustiveLimit) {
      throw GraphCodeError(ErrorCode::kTooLarge, "exhaustive enumeration exceeds 2^24 matrices");
    }
  }
  constexpr std::size_t kChunks = 64;
  std::vector<std::uint64_t> counts(kChunks, 0);
  run_parallel(jobs, kChunks, [&](std::size_t chunk) {
    const std::uint64_t lo = total * chunk / kChunks;
    const std::uint64_t hi = total * (chunk + 1) / kChunks;
    std::vector<FieldElement> cols(entries);
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      std::uint64_t rest = idx;
      for (std::size_t k = 0; k < entries; ++k) {
        cols[k] = FieldElement{static_cast<std::uint16_t>(rest % f.order())};
        rest /= f.order();
      }
      if (passes(f, n, cols)) ++counts[chunk];
    }
  });
  std::uint64_t sum = 0;
  for (auto c : counts) sum += c;
  return sum;
}

MonteCarloEstimate count_montecarlo(std::size_t n, const FieldPtr& field, std::uint64_t samples,
                                    std::uint64_t seed, unsigned jobs) {
  const Field& f = *field;
  const std::size_t entries = 3 * edge_count(n);
  constexpr std::size_t kShards = 64;
  std::vector<std::uint64_t> accepted(kShards, 0);
  run_parallel(jobs, kShards, [&](std::size_t shard) {
    const std::uint64_t count = samples * (shard + 1) / kShards - samples * shard / kShards;
    std::mt19937_64 rng(mix_seed(seed, shard));
    std::vector<FieldElement> cols(entries);
    for (std::uint64_t s = 0; s < count; ++s) {
      for (auto& c : cols) c = random_element(f, rng);
      if (passes(f, n, cols)) ++accepted[shard];
    }
  });
  MonteCarloEstimate est;
  est.samples = samples;
  for (auto a : accepted) est.accepted += a;
  if (samples > 0) {
    est.rate = static_cast<double>(est.accepted) / static_cast<double>(samples);
    est.std_error = std::sqrt(est.rate * (1.0 - est.rate) / static_cast<double>(samples));
  }
  return est;
}

std::string to_text(const ExtremeGenerator& gen) {
  require_shape(gen);
  std::ostringstream out;
  out << gen.field->to_string() << '\n';
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < gen.g.cols(); ++c) out << (c ? " " : "") << gen.g(r, c).value;
    out << '\n';
  }
  return out.str();
}

ExtremeGenerator from_text(const std::string& text) {
  std::istringstream in(text);
  std::string field_line;
  if (!std::getline(in, field_line)) {
    throw GraphCodeError(ErrorCode::kParseError, "missing field line");
  }
  const FieldPtr field = Field::parse(field_line);
  std::vector<std::vector<std::uint32_t>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::vector<std::uint32_t> row;
    long long v = 0;
    while (ls >> v) {
      if (v < 0) throw GraphCodeError(ErrorCode::kParseError, "negative element code");
      row.push_back(static_cast<std::uint32_t>(v));
    }
    if (!ls.eof()) throw GraphCodeError(ErrorCode::kParseError, "bad element code: " + line);
    rows.push_back(std::move(row));
  }
  if (rows.size() != 3) throw GraphCodeError(ErrorCode::kParseError, "expected 3 generator rows");
  std::size_t n = 0;
  while (edge_count(n) < rows[0].size()) ++n;
  if (edge_count(n) != rows[0].size()) {
    throw GraphCodeError(ErrorCode::kParseError, "column count is not C(n+1,2)");
  }
  ExtremeGenerator gen{n, field, FieldMatrix::from_codes(field, rows)};
  require_shape(gen);
  return gen;
}

}  // namespace graphcode::extreme

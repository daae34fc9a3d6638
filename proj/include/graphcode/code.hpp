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

/// @file code.hpp
/// Linear codes over graphs described by a parity-check matrix whose columns
/// are edge coordinates in lexicographic order.
///
/// Every family in the library produces a GraphCodeSpec. The generic oracle
/// decoder here solves the erased coordinates directly and is the reference
/// every structured decoder is compared against.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "graphcode/finite_field.hpp"
#include "graphcode/graph.hpp"

namespace graphcode {

enum class Family { kSingle, kDoublePrime, kTripleQary, kExtreme, kCustom };

std::string_view family_name(Family family);
/// Accepts "single", "double", "double_prime", "triple", "triple_qary",
/// "extreme", "custom".
Family parse_family(std::string_view name);

struct GraphCodeSpec {
  std::size_t n = 0;
  FieldPtr field;
  /// r x C(n+1, 2); column k is the edge edge_unindex(k).
  FieldMatrix parity_check;
  Family family = Family::kCustom;
  /// Number of systematic information nodes (the first k nodes); 0 if the
  /// family has no systematic layout.
  std::size_t info_nodes = 0;
  /// One identifier per parity-check row ("S_3", "D_0", "N_2.1", ...).
  std::vector<std::string> row_labels;
  /// Evaluation points, for families built on Vandermonde checks.
  std::vector<FieldElement> points;
  /// Generator matrix, for families defined by one (dimension-3 codes).
  FieldMatrix generator;
};

/// Validates shapes and fills default row labels ("row_<k>").
GraphCodeSpec make_code_spec(std::size_t n, FieldPtr field, FieldMatrix parity_check,
                             Family family, std::size_t info_nodes,
                             std::vector<std::string> row_labels = {});

std::size_t code_dimension(const GraphCodeSpec& spec);

struct CodeMetrics {
  std::size_t n = 0;
  std::size_t rho = 0;
  std::size_t dimension = 0;   // k_G
  std::size_t redundancy = 0;  // r_G
  std::size_t rate_numerator = 0;
  std::size_t rate_denominator = 1;
  double rate = 0.0;
  std::size_t optimal_bound = 0;  // rho n - C(rho, 2)
  long long optimality_gap = 0;   // r_G - bound
};

CodeMetrics code_metrics(const GraphCodeSpec& spec, std::size_t rho);

/// H times the edge-label vector. The graph must have no erasures.
std::vector<FieldElement> syndrome(const GraphCodeSpec& spec, const LabeledGraph& g);
bool is_codeword(const GraphCodeSpec& spec, const LabeledGraph& g);

enum class DecodeStatus { kOk, kUnderdetermined, kInconsistent, kCorrupted };
std::string_view decode_status_name(DecodeStatus status);

/// One recovered edge, in recovery order.
struct RecoveryStep {
  EdgeId edge;
  std::string constraint;  // row identifier, or "H" for the oracle
  std::string stage;       // "1", "2", "finish", "oracle", "stage1", ...
  int t = -1;              // iteration index, -1 when not applicable
};

struct DecodeReport {
  DecodeStatus status = DecodeStatus::kOk;
  std::string reason;
  LabeledGraph recovered;
  std::vector<RecoveryStep> provenance;

  bool ok() const noexcept { return status == DecodeStatus::kOk; }
};

/// Solves the erased coordinates from H and the surviving labels. On success
/// the recovered graph has no erasures; otherwise it is the input unchanged.
DecodeReport oracle_decode(const GraphCodeSpec& spec, const LabeledGraph& g);

/// True iff the H columns of the given edges are linearly independent, which
/// is exactly when oracle_decode can fill them in.
bool erasures_correctable(const GraphCodeSpec& spec, const EdgeSet& erased);
bool failure_correctable(const GraphCodeSpec& spec, std::span<const NodeId> failed);

using InfoMap = std::map<EdgeId, FieldElement>;

/// Information edges of a systematic layout with k information nodes.
EdgeSet information_edges(std::size_t k);

/// Codeword agreeing with `info` on the edges among the first
/// spec.info_nodes nodes, found by solving for the remaining edges.
/// Throws kNotSystematic if those columns of H are rank deficient.
LabeledGraph encode_systematic_generic(const GraphCodeSpec& spec, const InfoMap& info);

/// Uniform codewords from a null-space basis of H.
class CodewordSampler {
 public:
  explicit CodewordSampler(const GraphCodeSpec& spec);

  LabeledGraph sample(std::mt19937_64& rng) const;
  std::size_t dimension() const noexcept { return basis_.rows(); }

 private:
  std::size_t n_;
  FieldMatrix basis_;
};

FieldElement random_element(const Field& field, std::mt19937_64& rng);
/// Deterministic seed derivation (splitmix64 over the inputs).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

using Decoder = std::function<DecodeReport(const GraphCodeSpec&, const LabeledGraph&)>;

struct VerifyOptions {
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  /// Structured decoder under test; oracle_decode when empty.
  Decoder decoder;
  /// Also require the oracle to agree bit-for-bit.
  bool compare_with_oracle = true;
};

struct PatternFailure {
  NodeSet failed_nodes;
  std::string reason;
};

struct VerifyReport {
  Family family = Family::kCustom;
  std::size_t n = 0;
  std::uint32_t q = 0;
  std::size_t rho = 0;
  std::size_t patterns_total = 0;
  std::size_t patterns_ok = 0;
  std::vector<PatternFailure> failures;
  double elapsed_ms = 0.0;

  bool all_ok() const noexcept { return patterns_ok == patterns_total; }
};

/// Every rho-subset of nodes, `trials` random codewords each: erase, decode,
/// compare. Codewords for pattern p, trial t come from mix_seed(seed, p, t),
/// so reports do not depend on `jobs`.
VerifyReport verify_exhaustive(const GraphCodeSpec& spec, std::size_t rho,
                               const VerifyOptions& options);

/// All k-subsets of [n] in lexicographic order.
std::vector<NodeSet> node_subsets(std::size_t n, std::size_t k);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept;

/// Outcome of an exhaustive property check.
struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t violations = 0;
  std::vector<std::string> examples;  // first few violations

  bool passed() const noexcept { return violations == 0; }
  void record(bool ok, const std::string& what);
  void merge(const SuiteResult& other);
};

/// -(sum of the labels of `constraint` other than `target`). All of them
/// must be readable.
FieldElement complete_constraint(const LabeledGraph& g, const EdgeSet& constraint, EdgeId target);

}  // namespace graphcode

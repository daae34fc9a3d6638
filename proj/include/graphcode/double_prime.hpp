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

/// @file double_prime.hpp
/// Optimal binary double-node-erasure-correcting code for prime n >= 5.
///
/// Two families of parity constraints over GF(2):
///   S_m, m in [n-2]: the neighborhood of v_m restricted to nodes [n-1];
///   S_{n-2}:         the self loops of nodes [n-1];
///   D_m, m in [n]:   edges (k, l) with k, l != n-2 and k + l = m (mod n),
///                    plus the shared edge (n-1, n-2).
/// That is 2n-1 independent checks, meeting the two-failure redundancy bound.
///
/// The decoder for two failed nodes i < j in [n-2] walks two zig-zag chains
/// that alternate between a diagonal check and a neighborhood check, then
/// finishes the three edges left over. Failures touching v_{n-2} or v_{n-1}
/// are solved by the oracle.

#pragma once

#include <optional>
#include <vector>

#include "graphcode/code.hpp"

namespace graphcode::double_prime {

struct ConstraintFamily {
  std::size_t n = 0;
  std::vector<EdgeSet> s;  // S_0 .. S_{n-2}
  std::vector<EdgeSet> d;  // D_0 .. D_{n-1}
};

/// Throws kNonPrimeN unless n is a prime >= 5.
ConstraintFamily build_sets(std::size_t n);

/// GF(2) code: rows S_0..S_{n-2} then D_0..D_{n-1}; n-2 information nodes.
GraphCodeSpec build_spec(std::size_t n);

/// Staged systematic encoder: (n-2, l) from S_l, (n-2, n-2) from S_{n-2},
/// (n-1, n-2) from D_{n-3}, then each (n-1, l) from D_{<n-1+l>}.
LabeledGraph encode(const GraphCodeSpec& spec, const InfoMap& info);

/// Surviving-edge sums for the failed pair {i, j}. `s[m]` is empty for
/// m in {i, j}, where the paired syndrome is undefined.
struct Syndromes {
  std::vector<std::optional<FieldElement>> s;
  std::vector<FieldElement> d;
};

Syndromes compute_syndromes(const ConstraintFamily& family, const LabeledGraph& g, NodeId i,
                            NodeId j);

struct DecodeSchedule {
  std::size_t n = 0;
  NodeId i = 0;
  NodeId j = 0;
  std::size_t d = 0;      // <j - i>_n
  std::size_t d_inv = 0;  // d^{-1} mod n
  std::size_t x = 0;      // <-1 - d^{-1}>_n, last index of the first loop
  std::size_t y = 0;      // <-1 + d^{-1}>_n, last index of the second loop
  std::vector<NodeId> first_s1, first_s2;    // t in [x+1]
  std::vector<NodeId> second_s1, second_s2;  // t in [y+1]
};

/// Requires i < j, both in [n-2]; throws kOutsideAlgorithmDomain otherwise.
DecodeSchedule make_schedule(std::size_t n, NodeId i, NodeId j);

/// Two-failure decoder. Provenance stages are "1" and "2" for the two loops
/// (with t set), "finish" for the three residual edges, and "oracle" when
/// the pattern falls outside the zig-zag domain.
DecodeReport decode(const GraphCodeSpec& spec, const LabeledGraph& g);

/// Exhaustive checks of the five intersection identities of the constraint
/// sets (S/D against failure neighborhoods).
SuiteResult check_set_identities(std::size_t n);
/// Exhaustive checks of the schedule invariants over all pairs in [n-2].
SuiteResult check_schedule_invariants(std::size_t n);
/// For every pair in [n-2], decodes a random codeword and checks that the
/// finish step handles exactly {(i,j), (n-2,i), (n-2,j)}.
SuiteResult check_decode_trace(std::size_t n, std::uint64_t seed);

}  // namespace graphcode::double_prime

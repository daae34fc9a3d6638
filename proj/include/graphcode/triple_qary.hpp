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

/// @file triple_qary.hpp
/// Optimal q-ary triple-node-erasure-correcting code, q >= n+1.
///
/// Each of the first n-2 neighborhoods is a codeword of a [n, n-3, 4]
/// Reed-Solomon code with parity check H_N (entry (t, l) = alpha_l^t). One
/// more 3-row check covers the cross edges P (edges among nodes 0..n-3,
/// loops excluded) plus three appended edges
/// (n-2, n-2), (n-1, n-2), (n-1, n-1). The P column of edge (i, j) is the
/// Vandermonde column of alpha_{<i+j>_n}; the appended columns are the unit
/// vectors. 3n-3 checks in total.

#pragma once

#include <vector>

#include "graphcode/code.hpp"

namespace graphcode::triple_qary {

struct TripleParams {
  std::size_t n = 0;
  FieldPtr field;
  std::vector<FieldElement> alpha;  // alpha_l = enum(l + 1)
  EdgeSet cross;                    // P
  EdgeSet cross_ext;                // P plus the three appended edges
  FieldMatrix h_n;                  // 3 x n
  FieldMatrix h_p;                  // 3 x |cross_ext|, columns in cross_ext order
};

/// Throws kInvalidArgument for n < 5 and kFieldTooSmall for q < n+1.
TripleParams build_params(std::size_t n, const FieldPtr& field);

/// Rows "N_m.t" for m in [n-2], t in [3], then "P.0".."P.2".
GraphCodeSpec build_spec(const TripleParams& params);
GraphCodeSpec build_spec(std::size_t n, const FieldPtr& field);

/// H_P column of an edge of cross_ext.
std::vector<FieldElement> cross_column(const TripleParams& params, EdgeId e);

/// Systematic encoder. `info` labels every edge among nodes 0..n-4 (loops
/// included), C(n-2, 2) symbols. Fills N_m for m < n-3, then the appended
/// edges, then N_{n-3}.
LabeledGraph encode(const GraphCodeSpec& spec, const InfoMap& info);

/// Three-stage decoder for any three failed nodes: surviving neighborhoods,
/// then the cross check, then the failed neighborhoods. Other patterns go to
/// the oracle. Provenance stages are "stage1", "stage2", "stage3".
DecodeReport decode(const GraphCodeSpec& spec, const LabeledGraph& g);

/// For i < j < k among the cross nodes: the three H_P columns are
/// independent and the pair sums are distinct mod n.
SuiteResult check_cross_independence(const TripleParams& params);
/// |N_m meets F_i u F_j u F_k| = 3 for every triple and m outside it, and
/// the l-th lexicographic edge of N_m joins v_m and v_l.
SuiteResult check_neighborhood_overlap(std::size_t n);

}  // namespace graphcode::triple_qary

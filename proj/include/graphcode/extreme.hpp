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

/// @file extreme.hpp
/// Dimension-3 codes that survive the failure of all but two nodes.
///
/// A 3 x C(n+1, 2) generator matrix G works iff for every pair i < j the
/// columns g_ii, g_ij, g_jj are linearly independent: the two surviving
/// nodes share exactly those three labels. Such a G exists iff the
/// diagonal columns can be n distinct projective points, i.e. q^2+q+1 > n-1.

#pragma once

#include <array>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "graphcode/code.hpp"

namespace graphcode::extreme {

using BigInt = boost::multiprecision::cpp_int;
using Message = std::array<FieldElement, 3>;

struct ExtremeGenerator {
  std::size_t n = 0;
  FieldPtr field;
  FieldMatrix g;  // 3 x C(n+1, 2), column k belongs to edge_unindex(k)
};

/// 3x3 determinant of the columns a, b, c of a 3-row matrix.
FieldElement det3(const FieldMatrix& m, std::size_t a, std::size_t b, std::size_t c);

/// Throws kShapeMismatch if the matrix is not 3 x C(n+1, 2).
bool check_extreme(const ExtremeGenerator& gen);

/// q^2 + q + 1 > n - 1.
bool exists_extreme(std::size_t n, std::uint32_t q);

/// Smallest prime power q with exists_extreme(n, q).
std::uint32_t smallest_field_for(std::size_t n);

/// Diagonal columns: the first n normalized projective points in code
/// order. Off-diagonal columns: the first vector outside span(g_ii, g_jj)
/// for seed 0, a uniform one drawn from mix_seed(seed, edge) otherwise.
/// Throws kNoSuchCode when exists_extreme fails.
ExtremeGenerator construct_extreme(std::size_t n, const FieldPtr& field, std::uint64_t seed);
ExtremeGenerator construct_extreme(std::size_t n, std::uint32_t q, std::uint64_t seed);

LabeledGraph encode(const ExtremeGenerator& gen, const Message& u);

/// Message from the three labels shared by surviving nodes i < j. Throws
/// kSingularSystem if the three columns are dependent.
Message decode_extreme(const ExtremeGenerator& gen, NodeId i, NodeId j, FieldElement c_ii,
                       FieldElement c_ij, FieldElement c_jj);

/// Code with H = null space of G and the generator attached.
GraphCodeSpec build_spec(const ExtremeGenerator& gen);
ExtremeGenerator generator_of(const GraphCodeSpec& spec);

/// Graph-level decoder. When every node but two has failed it solves the
/// message from the shared labels and re-encodes; otherwise the oracle.
DecodeReport decode(const GraphCodeSpec& spec, const LabeledGraph& g);

/// Number of generator matrices passing check_extreme:
/// q^{2 C(n,2)} (q-1)^{C(n+1,2)} (q^2+q+1)! / (q^2+q+1-n)!.
BigInt count_formula(std::size_t n, std::uint32_t q);
/// |GL_3(q)|; every valid code has exactly this many generator matrices.
BigInt gl3_order(std::uint32_t q);
/// count_formula / |GL_3(q)|.
BigInt count_codes(std::size_t n, std::uint32_t q);

/// Exhaustive enumeration bound on q^{3 C(n+1, 2)}.
inline constexpr std::uint64_t kExhaustiveLimit = std::uint64_t{1} << 24;

/// Counts every 3 x C(n+1, 2) matrix over GF(q) that passes the check.
/// Throws kTooLarge above kExhaustiveLimit.
std::uint64_t count_exhaustive(std::size_t n, const FieldPtr& field, unsigned jobs = 1);

struct MonteCarloEstimate {
  std::uint64_t samples = 0;
  std::uint64_t accepted = 0;
  double rate = 0.0;
  double std_error = 0.0;
};

/// Acceptance rate of uniform random matrices. Samples are split into a
/// fixed number of shards seeded from `seed`, so the estimate does not
/// depend on `jobs`.
MonteCarloEstimate count_montecarlo(std::size_t n, const FieldPtr& field, std::uint64_t samples,
                                    std::uint64_t seed, unsigned jobs = 1);

/// Field string, then three lines of element codes.
std::string to_text(const ExtremeGenerator& gen);
/// Inverse of to_text; n is inferred from the column count.
ExtremeGenerator from_text(const std::string& text);

}  // namespace graphcode::extreme

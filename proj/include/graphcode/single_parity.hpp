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

/// @file single_parity.hpp
/// Single-node-erasure-correcting code: the labels of every neighborhood sum
/// to zero. Nodes 0..n-2 carry information, node n-1 is redundancy.

#pragma once

#include "graphcode/code.hpp"

namespace graphcode::single_parity {

/// n rows, row m is the all-ones check on N_m (labelled "N_m").
GraphCodeSpec build_spec(std::size_t n, const FieldPtr& field);

/// Fills the redundancy node n-1 from the information on nodes [n-1].
LabeledGraph encode(const GraphCodeSpec& spec, const InfoMap& info);

/// Recovers one failed node: each (i, l) from row l, then (i, i) from row i.
/// Other erasure patterns go to oracle_decode.
DecodeReport decode(const GraphCodeSpec& spec, const LabeledGraph& g);

}  // namespace graphcode::single_parity

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

/// @file families.hpp
/// Uniform access to the built-in code families: field selection, spec
/// construction, encoders and structured decoders.

#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "graphcode/code.hpp"

namespace graphcode {

struct FamilyParams {
  Family family = Family::kSingle;
  std::size_t n = 0;
  /// Field order; chosen per family when absent.
  std::optional<std::uint32_t> q;
  /// Seed of the extreme-code generator construction.
  std::uint64_t generator_seed = 0;
};

/// single: 2; double: 2; triple: smallest prime power >= n+1;
/// extreme: smallest q with q^2+q+1 > n-1.
std::uint32_t default_field_order(Family family, std::size_t n);

/// Number of node failures the family is built to correct.
std::size_t design_failures(Family family, std::size_t n);

/// Validates the parameters (kNonPrimeN, kFieldTooSmall, kNoSuchCode, ...)
/// and builds the code.
GraphCodeSpec make_family_spec(const FamilyParams& params);

/// Structured decoder of the family; oracle_decode for custom specs.
Decoder family_decoder(Family family);

/// Codeword from information symbols. Systematic families take an InfoMap
/// over the information edges; the extreme family takes the three message
/// symbols as edges 0:0, 1:0, 1:1 of the map.
LabeledGraph family_encode(const GraphCodeSpec& spec, const InfoMap& info);

/// Number of information symbols family_encode expects.
std::size_t info_symbol_count(const GraphCodeSpec& spec);

/// Uniform information symbols in the layout family_encode expects.
InfoMap random_info(const GraphCodeSpec& spec, std::mt19937_64& rng);

}  // namespace graphcode

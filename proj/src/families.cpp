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

#include "graphcode/families.hpp"

#include <string>

#include "graphcode/double_prime.hpp"
#include "graphcode/extreme.hpp"
#include "graphcode/single_parity.hpp"
#include "graphcode/triple_qary.hpp"

namespace graphcode {

std::uint32_t default_field_order(Family family, std::size_t n) {
  switch (family) {
    case Family::kSingle:
    case Family::kDoublePrime:
      return 2;
    case Family::kTripleQary:
      return smallest_prime_power_at_least(n + 1);
    case Family::kExtreme:
      return extreme::smallest_field_for(n);
    case Family::kCustom:
      break;
  }
  throw GraphCodeError(ErrorCode::kInvalidArgument, "custom codes have no default field");
}

std::size_t design_failures(Family family, std::size_t n) {
  switch (family) {
    case Family::kSingle:
      return 1;
    case Family::kDoublePrime:
      return 2;
    case Family::kTripleQary:
      return 3;
    case Family::kExtreme:
      return n - 2;
    case Family::kCustom:
      break;
  }
  throw GraphCodeError(ErrorCode::kInvalidArgument, "custom codes have no design failure count");
}

GraphCodeSpec make_family_spec(const FamilyParams& params) {
  const std::size_t n = params.n;
  if (n < LabeledGraph::kMinNodes || n > LabeledGraph::kMaxNodes) {
    throw GraphCodeError(ErrorCode::kOutOfRange, "n must lie in [3, 10000]");
  }
  const std::uint32_t q = params.q.value_or(default_field_order(params.family, n));
  switch (params.family) {
    case Family::kSingle:
      return single_parity::build_spec(n, Field::make(q));
    case Family::kDoublePrime:
      if (q != 2) {
        throw GraphCodeError(ErrorCode::kInvalidArgument, "the double-node code is binary (q=2)");
      }
      return double_prime::build_spec(n);
    case Family::kTripleQary:
      return triple_qary::build_spec(n, Field::make(q));
    case Family::kExtreme:
      return extreme::build_spec(extreme::construct_extreme(n, Field::make(q), params.generator_seed));
    case Family::kCustom:
      break;
  }
  throw GraphCodeError(ErrorCode::kInvalidArgument, "custom codes cannot be built by family");
}

Decoder family_decoder(Family family) {
  switch (family) {
    case Family::kSingle:
      return single_parity::decode;
    case Family::kDoublePrime:
      return double_prime::decode;
    case Family::kTripleQary:
      return triple_qary::decode;
    case Family::kExtreme:
      return extreme::decode;
    case Family::kCustom:
      break;
  }
  return oracle_decode;
}

std::size_t info_symbol_count(const GraphCodeSpec& spec) {
  return spec.family == Family::kExtreme ? 3 : edge_count(spec.info_nodes);
}

LabeledGraph family_encode(const GraphCodeSpec& spec, const InfoMap& info) {
  switch (spec.family) {
    case Family::kSingle:
      return single_parity::encode(spec, info);
    case Family::kDoublePrime:
      return double_prime::encode(spec, info);
    case Family::kTripleQary:
      return triple_qary::encode(spec, info);
    case Family::kExtreme: {
      if (info.size() != 3) {
        throw GraphCodeError(ErrorCode::kShapeMismatch, "the extreme code takes 3 message symbols");
      }
      extreme::Message u;
      std::size_t k = 0;
      for (const auto& [e, v] : info) {
        if (edge_index(e) != k) {
          throw GraphCodeError(ErrorCode::kShapeMismatch, "message symbols sit on 0:0, 1:0, 1:1");
        }
        u[k++] = v;
      }
      return extreme::encode(extreme::generator_of(spec), u);
    }
    case Family::kCustom:
      break;
  }
  return encode_systematic_generic(spec, info);
}

InfoMap random_info(const GraphCodeSpec& spec, std::mt19937_64& rng) {
  InfoMap info;
  for (std::size_t k = 0; k < info_symbol_count(spec); ++k) {
    info.emplace(edge_unindex(k), random_element(*spec.field, rng));
  }
  return info;
}

}  // namespace graphcode

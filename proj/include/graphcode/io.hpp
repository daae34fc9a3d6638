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

/// @file io.hpp
/// Text and JSON formats.
///
/// Graph file (text):
///
///     graphcode-v1 n=<n> field=<field>
///     erased=<i:j>,<i:j>,...        (only when something is erased)
///     <row 0: 1 code>
///     <row 1: 2 codes>
///     ...
///
/// Erased entries are written as 0 in the rows. The JSON mirror is an object
/// {"version": "graphcode-v1", "n", "field", "erased": ["i:j", ...],
/// "rows": [[...], ...]}.
///
/// Information file: a JSON object {"i:j": code, ...}, or dense triangular
/// text whose row i holds the codes of (i, 0) .. (i, i).

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "graphcode/code.hpp"
#include "json.hpp"

namespace graphcode::io {

using Json = nlohmann::json;

/// Parses "i:j"; the result is normalized so that i >= j.
EdgeId parse_edge(std::string_view text);

std::string write_graph(const LabeledGraph& g);
Json graph_to_json(const LabeledGraph& g);
/// Accepts the text form or the JSON mirror (detected by a leading '{').
LabeledGraph read_graph(std::string_view text);

/// Reads information symbols for a systematic layout with `info_nodes`
/// information nodes. Every information edge must be given exactly once.
InfoMap read_info(std::string_view text, const Field& field, std::size_t info_nodes);
/// Dense triangular text form.
std::string write_info(const InfoMap& info, std::size_t info_nodes);

/// Flat list of element codes: a JSON array, {"u": [...]}, or whitespace
/// separated text.
std::vector<FieldElement> read_symbols(std::string_view text, const Field& field);

Json provenance_to_json(const std::vector<RecoveryStep>& steps);
Json report_to_json(const VerifyReport& report);
Json suite_to_json(const SuiteResult& suite);
Json spec_to_json(const GraphCodeSpec& spec);

}  // namespace graphcode::io

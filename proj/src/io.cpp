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

#include "graphcode/io.hpp"

#include <charconv>
#include <sstream>

namespace graphcode::io {

namespace {

constexpr std::string_view kVersion = "graphcode-v1";

[[noreturn]] void parse_fail(const std::string& what) {
  throw GraphCodeError(ErrorCode::kParseError, what);
}

std::uint64_t parse_uint(std::string_view s, const char* what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    parse_fail(std::string("bad ") + what + ": '" + std::string(s) + "'");
  }
  return v;
}

FieldElement checked_code(const Field& f, std::uint64_t code) {
  if (code >= f.order()) {
    throw GraphCodeError(ErrorCode::kFieldMismatch,
                         "element code " + std::to_string(code) + " outside " + f.to_string());
  }
  return FieldElement{static_cast<std::uint16_t>(code)};
}

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    lines.push_back(line);
  }
  return lines;
}

std::vector<std::uint64_t> split_codes(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::uint64_t> out;
  std::string tok;
  while (in >> tok) out.push_back(parse_uint(tok, "element code"));
  return out;
}

bool looks_like_json(std::string_view text) {
  const auto p = text.find_first_not_of(" \t\r\n");
  return p != std::string_view::npos && (text[p] == '{' || text[p] == '[');
}

LabeledGraph graph_from_json(const Json& j) {
  if (!j.is_object() || j.value("version", "") != kVersion) parse_fail("not a graphcode-v1 object");
  const std::size_t n = j.at("n").get<std::size_t>();
  const FieldPtr field = Field::parse(j.at("field").get<std::string>());
  const Json& rows = j.at("rows");
  if (!rows.is_array() || rows.size() != n) parse_fail("expected " + std::to_string(n) + " rows");
  std::vector<FieldElement> labels;
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != i + 1) parse_fail("row " + std::to_string(i) + " has wrong length");
    for (const Json& v : rows[i]) labels.push_back(checked_code(*field, v.get<std::uint64_t>()));
  }
  LabeledGraph g(n, field, std::move(labels));
  for (const Json& e : j.value("erased", Json::array())) g.erase(parse_edge(e.get<std::string>()));
  return g;
}

}  // namespace

EdgeId parse_edge(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) parse_fail("edge must look like i:j, got '" + std::string(text) + "'");
  const auto a = parse_uint(text.substr(0, colon), "node index");
  const auto b = parse_uint(text.substr(colon + 1), "node index");
  if (a > LabeledGraph::kMaxNodes || b > LabeledGraph::kMaxNodes) parse_fail("node index too large");
  return EdgeId::make(static_cast<NodeId>(a), static_cast<NodeId>(b));
}

std::string write_graph(const LabeledGraph& g) {
  std::ostringstream out;
  out << kVersion << " n=" << g.node_count() << " field=" << g.field()->to_string() << '\n';
  if (g.has_erasures()) {
    out << "erased=";
    bool first = true;
    for (EdgeId e : g.erased_edges()) {
      out << (first ? "" : ",") << e.to_string();
      first = false;
    }
    out << '\n';
  }
  const auto labels = g.labels();
  const auto mask = g.erasure_mask();
  std::size_t k = 0;
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    for (std::size_t j = 0; j <= i; ++j, ++k) {
      out << (j ? " " : "") << (mask[k] ? 0 : labels[k].value);
    }
    out << '\n';
  }
  return out.str();
}

Json graph_to_json(const LabeledGraph& g) {
  Json j;
  j["version"] = kVersion;
  j["n"] = g.node_count();
  j["field"] = g.field()->to_string();
  Json erased = Json::array();
  for (EdgeId e : g.erased_edges()) erased.push_back(e.to_string());
  j["erased"] = erased;
  Json rows = Json::array();
  const auto labels = g.labels();
  const auto mask = g.erasure_mask();
  std::size_t k = 0;
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c <= i; ++c, ++k) row.push_back(mask[k] ? 0 : labels[k].value);
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j;
}

LabeledGraph read_graph(std::string_view text) {
  if (looks_like_json(text)) {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::exception& err) {
      parse_fail(std::string("invalid JSON: ") + err.what());
    }
    try {
      return graph_from_json(j);
    } catch (const Json::exception& err) {
      parse_fail(std::string("malformed graph JSON: ") + err.what());
    }
  }
  const auto lines = split_lines(text);
  if (lines.empty()) parse_fail("empty graph file");
  std::istringstream head(lines[0]);
  std::string version, n_tok, field_tok, extra;
  head >> version >> n_tok >> field_tok;
  if (version != kVersion || n_tok.rfind("n=", 0) != 0 || field_tok.rfind("field=", 0) != 0 ||
      (head >> extra)) {
    parse_fail("header must be 'graphcode-v1 n=<n> field=<field>'");
  }
  const std::size_t n = parse_uint(std::string_view(n_tok).substr(2), "node count");
  if (n < LabeledGraph::kMinNodes || n > LabeledGraph::kMaxNodes) {
    throw GraphCodeError(ErrorCode::kOutOfRange, "node count outside [3, 10000]");
  }
  const FieldPtr field = Field::parse(std::string_view(field_tok).substr(6));
  std::size_t next = 1;
  std::vector<EdgeId> erased;
  if (next < lines.size() && lines[next].rfind("erased=", 0) == 0) {
    std::string_view list = std::string_view(lines[next]).substr(7);
    while (!list.empty()) {
      const auto comma = list.find(',');
      erased.push_back(parse_edge(list.substr(0, comma)));
      list = comma == std::string_view::npos ? std::string_view{} : list.substr(comma + 1);
    }
    ++next;
  }
  if (lines.size() - next != n) {
    parse_fail("expected " + std::to_string(n) + " label rows, got " +
               std::to_string(lines.size() - next));
  }
  std::vector<FieldElement> labels;
  for (std::size_t i = 0; i < n; ++i) {
    const auto codes = split_codes(lines[next + i]);
    if (codes.size() != i + 1) {
      parse_fail("row " + std::to_string(i) + " needs " + std::to_string(i + 1) + " entries");
    }
    for (auto c : codes) labels.push_back(checked_code(*field, c));
  }
  LabeledGraph g(n, field, std::move(labels));
  for (EdgeId e : erased) g.erase(e);
  return g;
}

InfoMap read_info(std::string_view text, const Field& field, std::size_t info_nodes) {
  InfoMap info;
  if (looks_like_json(text)) {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::exception& err) {
      parse_fail(std::string("invalid JSON: ") + err.what());
    }
    if (!j.is_object()) parse_fail("information JSON must be an object");
    for (const auto& [key, value] : j.items()) {
      if (!value.is_number_unsigned()) parse_fail("value of " + key + " must be an element code");
      const EdgeId e = parse_edge(key);
      if (!info.emplace(e, checked_code(field, value.get<std::uint64_t>())).second) {
        parse_fail("edge " + e.to_string() + " given twice");
      }
    }
  } else {
    const auto lines = split_lines(text);
    if (lines.size() != info_nodes) {
      throw GraphCodeError(ErrorCode::kShapeMismatch, "expected " + std::to_string(info_nodes) +
                                                          " information rows, got " +
                                                          std::to_string(lines.size()));
    }
    for (NodeId i = 0; i < lines.size(); ++i) {
      const auto codes = split_codes(lines[i]);
      if (codes.size() != i + 1) {
        throw GraphCodeError(ErrorCode::kShapeMismatch,
                             "information row " + std::to_string(i) + " needs " +
                                 std::to_string(i + 1) + " entries");
      }
      for (NodeId c = 0; c <= i; ++c) info.emplace(EdgeId{i, c}, checked_code(field, codes[c]));
    }
  }
  for (const auto& [e, v] : info) {
    if (e.i >= info_nodes) {
      throw GraphCodeError(ErrorCode::kShapeMismatch, e.to_string() + " is not an information edge");
    }
  }
  if (info.size() != edge_count(info_nodes)) {
    throw GraphCodeError(ErrorCode::kShapeMismatch,
                         "expected " + std::to_string(edge_count(info_nodes)) +
                             " information symbols, got " + std::to_string(info.size()));
  }
  return info;
}

std::string write_info(const InfoMap& info, std::size_t info_nodes) {
  std::ostringstream out;
  for (NodeId i = 0; i < info_nodes; ++i) {
    for (NodeId j = 0; j <= i; ++j) {
      const auto it = info.find(EdgeId{i, j});
      out << (j ? " " : "") << (it == info.end() ? 0 : it->second.value);
    }
    out << '\n';
  }
  return out.str();
}

std::vector<FieldElement> read_symbols(std::string_view text, const Field& field) {
  std::vector<FieldElement> out;
  if (looks_like_json(text)) {
    Json j;
    try {
      j = Json::parse(text);
      if (j.is_object()) j = j.at("u");
      for (const Json& v : j) out.push_back(checked_code(field, v.get<std::uint64_t>()));
    } catch (const Json::exception& err) {
      parse_fail(std::string("bad symbol list: ") + err.what());
    }
    return out;
  }
  for (const auto& line : split_lines(text)) {
    for (auto c : split_codes(line)) out.push_back(checked_code(field, c));
  }
  return out;
}

Json provenance_to_json(const std::vector<RecoveryStep>& steps) {
  Json out = Json::array();
  for (const RecoveryStep& s : steps) {
    out.push_back({{"edge", s.edge.to_string()},
                   {"constraint", s.constraint},
                   {"loop", s.stage},
                   {"t", s.t}});
  }
  return out;
}

Json report_to_json(const VerifyReport& report) {
  Json failures = Json::array();
  for (const PatternFailure& f : report.failures) {
    failures.push_back({{"failed_nodes", f.failed_nodes}, {"reason", f.reason}});
  }
  return {{"family", std::string(family_name(report.family))},
          {"n", report.n},
          {"q", report.q},
          {"rho", report.rho},
          {"patterns_total", report.patterns_total},
          {"patterns_ok", report.patterns_ok},
          {"failures", failures},
          {"elapsed_ms", report.elapsed_ms}};
}

Json suite_to_json(const SuiteResult& suite) {
  return {{"name", suite.name},
          {"checks", suite.checks},
          {"violations", suite.violations},
          {"passed", suite.passed()},
          {"examples", suite.examples}};
}

Json spec_to_json(const GraphCodeSpec& spec) {
  Json j;
  j["family"] = std::string(family_name(spec.family));
  j["n"] = spec.n;
  j["field"] = spec.field->to_string();
  j["info_nodes"] = spec.info_nodes;
  j["row_labels"] = spec.row_labels;
  Json points = Json::array();
  for (FieldElement p : spec.points) points.push_back(p.value);
  j["points"] = points;
  auto rows_of = [](const FieldMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      Json row = Json::array();
      for (FieldElement v : m.row(r)) row.push_back(v.value);
      rows.push_back(row);
    }
    return rows;
  };
  j["parity_check"] = rows_of(spec.parity_check);
  if (spec.generator.rows() > 0) j["generator"] = rows_of(spec.generator);
  return j;
}

}  // namespace graphcode::io

// Copyright 2026 The comaxdim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cctype>
#include <string>

#include "json.hpp"

#include "comaxdim/errors.hpp"
#include "comaxdim/graph.hpp"

namespace comaxdim {
namespace {

using json = nlohmann::ordered_json;

std::string dot_escape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string to_dot(const Graph& g) {
  std::string out = "graph {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out += "  n" + std::to_string(v) + " [label=\"" + dot_escape(g.label(v)) + "\"];\n";
  }
  for (const auto& [u, v] : g.edges()) {
    out += "  n" + std::to_string(u) + " -- n" + std::to_string(v) + ";\n";
  }
  return out + "}\n";
}

void append_size(std::string& out, std::size_t n) {
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else if (n <= 258047) {
    out += static_cast<char>(126);
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
  } else {
    out += static_cast<char>(126);
    out += static_cast<char>(126);
    for (int shift = 30; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
  }
}

std::string to_graph6(const Graph& g) {
  std::string out;
  const std::size_t n = g.order();
  append_size(out, n);
  // Upper triangle, column by column: x(0,1) x(0,2) x(1,2) x(0,3) ...
  int filled = 0;
  int chunk = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(chunk + 63);
        filled = 0;
        chunk = 0;
      }
    }
  }
  if (filled != 0) out += static_cast<char>((chunk << (6 - filled)) + 63);
  return out + "\n";
}

std::string to_json(const Graph& g) {
  json doc;
  doc["vertices"] = g.labels();
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  return doc.dump() + "\n";
}

[[noreturn]] void bad_graph6(const std::string& why) {
  throw Error(ErrorKind::kParse, "graph6: " + why);
}

}  // namespace

GraphFormat parse_graph_format(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "dot") return GraphFormat::kDot;
  if (lower == "graph6" || lower == "g6") return GraphFormat::kGraph6;
  if (lower == "json") return GraphFormat::kJson;
  throw Error(ErrorKind::kUnsupportedFormat, "unknown graph format '" + std::string(name) + "'");
}

std::string_view to_string(GraphFormat format) {
  switch (format) {
    case GraphFormat::kDot: return "dot";
    case GraphFormat::kGraph6: return "graph6";
    case GraphFormat::kJson: return "json";
  }
  return "?";
}

std::string export_graph(const Graph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::kDot: return to_dot(g);
    case GraphFormat::kGraph6: return to_graph6(g);
    case GraphFormat::kJson: return to_json(g);
  }
  throw Error(ErrorKind::kUnsupportedFormat, "unknown graph format");
}

Graph import_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())) != 0) text.remove_suffix(1);
  if (text.empty()) bad_graph6("empty input");
  for (char c : text) {
    if (c < 63 || c > 126) bad_graph6("byte outside the printable range 63..126");
  }
  auto value = [&](std::size_t i) { return static_cast<std::size_t>(text[i] - 63); };

  std::size_t n = 0;
  std::size_t pos = 0;
  if (text[0] != 126) {
    n = value(0);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != 126) {
    if (text.size() < 4) bad_graph6("truncated size field");
    n = (value(1) << 12) | (value(2) << 6) | value(3);
    pos = 4;
  } else {
    if (text.size() < 8) bad_graph6("truncated size field");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | value(i);
    pos = 8;
  }

  const std::size_t bits = n * (n == 0 ? 0 : n - 1) / 2;
  const std::size_t expected = (bits + 5) / 6;
  if (text.size() - pos != expected) {
    bad_graph6("expected " + std::to_string(expected) + " data bytes for " + std::to_string(n) +
               " vertices, got " + std::to_string(text.size() - pos));
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const std::size_t byte = value(pos + k / 6);
      if (((byte >> (5 - k % 6)) & 1U) != 0) edges.emplace_back(i, j);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return Graph(std::move(labels), edges);
}

Graph import_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kParse, std::string("graph json: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw Error(ErrorKind::kParse, "graph json: missing \"vertices\" array");
  }
  std::vector<std::string> labels;
  for (const auto& v : doc["vertices"]) {
    if (v.is_string()) {
      labels.push_back(v.get<std::string>());
    } else if (v.is_number_integer()) {
      labels.push_back(std::to_string(v.get<long long>()));
    } else {
      throw Error(ErrorKind::kParse, "graph json: vertex labels must be strings or integers");
    }
  }
  std::vector<Edge> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw Error(ErrorKind::kParse, "graph json: \"edges\" must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
        throw Error(ErrorKind::kParse, "graph json: each edge must be a pair of vertex indices");
      }
      edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
  }
  try {
    return Graph(std::move(labels), edges);
  } catch (const Error& e) {
    throw Error(ErrorKind::kParse, std::string("graph json: ") + e.what());
  }
}

}  // namespace comaxdim

// Copyright 2026 The binassoc Authors
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

#include "binassoc/graph_export.hpp"

#include <fstream>
#include <ostream>

#include <json.hpp>

#include "binassoc/error.hpp"
#include "binassoc/io.hpp"

namespace binassoc {

std::string_view to_string(GraphFormat format) {
  switch (format) {
    case GraphFormat::EdgeListCsv: return "edgelist";
    case GraphFormat::Dot: return "dot";
    case GraphFormat::NodeLinkJson: return "json";
  }
  return "unknown";
}

std::optional<GraphFormat> graph_format_from_string(std::string_view name) {
  if (name == "edgelist") return GraphFormat::EdgeListCsv;
  if (name == "dot") return GraphFormat::Dot;
  if (name == "json") return GraphFormat::NodeLinkJson;
  return std::nullopt;
}

void write_edge_list_csv(const WeightedNetwork& net, std::ostream& out) {
  out << "source,target,weight,measure\n";
  for (const NetworkEdge& e : net.edges) {
    out << csv_quote(net.labels[e.i]) << ',' << csv_quote(net.labels[e.j])
        << ',' << format_weight(e.weight) << ',' << to_string(e.kind) << '\n';
  }
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

void write_dot(const WeightedNetwork& net, std::ostream& out) {
  out << "graph associations {\n";
  out << "  // " << net.construction << "\n";
  for (std::size_t n = 0; n < net.labels.size(); ++n)
    out << "  n" << n << " [label=" << dot_quote(net.labels[n]) << "];\n";
  for (const NetworkEdge& e : net.edges) {
    out << "  n" << e.i << " -- n" << e.j << " [weight="
        << format_weight(e.weight) << ", measure=\"" << to_string(e.kind)
        << "\"];\n";
  }
  out << "}\n";
}

void write_node_link_json(const WeightedNetwork& net, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["construction"] = net.construction;
  doc["nodes"] = nlohmann::ordered_json::array();
  for (std::size_t n = 0; n < net.labels.size(); ++n)
    doc["nodes"].push_back({{"id", n}, {"label", net.labels[n]}});
  doc["links"] = nlohmann::ordered_json::array();
  for (const NetworkEdge& e : net.edges) {
    doc["links"].push_back({{"source", e.i},
                            {"target", e.j},
                            {"weight", e.weight},
                            {"measure", to_string(e.kind)},
                            {"degenerate", e.degenerate}});
  }
  out << doc.dump(2) << '\n';
}

WeightedNetwork read_node_link_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(1, std::string("invalid node-link JSON: ") + e.what());
  }
  WeightedNetwork net;
  try {
    net.construction = doc.at("construction").get<std::string>();
    for (const auto& node : doc.at("nodes"))
      net.labels.push_back(node.at("label").get<std::string>());
    for (const auto& link : doc.at("links")) {
      NetworkEdge e;
      e.i = link.at("source").get<std::size_t>();
      e.j = link.at("target").get<std::size_t>();
      e.weight = link.at("weight").get<double>();
      const auto kind =
          measure_kind_from_string(link.at("measure").get<std::string>());
      if (!kind) throw DataError("unknown measure kind in node-link JSON");
      e.kind = *kind;
      e.degenerate = link.at("degenerate").get<bool>();
      if (e.i >= e.j || e.j >= net.labels.size())
        throw DataError("node-link JSON edge endpoints are invalid");
      net.edges.push_back(e);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, std::string("malformed node-link JSON: ") + e.what());
  }
  return net;
}

WeightedNetwork read_node_link_json(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open " + path.string() + " for reading");
  return read_node_link_json(in);
}

void export_network(const WeightedNetwork& net, GraphFormat format,
                    const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoFailure("cannot open " + path.string() + " for writing");
  switch (format) {
    case GraphFormat::EdgeListCsv: write_edge_list_csv(net, out); break;
    case GraphFormat::Dot: write_dot(net, out); break;
    case GraphFormat::NodeLinkJson: write_node_link_json(net, out); break;
  }
  out.flush();
  if (!out) throw IoFailure("write to " + path.string() + " failed");
}

}  // namespace binassoc

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

// Network serialization. Every writer emits byte-identical output for equal
// inputs: edge order is canonical and weights are rendered with 17
// significant digits (exact for binary64).

#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string_view>

#include "binassoc/network.hpp"

namespace binassoc {

enum class GraphFormat { EdgeListCsv, Dot, NodeLinkJson };

std::string_view to_string(GraphFormat format);
std::optional<GraphFormat> graph_format_from_string(std::string_view name);

// CSV with header `source,target,weight,measure`, one row per edge.
void write_edge_list_csv(const WeightedNetwork& net, std::ostream& out);

// Undirected Graphviz graph; weight and measure as edge attributes.
void write_dot(const WeightedNetwork& net, std::ostream& out);

// {"construction": ..., "nodes": [{id,label}...],
//  "links": [{source,target,weight,measure,degenerate}...]}
void write_node_link_json(const WeightedNetwork& net, std::ostream& out);

// Inverse of write_node_link_json; the round trip reproduces the network
// exactly.
WeightedNetwork read_node_link_json(std::istream& in);
WeightedNetwork read_node_link_json(const std::filesystem::path& path);

// Writes `net` to `path` in the given format. Throws IoFailure naming the
// path on any write failure.
void export_network(const WeightedNetwork& net, GraphFormat format,
                    const std::filesystem::path& path);

}  // namespace binassoc

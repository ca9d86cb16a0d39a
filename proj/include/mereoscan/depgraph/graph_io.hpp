// SPDX-FileCopyrightText: © 2026 The mereoscan Authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mereoscan/depgraph/algorithms.hpp"
#include "mereoscan/depgraph/graph.hpp"

namespace mereoscan::depgraph {

inline constexpr std::string_view kGraphSchema = "graph/v1";

struct GraphAnalysis {
    CycleReport cycles;
    std::set<std::string> orphans;
    std::vector<std::vector<std::string>> components;

    bool operator==(const GraphAnalysis& o) const {
        return cycles.cycles == o.cycles.cycles && cycles.truncated == o.cycles.truncated &&
               orphans == o.orphans && components == o.components;
    }
};

GraphAnalysis analyse(const DependencyGraph& graph, std::size_t cycle_cap = kDefaultCycleCap,
                      const CouplingPolicy& policy = {});

// Deterministic JSON dump: keys and collections in sorted order.
std::string print_graph(const DependencyGraph& graph,
                        const std::optional<GraphAnalysis>& analysis = std::nullopt);

struct GraphDocument {
    DependencyGraph graph;
    std::optional<GraphAnalysis> analysis;
};

// Raises SchemaError.
GraphDocument parse_graph(std::string_view text);

}  // namespace mereoscan::depgraph

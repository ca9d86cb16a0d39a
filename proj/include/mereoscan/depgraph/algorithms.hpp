// SPDX-FileCopyrightText: © 2026 The mereoscan Authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mereoscan/depgraph/graph.hpp"

namespace mereoscan::depgraph {

inline constexpr std::size_t kDefaultCycleCap = 1000;

// Declared entries are validated and returned as given (ConfigError when
// one is not a node). Otherwise every node whose role is in `roles` and
// that has no incoming import, include or link edge.
std::set<std::string> find_entry_points(
    const DependencyGraph& graph,
    const std::optional<std::vector<std::string>>& declared = std::nullopt,
    const std::set<FileRole>& roles = {FileRole::Source});

struct CycleReport {
    // Each cycle starts at its lexicographically smallest path. Sorted.
    std::vector<std::vector<std::string>> cycles;
    bool truncated = false;
};

// Elementary cycles over import and include edges (Johnson's algorithm),
// stopping after `cap` cycles. Empty iff those edges admit a topological
// order.
CycleReport detect_cycles(const DependencyGraph& graph,
                          std::size_t cap = kDefaultCycleCap);

// Nodes sharing no undirected coupling path with any entry.
std::set<std::string> detect_orphans(const DependencyGraph& graph,
                                     const std::set<std::string>& entries,
                                     const CouplingPolicy& policy = {});

// Nodes reachable from some entry following coupling edges forward.
std::set<std::string> forward_reachable(const DependencyGraph& graph,
                                        const std::set<std::string>& entries,
                                        const CouplingPolicy& policy = {});

// True iff a and b lie on a common undirected coupling path; reflexive.
// Raises LookupError for unknown nodes.
bool sc_graph_path(const DependencyGraph& graph, const std::string& a,
                   const std::string& b, const CouplingPolicy& policy = {});

// Undirected components; paths sorted inside each component and components
// ordered by their smallest path.
std::vector<std::vector<std::string>> connected_components(
    const DependencyGraph& graph, const CouplingPolicy& policy = {});

}  // namespace mereoscan::depgraph

// SPDX-FileCopyrightText: © 2026 The mereoscan Authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mereoscan/classifier/participation.hpp"
#include "mereoscan/core/aggregate.hpp"
#include "mereoscan/core/axioms.hpp"
#include "mereoscan/core/model.hpp"
#include "mereoscan/depgraph/algorithms.hpp"
#include "mereoscan/depgraph/graph.hpp"

namespace mereoscan::verdict {

// source: files bound by SCgraphPath over all counted edges.
// compiled: files bound by `linked`, i.e. manifest (link-stage) edges only.
enum class Mode { Source, Compiled };

std::string_view to_string(Mode m) noexcept;
std::optional<Mode> parse_mode(std::string_view s) noexcept;
std::string_view binding_name(Mode m) noexcept;

struct BuildOptions {
    Mode mode = Mode::Source;
    bool include_loose = false;

    depgraph::CouplingPolicy policy() const noexcept {
        return {include_loose, mode == Mode::Compiled};
    }
};

// Component ids ("C1", "C2", ...) in connected_components order.
std::vector<std::string> component_ids(const depgraph::DependencyGraph& graph,
                                       const depgraph::CouplingPolicy& policy);

// A component of one file without any coupling edge, in a graph holding
// other source or object files. Such a file is no functional part of
// anything.
bool is_isolated_file(const depgraph::DependencyGraph& graph,
                      const std::vector<std::string>& component,
                      const depgraph::CouplingPolicy& policy);

// Horizon 1. One whole per component at level 1, one entity per file at
// level 2, genuineFP(file, whole, 0) for every non-optional file that is
// not an isolated file, and binding between every ordered pair of distinct
// such files in the same component. Raises ConsistencyError when the
// classification does not cover exactly the graph nodes.
core::FiniteModel build_model(const depgraph::DependencyGraph& graph,
                              const std::vector<classifier::ParticipationClassification>& classes,
                              const BuildOptions& options = {});

struct VerdictFile {
    std::string path;
    std::string mode;

    bool operator==(const VerdictFile&) const = default;
};

struct WholenessVerdict {
    std::string component;
    core::AggregateClass cls = core::AggregateClass::MereSet;
    std::string binding_name;
    std::vector<VerdictFile> files;
    std::vector<core::UnityCounterexample> counterexamples;
    std::vector<core::EvidenceStep> evidence;
    std::vector<std::string> notes;
    // Counted as a standalone unit (isolated file under --orphans-standalone).
    bool standalone = false;

    bool operator==(const WholenessVerdict&) const = default;
};

struct WholenessReport {
    std::string tool_version;
    std::string input_digest;
    std::string mode = "source";
    std::string binding_name = "SCgraphPath";
    std::size_t file_count = 0;
    std::vector<std::string> entries;
    std::vector<WholenessVerdict> verdicts;
    std::size_t standalone_units = 0;
    std::size_t infringement_units = 0;
    std::vector<std::string> orphan_files;
    std::vector<std::vector<std::string>> cycles;
    bool cycles_truncated = false;
    std::vector<core::NonContingencyWitness> noncontingency_witnesses;
    std::vector<std::string> warnings;
    std::vector<std::string> notes;

    bool operator==(const WholenessReport&) const = default;
};

struct VerdictOptions {
    BuildOptions build;
    bool orphans_standalone = false;
    std::size_t cycle_cap = depgraph::kDefaultCycleCap;
    std::string tool_version;
};

// Runs unity on the built model and non-contingency on the model extended
// with the bundled counterexample model, then classifies each component
// holding an entry point. Components without an entry are reported as
// orphan files.
WholenessReport issue_verdict(const core::FiniteModel& model,
                              const depgraph::DependencyGraph& graph,
                              const std::vector<classifier::ParticipationClassification>& classes,
                              const VerdictOptions& options = {});

// 0 when every verdict is a functional whole (or there is nothing to
// judge), 2 otherwise.
int exit_code(const WholenessReport& report) noexcept;

// Disjoint union of `base` and `extra`; ids of `extra` are prefixed.
core::FiniteModel extend_model(const core::FiniteModel& base, const core::FiniteModel& extra,
                               std::string_view prefix);

}  // namespace mereoscan::verdict

// SPDX-FileCopyrightText: © 2026 The mereoscan Authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mereoscan/classifier/probe.hpp"
#include "mereoscan/depgraph/graph.hpp"

namespace mereoscan::classifier {

// Immutable participation is never inferred; reports carry it as
// not-applicable.
enum class Mode { Optional, Mandatory, Essential, Unknown };
enum class Basis { GraphOnly, Probe };

enum class Evidence {
    Orphan,
    Unreachable,
    RemovalProbePassed,
    RemovalProbeFailed,
    RemovalProbeTimeout,
    ReplacementProbePassed,
    ReplacementProbeFailed,
    ReplacementProbeTimeout,
    PinnedVersion,
};

std::string_view to_string(Mode m) noexcept;
std::string_view to_string(Basis b) noexcept;
std::string_view to_string(Evidence e) noexcept;
std::optional<Mode> parse_mode(std::string_view s) noexcept;
std::optional<Basis> parse_basis(std::string_view s) noexcept;
std::optional<Evidence> parse_evidence(std::string_view s) noexcept;

bool is_probe_evidence(Evidence e) noexcept;

struct Observation {
    Evidence kind;
    std::string detail;
    // Probe output, bounded by kTranscriptCap.
    std::string transcript;

    bool operator==(const Observation&) const = default;
};

struct ParticipationClassification {
    std::string file;
    Mode mode = Mode::Mandatory;
    Basis basis = Basis::GraphOnly;
    std::vector<Observation> evidence;

    bool has(Evidence e) const noexcept;
    bool operator==(const ParticipationClassification&) const = default;
};

// The decision table, first matching row wins:
//   any probe timeout                    -> unknown
//   removal-probe-passed                 -> optional
//   orphan or unreachable                -> optional
//   pinned-version                       -> essential
//   replacement-probe-passed             -> mandatory
//   replacement-probe-failed             -> essential
//   otherwise                            -> mandatory
Mode derive_mode(const std::vector<Observation>& evidence) noexcept;

struct ClassifyOptions {
    // Tree the graph was scanned from; staged copies are made of it.
    std::filesystem::path root;
    std::optional<ProbeSpec> probe;
    // File -> stub used in its place for the replacement probe.
    std::map<std::string, std::filesystem::path> replacements;
    depgraph::CouplingPolicy policy;
};

// One classification per graph node, in path order. Without a probe the
// basis is graph-only: orphans and files not reachable from an entry are
// optional, the rest mandatory, and files under a pin essential. With a
// probe each file is removed from a staged copy and, if that breaks the
// probe and a stub is given, replaced by the stub.
std::vector<ParticipationClassification> classify_participation(
    const depgraph::DependencyGraph& graph, const std::set<std::string>& entries,
    const ClassifyOptions& options);

// Copies `root` into a fresh directory under `prefix`, leaving out the
// files in `remove` and writing each replacement over its target. Raises
// IoError naming the offending file.
std::filesystem::path stage_tree(const std::filesystem::path& root,
                                 const std::filesystem::path& prefix,
                                 const std::set<std::string>& remove,
                                 const std::map<std::string, std::filesystem::path>& replace = {});

// Stages the tree without every probe-optional file and runs the probe.
ProbeOutcome check_self_consistency(const std::filesystem::path& root, const ProbeSpec& probe,
                                    const std::vector<ParticipationClassification>& result);

}  // namespace mereoscan::classifier

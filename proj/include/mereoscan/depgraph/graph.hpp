// SPDX-FileCopyrightText: © 2026 The mereoscan Authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace mereoscan::depgraph {

enum class FileRole { Source, Data, Config, Object, Unknown };

std::string_view to_string(FileRole r) noexcept;
std::optional<FileRole> parse_file_role(std::string_view s) noexcept;
// Guess from the file extension.
FileRole role_for_path(std::string_view path) noexcept;

// How one file depends on another. socket and pipe are loose couplings:
// representable, but excluded from unity unless explicitly included.
enum class Mechanism {
    Import,
    Include,
    DataRead,
    FunctionCallManifest,
    Link,
    Socket,
    Pipe,
};

std::string_view to_string(Mechanism m) noexcept;
std::optional<Mechanism> parse_mechanism(std::string_view s) noexcept;
bool is_loose(Mechanism m) noexcept;
// Mechanisms a manifest may declare for compiled artefacts.
bool is_manifest_mechanism(Mechanism m) noexcept;

// Which edges bind files together. In source mode import, include, link,
// data-read and function-call-manifest edges count. In compiled mode the
// source-level mechanisms (import, include) are dropped.
struct CouplingPolicy {
    bool include_loose = false;
    bool compiled = false;

    bool counts(Mechanism m) const noexcept;
};

struct FileNode {
    std::string path;
    FileRole role = FileRole::Unknown;
    // Extractor that claimed the file: python, c, manifest, or none.
    std::string grammar = "none";

    bool operator==(const FileNode&) const = default;
};

struct DepEdge {
    std::string from;
    std::string to;
    Mechanism mechanism;
    // Line number in the source file, or manifest location.
    std::string site;

    auto operator<=>(const DepEdge&) const = default;
};

struct Unresolved {
    std::string from;
    std::string target;
    Mechanism mechanism;
    std::string site;
    // "external" for angle includes, "not-in-tree" otherwise.
    std::string reason;

    auto operator<=>(const Unresolved&) const = default;
};

// Normalises a workspace-relative path: forward slashes, no "." or ".."
// segments, no leading or trailing slash. Returns nullopt for absolute
// paths and paths escaping the root.
std::optional<std::string> normalize_path(std::string_view raw);

class DependencyGraph {
public:
    // Keeps the first registration of a path; raises ConsistencyError on a
    // path that does not normalise.
    void add_node(FileNode node);
    // Raises ConsistencyError on unknown endpoints and on import/include
    // self-edges.
    void add_edge(DepEdge edge);
    void add_unresolved(Unresolved u);
    void add_pin(std::string path, std::string version);
    void add_warning(std::string w) { warnings_.push_back(std::move(w)); }
    // Raises ConfigError for entries that are not nodes.
    void set_entries(std::set<std::string> entries);
    void set_digest(std::string digest) { digest_ = std::move(digest); }

    const std::map<std::string, FileNode>& nodes() const noexcept { return nodes_; }
    const std::multiset<DepEdge>& edges() const noexcept { return edges_; }
    const std::set<std::string>& entries() const noexcept { return entries_; }
    const std::multiset<Unresolved>& unresolved() const noexcept { return unresolved_; }
    const std::map<std::string, std::string>& pins() const noexcept { return pins_; }
    const std::vector<std::string>& warnings() const noexcept { return warnings_; }
    const std::string& digest() const noexcept { return digest_; }

    bool contains(std::string_view path) const;
    const FileNode& node(std::string_view path) const;  // LookupError
    // Version pinned for `path`, directly or through a directory pin
    // ("owlready/").
    std::optional<std::string> pinned_version(std::string_view path) const;

    bool empty() const noexcept { return nodes_.empty(); }
    bool operator==(const DependencyGraph&) const = default;

private:
    std::map<std::string, FileNode> nodes_;
    std::multiset<DepEdge> edges_;
    std::set<std::string> entries_;
    std::multiset<Unresolved> unresolved_;
    std::map<std::string, std::string> pins_;
    std::vector<std::string> warnings_;
    std::string digest_;
};

}  // namespace mereoscan::depgraph

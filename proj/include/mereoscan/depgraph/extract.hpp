// SPDX-FileCopyrightText: © 2026 The mereoscan Authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mereoscan/depgraph/graph.hpp"

namespace mereoscan::depgraph {

enum class Grammar { Python, C };

std::string_view to_string(Grammar g) noexcept;
std::optional<Grammar> parse_grammar(std::string_view s) noexcept;

// One dependency statement found in a source file, before resolution.
struct ImportStatement {
    std::size_t line;
    Mechanism mechanism;
    // Python: dotted module with leading dots for relative imports
    // ("..pkg.mod"). C: the header name as written.
    std::string target;
    // Python `from X import a, b`: the imported names. C: unused.
    std::vector<std::string> names;
    // C: true for <angle> includes.
    bool system = false;
};

struct ParseOutcome {
    std::vector<ImportStatement> statements;
    // Set when the file cannot be parsed; statements are then empty.
    std::optional<std::string> error;
};

ParseOutcome parse_python_imports(std::string_view text);
ParseOutcome parse_c_includes(std::string_view text);

inline constexpr std::string_view kManifestSchema = "edges/v1";

struct Manifest {
    std::vector<DepEdge> edges;
    std::map<std::string, std::string> pins;
    std::map<std::string, FileRole> roles;
};

// `edges/v1`: JSON Lines. The first record is {"schema": "edges/v1"};
// then one record per line, one of
//   {"from": p, "to": q, "mechanism": m, "site": s}
//   {"pin": p, "version": v}        (p ending in "/" pins a directory)
//   {"node": p, "role": r}
// Blank lines and lines starting with '#' are skipped. Raises SchemaError
// carrying the offending line.
Manifest parse_manifest(std::string_view text);

struct ExtractOptions {
    std::vector<Grammar> grammars{Grammar::Python, Grammar::C};
    std::optional<std::filesystem::path> manifest;
    // Files under the root that are not part of the tree (config files).
    std::vector<std::filesystem::path> exclude;
};

// Walks `root` (skipping dot-prefixed entries and __pycache__), adds every
// regular file as a node, runs the enabled grammars over the files they
// claim and merges the manifest. Unparseable files become nodes without
// outgoing edges plus a warning. The graph carries a SHA-256 digest of the
// scanned bytes and the manifest.
DependencyGraph extract_dependencies(const std::filesystem::path& root,
                                     const ExtractOptions& options);

}  // namespace mereoscan::depgraph

// SPDX-FileCopyrightText: © 2026 The mereoscan Authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "mereoscan/cli/config.hpp"
#include "mereoscan/depgraph/graph.hpp"

namespace mereoscan::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNotWhole = 2;
inline constexpr int kExitInputError = 3;

// Runs the command line; `args` excludes the program name. Returns the
// process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Top-level help text, as printed by --help.
std::string help_text();

// extract_dependencies plus entry-point selection under `config`.
depgraph::DependencyGraph scan_tree(const std::filesystem::path& root, const ToolConfig& config);

}  // namespace mereoscan::cli

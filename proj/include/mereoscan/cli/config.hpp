// SPDX-FileCopyrightText: © 2026 The mereoscan Authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mereoscan/classifier/probe.hpp"
#include "mereoscan/depgraph/algorithms.hpp"
#include "mereoscan/depgraph/extract.hpp"

namespace mereoscan::cli {

inline constexpr std::string_view kConfigSchema = "config/v1";
inline constexpr const char* kConfigEnv = "MEREOSCAN_CONFIG";

struct ProbeConfig {
    // The probe runs only when a command is set.
    std::optional<std::string> command;
    double timeout_s = 60.0;
    std::string success = "exit0";
    std::string pattern;
    std::map<std::string, std::filesystem::path> replace;
    std::optional<std::filesystem::path> staging_prefix;
    unsigned jobs = 1;
};

struct ToolConfig {
    std::vector<depgraph::Grammar> grammars{depgraph::Grammar::Python, depgraph::Grammar::C};
    std::optional<std::filesystem::path> manifest;
    std::optional<std::vector<std::string>> entries;
    std::string mode = "source";
    ProbeConfig probe;
    bool include_loose = false;
    bool orphans_standalone = false;
    std::size_t cycle_cap = depgraph::kDefaultCycleCap;
    // Unset: each command picks its own default.
    std::optional<std::string> format;
    // File the values came from, if any.
    std::optional<std::filesystem::path> source;

    // Raises ConfigError.
    void validate() const;
    std::optional<classifier::ProbeSpec> probe_spec() const;
};

// Reads a `config/v1` file. Relative paths inside it resolve against the
// file's directory. Raises IoError, SchemaError or ConfigError.
ToolConfig load_config(const std::filesystem::path& path);
ToolConfig parse_config(std::string_view text, const std::filesystem::path& base_dir = {});

}  // namespace mereoscan::cli

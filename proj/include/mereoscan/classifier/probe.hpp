// SPDX-FileCopyrightText: © 2026 The mereoscan Authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace mereoscan::classifier {

enum class SuccessCriterion { ExitZero, Regex };

std::string_view to_string(SuccessCriterion c) noexcept;
std::optional<SuccessCriterion> parse_success_criterion(std::string_view s) noexcept;

inline constexpr std::size_t kTranscriptCap = 64 * 1024;

// An external experiment run against a staged copy of the tree. The
// command is passed to /bin/sh with `{workspace}` replaced by the quoted
// staging directory, which is also the working directory.
struct ProbeSpec {
    std::string command;
    double timeout_s = 60.0;
    SuccessCriterion success = SuccessCriterion::ExitZero;
    // For SuccessCriterion::Regex: searched in the combined output.
    std::string pattern;
    // Where staging directories are created; system temp dir when unset.
    std::optional<std::filesystem::path> staging_prefix;
    // Concurrent probe runs.
    unsigned jobs = 1;

    // Raises ConfigError.
    void validate() const;
    // Command with the placeholder substituted. Raises ConfigError on any
    // other `{name}` placeholder left in the template.
    std::string render(const std::filesystem::path& workspace) const;
};

enum class ProbeStatus { Pass, Fail, Timeout };

std::string_view to_string(ProbeStatus s) noexcept;

struct ProbeOutcome {
    ProbeStatus status = ProbeStatus::Fail;
    // -1 when killed by a signal or never started.
    int exit_code = -1;
    // stdout and stderr interleaved, at most kTranscriptCap bytes.
    std::string transcript;
    bool truncated = false;
    std::string diagnostic;
};

ProbeOutcome run_probe(const ProbeSpec& spec, const std::filesystem::path& staged_root);

}  // namespace mereoscan::classifier

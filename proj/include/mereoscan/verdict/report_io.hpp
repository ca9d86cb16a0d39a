// SPDX-FileCopyrightText: © 2026 The mereoscan Authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "mereoscan/verdict/verdict.hpp"

namespace mereoscan::verdict {

inline constexpr std::string_view kReportSchema = "report/v1";

enum class Format { Human, Structured };

std::optional<Format> parse_format(std::string_view s) noexcept;
// Raises ConfigError for anything but "human" and "structured".
Format format_or_throw(std::string_view s);

std::string render_report(const WholenessReport& report, Format format);
// Inverse of the structured rendering. Raises SchemaError.
WholenessReport parse_report(std::string_view text);

}  // namespace mereoscan::verdict

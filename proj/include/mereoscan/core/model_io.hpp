// SPDX-FileCopyrightText: © 2026 The mereoscan Authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "mereoscan/core/model.hpp"

namespace mereoscan::core {

inline constexpr std::string_view kModelSchema = "model/v1";

// Canonical `model/v1` text: entities in id order, tuples in sorted order,
// two-space indentation, trailing newline. parse_model(print_model(m)) == m.
std::string print_model(const FiniteModel& model);

// Raises SchemaError (with line where known) on malformed text and
// ModelError when the described model breaks an invariant.
FiniteModel parse_model(std::string_view text);
FiniteModel load_model(const std::filesystem::path& path);

}  // namespace mereoscan::core

// SPDX-FileCopyrightText: © 2026 The mereoscan Authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mereoscan/classifier/participation.hpp"

namespace mereoscan::classifier {

inline constexpr std::string_view kClassifySchema = "classify/v1";

std::string print_classification(const std::vector<ParticipationClassification>& result);
// Raises SchemaError.
std::vector<ParticipationClassification> parse_classification(std::string_view text);

}  // namespace mereoscan::classifier

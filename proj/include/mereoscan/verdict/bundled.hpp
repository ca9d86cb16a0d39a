// SPDX-FileCopyrightText: © 2026 The mereoscan Authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string_view>
#include <vector>

#include "mereoscan/core/model.hpp"

namespace mereoscan::verdict {

struct BundledModel {
    std::string_view name;
    std::string_view text;
};

// Shipped `model/v1` documents:
//   module_repository   modules are members of a repository, unbound
//   object_library      object files are structural parts of a library, unbound
//   electorate          two voters bound as fellow citizens
//   single_proper_part  a whole with one proper part
const std::vector<BundledModel>& bundled_models();
// Raises LookupError for an unknown name.
core::FiniteModel load_bundled(std::string_view name);

}  // namespace mereoscan::verdict

// SPDX-FileCopyrightText: © 2026 The mereoscan Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "mereoscan/verdict/bundled.hpp"

#include <string>

#include "bundled_models.hpp"
#include "mereoscan/core/model_io.hpp"
#include "mereoscan/error.hpp"

namespace mereoscan::verdict {

const std::vector<BundledModel>& bundled_models() {
    static const std::vector<BundledModel> models{
        {"module_repository", detail::kModuleRepository},
        {"object_library", detail::kObjectLibrary},
        {"electorate", detail::kElectorate},
        {"single_proper_part", detail::kSingleProperPart},
    };
    return models;
}

core::FiniteModel load_bundled(std::string_view name) {
    for (const auto& m : bundled_models()) {
        if (m.name == name) return core::parse_model(m.text);
    }
    throw LookupError("verdict", "no bundled model named '" + std::string(name) + "'");
}

}  // namespace mereoscan::verdict

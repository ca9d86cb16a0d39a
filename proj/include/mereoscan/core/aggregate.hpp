// SPDX-FileCopyrightText: © 2026 The mereoscan Authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mereoscan/core/axioms.hpp"
#include "mereoscan/core/model.hpp"

namespace mereoscan::core {

enum class AggregateClass { FunctionalWhole, Collective, MereSet, ContingentSum };

std::string_view to_string(AggregateClass c) noexcept;
std::optional<AggregateClass> parse_aggregate_class(std::string_view s) noexcept;

// One step of the elimination procedure and whether its condition held.
struct EvidenceStep {
    std::string clause;
    bool passed;
    std::string detail;

    bool operator==(const EvidenceStep&) const = default;
};

struct AggregateClassification {
    AggregateClass cls;
    std::vector<EvidenceStep> evidence;
};

// Elimination procedure, applied in order:
//   nothing is asserted to be part of the whole and no binding tuple
//   touches it                                          -> MereSet
//   all part-whole tuples into the whole are membership and all
//   members share a declared role                       -> Collective
//   unity holds at every time the whole exists and non-contingency
//   is satisfied (intrinsic whole under B)              -> FunctionalWhole
//   otherwise                                           -> ContingentSum
// Raises LookupError when `whole` is not an entity of the model.
AggregateClassification classify_aggregate(
    const FiniteModel& model, std::string_view whole, const UnityResult& unity,
    const NonContingencyResult& noncontingency);

}  // namespace mereoscan::core

// SPDX-FileCopyrightText: © 2026 The mereoscan Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "mereoscan/core/aggregate.hpp"

#include <set>

namespace mereoscan::core {

std::string_view to_string(AggregateClass c) noexcept {
    switch (c) {
        case AggregateClass::FunctionalWhole: return "FunctionalWhole";
        case AggregateClass::Collective: return "Collective";
        case AggregateClass::MereSet: return "MereSet";
        case AggregateClass::ContingentSum: return "ContingentSum";
    }
    return "?";
}

std::optional<AggregateClass> parse_aggregate_class(std::string_view s) noexcept {
    for (auto c : {AggregateClass::FunctionalWhole, AggregateClass::Collective,
                   AggregateClass::MereSet, AggregateClass::ContingentSum}) {
        if (to_string(c) == s) return c;
    }
    return std::nullopt;
}

AggregateClassification classify_aggregate(
    const FiniteModel& model, std::string_view whole, const UnityResult& unity,
    const NonContingencyResult& noncontingency) {
    const EntityIndex w = model.index_of(whole);
    AggregateClassification out{AggregateClass::ContingentSum, {}};

    std::size_t part_tuples = 0;
    std::size_t binding_tuples = 0;
    bool membership_only = true;
    std::set<EntityIndex> members;
    std::set<TimePoint> exists_at;
    for (const auto& t : model.tuples()) {
        if (t.first == w || t.second == w) exists_at.insert(t.time);
        if (t.second == w && is_part_whole(t.kind)) {
            ++part_tuples;
            if (t.kind == RelationKind::Membership) {
                members.insert(t.first);
            } else {
                membership_only = false;
            }
        }
        if (t.kind == RelationKind::Binding && (t.first == w || t.second == w)) {
            ++binding_tuples;
        }
    }

    const bool empty = part_tuples == 0 && binding_tuples == 0;
    out.evidence.push_back(
        {"mere set: no part-whole or binding tuples into the whole", empty,
         std::to_string(part_tuples) + " part-whole, " +
             std::to_string(binding_tuples) + " binding"});
    if (empty) {
        out.cls = AggregateClass::MereSet;
        return out;
    }

    std::optional<std::string> shared_role;
    bool same_role = part_tuples > 0 && membership_only;
    for (auto m : members) {
        const auto& role = model.entity(m).role;
        if (!role || (shared_role && *shared_role != *role)) {
            same_role = false;
            break;
        }
        shared_role = role;
    }
    out.evidence.push_back(
        {"collective: members related only by membership and sharing one role",
         same_role,
         same_role ? "role '" + *shared_role + "'"
                   : (membership_only ? "members do not share a declared role"
                                      : "non-membership parts present")});
    if (same_role) {
        out.cls = AggregateClass::Collective;
        return out;
    }

    std::size_t holding = 0;
    for (auto t : exists_at) {
        if (unity.holds_for(whole, t)) ++holding;
    }
    const bool unity_always = holding == exists_at.size();
    out.evidence.push_back(
        {"functional whole: unity under " + model.binding_name() +
             " at every time the whole exists",
         unity_always,
         std::to_string(holding) + " of " + std::to_string(exists_at.size()) +
             " time points"});
    out.evidence.push_back(
        {"functional whole: non-contingency", noncontingency.sat,
         std::to_string(noncontingency.witnesses.size()) + " witness(es)"});
    if (unity_always && noncontingency.sat) {
        out.cls = AggregateClass::FunctionalWhole;
        return out;
    }

    std::string why;
    if (!unity_always) {
        why = holding == 0 ? "unity fails at every time point"
                           : "unity holds at some but not all time points";
    }
    if (!noncontingency.sat) {
        if (!why.empty()) why += "; ";
        why += "binding coincides with co-parthood";
    }
    out.evidence.push_back({"contingent sum: otherwise", true, why});
    out.cls = AggregateClass::ContingentSum;
    return out;
}

}  // namespace mereoscan::core

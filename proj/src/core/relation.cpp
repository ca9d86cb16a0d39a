// SPDX-FileCopyrightText: © 2026 The mereoscan Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "mereoscan/core/relation.hpp"

#include "mereoscan/error.hpp"

namespace mereoscan::core {

namespace {

// Direct super-kind, if any.
std::optional<RelationKind> parent(RelationKind kind) noexcept {
    switch (kind) {
        case RelationKind::GenuineFP:
        case RelationKind::ReplaceableFP:
        case RelationKind::PersistentFP:
        case RelationKind::ConstituentFP:
            return RelationKind::ProperParthood;
        case RelationKind::ProperParthood:
        case RelationKind::StructuralParthood:
        case RelationKind::Involvement:
            return RelationKind::Parthood;
        default:
            return std::nullopt;
    }
}

}  // namespace

std::string_view to_string(RelationKind kind) noexcept {
    switch (kind) {
        case RelationKind::Parthood: return "parthood";
        case RelationKind::ProperParthood: return "proper-parthood";
        case RelationKind::StructuralParthood: return "structural-parthood";
        case RelationKind::Involvement: return "involvement";
        case RelationKind::Membership: return "membership";
        case RelationKind::Constitution: return "constitution";
        case RelationKind::GenuineFP: return "genuineFP";
        case RelationKind::ReplaceableFP: return "replaceableFP";
        case RelationKind::PersistentFP: return "persistentFP";
        case RelationKind::ConstituentFP: return "constituentFP";
        case RelationKind::Binding: return "binding";
    }
    return "?";
}

std::optional<RelationKind> parse_relation_kind(std::string_view name) noexcept {
    for (auto kind : kAllRelationKinds) {
        if (to_string(kind) == name) return kind;
    }
    return std::nullopt;
}

RelationKind relation_kind_or_throw(std::string_view name) {
    if (auto kind = parse_relation_kind(name)) return *kind;
    throw ConfigError("partwhole-core",
                      "unknown relation kind '" + std::string(name) + "'");
}

bool is_subkind(RelationKind sub, RelationKind super) noexcept {
    for (std::optional<RelationKind> k = sub; k; k = parent(*k)) {
        if (*k == super) return true;
    }
    return false;
}

bool is_mereological(RelationKind kind) noexcept {
    return is_subkind(kind, RelationKind::Parthood);
}

bool is_proper(RelationKind kind) noexcept {
    return is_subkind(kind, RelationKind::ProperParthood);
}

bool is_part_whole(RelationKind kind) noexcept {
    return is_mereological(kind) || kind == RelationKind::Membership ||
           kind == RelationKind::Constitution;
}

bool counts_as(RelationKind asserted, RelationKind query) noexcept {
    if (query == RelationKind::Parthood) return is_part_whole(asserted);
    return is_subkind(asserted, query);
}

}  // namespace mereoscan::core

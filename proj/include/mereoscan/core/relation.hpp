// SPDX-FileCopyrightText: © 2026 The mereoscan Authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace mereoscan::core {

// The fixed vocabulary of part-whole and binding relations a model may
// assert. The subsumption edges between them are fixed as well:
//
//   genuineFP, replaceableFP, persistentFP, constituentFP
//       <= proper-parthood <= parthood
//   involvement <= parthood
//   structural-parthood <= parthood
//
// membership and constitution are part-whole relations outside mereology;
// binding is the unifying relation among the parts of a whole.
enum class RelationKind {
    Parthood,
    ProperParthood,
    StructuralParthood,
    Involvement,
    Membership,
    Constitution,
    GenuineFP,
    ReplaceableFP,
    PersistentFP,
    ConstituentFP,
    Binding,
};

inline constexpr std::array<RelationKind, 11> kAllRelationKinds = {
    RelationKind::Parthood,      RelationKind::ProperParthood,
    RelationKind::StructuralParthood, RelationKind::Involvement,
    RelationKind::Membership,    RelationKind::Constitution,
    RelationKind::GenuineFP,     RelationKind::ReplaceableFP,
    RelationKind::PersistentFP,  RelationKind::ConstituentFP,
    RelationKind::Binding,
};

std::string_view to_string(RelationKind kind) noexcept;

// Parses the canonical spelling ("proper-parthood", "genuineFP", ...).
std::optional<RelationKind> parse_relation_kind(std::string_view name) noexcept;

// Same as parse_relation_kind but raises ConfigError on unknown names.
RelationKind relation_kind_or_throw(std::string_view name);

// Reflexive-transitive closure of the fixed subsumption edges.
bool is_subkind(RelationKind sub, RelationKind super) noexcept;

// Kinds below parthood, including parthood itself.
bool is_mereological(RelationKind kind) noexcept;

// Kinds below proper-parthood, including proper-parthood.
bool is_proper(RelationKind kind) noexcept;

// Mereological kinds plus membership and constitution.
bool is_part_whole(RelationKind kind) noexcept;

// Whether a tuple of kind `asserted` counts as an instance of `query` when
// evaluating the unity and non-contingency conditions. Querying with
// `parthood` reads P generically, so meronymic kinds (membership,
// constitution) count as well; every other query follows is_subkind.
bool counts_as(RelationKind asserted, RelationKind query) noexcept;

}  // namespace mereoscan::core

// SPDX-FileCopyrightText: © 2026 The mereoscan Authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mereoscan/core/relation.hpp"

namespace mereoscan::core {

using EntityIndex = std::uint32_t;
using TimePoint = std::uint32_t;

struct Entity {
    std::string id;
    std::string label;
    // Granularity level; smaller is coarser. Wholes sit one level above
    // their parts.
    std::optional<int> level;
    // Free tag: file, program, module-collection, collective, process, other.
    std::string kind = "other";
    // Declared role, used to recognise collectives whose members all play
    // the same role.
    std::optional<std::string> role;
    std::set<std::string> tags;

    bool operator==(const Entity&) const = default;
};

bool is_process_like(const Entity& e);
bool is_collective(const Entity& e);

// A relation instance at one time point. Relata are indices into
// FiniteModel::entities().
struct Tuple {
    RelationKind kind;
    EntityIndex first;
    EntityIndex second;
    TimePoint time;

    auto operator<=>(const Tuple&) const = default;
};

// Immutable finite structure over which the mereological conditions are
// evaluated. Entities are sorted by id; tuples are sorted and unique.
// Built only through ModelBuilder, which enforces the invariants.
class FiniteModel {
public:
    FiniteModel();

    const std::vector<Entity>& entities() const noexcept { return entities_; }
    const std::vector<Tuple>& tuples() const noexcept { return tuples_; }
    std::size_t horizon() const noexcept { return horizon_; }
    const std::string& binding_name() const noexcept { return binding_name_; }

    std::size_t size() const noexcept { return entities_.size(); }
    const Entity& entity(EntityIndex i) const { return entities_.at(i); }
    const std::string& id(EntityIndex i) const { return entities_.at(i).id; }

    std::optional<EntityIndex> find(std::string_view id) const;
    // Raises LookupError when the id is unknown.
    EntityIndex index_of(std::string_view id) const;

    // Exact match on kind, no subsumption.
    bool has_tuple(RelationKind kind, EntityIndex first, EntityIndex second,
                   TimePoint time) const;

    // Domain/range notes found at construction (involvement between
    // non-processes, membership into non-collectives). Reported, not fatal.
    const std::vector<std::string>& warnings() const noexcept {
        return warnings_;
    }

    bool operator==(const FiniteModel& other) const;

private:
    friend class ModelBuilder;

    std::vector<Entity> entities_;
    std::vector<Tuple> tuples_;
    std::size_t horizon_ = 1;
    std::string binding_name_ = "B";
    std::unordered_map<std::string, EntityIndex> index_;
    std::vector<std::string> warnings_;
};

class ModelBuilder {
public:
    ModelBuilder& horizon(std::size_t h);
    ModelBuilder& binding_name(std::string name);

    // Raises ModelError on a duplicate id. Returns a builder-local handle.
    EntityIndex add_entity(Entity e);
    EntityIndex add_entity(std::string id, std::string kind = "other",
                           std::optional<int> level = std::nullopt);

    // Raises ModelError when either id is unknown.
    ModelBuilder& add_tuple(RelationKind kind, std::string_view first,
                            std::string_view second, TimePoint time);
    ModelBuilder& add_tuple(RelationKind kind, EntityIndex first,
                            EntityIndex second, TimePoint time);

    bool has_entity(std::string_view id) const;

    // Validates every invariant and raises ModelError listing all of the
    // violations found.
    FiniteModel build() const;

private:
    std::vector<Entity> entities_;
    std::unordered_map<std::string, EntityIndex> index_;
    std::vector<Tuple> tuples_;
    std::size_t horizon_ = 1;
    std::string binding_name_ = "B";
};

}  // namespace mereoscan::core

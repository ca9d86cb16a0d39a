// SPDX-FileCopyrightText: © 2026 The mereoscan Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "mereoscan/core/model.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mereoscan/error.hpp"

namespace mereoscan::core {

namespace {

constexpr const char* kModule = "partwhole-core";

std::string describe(const Entity& a, RelationKind kind, const Entity& b,
                     TimePoint t) {
    std::ostringstream out;
    out << to_string(kind) << "(" << a.id << ", " << b.id << ", " << t << ")";
    return out.str();
}

}  // namespace

bool is_process_like(const Entity& e) {
    return e.kind == "process" || e.tags.count("process") > 0;
}

bool is_collective(const Entity& e) {
    return e.kind == "collective" || e.kind == "module-collection" ||
           e.tags.count("collective") > 0;
}

FiniteModel::FiniteModel() = default;

std::optional<EntityIndex> FiniteModel::find(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

EntityIndex FiniteModel::index_of(std::string_view id) const {
    if (auto i = find(id)) return *i;
    throw LookupError(kModule, "unknown entity '" + std::string(id) + "'");
}

bool FiniteModel::has_tuple(RelationKind kind, EntityIndex first,
                            EntityIndex second, TimePoint time) const {
    return std::binary_search(tuples_.begin(), tuples_.end(),
                              Tuple{kind, first, second, time});
}

bool FiniteModel::operator==(const FiniteModel& other) const {
    return horizon_ == other.horizon_ &&
           binding_name_ == other.binding_name_ &&
           entities_ == other.entities_ && tuples_ == other.tuples_;
}

ModelBuilder& ModelBuilder::horizon(std::size_t h) {
    horizon_ = h;
    return *this;
}

ModelBuilder& ModelBuilder::binding_name(std::string name) {
    binding_name_ = std::move(name);
    return *this;
}

EntityIndex ModelBuilder::add_entity(Entity e) {
    if (e.id.empty()) throw ModelError(kModule, "entity with empty id");
    if (index_.count(e.id) > 0) {
        throw ModelError(kModule, "duplicate entity id '" + e.id + "'");
    }
    if (e.label.empty()) e.label = e.id;
    auto idx = static_cast<EntityIndex>(entities_.size());
    index_.emplace(e.id, idx);
    entities_.push_back(std::move(e));
    return idx;
}

EntityIndex ModelBuilder::add_entity(std::string id, std::string kind,
                                     std::optional<int> level) {
    Entity e;
    e.id = std::move(id);
    e.kind = std::move(kind);
    e.level = level;
    return add_entity(std::move(e));
}

bool ModelBuilder::has_entity(std::string_view id) const {
    return index_.count(std::string(id)) > 0;
}

ModelBuilder& ModelBuilder::add_tuple(RelationKind kind,
                                      std::string_view first,
                                      std::string_view second,
                                      TimePoint time) {
    auto a = index_.find(std::string(first));
    auto b = index_.find(std::string(second));
    if (a == index_.end() || b == index_.end()) {
        throw ModelError(kModule,
                         "tuple " + std::string(to_string(kind)) + "(" +
                             std::string(first) + ", " + std::string(second) +
                             ") refers to an unknown entity");
    }
    return add_tuple(kind, a->second, b->second, time);
}

ModelBuilder& ModelBuilder::add_tuple(RelationKind kind, EntityIndex first,
                                      EntityIndex second, TimePoint time) {
    if (first >= entities_.size() || second >= entities_.size()) {
        throw ModelError(kModule, "tuple refers to an unknown entity index");
    }
    tuples_.push_back(Tuple{kind, first, second, time});
    return *this;
}

FiniteModel ModelBuilder::build() const {
    std::vector<std::string> errors;
    if (horizon_ < 1) errors.push_back("horizon must be at least 1");

    // Entities are renumbered in id order.
    std::vector<EntityIndex> order(entities_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](EntityIndex a, EntityIndex b) {
        return entities_[a].id < entities_[b].id;
    });
    std::vector<EntityIndex> remap(entities_.size());
    FiniteModel model;
    model.horizon_ = horizon_;
    model.binding_name_ = binding_name_;
    model.entities_.reserve(entities_.size());
    for (EntityIndex i = 0; i < order.size(); ++i) {
        remap[order[i]] = i;
        model.entities_.push_back(entities_[order[i]]);
        model.index_.emplace(entities_[order[i]].id, i);
    }

    model.tuples_.reserve(tuples_.size());
    for (const auto& t : tuples_) {
        model.tuples_.push_back(
            Tuple{t.kind, remap[t.first], remap[t.second], t.time});
    }
    std::sort(model.tuples_.begin(), model.tuples_.end());
    model.tuples_.erase(
        std::unique(model.tuples_.begin(), model.tuples_.end()),
        model.tuples_.end());

    const bool levelled =
        std::any_of(model.entities_.begin(), model.entities_.end(),
                    [](const Entity& e) { return e.level.has_value(); });

    for (const auto& t : model.tuples_) {
        const Entity& a = model.entities_[t.first];
        const Entity& b = model.entities_[t.second];
        if (t.time >= horizon_) {
            errors.push_back(describe(a, t.kind, b, t.time) +
                             ": time outside horizon " +
                             std::to_string(horizon_));
        }
        if (is_proper(t.kind) && t.first == t.second) {
            errors.push_back(describe(a, t.kind, b, t.time) +
                             ": proper parthood must be irreflexive");
        }
        if (levelled && (a.level.has_value() != b.level.has_value())) {
            errors.push_back(describe(a, t.kind, b, t.time) +
                             ": relates a levelled and an unlevelled entity");
        } else if (a.level && b.level) {
            if (t.kind == RelationKind::Binding && *a.level != *b.level) {
                errors.push_back(describe(a, t.kind, b, t.time) +
                                 ": binding must relate entities at the same "
                                 "granularity level");
            } else if (is_part_whole(t.kind) && *a.level <= *b.level) {
                errors.push_back(describe(a, t.kind, b, t.time) +
                                 ": part must reside at a finer level than "
                                 "its whole");
            }
        }
        if (t.kind == RelationKind::Involvement &&
            (!is_process_like(a) || !is_process_like(b))) {
            model.warnings_.push_back(describe(a, t.kind, b, t.time) +
                                      ": involvement between non-processes");
        }
        if (t.kind == RelationKind::Membership && !is_collective(b)) {
            model.warnings_.push_back(describe(a, t.kind, b, t.time) +
                                      ": membership into a non-collective");
        }
    }

    if (!errors.empty()) {
        std::string msg = "invalid model:";
        for (const auto& e : errors) msg += "\n  " + e;
        throw ModelError(kModule, msg);
    }
    return model;
}

}  // namespace mereoscan::core

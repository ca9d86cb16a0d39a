// SPDX-FileCopyrightText: © 2026 The mereoscan Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "mereoscan/core/axioms.hpp"

#include <algorithm>

#include "bitset.hpp"
#include "mereoscan/error.hpp"

namespace mereoscan::core {

namespace {

constexpr const char* kModule = "partwhole-core";

using detail::Bits;

// Relation rows at one time point: parts_of[y] = {x : P(x,y,t)},
// wholes_of[x] = {y : P(x,y,t)}, bound[x] = {z : B(x,z,t)}.
struct Slice {
    std::vector<Bits> parts_of;
    std::vector<Bits> wholes_of;
    std::vector<Bits> bound;
};

std::vector<Slice> slice(const FiniteModel& m, RelationKind parthood,
                         RelationKind binding) {
    const auto n = m.size();
    std::vector<Slice> slices(m.horizon());
    for (auto& s : slices) {
        s.parts_of.assign(n, Bits(n));
        s.wholes_of.assign(n, Bits(n));
        s.bound.assign(n, Bits(n));
    }
    for (const auto& t : m.tuples()) {
        auto& s = slices[t.time];
        if (counts_as(t.kind, parthood)) {
            s.parts_of[t.second].set(t.first);
            s.wholes_of[t.first].set(t.second);
        }
        if (t.kind == binding) s.bound[t.first].set(t.second);
    }
    return slices;
}

void check_kinds(RelationKind parthood, RelationKind binding) {
    if (!is_part_whole(parthood)) {
        throw ConfigError(kModule, std::string(to_string(parthood)) +
                                       " is not a part-whole relation");
    }
    if (binding != RelationKind::Binding) {
        throw ConfigError(kModule, std::string(to_string(binding)) +
                                       " is not a binding relation");
    }
}

}  // namespace

std::string_view to_string(UnityDirection d) noexcept {
    return d == UnityDirection::Forward ? "->" : "<-";
}

std::string_view to_string(WitnessKind k) noexcept {
    return k == WitnessKind::BoundWithoutCommonWhole
               ? "bound-without-common-whole"
               : "common-whole-without-binding";
}

bool UnityResult::holds_for(std::string_view whole, TimePoint time) const {
    for (const auto& c : checked) {
        if (c.whole == whole && c.time == time) return c.holds;
    }
    return true;
}

std::vector<UnityCounterexample> UnityResult::counterexamples_for(
    std::string_view whole) const {
    std::vector<UnityCounterexample> out;
    for (const auto& c : counterexamples) {
        if (c.whole == whole) out.push_back(c);
    }
    return out;
}

UnityResult eval_unity(const FiniteModel& model, RelationKind parthood,
                       RelationKind binding) {
    check_kinds(parthood, binding);
    UnityResult result;
    result.parthood = parthood;
    result.binding = binding;

    const auto n = model.size();
    auto slices = slice(model, parthood, binding);
    for (TimePoint t = 0; t < slices.size(); ++t) {
        const auto& s = slices[t];
        for (EntityIndex y = 0; y < n; ++y) {
            const Bits& parts = s.parts_of[y];
            if (parts.none()) continue;
            bool holds = true;
            parts.for_each([&](std::size_t x) {
                Bits bound = s.bound[x];
                bound.set(x);  // reflexive convention
                (parts ^ bound).for_each([&](std::size_t z) {
                    holds = false;
                    result.counterexamples.push_back(UnityCounterexample{
                        model.id(static_cast<EntityIndex>(x)), model.id(y),
                        model.id(static_cast<EntityIndex>(z)), t,
                        parts.test(z) ? UnityDirection::Forward
                                      : UnityDirection::Backward});
                });
            });
            result.checked.push_back(WholeAtTime{model.id(y), t, holds});
        }
    }
    std::sort(result.counterexamples.begin(), result.counterexamples.end());
    std::sort(result.checked.begin(), result.checked.end());
    result.sat = result.counterexamples.empty();
    return result;
}

UnityResult eval_unity(const FiniteModel& model, std::string_view parthood,
                       std::string_view binding) {
    return eval_unity(model, relation_kind_or_throw(parthood),
                      relation_kind_or_throw(binding));
}

NonContingencyResult eval_noncontingency(const FiniteModel& model,
                                         RelationKind parthood,
                                         RelationKind binding) {
    check_kinds(parthood, binding);
    NonContingencyResult result;
    result.parthood = parthood;
    result.binding = binding;

    const auto n = model.size();
    auto slices = slice(model, parthood, binding);
    for (TimePoint t = 0; t < slices.size(); ++t) {
        const auto& s = slices[t];
        for (EntityIndex x = 0; x < n; ++x) {
            // co_parts = {z : exists y. P(x,y,t) and P(z,y,t)}
            Bits co_parts(n);
            s.wholes_of[x].for_each(
                [&](std::size_t y) { co_parts |= s.parts_of[y]; });
            (co_parts ^ s.bound[x]).for_each([&](std::size_t z) {
                if (z == x) return;
                result.witnesses.push_back(NonContingencyWitness{
                    model.id(x), model.id(static_cast<EntityIndex>(z)), t,
                    s.bound[x].test(z) ? WitnessKind::BoundWithoutCommonWhole
                                       : WitnessKind::CommonWholeWithoutBinding});
            });
        }
    }
    std::sort(result.witnesses.begin(), result.witnesses.end());
    result.sat = !result.witnesses.empty();
    return result;
}

NonContingencyResult eval_noncontingency(const FiniteModel& model,
                                         std::string_view parthood,
                                         std::string_view binding) {
    return eval_noncontingency(model, relation_kind_or_throw(parthood),
                               relation_kind_or_throw(binding));
}

std::vector<SupplementationViolation> check_weak_supplementation(
    const FiniteModel& model) {
    const auto n = model.size();
    std::vector<SupplementationViolation> out;
    for (TimePoint t = 0; t < model.horizon(); ++t) {
        // proper_parts[y] = {x : PP(x,y,t)}; reflexive_parts[x] = {w : P(w,x,t)} + {x}
        std::vector<Bits> proper_parts(n, Bits(n));
        std::vector<Bits> reflexive_parts(n, Bits(n));
        bool any = false;
        for (EntityIndex i = 0; i < n; ++i) reflexive_parts[i].set(i);
        for (const auto& tup : model.tuples()) {
            if (tup.time != t || !is_mereological(tup.kind)) continue;
            reflexive_parts[tup.second].set(tup.first);
            if (is_proper(tup.kind)) {
                proper_parts[tup.second].set(tup.first);
                any = true;
            }
        }
        if (!any) continue;
        for (EntityIndex y = 0; y < n; ++y) {
            const Bits& pp = proper_parts[y];
            pp.for_each([&](std::size_t x) {
                bool supplemented = false;
                pp.for_each([&](std::size_t z) {
                    if (!supplemented &&
                        !reflexive_parts[z].intersects(reflexive_parts[x])) {
                        supplemented = true;
                    }
                });
                if (!supplemented) {
                    out.push_back(SupplementationViolation{
                        model.id(static_cast<EntityIndex>(x)), model.id(y), t});
                }
            });
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace mereoscan::core

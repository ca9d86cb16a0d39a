// SPDX-FileCopyrightText: © 2026 The mereoscan Authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mereoscan/core/model.hpp"

namespace mereoscan::core {

// Which half of the unity biconditional failed for a quadruple (x,y,z,t):
//   Forward:  P(z,y,t) holds but B(x,z,t) does not  ("->")
//   Backward: B(x,z,t) holds but P(z,y,t) does not  ("<-")
enum class UnityDirection { Forward, Backward };

std::string_view to_string(UnityDirection d) noexcept;

struct UnityCounterexample {
    std::string part;   // x
    std::string whole;  // y
    std::string other;  // z
    TimePoint time;
    UnityDirection direction;

    auto operator<=>(const UnityCounterexample&) const = default;
};

// Per-whole, per-time outcome, recorded for every whole that has at least
// one part at that time.
struct WholeAtTime {
    std::string whole;
    TimePoint time;
    bool holds;

    auto operator<=>(const WholeAtTime&) const = default;
};

struct UnityResult {
    bool sat = true;
    RelationKind parthood = RelationKind::Parthood;
    RelationKind binding = RelationKind::Binding;
    std::vector<UnityCounterexample> counterexamples;
    std::vector<WholeAtTime> checked;

    // Vacuously true when the whole has no parts at `time`.
    bool holds_for(std::string_view whole, TimePoint time) const;
    std::vector<UnityCounterexample> counterexamples_for(
        std::string_view whole) const;
};

// The unity condition
//
//   forall x,y,z,t: P(x,y,t) -> (P(z,y,t) <-> B(x,z,t))
//
// evaluated by exhaustive enumeration. B is read reflexively: B(x,x,t)
// holds implicitly, so a whole with a single part satisfies unity.
// `parthood` must be a part-whole kind and `binding` must be `binding`;
// anything else raises ConfigError.
UnityResult eval_unity(const FiniteModel& model, RelationKind parthood,
                       RelationKind binding = RelationKind::Binding);
UnityResult eval_unity(const FiniteModel& model, std::string_view parthood,
                       std::string_view binding = "binding");

enum class WitnessKind {
    BoundWithoutCommonWhole,  // B(x,z,t) but no y with P(x,y,t), P(z,y,t)
    CommonWholeWithoutBinding,
};

std::string_view to_string(WitnessKind k) noexcept;

struct NonContingencyWitness {
    std::string first;
    std::string second;
    TimePoint time;
    WitnessKind kind;

    auto operator<=>(const NonContingencyWitness&) const = default;
};

struct NonContingencyResult {
    bool sat = false;
    RelationKind parthood = RelationKind::Parthood;
    RelationKind binding = RelationKind::Binding;
    std::vector<NonContingencyWitness> witnesses;
};

// The non-contingency condition
//
//   not forall x,z,t: B(x,z,t) <-> exists y (P(x,y,t) and P(z,y,t))
//
// Satisfied iff some pair breaks the biconditional; every such pair is
// returned. Pairs with x = z are skipped: both sides hold there by the
// reflexive convention.
NonContingencyResult eval_noncontingency(
    const FiniteModel& model, RelationKind parthood,
    RelationKind binding = RelationKind::Binding);
NonContingencyResult eval_noncontingency(const FiniteModel& model,
                                         std::string_view parthood,
                                         std::string_view binding = "binding");

struct SupplementationViolation {
    std::string part;
    std::string whole;
    TimePoint time;

    auto operator<=>(const SupplementationViolation&) const = default;
};

// Weak supplementation: every PP(x,y,t) needs some z with PP(z,y,t) and z
// not overlapping x. Overlap is read off the explicit mereological tuples
// at t with reflexive closure: O(z,x) iff some w has P(w,z,t) and P(w,x,t).
std::vector<SupplementationViolation> check_weak_supplementation(
    const FiniteModel& model);

}  // namespace mereoscan::core

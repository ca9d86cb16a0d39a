// SPDX-FileCopyrightText: © 2026 The mereoscan Authors
//
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "mereoscan/core/aggregate.hpp"
#include "mereoscan/error.hpp"
#include "mereoscan/verdict/bundled.hpp"
#include "mereoscan/verdict/verdict.hpp"
#include "support.hpp"

using namespace mereoscan;
using namespace mereoscan::core;
using K = RelationKind;

namespace {

AggregateClassification classify(const FiniteModel& m, std::string_view whole,
                                 const FiniteModel* nc_model = nullptr) {
    return classify_aggregate(m, whole, eval_unity(m, K::Parthood),
                              eval_noncontingency(nc_model ? *nc_model : m, K::Parthood));
}

}  // namespace

TEST(Aggregate, UnrelatedThingsAreAMereSet) {
    ModelBuilder b;
    b.add_entity("left-foot");
    b.add_entity("laptop");
    const auto m = b.build();
    auto c = classify(m, "laptop");
    EXPECT_EQ(c.cls, AggregateClass::MereSet);
    ASSERT_EQ(c.evidence.size(), 1u);
    EXPECT_TRUE(c.evidence.front().passed);
}

TEST(Aggregate, RepositoryOfModulesIsACollective) {
    const auto repo = verdict::load_bundled("module_repository");
    auto c = classify(repo, "repo");
    EXPECT_EQ(c.cls, AggregateClass::Collective);
    EXPECT_EQ(c.evidence.back().detail, "role 'module'");
}

TEST(Aggregate, MembersWithoutASharedRoleAreNoCollective) {
    ModelBuilder b;
    b.add_entity("repo", "collective");
    Entity m1{"m1", "m1", std::nullopt, "file", std::string("module"), {}};
    Entity m2{"m2", "m2", std::nullopt, "file", std::string("plugin"), {}};
    b.add_entity(m1);
    b.add_entity(m2);
    b.add_tuple(K::Membership, "m1", "repo", 0).add_tuple(K::Membership, "m2", "repo", 0);
    const auto m = b.build();
    auto c = classify(m, "repo");
    EXPECT_EQ(c.cls, AggregateClass::ContingentSum);
    EXPECT_FALSE(c.evidence[1].passed);
}

TEST(Aggregate, BoundPartsWithAWitnessFormAFunctionalWhole) {
    const auto e = verdict::load_bundled("electorate");
    // Alone, binding coincides with co-parthood.
    auto alone = classify(e, "electorate");
    EXPECT_EQ(alone.cls, AggregateClass::ContingentSum);
    EXPECT_EQ(alone.evidence.back().detail, "binding coincides with co-parthood");
    // The repository supplies the witness.
    const auto ext = verdict::extend_model(e, verdict::load_bundled("module_repository"), "x:");
    auto c = classify(e, "electorate", &ext);
    EXPECT_EQ(c.cls, AggregateClass::FunctionalWhole);
}

TEST(Aggregate, UnityAtSomeTimesOnlyIsContingent) {
    ModelBuilder b;
    b.horizon(2);
    for (auto id : {"w", "a", "b"}) b.add_entity(id);
    for (unsigned t : {0u, 1u}) b.add_tuple(K::GenuineFP, "a", "w", t).add_tuple(K::GenuineFP, "b", "w", t);
    b.add_tuple(K::Binding, "a", "b", 0).add_tuple(K::Binding, "b", "a", 0);
    const auto m = b.build();
    const auto ext = verdict::extend_model(m, verdict::load_bundled("module_repository"), "x:");
    auto c = classify(m, "w", &ext);
    EXPECT_EQ(c.cls, AggregateClass::ContingentSum);
    EXPECT_EQ(c.evidence.back().detail, "unity holds at some but not all time points");
}

TEST(Aggregate, UnknownWholeRaises) {
    const auto m = verdict::load_bundled("electorate");
    EXPECT_THROW(classify(m, "parliament"), LookupError);
}

TEST(Aggregate, TotalWithEvidenceOnRandomModels) {
    std::mt19937 rng(21);
    for (int i = 0; i < 300; ++i) {
        const auto m = support::random_model(rng);
        for (const auto& e : m.entities()) {
            auto c = classify(m, e.id);
            ASSERT_FALSE(c.evidence.empty());
            EXPECT_EQ(parse_aggregate_class(to_string(c.cls)), c.cls);
            for (const auto& step : c.evidence) EXPECT_FALSE(step.clause.empty());
        }
    }
}

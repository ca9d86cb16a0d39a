// SPDX-FileCopyrightText: © 2026 The mereoscan Authors
//
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "mereoscan/depgraph/extract.hpp"
#include "mereoscan/depgraph/graph_io.hpp"
#include "mereoscan/error.hpp"
#include "support.hpp"

using namespace mereoscan;
using namespace mereoscan::depgraph;

namespace {

DependencyGraph ivo() {
    ExtractOptions o;
    o.manifest = support::fixture_dir() / "ivo" / "edges.jsonl";
    auto g = extract_dependencies(support::fixture_dir() / "ivo" / "tree", o);
    g.set_entries({"main.py"});
    return g;
}

}  // namespace

TEST(GraphIo, IvoRoundTrip) {
    const auto g = ivo();
    const auto a = analyse(g);
    const auto text = print_graph(g, a);
    const auto doc = parse_graph(text);
    EXPECT_EQ(doc.graph, g);
    ASSERT_TRUE(doc.analysis);
    EXPECT_EQ(*doc.analysis, a);
    EXPECT_EQ(print_graph(doc.graph, doc.analysis), text);
}

TEST(GraphIo, AnalysisIsOptional) {
    const auto doc = parse_graph(print_graph(ivo()));
    EXPECT_FALSE(doc.analysis);
    EXPECT_EQ(doc.graph, ivo());
}

TEST(GraphIo, AnalysisOfIvo) {
    const auto a = analyse(ivo());
    EXPECT_TRUE(a.cycles.cycles.empty());
    EXPECT_EQ(a.orphans, std::set<std::string>{"scratch.txt"});
    EXPECT_EQ(a.components.size(), 2u);
}

TEST(GraphIo, RandomRoundTrips) {
    std::mt19937 rng(41);
    for (int i = 0; i < 50; ++i) {
        auto g = support::random_graph(rng, 1 + i % 12, 0.2);
        g.set_entries({"f0.py"});
        g.add_pin("f0.py", "1." + std::to_string(i));
        g.add_warning("w" + std::to_string(i));
        const auto a = analyse(g, 5);
        const auto doc = parse_graph(print_graph(g, a));
        ASSERT_EQ(doc.graph, g);
        ASSERT_EQ(*doc.analysis, a);
    }
}

TEST(GraphIo, KeysInFixedOrder) {
    const auto text = print_graph(ivo(), analyse(ivo()));
    std::vector<std::size_t> at;
    for (const char* k : {"\"schema\"", "\"digest\"", "\"entries\"", "\"nodes\"", "\"edges\"", "\"unresolved\"",
                          "\"pins\"", "\"warnings\"", "\"analysis\""}) {
        at.push_back(text.find(k));
        ASSERT_NE(at.back(), std::string::npos) << k;
    }
    EXPECT_TRUE(std::is_sorted(at.begin(), at.end()));
}

TEST(GraphIo, SchemaErrors) {
    EXPECT_THROW(parse_graph("{"), SchemaError);
    EXPECT_THROW(parse_graph("[]"), SchemaError);
    EXPECT_THROW(parse_graph(R"({"schema":"graph/v2","nodes":[],"edges":[],"entries":[]})"), SchemaError);
    EXPECT_THROW(parse_graph(R"({"schema":"graph/v1","edges":[],"entries":[]})"), SchemaError);
    EXPECT_THROW(parse_graph(R"({"schema":"graph/v1","nodes":[{"path":"a","role":"wizard","grammar":"none"}],
                                 "edges":[],"entries":[]})"),
                 SchemaError);
    EXPECT_THROW(parse_graph(R"({"schema":"graph/v1","nodes":[{"path":"a","role":"source","grammar":"none"}],
                                 "edges":[{"from":"a","to":"b","mechanism":"import","site":"1"}],"entries":[]})"),
                 SchemaError);
    EXPECT_THROW(parse_graph(R"({"schema":"graph/v1","nodes":[],"edges":[],"entries":["ghost"]})"), SchemaError);
    try {
        parse_graph("{\n\"schema\": \"graph/v1\",\n\"nodes\": [,]\n}");
        FAIL();
    } catch (const SchemaError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
}

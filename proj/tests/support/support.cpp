// SPDX-FileCopyrightText: © 2026 The mereoscan Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "support.hpp"

#include <stdlib.h>

#include <fstream>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "mereoscan/core/relation.hpp"

namespace support {

using namespace mereoscan;

fs::path fixture_dir() { return MEREOSCAN_FIXTURE_DIR; }
fs::path model_dir() { return MEREOSCAN_MODEL_DIR; }
fs::path tool_path() { return MEREOSCAN_TOOL; }

TempDir::TempDir() {
    std::string tmpl = (fs::temp_directory_path() / "mereoscan-test-XXXXXX").string();
    if (!mkdtemp(tmpl.data())) throw std::runtime_error("mkdtemp failed");
    path_ = tmpl;
}

TempDir::~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
}

std::string read(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + p.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write(const fs::path& p, const std::string& text) {
    fs::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary);
    out << text;
}

void make_stripped_tree(const fs::path& dest) {
    const auto src = fixture_dir() / "ivo" / "tree";
    fs::copy(src, dest, fs::copy_options::recursive);
    static const std::regex import_line(R"(^\s*(import|from)\s)");
    for (const auto& e : fs::recursive_directory_iterator(dest)) {
        if (e.path().extension() != ".py") continue;
        std::istringstream in(read(e.path()));
        std::string out, line;
        while (std::getline(in, line)) {
            if (!std::regex_search(line, import_line)) out += line + "\n";
        }
        write(e.path(), out);
    }
}

core::FiniteModel random_model(std::mt19937& rng, int max_entities, int max_horizon) {
    std::uniform_int_distribution<int> n_dist(1, max_entities);
    std::uniform_int_distribution<int> h_dist(1, max_horizon);
    const int n = n_dist(rng);
    const int h = h_dist(rng);
    core::ModelBuilder b;
    b.horizon(h);
    for (int i = 0; i < n; ++i) b.add_entity("e" + std::to_string(i));

    // Bias towards the kinds the conditions read.
    static const std::vector<core::RelationKind> kinds{
        core::RelationKind::Parthood,   core::RelationKind::ProperParthood, core::RelationKind::GenuineFP,
        core::RelationKind::Membership, core::RelationKind::Binding,        core::RelationKind::Binding,
        core::RelationKind::Binding,    core::RelationKind::StructuralParthood,
        core::RelationKind::Constitution, core::RelationKind::Involvement,
    };
    std::uniform_int_distribution<int> count_dist(0, 3 * n);
    std::uniform_int_distribution<int> ent(0, n - 1);
    std::uniform_int_distribution<int> time(0, h - 1);
    std::uniform_int_distribution<std::size_t> kind(0, kinds.size() - 1);
    const int count = count_dist(rng);
    for (int i = 0; i < count; ++i) {
        const auto k = kinds[kind(rng)];
        const auto x = static_cast<core::EntityIndex>(ent(rng));
        const auto y = static_cast<core::EntityIndex>(ent(rng));
        if (x == y && core::is_proper(k)) continue;
        b.add_tuple(k, x, y, static_cast<core::TimePoint>(time(rng)));
    }
    return b.build();
}

depgraph::DependencyGraph random_graph(std::mt19937& rng, int n, double edge_p) {
    depgraph::DependencyGraph g;
    for (int i = 0; i < n; ++i) {
        g.add_node({"f" + std::to_string(i) + ".py", depgraph::FileRole::Source, "python"});
    }
    static const std::vector<depgraph::Mechanism> mechs{
        depgraph::Mechanism::Import, depgraph::Mechanism::Import, depgraph::Mechanism::DataRead,
        depgraph::Mechanism::Link,   depgraph::Mechanism::Socket,
    };
    std::bernoulli_distribution edge(edge_p);
    std::uniform_int_distribution<std::size_t> mech(0, mechs.size() - 1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b || !edge(rng)) continue;
            g.add_edge({"f" + std::to_string(a) + ".py", "f" + std::to_string(b) + ".py", mechs[mech(rng)],
                        std::to_string(a)});
        }
    return g;
}

std::vector<classifier::ParticipationClassification> random_classes(std::mt19937& rng,
                                                                    const depgraph::DependencyGraph& graph,
                                                                    double optional_p) {
    std::bernoulli_distribution optional(optional_p);
    std::vector<classifier::ParticipationClassification> out;
    for (const auto& [path, node] : graph.nodes()) {
        out.push_back({path, optional(rng) ? classifier::Mode::Optional : classifier::Mode::Mandatory,
                       classifier::Basis::GraphOnly, {}});
    }
    return out;
}

depgraph::DependencyGraph graph_from_matrix(int n, const std::vector<std::vector<bool>>& adj) {
    depgraph::DependencyGraph g;
    for (int i = 0; i < n; ++i) g.add_node({"v" + std::to_string(i), depgraph::FileRole::Source, "python"});
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (adj[a][b]) {
                g.add_edge({"v" + std::to_string(a), "v" + std::to_string(b), depgraph::Mechanism::Import, "1"});
            }
    return g;
}

core::FiniteModel without_tuple(const core::FiniteModel& model, const core::Tuple& drop) {
    core::ModelBuilder b;
    b.horizon(model.horizon()).binding_name(model.binding_name());
    for (const auto& e : model.entities()) b.add_entity(e);
    for (const auto& t : model.tuples()) {
        if (t != drop) b.add_tuple(t.kind, model.id(t.first), model.id(t.second), t.time);
    }
    return b.build();
}

}  // namespace support

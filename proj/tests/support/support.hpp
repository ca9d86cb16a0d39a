// SPDX-FileCopyrightText: © 2026 The mereoscan Authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "mereoscan/classifier/participation.hpp"
#include "mereoscan/core/model.hpp"
#include "mereoscan/depgraph/graph.hpp"

namespace support {

namespace fs = std::filesystem;

fs::path fixture_dir();  // tests/fixtures
fs::path model_dir();    // data/models
fs::path tool_path();    // the built mereoscan binary

// A fresh directory removed on destruction.
class TempDir {
public:
    TempDir();
    ~TempDir();
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;
    const fs::path& path() const { return path_; }

private:
    fs::path path_;
};

std::string read(const fs::path& p);
void write(const fs::path& p, const std::string& text);

// Copy of the IVO tree with every import statement removed.
void make_stripped_tree(const fs::path& dest);

// Random model: up to `max_entities` unlevelled entities, horizon up to
// `max_horizon`, tuples of random kinds.
mereoscan::core::FiniteModel random_model(std::mt19937& rng, int max_entities = 6, int max_horizon = 3);

// Random dependency graph over n files with mixed mechanisms.
mereoscan::depgraph::DependencyGraph random_graph(std::mt19937& rng, int n, double edge_p);

// Random modes, a fraction of them optional.
std::vector<mereoscan::classifier::ParticipationClassification> random_classes(
    std::mt19937& rng, const mereoscan::depgraph::DependencyGraph& graph, double optional_p);

// Digraph on vertices "v0".."v{n-1}" with import edges from a matrix.
mereoscan::depgraph::DependencyGraph graph_from_matrix(int n, const std::vector<std::vector<bool>>& adj);

// Copy of `model` without one tuple.
mereoscan::core::FiniteModel without_tuple(const mereoscan::core::FiniteModel& model,
                                           const mereoscan::core::Tuple& drop);

}  // namespace support

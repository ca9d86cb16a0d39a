// SPDX-FileCopyrightText: © 2026 The mereoscan Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "mereoscan/depgraph/algorithms.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <unordered_map>

#include "mereoscan/error.hpp"

namespace mereoscan::depgraph {

namespace {

// Dense view of a graph: nodes numbered in path order, with sorted,
// de-duplicated adjacency lists.
struct Index {
    std::vector<std::string> paths;
    std::unordered_map<std::string, std::size_t> id;
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::vector<std::size_t>> undirected;

    template <class Pred>
    Index(const DependencyGraph& g, Pred keep) {
        for (const auto& [path, node] : g.nodes()) {
            id.emplace(path, paths.size());
            paths.push_back(path);
        }
        out.resize(paths.size());
        undirected.resize(paths.size());
        for (const auto& e : g.edges()) {
            if (!keep(e.mechanism)) continue;
            auto a = id.at(e.from), b = id.at(e.to);
            out[a].push_back(b);
            undirected[a].push_back(b);
            undirected[b].push_back(a);
        }
        for (auto* lists : {&out, &undirected}) {
            for (auto& l : *lists) {
                std::sort(l.begin(), l.end());
                l.erase(std::unique(l.begin(), l.end()), l.end());
            }
        }
    }
};

Index coupling_index(const DependencyGraph& g, const CouplingPolicy& policy) {
    return Index(g, [&](Mechanism m) { return policy.counts(m); });
}

std::vector<bool> reach(const std::vector<std::vector<std::size_t>>& adj,
                        const std::vector<std::size_t>& seeds) {
    std::vector<bool> seen(adj.size(), false);
    std::deque<std::size_t> queue;
    for (auto s : seeds) {
        if (!seen[s]) {
            seen[s] = true;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        for (auto w : adj[v]) {
            if (!seen[w]) {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    return seen;
}

std::vector<std::size_t> seeds_of(const Index& idx, const std::set<std::string>& entries) {
    std::vector<std::size_t> seeds;
    for (const auto& e : entries) {
        auto it = idx.id.find(e);
        if (it == idx.id.end()) {
            throw LookupError("depgraph", "entry '" + e + "' is not in the graph");
        }
        seeds.push_back(it->second);
    }
    return seeds;
}

// Johnson's elementary circuit search.
class CircuitFinder {
public:
    CircuitFinder(const std::vector<std::vector<std::size_t>>& adj, std::size_t cap)
        : adj_(adj), cap_(cap), blocked_(adj.size()), b_(adj.size()) {}

    void run() {
        const auto n = adj_.size();
        for (std::size_t s = 0; s < n && !done_; ++s) {
            auto comp = component_of(s);
            if (comp.size() < 2) continue;
            in_comp_.assign(n, false);
            for (auto v : comp) {
                in_comp_[v] = true;
                blocked_[v] = false;
                b_[v].clear();
            }
            start_ = s;
            circuit(s);
        }
    }

    std::vector<std::vector<std::size_t>> cycles;
    bool truncated = false;

private:
    // Strongly connected component containing s in the subgraph of
    // vertices >= s (Tarjan).
    std::vector<std::size_t> component_of(std::size_t s) {
        const auto n = adj_.size();
        std::vector<long> index(n, -1), low(n, 0);
        std::vector<bool> on_stack(n, false);
        std::vector<std::size_t> stack;
        std::vector<std::size_t> result;
        long counter = 0;
        std::function<void(std::size_t)> strong = [&](std::size_t v) {
            index[v] = low[v] = counter++;
            stack.push_back(v);
            on_stack[v] = true;
            for (auto w : adj_[v]) {
                if (w < s) continue;
                if (index[w] < 0) {
                    strong(w);
                    low[v] = std::min(low[v], low[w]);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
            }
            if (low[v] == index[v]) {
                std::vector<std::size_t> comp;
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp.push_back(w);
                } while (w != v);
                if (std::find(comp.begin(), comp.end(), s) != comp.end()) {
                    result = std::move(comp);
                }
            }
        };
        strong(s);
        return result;
    }

    void unblock(std::size_t u) {
        blocked_[u] = false;
        while (!b_[u].empty()) {
            auto w = b_[u].back();
            b_[u].pop_back();
            if (blocked_[w]) unblock(w);
        }
    }

    bool circuit(std::size_t v) {
        bool found = false;
        path_.push_back(v);
        blocked_[v] = true;
        for (auto w : adj_[v]) {
            if (done_) break;
            if (!in_comp_[w]) continue;
            if (w == start_) {
                if (cycles.size() == cap_) {
                    truncated = true;
                    done_ = true;
                    break;
                }
                cycles.push_back(path_);
                found = true;
            } else if (!blocked_[w] && circuit(w)) {
                found = true;
            }
        }
        if (found) {
            unblock(v);
        } else {
            for (auto w : adj_[v]) {
                if (!in_comp_[w]) continue;
                if (std::find(b_[w].begin(), b_[w].end(), v) == b_[w].end()) {
                    b_[w].push_back(v);
                }
            }
        }
        path_.pop_back();
        return found;
    }

    const std::vector<std::vector<std::size_t>>& adj_;
    std::size_t cap_;
    std::vector<bool> blocked_;
    std::vector<std::vector<std::size_t>> b_;
    std::vector<bool> in_comp_;
    std::vector<std::size_t> path_;
    std::size_t start_ = 0;
    bool done_ = false;
};

}  // namespace

std::set<std::string> find_entry_points(const DependencyGraph& graph,
                                        const std::optional<std::vector<std::string>>& declared,
                                        const std::set<FileRole>& roles) {
    if (declared) {
        std::set<std::string> out;
        for (const auto& raw : *declared) {
            auto norm = normalize_path(raw);
            if (!norm || !graph.contains(*norm)) {
                throw ConfigError("depgraph", "declared entry '" + raw + "' is not in the graph");
            }
            out.insert(*norm);
        }
        return out;
    }
    std::set<std::string> has_incoming;
    for (const auto& e : graph.edges()) {
        if (e.mechanism == Mechanism::Import || e.mechanism == Mechanism::Include ||
            e.mechanism == Mechanism::Link) {
            has_incoming.insert(e.to);
        }
    }
    std::set<std::string> out;
    for (const auto& [path, node] : graph.nodes()) {
        if (roles.count(node.role) > 0 && has_incoming.count(path) == 0) out.insert(path);
    }
    return out;
}

CycleReport detect_cycles(const DependencyGraph& graph, std::size_t cap) {
    Index idx(graph, [](Mechanism m) {
        return m == Mechanism::Import || m == Mechanism::Include;
    });
    CircuitFinder finder(idx.out, cap);
    finder.run();
    CycleReport report;
    report.truncated = finder.truncated;
    for (const auto& c : finder.cycles) {
        std::vector<std::string> named;
        named.reserve(c.size());
        for (auto v : c) named.push_back(idx.paths[v]);
        report.cycles.push_back(std::move(named));
    }
    std::sort(report.cycles.begin(), report.cycles.end());
    return report;
}

std::set<std::string> detect_orphans(const DependencyGraph& graph,
                                     const std::set<std::string>& entries,
                                     const CouplingPolicy& policy) {
    auto idx = coupling_index(graph, policy);
    auto seen = reach(idx.undirected, seeds_of(idx, entries));
    std::set<std::string> out;
    for (std::size_t v = 0; v < idx.paths.size(); ++v) {
        if (!seen[v]) out.insert(idx.paths[v]);
    }
    return out;
}

std::set<std::string> forward_reachable(const DependencyGraph& graph,
                                        const std::set<std::string>& entries,
                                        const CouplingPolicy& policy) {
    auto idx = coupling_index(graph, policy);
    auto seen = reach(idx.out, seeds_of(idx, entries));
    std::set<std::string> out;
    for (std::size_t v = 0; v < idx.paths.size(); ++v) {
        if (seen[v]) out.insert(idx.paths[v]);
    }
    return out;
}

bool sc_graph_path(const DependencyGraph& graph, const std::string& a,
                   const std::string& b, const CouplingPolicy& policy) {
    graph.node(a);
    graph.node(b);
    if (a == b) return true;
    auto idx = coupling_index(graph, policy);
    return reach(idx.undirected, {idx.id.at(a)})[idx.id.at(b)];
}

std::vector<std::vector<std::string>> connected_components(const DependencyGraph& graph,
                                                           const CouplingPolicy& policy) {
    auto idx = coupling_index(graph, policy);
    const auto n = idx.paths.size();
    std::vector<bool> assigned(n, false);
    std::vector<std::vector<std::string>> out;
    // Nodes are visited in path order, so components come out ordered by
    // their smallest member.
    for (std::size_t v = 0; v < n; ++v) {
        if (assigned[v]) continue;
        std::vector<std::size_t> members{v};
        assigned[v] = true;
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (auto w : idx.undirected[members[i]]) {
                if (!assigned[w]) {
                    assigned[w] = true;
                    members.push_back(w);
                }
            }
        }
        std::sort(members.begin(), members.end());
        std::vector<std::string> comp;
        comp.reserve(members.size());
        for (auto w : members) comp.push_back(idx.paths[w]);
        out.push_back(std::move(comp));
    }
    return out;
}

}  // namespace mereoscan::depgraph

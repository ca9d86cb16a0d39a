// SPDX-FileCopyrightText: © 2026 The mereoscan Authors
//
// SPDX-License-Identifier: Apache-2.0

// Prints one PASS/FAIL line per acceptance criterion. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mereoscan/classifier/participation.hpp"
#include "mereoscan/cli/app.hpp"
#include "mereoscan/core/aggregate.hpp"
#include "mereoscan/core/axioms.hpp"
#include "mereoscan/core/model_io.hpp"
#include "mereoscan/depgraph/algorithms.hpp"
#include "mereoscan/verdict/bundled.hpp"
#include "mereoscan/verdict/report_io.hpp"
#include "mereoscan/verdict/verdict.hpp"
#include "oracles.hpp"
#include "support.hpp"

namespace {

using namespace mereoscan;
namespace fs = std::filesystem;
using K = core::RelationKind;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && pass) {
            pass = false;
            detail = what;
        }
    }
};

std::set<oracle::UnityCase> unity_cases(const core::UnityResult& r) {
    std::set<oracle::UnityCase> out;
    for (const auto& c : r.counterexamples) {
        out.emplace(c.part, c.whole, c.other, c.time, c.direction == core::UnityDirection::Forward);
    }
    return out;
}

std::set<oracle::NcCase> nc_cases(const core::NonContingencyResult& r) {
    std::set<oracle::NcCase> out;
    for (const auto& w : r.witnesses) {
        out.emplace(w.first, w.second, w.time, w.kind == core::WitnessKind::BoundWithoutCommonWhole);
    }
    return out;
}

std::set<oracle::WsCase> ws_cases(const std::vector<core::SupplementationViolation>& v) {
    std::set<oracle::WsCase> out;
    for (const auto& x : v) out.emplace(x.part, x.whole, x.time);
    return out;
}

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

Outcome criterion1() {
    Outcome o;
    std::mt19937 rng(20260101);
    int agree = 0;
    const int total = 500;
    for (int i = 0; i < total; ++i) {
        const auto m = support::random_model(rng);
        bool ok = true;
        for (auto p : {K::Parthood, K::ProperParthood, K::GenuineFP}) {
            const auto u = core::eval_unity(m, p);
            const auto want_u = oracle::unity(m, p);
            ok = ok && unity_cases(u) == want_u && u.sat == want_u.empty();
            const auto nc = core::eval_noncontingency(m, p);
            const auto want_nc = oracle::noncontingency(m, p);
            ok = ok && nc_cases(nc) == want_nc && nc.sat == !want_nc.empty();
        }
        if (ok) ++agree;
    }
    o.require(agree == total, std::to_string(agree) + "/" + std::to_string(total) + " models agree");
    if (o.pass) o.detail = std::to_string(agree) + "/" + std::to_string(total) + " random models agree";
    return o;
}

Outcome criterion2() {
    Outcome o;
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> size(1, 50);
    std::uniform_real_distribution<double> density(0.0, 0.08);
    int flipped = 0;
    for (int i = 0; i < 200 && o.pass; ++i) {
        const auto g = support::random_graph(rng, size(rng), density(rng));
        const auto classes = support::random_classes(rng, g, 0.2);
        const auto model = verdict::build_model(g, classes);
        const auto u = core::eval_unity(model, K::Parthood);
        o.require(u.sat, "graph " + std::to_string(i) + ": built model fails unity");
        for (const auto& w : u.checked) o.require(w.holds, "graph " + std::to_string(i) + ": " + w.whole);

        std::vector<core::Tuple> bindings;
        for (const auto& t : model.tuples()) {
            if (t.kind == K::Binding) bindings.push_back(t);
        }
        if (bindings.empty()) continue;
        const auto drop = bindings[std::uniform_int_distribution<std::size_t>(0, bindings.size() - 1)(rng)];
        const auto broken = support::without_tuple(model, drop);
        const auto ub = core::eval_unity(broken, K::Parthood);
        // The whole of the dropped pair: the one both are genuine parts of.
        std::string whole;
        for (const auto& t : model.tuples()) {
            if (t.kind == K::GenuineFP && t.first == drop.first) whole = model.id(t.second);
        }
        const core::UnityCounterexample expected{model.id(drop.first), whole, model.id(drop.second), 0,
                                                 core::UnityDirection::Forward};
        o.require(!ub.sat, "graph " + std::to_string(i) + ": removal not detected");
        o.require(ub.counterexamples == std::vector<core::UnityCounterexample>{expected},
                  "graph " + std::to_string(i) + ": counterexample does not name the removed pair");
        for (const auto& w : ub.checked) {
            o.require(w.holds == (w.whole != whole),
                      "graph " + std::to_string(i) + ": component " + w.whole + " flipped wrongly");
        }
        ++flipped;
    }
    if (o.pass) o.detail = "200 graphs sat, " + std::to_string(flipped) + " single-tuple removals flipped exactly one component";
    return o;
}

Outcome criterion3() {
    Outcome o;
    const auto ivo = support::fixture_dir() / "ivo";
    auto r = cli({"verdict", (ivo / "tree").string(), "--config", (ivo / "mereoscan.json").string(),
                  "--format", "structured"});
    o.require(r.code == 0, "exit code " + std::to_string(r.code) + ": " + r.err);
    if (!o.pass) return o;
    const auto report = verdict::parse_report(r.out);
    o.require(report.verdicts.size() == 1, "expected one verdict");
    if (!o.pass) return o;
    const auto& v = report.verdicts.front();
    o.require(v.cls == core::AggregateClass::FunctionalWhole, "verdict is " + std::string(core::to_string(v.cls)));
    o.require(report.infringement_units == 1, "infringement units " + std::to_string(report.infringement_units));
    o.require(report.orphan_files == std::vector<std::string>{"scratch.txt"}, "orphan set differs");
    auto editor = std::find_if(v.files.begin(), v.files.end(),
                               [](const verdict::VerdictFile& f) { return f.path == "owlready/instance_editor.py"; });
    o.require(editor != v.files.end() && editor->mode == "optional", "instance_editor.py not optional");
    if (o.pass) o.detail = "FunctionalWhole, 1 unit, orphans {scratch.txt}, instance_editor.py optional";
    return o;
}

Outcome criterion4() {
    Outcome o;
    for (const char* name : {"module_repository", "object_library"}) {
        const auto m = verdict::load_bundled(name);
        const auto nc = core::eval_noncontingency(m, K::Parthood);
        o.require(nc.sat && !nc.witnesses.empty(), std::string(name) + ": no witness");
        const auto file = core::load_model(support::model_dir() / (std::string(name) + ".json"));
        o.require(file == m, std::string(name) + ": shipped file and bundled copy differ");
    }
    if (o.pass) o.detail = "module repository and object-code library both yield witnesses";
    return o;
}

Outcome criterion5() {
    Outcome o;
    auto pp = [](core::ModelBuilder& b, const char* x, const char* y) { b.add_tuple(K::ProperParthood, x, y, 0); };
    core::ModelBuilder single;
    single.add_entity("a");
    single.add_entity("w");
    pp(single, "a", "w");
    core::ModelBuilder disjoint;
    for (auto id : {"a", "b", "w"}) disjoint.add_entity(id);
    pp(disjoint, "a", "w");
    pp(disjoint, "b", "w");
    core::ModelBuilder shared;
    for (auto id : {"a", "b", "c", "w"}) shared.add_entity(id);
    pp(shared, "a", "w");
    pp(shared, "b", "w");
    shared.add_tuple(K::Parthood, "c", "a", 0).add_tuple(K::Parthood, "c", "b", 0);

    const auto m1 = single.build(), m2 = disjoint.build(), m3 = shared.build();
    const auto v1 = core::check_weak_supplementation(m1);
    const auto v2 = core::check_weak_supplementation(m2);
    const auto v3 = core::check_weak_supplementation(m3);
    o.require(!v1.empty(), "single proper part not flagged");
    o.require(v2.empty(), "two disjoint parts flagged");
    o.require(!v3.empty(), "overlapping parts not flagged");
    o.require(ws_cases(v1) == oracle::weak_supplementation(m1) && ws_cases(v2) == oracle::weak_supplementation(m2) &&
                  ws_cases(v3) == oracle::weak_supplementation(m3),
              "differs from the overlap oracle");
    const auto bundled = verdict::load_bundled("single_proper_part");
    o.require(!core::check_weak_supplementation(bundled).empty(), "bundled single_proper_part not flagged");
    if (o.pass) {
        o.detail = "violations 1/0/" + std::to_string(v3.size()) + ", identical to the oracle";
    }
    return o;
}

Outcome criterion6() {
    Outcome o;
    core::ModelBuilder empty;
    empty.add_entity("left-foot");
    empty.add_entity("laptop");
    const auto me = empty.build();
    auto cls = core::classify_aggregate(me, "laptop", core::eval_unity(me, K::Parthood),
                                        core::eval_noncontingency(me, K::Parthood));
    o.require(cls.cls == core::AggregateClass::MereSet, "empty-relation model not MereSet");

    const auto repo = verdict::load_bundled("module_repository");
    cls = core::classify_aggregate(repo, "repo", core::eval_unity(repo, K::Parthood),
                                   core::eval_noncontingency(repo, K::Parthood));
    o.require(cls.cls == core::AggregateClass::Collective, "repository not Collective");

    support::TempDir tmp;
    const auto tree = tmp.path() / "stripped";
    support::make_stripped_tree(tree);
    auto r = cli({"verdict", tree.string(), "--format", "structured"});
    o.require(r.code == 2, "stripped tree exit code " + std::to_string(r.code) + ": " + r.err);
    if (r.code == 2) {
        const auto report = verdict::parse_report(r.out);
        o.require(!report.verdicts.empty(), "stripped tree has no verdicts");
        for (const auto& v : report.verdicts) {
            o.require(v.cls == core::AggregateClass::MereSet, v.component + " is not MereSet");
        }
        if (o.pass) o.detail = "MereSet, Collective, stripped tree " + std::to_string(report.verdicts.size()) + "x MereSet exit 2";
    }
    return o;
}

Outcome criterion7() {
    Outcome o;
    const auto ivo = support::fixture_dir() / "ivo";
    support::TempDir tmp;
    fs::copy(ivo / "tree", tmp.path() / "tree", fs::copy_options::recursive);
    const std::vector<std::string> cfg{"--config", (ivo / "mereoscan.json").string(), "--format", "structured"};
    auto args = [&](const fs::path& root) {
        std::vector<std::string> a{"verdict", root.string()};
        a.insert(a.end(), cfg.begin(), cfg.end());
        return a;
    };
    const auto a = cli(args(ivo / "tree"));
    const auto b = cli(args(ivo / "tree"));
    const auto c = cli(args(tmp.path() / "tree"));
    o.require(a.code == 0 && !a.out.empty(), "first run failed: " + a.err);
    o.require(a.out == b.out, "two runs differ");
    o.require(a.out == c.out, "copy of the tree gives different bytes");
    if (o.pass) o.detail = std::to_string(a.out.size()) + " identical bytes over three runs";
    return o;
}

Outcome criterion8() {
    Outcome o;
    std::size_t graphs = 0;
    for (int n = 1; n <= 5 && o.pass; ++n) {
        const int pairs = n * (n - 1);
        for (long mask = 0; mask < (1L << pairs) && o.pass; ++mask) {
            std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
            int bit = 0;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (a != b) adj[a][b] = (mask >> bit++) & 1;
            const auto g = support::graph_from_matrix(n, adj);

            std::set<std::vector<int>> got;
            for (const auto& cyc : depgraph::detect_cycles(g).cycles) {
                std::vector<int> c;
                for (const auto& p : cyc) c.push_back(std::stoi(p.substr(1)));
                got.insert(c);
            }
            const auto want = oracle::elementary_cycles(n, adj);
            o.require(got == want, "cycles differ on n=" + std::to_string(n) + " mask=" + std::to_string(mask));
            o.require(want.empty() == oracle::has_topological_order(n, adj), "oracles disagree on acyclicity");

            // Entry set varies with the graph so every subset is exercised.
            std::set<int> entries;
            std::set<std::string> entry_paths;
            for (int v = 0; v < n; ++v) {
                if ((mask >> v) & 1 || (mask % (n + 1)) == v) {
                    entries.insert(v);
                    entry_paths.insert("v" + std::to_string(v));
                }
            }
            std::set<int> orphans;
            for (const auto& p : depgraph::detect_orphans(g, entry_paths)) orphans.insert(std::stoi(p.substr(1)));
            o.require(orphans == oracle::orphans(n, adj, entries),
                      "orphans differ on n=" + std::to_string(n) + " mask=" + std::to_string(mask));
            ++graphs;
        }
    }
    if (o.pass) o.detail = std::to_string(graphs) + " labelled digraphs on 1..5 vertices";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 axiom-oracle equivalence", criterion1},
        {"2 unity by construction", criterion2},
        {"3 IVO fixture verdict", criterion3},
        {"4 non-contingency counterexample models", criterion4},
        {"5 weak supplementation", criterion5},
        {"6 elimination procedure", criterion6},
        {"7 report determinism", criterion7},
        {"8 cycle and orphan oracles", criterion8},
    };
    int failed = 0;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << name << ": " << o.detail << "\n";
    }
    const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << " in "
              << static_cast<int>(secs * 10) / 10.0 << " s\n";
    return failed;
}

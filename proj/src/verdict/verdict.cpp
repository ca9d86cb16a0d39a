// SPDX-FileCopyrightText: © 2026 The mereoscan Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "mereoscan/verdict/verdict.hpp"

#include <algorithm>
#include <map>

#include "mereoscan/error.hpp"
#include "mereoscan/verdict/bundled.hpp"

namespace mereoscan::verdict {

namespace {

constexpr const char* kModule = "verdict";

using core::AggregateClass;
using core::RelationKind;

std::map<std::string, classifier::Mode> mode_table(const depgraph::DependencyGraph& graph,
                                       const std::vector<classifier::ParticipationClassification>& classes) {
    std::map<std::string, classifier::Mode> modes;
    for (const auto& c : classes) {
        if (!graph.contains(c.file)) {
            throw ConsistencyError(kModule, "classification names '" + c.file + "', which is not in the graph");
        }
        if (!modes.emplace(c.file, c.mode).second) {
            throw ConsistencyError(kModule, "file '" + c.file + "' classified twice");
        }
    }
    for (const auto& [path, node] : graph.nodes()) {
        if (!modes.count(path)) throw ConsistencyError(kModule, "no classification for '" + path + "'");
    }
    return modes;
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
    std::string out;
    for (const auto& s : items) {
        if (!out.empty()) out += sep;
        out += s;
    }
    return out;
}

std::string policy_note(const BuildOptions& b) {
    std::string counted = b.mode == Mode::Source
                              ? "import, include, data-read, function-call-manifest and link edges"
                              : "data-read, function-call-manifest and link edges from the manifest";
    std::string loose = b.include_loose ? "socket and pipe edges are included (--include-loose)"
                                        : "socket and pipe edges are excluded";
    return "coupling policy: " + counted + " bind files under " + std::string(binding_name(b.mode)) +
           "; " + loose + ". This edge whitelist is a tool policy, not an agreed standard";
}

}  // namespace

std::string_view to_string(Mode m) noexcept {
    return m == Mode::Source ? "source" : "compiled";
}

std::optional<Mode> parse_mode(std::string_view s) noexcept {
    if (s == "source") return Mode::Source;
    if (s == "compiled") return Mode::Compiled;
    return std::nullopt;
}

std::string_view binding_name(Mode m) noexcept {
    return m == Mode::Source ? "SCgraphPath" : "linked";
}

std::vector<std::string> component_ids(const depgraph::DependencyGraph& graph,
                                       const depgraph::CouplingPolicy& policy) {
    const auto comps = depgraph::connected_components(graph, policy);
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        std::string id = "C" + std::to_string(i + 1);
        while (graph.contains(id)) id = "_" + id;
        ids.push_back(std::move(id));
    }
    return ids;
}

bool is_isolated_file(const depgraph::DependencyGraph& graph, const std::vector<std::string>& component,
                      const depgraph::CouplingPolicy& policy) {
    if (component.size() != 1) return false;
    const auto& file = component.front();
    for (const auto& e : graph.edges()) {
        if (policy.counts(e.mechanism) && (e.from == file || e.to == file)) return false;
    }
    for (const auto& [path, node] : graph.nodes()) {
        if (path != file && (node.role == depgraph::FileRole::Source ||
                             node.role == depgraph::FileRole::Object)) {
            return true;
        }
    }
    return false;
}

core::FiniteModel build_model(const depgraph::DependencyGraph& graph,
                              const std::vector<classifier::ParticipationClassification>& classes,
                              const BuildOptions& options) {
    const auto modes = mode_table(graph, classes);
    const auto policy = options.policy();
    const auto comps = depgraph::connected_components(graph, policy);
    const auto ids = component_ids(graph, policy);

    core::ModelBuilder b;
    b.horizon(1).binding_name(std::string(binding_name(options.mode)));
    for (std::size_t i = 0; i < comps.size(); ++i) {
        core::Entity whole;
        whole.id = ids[i];
        whole.label = "component " + ids[i];
        whole.level = 1;
        whole.kind = "program";
        const auto w = b.add_entity(std::move(whole));

        const bool isolated = is_isolated_file(graph, comps[i], policy);
        std::vector<core::EntityIndex> parts;
        for (const auto& path : comps[i]) {
            core::Entity file;
            file.id = path;
            file.label = path;
            file.level = 2;
            file.kind = "file";
            const auto mode = modes.at(path);
            if (mode == classifier::Mode::Optional) file.tags.insert("optional");
            const auto f = b.add_entity(std::move(file));
            if (mode != classifier::Mode::Optional && !isolated) parts.push_back(f);
        }
        for (auto p : parts) b.add_tuple(RelationKind::GenuineFP, p, w, 0);
        for (auto x : parts) {
            for (auto z : parts) {
                if (x != z) b.add_tuple(RelationKind::Binding, x, z, 0);
            }
        }
    }
    return b.build();
}

core::FiniteModel extend_model(const core::FiniteModel& base, const core::FiniteModel& extra,
                               std::string_view prefix) {
    core::ModelBuilder b;
    b.horizon(std::max(base.horizon(), extra.horizon())).binding_name(base.binding_name());
    for (const auto& e : base.entities()) b.add_entity(e);
    for (auto e : extra.entities()) {
        e.id = std::string(prefix) + e.id;
        b.add_entity(std::move(e));
    }
    for (const auto& t : base.tuples()) b.add_tuple(t.kind, base.id(t.first), base.id(t.second), t.time);
    for (const auto& t : extra.tuples()) {
        b.add_tuple(t.kind, std::string(prefix) + extra.id(t.first),
                    std::string(prefix) + extra.id(t.second), t.time);
    }
    return b.build();
}

WholenessReport issue_verdict(const core::FiniteModel& model, const depgraph::DependencyGraph& graph,
                              const std::vector<classifier::ParticipationClassification>& classes,
                              const VerdictOptions& options) {
    const auto modes = mode_table(graph, classes);
    const auto policy = options.build.policy();
    const auto comps = depgraph::connected_components(graph, policy);
    const auto ids = component_ids(graph, policy);
    const auto& entries = graph.entries();

    WholenessReport r;
    r.tool_version = options.tool_version;
    r.input_digest = graph.digest();
    r.mode = std::string(to_string(options.build.mode));
    r.binding_name = std::string(binding_name(options.build.mode));
    r.file_count = graph.nodes().size();
    r.entries.assign(entries.begin(), entries.end());

    const auto cycles = depgraph::detect_cycles(graph, options.cycle_cap);
    r.cycles = cycles.cycles;
    r.cycles_truncated = cycles.truncated;

    const auto unity = core::eval_unity(model, RelationKind::Parthood, RelationKind::Binding);
    const std::string_view counter_name =
        options.build.mode == Mode::Source ? "module_repository" : "object_library";
    const auto counter = load_bundled(counter_name);
    const auto extended = extend_model(model, counter, "counterexample:");
    const auto nc = core::eval_noncontingency(extended, RelationKind::Parthood, RelationKind::Binding);
    r.noncontingency_witnesses = nc.witnesses;
    const auto supplementation = core::check_weak_supplementation(model);

    for (std::size_t i = 0; i < comps.size(); ++i) {
        const auto& comp = comps[i];
        const bool has_entry = std::any_of(comp.begin(), comp.end(),
                                           [&](const std::string& p) { return entries.count(p) > 0; });
        if (!has_entry) {
            r.orphan_files.insert(r.orphan_files.end(), comp.begin(), comp.end());
            if (options.orphans_standalone) ++r.standalone_units;
            continue;
        }

        WholenessVerdict v;
        v.component = ids[i];
        v.binding_name = r.binding_name;
        const auto cls = core::classify_aggregate(model, v.component, unity, nc);
        v.cls = cls.cls;
        v.evidence = cls.evidence;
        v.counterexamples = unity.counterexamples_for(v.component);

        std::vector<std::string> optional;
        for (const auto& path : comp) {
            const auto mode = modes.at(path);
            v.files.push_back({path, std::string(classifier::to_string(mode))});
            if (mode == classifier::Mode::Optional) optional.push_back(path);
        }
        if (!optional.empty()) v.notes.push_back("optional files (not genuine parts): " + join(optional, ", "));
        if (is_isolated_file(graph, comp, policy)) {
            v.notes.push_back("isolated file: no coupling edge to any other file");
            if (options.orphans_standalone) {
                v.standalone = true;
                ++r.standalone_units;
            }
        }
        for (const auto& s : supplementation) {
            if (s.whole == v.component) {
                v.notes.push_back("weak supplementation fails: " + s.part +
                                  " is the only proper part, no supplement");
            }
        }
        for (const auto& c : cycles.cycles) {
            if (std::binary_search(comp.begin(), comp.end(), c.front())) {
                v.notes.push_back("import cycle violates the acyclic dependencies principle: " +
                                  join(c, " -> ") + " -> " + c.front());
            }
        }
        r.verdicts.push_back(std::move(v));
    }

    const auto wholes = static_cast<std::size_t>(
        std::count_if(r.verdicts.begin(), r.verdicts.end(),
                      [](const WholenessVerdict& v) { return v.cls == AggregateClass::FunctionalWhole; }));
    r.infringement_units = wholes + r.standalone_units;

    r.warnings = graph.warnings();
    r.warnings.insert(r.warnings.end(), model.warnings().begin(), model.warnings().end());

    r.notes.push_back(policy_note(options.build));
    r.notes.push_back("participation mode immutable: not-applicable, never inferred");
    r.notes.push_back("non-contingency is shown on the bundled " + std::string(counter_name) +
                      " counterexample model, re-verified this run: " +
                      (nc.sat ? std::to_string(nc.witnesses.size()) + " witness(es)" : "no witness"));
    r.notes.push_back("the same binding relation is used for unity and non-contingency; "
                      "whether the two should differ is left open");
    r.notes.push_back("participation is binary (works or not); functions are not weighted or prioritised");
    if (entries.empty() && !graph.empty()) r.notes.push_back("no entry points found; nothing to judge");
    if (!r.orphan_files.empty()) {
        r.notes.push_back(std::string("orphan files are excess baggage or separate programs; ") +
                          (options.orphans_standalone ? "each orphan component counts as a standalone unit"
                                                      : "not counted (see --orphans-standalone)"));
    }
    r.notes.push_back("units count wholes, not files; no legal conclusion is drawn");
    return r;
}

int exit_code(const WholenessReport& report) noexcept {
    if (report.verdicts.empty()) return report.file_count == 0 ? 0 : 2;
    for (const auto& v : report.verdicts) {
        if (v.cls != AggregateClass::FunctionalWhole) return 2;
    }
    return 0;
}

}  // namespace mereoscan::verdict

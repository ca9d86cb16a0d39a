// SPDX-FileCopyrightText: © 2026 The mereoscan Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "mereoscan/depgraph/graph_io.hpp"

#include "json.hpp"
#include "mereoscan/error.hpp"

namespace mereoscan::depgraph {

namespace {

constexpr const char* kModule = "depgraph";
using ojson = nlohmann::ordered_json;

std::size_t line_of(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') ++line;
    }
    return line;
}

const ojson& field(const ojson& obj, const char* key, const char* where) {
    if (!obj.is_object() || !obj.contains(key)) {
        throw SchemaError(kModule, std::string(where) + ": missing field '" + key + "'");
    }
    return obj.at(key);
}

std::string str(const ojson& obj, const char* key, const char* where) {
    const auto& v = field(obj, key, where);
    if (!v.is_string()) {
        throw SchemaError(kModule, std::string(where) + ": field '" + key + "' must be a string");
    }
    return v.get<std::string>();
}

const ojson& array(const ojson& obj, const char* key, const char* where) {
    const auto& v = field(obj, key, where);
    if (!v.is_array()) {
        throw SchemaError(kModule, std::string(where) + ": field '" + key + "' must be an array");
    }
    return v;
}

std::vector<std::string> strings(const ojson& arr, const char* where) {
    std::vector<std::string> out;
    for (const auto& v : arr) {
        if (!v.is_string()) throw SchemaError(kModule, std::string(where) + ": expected strings");
        out.push_back(v.get<std::string>());
    }
    return out;
}

Mechanism mechanism(const ojson& obj, const char* where) {
    auto name = str(obj, "mechanism", where);
    auto m = parse_mechanism(name);
    if (!m) throw SchemaError(kModule, std::string(where) + ": unknown mechanism '" + name + "'");
    return *m;
}

}  // namespace

GraphAnalysis analyse(const DependencyGraph& graph, std::size_t cycle_cap,
                      const CouplingPolicy& policy) {
    GraphAnalysis a;
    a.cycles = detect_cycles(graph, cycle_cap);
    a.orphans = detect_orphans(graph, graph.entries(), policy);
    a.components = connected_components(graph, policy);
    return a;
}

std::string print_graph(const DependencyGraph& graph, const std::optional<GraphAnalysis>& analysis) {
    ojson doc;
    doc["schema"] = kGraphSchema;
    doc["digest"] = graph.digest();
    doc["entries"] = graph.entries();
    auto nodes = ojson::array();
    for (const auto& [path, n] : graph.nodes()) {
        nodes.push_back({{"path", path}, {"role", to_string(n.role)}, {"grammar", n.grammar}});
    }
    doc["nodes"] = std::move(nodes);
    auto edges = ojson::array();
    for (const auto& e : graph.edges()) {
        edges.push_back({{"from", e.from},
                         {"to", e.to},
                         {"mechanism", to_string(e.mechanism)},
                         {"site", e.site}});
    }
    doc["edges"] = std::move(edges);
    auto unresolved = ojson::array();
    for (const auto& u : graph.unresolved()) {
        unresolved.push_back({{"from", u.from},
                              {"target", u.target},
                              {"mechanism", to_string(u.mechanism)},
                              {"site", u.site},
                              {"reason", u.reason}});
    }
    doc["unresolved"] = std::move(unresolved);
    auto pins = ojson::object();
    for (const auto& [p, v] : graph.pins()) pins[p] = v;
    doc["pins"] = std::move(pins);
    doc["warnings"] = graph.warnings();
    if (analysis) {
        doc["analysis"] = {{"cycles", analysis->cycles.cycles},
                           {"cycles_truncated", analysis->cycles.truncated},
                           {"orphans", analysis->orphans},
                           {"components", analysis->components}};
    }
    return doc.dump(2) + "\n";
}

GraphDocument parse_graph(std::string_view text) {
    ojson doc;
    try {
        doc = ojson::parse(text);
    } catch (const ojson::parse_error& e) {
        throw SchemaError(kModule, e.what(), line_of(text, e.byte == 0 ? 0 : e.byte - 1));
    }
    if (!doc.is_object()) throw SchemaError(kModule, "document must be an object");
    auto schema = str(doc, "schema", "graph");
    if (schema != kGraphSchema) {
        throw SchemaError(kModule, "unsupported schema '" + schema + "', expected " +
                                       std::string(kGraphSchema));
    }

    GraphDocument out;
    auto& g = out.graph;
    for (const auto& n : array(doc, "nodes", "graph")) {
        auto role_name = str(n, "role", "node");
        auto role = parse_file_role(role_name);
        if (!role) throw SchemaError(kModule, "node: unknown role '" + role_name + "'");
        g.add_node({str(n, "path", "node"), *role, str(n, "grammar", "node")});
    }
    try {
        for (const auto& e : array(doc, "edges", "graph")) {
            g.add_edge({str(e, "from", "edge"), str(e, "to", "edge"), mechanism(e, "edge"),
                        str(e, "site", "edge")});
        }
        auto entries = strings(array(doc, "entries", "graph"), "entries");
        g.set_entries({entries.begin(), entries.end()});
    } catch (const SchemaError&) {
        throw;
    } catch (const Error& e) {
        throw SchemaError(kModule, e.what());
    }
    if (doc.contains("unresolved")) {
        for (const auto& u : array(doc, "unresolved", "graph")) {
            g.add_unresolved({str(u, "from", "unresolved"), str(u, "target", "unresolved"),
                              mechanism(u, "unresolved"), str(u, "site", "unresolved"),
                              str(u, "reason", "unresolved")});
        }
    }
    if (doc.contains("pins")) {
        const auto& pins = doc.at("pins");
        if (!pins.is_object()) throw SchemaError(kModule, "graph: field 'pins' must be an object");
        for (const auto& [p, v] : pins.items()) {
            if (!v.is_string()) throw SchemaError(kModule, "pins: versions must be strings");
            g.add_pin(p, v.get<std::string>());
        }
    }
    if (doc.contains("warnings")) {
        for (auto& w : strings(array(doc, "warnings", "graph"), "warnings")) g.add_warning(w);
    }
    g.set_digest(doc.contains("digest") ? str(doc, "digest", "graph") : "");

    if (doc.contains("analysis")) {
        const auto& a = doc.at("analysis");
        GraphAnalysis an;
        for (const auto& c : array(a, "cycles", "analysis")) an.cycles.cycles.push_back(strings(c, "cycles"));
        const auto& t = field(a, "cycles_truncated", "analysis");
        if (!t.is_boolean()) throw SchemaError(kModule, "analysis: cycles_truncated must be a boolean");
        an.cycles.truncated = t.get<bool>();
        auto orphans = strings(array(a, "orphans", "analysis"), "orphans");
        an.orphans = {orphans.begin(), orphans.end()};
        for (const auto& c : array(a, "components", "analysis")) {
            an.components.push_back(strings(c, "components"));
        }
        out.analysis = std::move(an);
    }
    return out;
}

}  // namespace mereoscan::depgraph

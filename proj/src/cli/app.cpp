// SPDX-FileCopyrightText: © 2026 The mereoscan Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "mereoscan/cli/app.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mereoscan/classifier/classify_io.hpp"
#include "mereoscan/classifier/participation.hpp"
#include "mereoscan/core/axioms.hpp"
#include "mereoscan/core/model_io.hpp"
#include "mereoscan/depgraph/graph_io.hpp"
#include "mereoscan/error.hpp"
#include "mereoscan/verdict/report_io.hpp"
#include "mereoscan/verdict/verdict.hpp"
#include "mereoscan/version.hpp"

namespace fs = std::filesystem;

namespace mereoscan::cli {

namespace {

constexpr const char* kModule = "cli";

struct Flags {
    std::string config;
    std::string format;
    std::string out;
    std::vector<std::string> grammars;
    std::string manifest;
    std::vector<std::string> entries;
    std::string mode;
    std::string probe_command;
    double probe_timeout = 0;
    std::string probe_success;
    std::string probe_pattern;
    std::vector<std::string> replace;
    std::string staging_prefix;
    unsigned jobs = 1;
    bool include_loose = false;
    bool orphans_standalone = false;
    std::size_t cycle_cap = depgraph::kDefaultCycleCap;

    std::string root;
    std::string model;
    std::string parthood = "parthood";
    std::string binding = "binding";
    std::vector<std::string> checks;
};

struct Parser {
    CLI::App app{"Static wholeness analysis of program source trees and artefact manifests.", "mereoscan"};
    Flags f;
    CLI::App* scan = nullptr;
    CLI::App* classify = nullptr;
    CLI::App* verdict = nullptr;
    CLI::App* check = nullptr;

    Parser() {
        app.set_version_flag("--version", "mereoscan " + std::string(kVersion));
        app.require_subcommand(1);

        app.add_option("--config", f.config,
                       std::string("config/v1 file; falls back to $") + kConfigEnv);
        app.add_option("--format", f.format, "output format: human or structured");
        app.add_option("--out", f.out, "write the result to this file instead of stdout");
        app.add_option("--grammar", f.grammars, "enabled grammar (python, c, none); repeatable");
        app.add_option("--manifest", f.manifest, "edges/v1 manifest to merge");
        app.add_option("--entry", f.entries, "declared entry point; repeatable");
        app.add_option("--mode", f.mode, "source (SCgraphPath) or compiled (linked)");
        app.add_option("--probe-command", f.probe_command,
                       "probe command run by /bin/sh; {workspace} is the staged tree");
        app.add_option("--probe-timeout", f.probe_timeout, "probe timeout in seconds");
        app.add_option("--probe-success", f.probe_success, "probe success criterion: exit0 or regex");
        app.add_option("--probe-pattern", f.probe_pattern, "output pattern for --probe-success regex");
        app.add_option("--replace", f.replace, "FILE=STUB replacement for the replacement probe; repeatable");
        app.add_option("--staging-prefix", f.staging_prefix, "directory for staged probe copies");
        app.add_option("--jobs", f.jobs, "concurrent probe runs");
        app.add_flag("--include-loose", f.include_loose, "let socket and pipe edges bind files");
        app.add_flag("--orphans-standalone", f.orphans_standalone,
                     "count orphan components and isolated files as standalone units");
        app.add_option("--cycle-cap", f.cycle_cap, "stop cycle enumeration after this many cycles");

        scan = app.add_subcommand("scan", "extract the dependency graph (graph/v1)");
        classify = app.add_subcommand("classify", "assign participation modes (classify/v1)");
        verdict = app.add_subcommand("verdict", "issue the wholeness report (report/v1)");
        check = app.add_subcommand("check-model", "evaluate the axioms on a model/v1 file");
        for (auto* sub : {scan, classify, verdict}) {
            sub->add_option("root", f.root, "tree to analyse")->required();
            sub->fallthrough();
        }
        check->add_option("model", f.model, "model/v1 file")->required();
        check->add_option("--parthood", f.parthood, "part-whole relation kind to evaluate");
        check->add_option("--binding", f.binding, "binding relation kind");
        check->add_option("--check", f.checks,
                          "unity, noncontingency or supplementation; repeatable (default: all)")
            ->delimiter(',');
        check->fallthrough();
    }

    bool given(const char* name) const { return app.get_option(name)->count() > 0; }
};

ToolConfig effective_config(const Parser& p) {
    ToolConfig c;
    std::string path = p.f.config;
    if (path.empty()) {
        if (const char* env = std::getenv(kConfigEnv); env && *env) path = env;
    }
    if (!path.empty()) c = load_config(path);

    const auto& f = p.f;
    if (p.given("--grammar")) {
        c.grammars.clear();
        for (const auto& g : f.grammars) {
            if (g == "none") continue;
            auto parsed = depgraph::parse_grammar(g);
            if (!parsed) throw ConfigError(kModule, "unknown grammar '" + g + "'");
            if (std::find(c.grammars.begin(), c.grammars.end(), *parsed) == c.grammars.end()) {
                c.grammars.push_back(*parsed);
            }
        }
    }
    if (p.given("--manifest")) c.manifest = f.manifest;
    if (p.given("--entry")) c.entries = f.entries;
    if (p.given("--mode")) c.mode = f.mode;
    if (p.given("--format")) c.format = f.format;
    if (p.given("--probe-command")) c.probe.command = f.probe_command;
    if (p.given("--probe-timeout")) c.probe.timeout_s = f.probe_timeout;
    if (p.given("--probe-success")) c.probe.success = f.probe_success;
    if (p.given("--probe-pattern")) c.probe.pattern = f.probe_pattern;
    if (p.given("--staging-prefix")) c.probe.staging_prefix = f.staging_prefix;
    if (p.given("--jobs")) c.probe.jobs = f.jobs;
    if (p.given("--replace")) {
        for (const auto& r : f.replace) {
            auto eq = r.find('=');
            if (eq == std::string::npos || eq == 0 || eq + 1 == r.size()) {
                throw ConfigError(kModule, "--replace expects FILE=STUB, got '" + r + "'");
            }
            c.probe.replace[r.substr(0, eq)] = r.substr(eq + 1);
        }
    }
    if (f.include_loose) c.include_loose = true;
    if (f.orphans_standalone) c.orphans_standalone = true;
    if (p.given("--cycle-cap")) c.cycle_cap = f.cycle_cap;
    c.validate();
    return c;
}

verdict::Format output_format(const ToolConfig& c, verdict::Format fallback) {
    return c.format ? verdict::format_or_throw(*c.format) : fallback;
}

verdict::BuildOptions build_options(const ToolConfig& c) {
    return {*verdict::parse_mode(c.mode), c.include_loose};
}

void emit(const Flags& f, std::ostream& out, const std::string& text) {
    if (f.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(f.out, std::ios::binary);
    if (!file) throw IoError(kModule, "cannot write " + f.out);
    file << text;
    if (!file) throw IoError(kModule, "cannot write " + f.out);
}

void print_warnings(const std::vector<std::string>& warnings, std::ostream& err) {
    for (const auto& w : warnings) err << "mereoscan: warning: " << w << "\n";
}

std::vector<classifier::ParticipationClassification> classify_tree(const depgraph::DependencyGraph& graph,
                                                                   const fs::path& root,
                                                                   const ToolConfig& c) {
    classifier::ClassifyOptions options;
    options.root = root;
    options.probe = c.probe_spec();
    options.replacements = c.probe.replace;
    options.policy = build_options(c).policy();
    return classifier::classify_participation(graph, graph.entries(), options);
}

int cmd_scan(const Flags& f, const ToolConfig& c, std::ostream& out, std::ostream& err) {
    const auto graph = scan_tree(f.root, c);
    print_warnings(graph.warnings(), err);
    const auto analysis = depgraph::analyse(graph, c.cycle_cap, build_options(c).policy());
    if (output_format(c, verdict::Format::Structured) == verdict::Format::Structured) {
        emit(f, out, depgraph::print_graph(graph, analysis));
        return kExitOk;
    }
    std::ostringstream s;
    s << "digest: " << graph.digest() << "\n";
    s << "nodes: " << graph.nodes().size() << "\n";
    s << "edges: " << graph.edges().size() << "\n";
    s << "unresolved: " << graph.unresolved().size() << "\n";
    s << "entries:";
    for (const auto& e : graph.entries()) s << " " << e;
    s << "\ncycles: " << analysis.cycles.cycles.size() << (analysis.cycles.truncated ? " (truncated)" : "")
      << "\n";
    s << "orphans:";
    for (const auto& o : analysis.orphans) s << " " << o;
    s << "\ncomponents: " << analysis.components.size() << "\n";
    emit(f, out, s.str());
    return kExitOk;
}

int cmd_classify(const Flags& f, const ToolConfig& c, std::ostream& out, std::ostream& err) {
    const auto graph = scan_tree(f.root, c);
    print_warnings(graph.warnings(), err);
    const auto classes = classify_tree(graph, f.root, c);
    if (auto spec = c.probe_spec()) {
        auto outcome = classifier::check_self_consistency(f.root, *spec, classes);
        err << "mereoscan: self-consistency probe without optional files: "
            << classifier::to_string(outcome.status) << "\n";
    }
    if (output_format(c, verdict::Format::Structured) == verdict::Format::Structured) {
        emit(f, out, classifier::print_classification(classes));
        return kExitOk;
    }
    std::ostringstream s;
    for (const auto& cl : classes) {
        s << cl.file << "  " << classifier::to_string(cl.mode) << "  " << classifier::to_string(cl.basis);
        for (const auto& e : cl.evidence) s << "  " << classifier::to_string(e.kind);
        s << "\n";
    }
    s << "immutable: not-applicable\n";
    emit(f, out, s.str());
    return kExitOk;
}

int cmd_verdict(const Flags& f, const ToolConfig& c, std::ostream& out, std::ostream& err) {
    const auto graph = scan_tree(f.root, c);
    const auto classes = classify_tree(graph, f.root, c);
    const auto build = build_options(c);
    const auto model = verdict::build_model(graph, classes, build);
    verdict::VerdictOptions options{build, c.orphans_standalone, c.cycle_cap, std::string(kVersion)};
    const auto report = verdict::issue_verdict(model, graph, classes, options);
    print_warnings(report.warnings, err);
    emit(f, out, verdict::render_report(report, output_format(c, verdict::Format::Human)));
    return verdict::exit_code(report) == 0 ? kExitOk : kExitNotWhole;
}

int cmd_check_model(const Flags& f, const ToolConfig& c, std::ostream& out, std::ostream& err) {
    const auto model = core::load_model(f.model);
    print_warnings(model.warnings(), err);
    const auto parthood = core::relation_kind_or_throw(f.parthood);
    const auto binding = core::relation_kind_or_throw(f.binding);

    std::set<std::string> checks(f.checks.begin(), f.checks.end());
    if (checks.empty()) checks = {"unity", "noncontingency", "supplementation"};
    for (const auto& ch : checks) {
        if (ch != "unity" && ch != "noncontingency" && ch != "supplementation") {
            throw ConfigError(kModule, "unknown check '" + ch + "'");
        }
    }

    bool all_sat = true;
    nlohmann::ordered_json doc;
    doc["schema"] = "checks/v1";
    doc["model"] = f.model;
    doc["binding_name"] = model.binding_name();
    std::ostringstream s;
    s << "model: " << f.model << " (" << model.size() << " entities, " << model.tuples().size()
      << " tuples, horizon " << model.horizon() << ", binding: " << model.binding_name() << ")\n";

    if (checks.count("unity")) {
        const auto r = core::eval_unity(model, parthood, binding);
        all_sat = all_sat && r.sat;
        s << "unity (" << core::to_string(parthood) << ", " << core::to_string(binding)
          << "): " << (r.sat ? "sat" : "unsat") << "\n";
        auto cex = nlohmann::ordered_json::array();
        for (const auto& c : r.counterexamples) {
            s << "  counterexample x=" << c.part << " y=" << c.whole << " z=" << c.other << " t=" << c.time
              << " " << core::to_string(c.direction) << "\n";
            cex.push_back({{"part", c.part},
                           {"whole", c.whole},
                           {"other", c.other},
                           {"time", c.time},
                           {"direction", core::to_string(c.direction)}});
        }
        doc["unity"] = {{"sat", r.sat}, {"counterexamples", std::move(cex)}};
    }
    if (checks.count("noncontingency")) {
        const auto r = core::eval_noncontingency(model, parthood, binding);
        all_sat = all_sat && r.sat;
        s << "non-contingency (" << core::to_string(parthood) << ", " << core::to_string(binding)
          << "): " << (r.sat ? "sat" : "unsat") << "\n";
        auto ws = nlohmann::ordered_json::array();
        for (const auto& w : r.witnesses) {
            s << "  witness (" << w.first << ", " << w.second << ", " << w.time << ") "
              << core::to_string(w.kind) << "\n";
            ws.push_back({{"first", w.first}, {"second", w.second}, {"time", w.time},
                          {"kind", core::to_string(w.kind)}});
        }
        doc["noncontingency"] = {{"sat", r.sat}, {"witnesses", std::move(ws)}};
    }
    if (checks.count("supplementation")) {
        const auto v = core::check_weak_supplementation(model);
        all_sat = all_sat && v.empty();
        s << "weak supplementation: " << (v.empty() ? "sat" : "unsat") << "\n";
        auto vs = nlohmann::ordered_json::array();
        for (const auto& x : v) {
            s << "  violation part=" << x.part << " whole=" << x.whole << " t=" << x.time << "\n";
            vs.push_back({{"part", x.part}, {"whole", x.whole}, {"time", x.time}});
        }
        doc["supplementation"] = {{"sat", v.empty()}, {"violations", std::move(vs)}};
    }
    doc["sat"] = all_sat;
    emit(f, out,
         output_format(c, verdict::Format::Human) == verdict::Format::Human ? s.str() : doc.dump(2) + "\n");
    return all_sat ? kExitOk : kExitNotWhole;
}

}  // namespace

depgraph::DependencyGraph scan_tree(const fs::path& root, const ToolConfig& config) {
    depgraph::ExtractOptions options;
    options.grammars = config.grammars;
    options.manifest = config.manifest;
    if (config.source) options.exclude.push_back(*config.source);
    auto graph = depgraph::extract_dependencies(root, options);
    const auto roles = *verdict::parse_mode(config.mode) == verdict::Mode::Compiled
                           ? std::set<depgraph::FileRole>{depgraph::FileRole::Object}
                           : std::set<depgraph::FileRole>{depgraph::FileRole::Source};
    graph.set_entries(depgraph::find_entry_points(graph, config.entries, roles));
    return graph;
}

std::string help_text() {
    Parser p;
    return p.app.help();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Parser p;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        p.app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << p.app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << "mereoscan " << kVersion << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "mereoscan: error: cli: " << e.what() << "\n";
        return kExitInputError;
    }
    try {
        const auto config = effective_config(p);
        if (p.scan->parsed()) return cmd_scan(p.f, config, out, err);
        if (p.classify->parsed()) return cmd_classify(p.f, config, out, err);
        if (p.verdict->parsed()) return cmd_verdict(p.f, config, out, err);
        return cmd_check_model(p.f, config, out, err);
    } catch (const Error& e) {
        err << "mereoscan: error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        err << "mereoscan: error: " << e.what() << "\n";
        return kExitInputError;
    }
}

}  // namespace mereoscan::cli

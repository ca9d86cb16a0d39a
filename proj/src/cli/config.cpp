// SPDX-FileCopyrightText: © 2026 The mereoscan Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "mereoscan/cli/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "mereoscan/error.hpp"
#include "mereoscan/verdict/report_io.hpp"
#include "mereoscan/verdict/verdict.hpp"

namespace fs = std::filesystem;

namespace mereoscan::cli {

namespace {

constexpr const char* kModule = "cli";
using json = nlohmann::json;

template <typename T>
T get(const json& obj, const char* key, const char* where) {
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception&) {
        throw SchemaError(kModule, std::string(where) + ": field '" + key + "' has the wrong type");
    }
}

void only(const json& obj, const std::set<std::string>& keys, const char* where) {
    for (const auto& [k, v] : obj.items()) {
        if (!keys.count(k)) throw SchemaError(kModule, std::string(where) + ": unknown field '" + k + "'");
    }
}

fs::path resolve(const fs::path& base, const std::string& p) {
    fs::path path(p);
    return path.is_absolute() || base.empty() ? path : base / path;
}

}  // namespace

void ToolConfig::validate() const {
    if (grammars.empty() && !manifest) {
        throw ConfigError(kModule, "enable at least one grammar or give a manifest");
    }
    if (cycle_cap < 1) throw ConfigError(kModule, "cycle-cap must be at least 1");
    if (!verdict::parse_mode(mode)) {
        throw ConfigError(kModule, "unknown mode '" + mode + "' (expected source or compiled)");
    }
    if (format) verdict::format_or_throw(*format);
    if (!probe.command && !probe.replace.empty()) {
        throw ConfigError(kModule, "replacement stubs need a probe command");
    }
    if (auto spec = probe_spec()) spec->validate();
}

std::optional<classifier::ProbeSpec> ToolConfig::probe_spec() const {
    if (!probe.command) return std::nullopt;
    classifier::ProbeSpec spec;
    spec.command = *probe.command;
    spec.timeout_s = probe.timeout_s;
    auto success = classifier::parse_success_criterion(probe.success);
    if (!success) {
        throw ConfigError(kModule, "unknown probe success criterion '" + probe.success +
                                       "' (expected exit0 or regex)");
    }
    spec.success = *success;
    spec.pattern = probe.pattern;
    spec.staging_prefix = probe.staging_prefix;
    spec.jobs = probe.jobs;
    return spec;
}

ToolConfig parse_config(std::string_view text, const fs::path& base_dir) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(kModule, std::string("malformed config: ") + e.what());
    }
    if (!doc.is_object()) throw SchemaError(kModule, "config must be an object");
    only(doc, {"schema", "grammars", "manifest", "entries", "mode", "probe", "include_loose",
               "orphans_standalone", "cycle_cap", "format"},
         "config");
    if (!doc.contains("schema") || get<std::string>(doc, "schema", "config") != kConfigSchema) {
        throw SchemaError(kModule, "config needs \"schema\": \"" + std::string(kConfigSchema) + "\"");
    }

    ToolConfig c;
    if (doc.contains("grammars")) {
        c.grammars.clear();
        for (const auto& g : get<std::vector<std::string>>(doc, "grammars", "config")) {
            auto parsed = depgraph::parse_grammar(g);
            if (!parsed) throw ConfigError(kModule, "unknown grammar '" + g + "'");
            c.grammars.push_back(*parsed);
        }
    }
    if (doc.contains("manifest")) c.manifest = resolve(base_dir, get<std::string>(doc, "manifest", "config"));
    if (doc.contains("entries")) c.entries = get<std::vector<std::string>>(doc, "entries", "config");
    if (doc.contains("mode")) c.mode = get<std::string>(doc, "mode", "config");
    if (doc.contains("include_loose")) c.include_loose = get<bool>(doc, "include_loose", "config");
    if (doc.contains("orphans_standalone")) {
        c.orphans_standalone = get<bool>(doc, "orphans_standalone", "config");
    }
    if (doc.contains("cycle_cap")) {
        auto cap = get<long long>(doc, "cycle_cap", "config");
        if (cap < 1) throw ConfigError(kModule, "cycle_cap must be at least 1");
        c.cycle_cap = static_cast<std::size_t>(cap);
    }
    if (doc.contains("format")) c.format = get<std::string>(doc, "format", "config");
    if (doc.contains("probe")) {
        const auto& p = doc["probe"];
        if (!p.is_object()) throw SchemaError(kModule, "probe must be an object");
        only(p, {"command", "timeout_s", "success", "pattern", "replace", "staging_prefix", "jobs"}, "probe");
        if (p.contains("command")) c.probe.command = get<std::string>(p, "command", "probe");
        if (p.contains("timeout_s")) c.probe.timeout_s = get<double>(p, "timeout_s", "probe");
        if (p.contains("success")) c.probe.success = get<std::string>(p, "success", "probe");
        if (p.contains("pattern")) c.probe.pattern = get<std::string>(p, "pattern", "probe");
        if (p.contains("staging_prefix")) {
            c.probe.staging_prefix = resolve(base_dir, get<std::string>(p, "staging_prefix", "probe"));
        }
        if (p.contains("jobs")) {
            auto jobs = get<long long>(p, "jobs", "probe");
            if (jobs < 1) throw ConfigError(kModule, "probe jobs must be at least 1");
            c.probe.jobs = static_cast<unsigned>(jobs);
        }
        if (p.contains("replace")) {
            for (const auto& [file, stub] : get<std::map<std::string, std::string>>(p, "replace", "probe")) {
                c.probe.replace[file] = resolve(base_dir, stub);
            }
        }
    }
    c.validate();
    return c;
}

ToolConfig load_config(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(kModule, "cannot read config " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    auto c = parse_config(buf.str(), path.parent_path());
    c.source = path;
    return c;
}

}  // namespace mereoscan::cli

// SPDX-FileCopyrightText: © 2026 The mereoscan Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "mereoscan/depgraph/extract.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "mereoscan/error.hpp"
#include "sha256.hpp"

namespace fs = std::filesystem;

namespace mereoscan::depgraph {

namespace {

constexpr const char* kModule = "depgraph";

std::optional<std::string> read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) return std::nullopt;
    return buf.str();
}

std::string parent_dir(const std::string& path) {
    auto slash = path.rfind('/');
    return slash == std::string::npos ? std::string{} : path.substr(0, slash);
}

std::string join(const std::string& dir, const std::string& rest) {
    return dir.empty() ? rest : dir + "/" + rest;
}

bool claims(Grammar g, const std::string& path) {
    static const std::set<std::string> c_exts{".c", ".h", ".cpp", ".hpp",
                                              ".cc", ".hh", ".cxx", ".hxx"};
    auto ext = fs::path(path).extension().string();
    if (g == Grammar::Python) return ext == ".py";
    return c_exts.count(ext) > 0;
}

// Files and directories of the scanned tree, for module resolution.
struct Layout {
    std::set<std::string> files;
    std::set<std::string> dirs;

    void add(const std::string& path) {
        files.insert(path);
        for (auto d = parent_dir(path); !d.empty(); d = parent_dir(d)) dirs.insert(d);
    }

    // base/a/b.py, then base/a/b/__init__.py.
    std::optional<std::string> module_file(const std::string& base,
                                           const std::string& dotted) const {
        std::string rel = dotted;
        std::replace(rel.begin(), rel.end(), '.', '/');
        if (rel.empty()) {
            auto init = join(base, "__init__.py");
            if (files.count(init)) return init;
            return std::nullopt;
        }
        auto file = join(base, rel + ".py");
        if (files.count(file)) return file;
        auto init = join(base, rel + "/__init__.py");
        if (files.count(init)) return init;
        return std::nullopt;
    }

    bool is_dir(const std::string& base, const std::string& dotted) const {
        std::string rel = dotted;
        std::replace(rel.begin(), rel.end(), '.', '/');
        auto d = rel.empty() ? base : join(base, rel);
        return d.empty() || dirs.count(d) > 0;
    }
};

void resolve_python(DependencyGraph& graph, const Layout& layout,
                    const std::string& from, const ImportStatement& st) {
    const std::string site = std::to_string(st.line);
    std::string module = st.target;
    std::size_t dots = 0;
    while (dots < module.size() && module[dots] == '.') ++dots;
    module = module.substr(dots);

    // Candidate package bases, in search order.
    std::vector<std::string> bases;
    if (dots > 0) {
        std::string base = parent_dir(from);
        bool escaped = false;
        for (std::size_t i = 1; i < dots; ++i) {
            if (base.empty()) {
                escaped = true;
                break;
            }
            base = parent_dir(base);
        }
        if (!escaped) bases.push_back(base);
    } else {
        bases.push_back(parent_dir(from));
        if (!bases.front().empty()) bases.push_back("");
    }

    std::set<std::string> targets;
    for (const auto& base : bases) {
        auto file = layout.module_file(base, module);
        const bool package_dir = layout.is_dir(base, module);
        if (!file && !package_dir) continue;
        if (file) targets.insert(*file);
        // `from pkg import sub` also loads pkg/sub.py when it exists.
        if (package_dir) {
            for (const auto& name : st.names) {
                if (name == "*") continue;
                auto dotted = module.empty() ? name : module + "." + name;
                if (auto sub = layout.module_file(base, dotted)) targets.insert(*sub);
            }
        }
        if (!targets.empty()) break;
    }

    if (targets.empty()) {
        graph.add_unresolved({from, st.target, Mechanism::Import, site, "not-in-tree"});
        return;
    }
    for (const auto& t : targets) {
        if (t == from) {
            graph.add_warning(from + ":" + site + ": import of itself ignored");
            continue;
        }
        graph.add_edge({from, t, Mechanism::Import, site});
    }
}

void resolve_c(DependencyGraph& graph, const std::string& from, const ImportStatement& st) {
    const std::string site = std::to_string(st.line);
    if (st.system) {
        graph.add_unresolved({from, st.target, Mechanism::Include, site, "external"});
        return;
    }
    for (const auto& candidate : {join(parent_dir(from), st.target), st.target}) {
        auto norm = normalize_path(candidate);
        if (norm && graph.contains(*norm)) {
            if (*norm == from) {
                graph.add_warning(from + ":" + site + ": include of itself ignored");
                return;
            }
            graph.add_edge({from, *norm, Mechanism::Include, site});
            return;
        }
    }
    graph.add_unresolved({from, st.target, Mechanism::Include, site, "not-in-tree"});
}

bool skipped_name(const fs::path& p) {
    auto name = p.filename().string();
    return (!name.empty() && name.front() == '.') || name == "__pycache__";
}

std::string canonical_or_self(const fs::path& p) {
    std::error_code ec;
    auto c = fs::weakly_canonical(p, ec);
    return ec ? p.lexically_normal().string() : c.string();
}

}  // namespace

Manifest parse_manifest(std::string_view text) {
    Manifest manifest;
    bool seen_header = false;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string line(text.substr(start, end - start));
        start = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') {
            if (end == text.size()) break;
            continue;
        }

        nlohmann::json rec;
        try {
            rec = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw SchemaError(kModule, std::string("malformed record: ") + e.what(), line_no);
        }
        if (!rec.is_object()) throw SchemaError(kModule, "record must be an object", line_no);
        auto str = [&](const char* key) -> std::string {
            if (!rec.contains(key) || !rec[key].is_string()) {
                throw SchemaError(kModule, std::string("missing string field '") + key + "'",
                                  line_no);
            }
            return rec[key].get<std::string>();
        };
        auto path = [&](const char* key) -> std::string {
            auto raw = str(key);
            auto norm = normalize_path(raw);
            if (!norm) throw SchemaError(kModule, "invalid path '" + raw + "'", line_no);
            return *norm;
        };
        auto only = [&](std::initializer_list<const char*> keys) {
            for (const auto& [k, v] : rec.items()) {
                if (std::none_of(keys.begin(), keys.end(), [&](const char* a) { return k == a; })) {
                    throw SchemaError(kModule, "unknown field '" + k + "'", line_no);
                }
            }
        };

        if (!seen_header) {
            only({"schema"});
            auto schema = str("schema");
            if (schema != kManifestSchema) {
                throw SchemaError(kModule, "unsupported schema '" + schema + "', expected " +
                                               std::string(kManifestSchema), line_no);
            }
            seen_header = true;
        } else if (rec.contains("from")) {
            only({"from", "to", "mechanism", "site"});
            auto mech_name = str("mechanism");
            auto mech = parse_mechanism(mech_name);
            if (!mech) throw SchemaError(kModule, "unknown mechanism '" + mech_name + "'", line_no);
            DepEdge e{path("from"), path("to"), *mech,
                      rec.contains("site") ? str("site") : "manifest:" + std::to_string(line_no)};
            if (e.from == e.to) throw SchemaError(kModule, "self-edge on " + e.from, line_no);
            manifest.edges.push_back(std::move(e));
        } else if (rec.contains("pin")) {
            only({"pin", "version"});
            auto raw = str("pin");
            const bool dir = !raw.empty() && raw.back() == '/';
            auto norm = normalize_path(raw);
            if (!norm) throw SchemaError(kModule, "invalid path '" + raw + "'", line_no);
            manifest.pins[dir ? *norm + "/" : *norm] = str("version");
        } else if (rec.contains("node")) {
            only({"node", "role"});
            auto role_name = str("role");
            auto role = parse_file_role(role_name);
            if (!role) throw SchemaError(kModule, "unknown role '" + role_name + "'", line_no);
            manifest.roles[path("node")] = *role;
        } else if (rec.contains("schema")) {
            throw SchemaError(kModule, "duplicate schema header", line_no);
        } else {
            throw SchemaError(kModule, "unrecognised record", line_no);
        }
        if (end == text.size()) break;
    }
    if (!seen_header) {
        throw SchemaError(kModule, std::string("missing ") + std::string(kManifestSchema) +
                                       " header", line_no == 0 ? 1 : line_no);
    }
    return manifest;
}

DependencyGraph extract_dependencies(const fs::path& root, const ExtractOptions& options) {
    if (options.grammars.empty() && !options.manifest) {
        throw ConfigError(kModule, "no grammar enabled and no manifest given");
    }
    std::error_code ec;
    if (!fs::is_directory(root, ec)) {
        throw IoError(kModule, "cannot read root directory " + root.string());
    }

    std::set<std::string> excluded;
    for (const auto& p : options.exclude) excluded.insert(canonical_or_self(p));
    if (options.manifest) excluded.insert(canonical_or_self(*options.manifest));

    // Walk in sorted order so warnings and the digest are deterministic.
    std::map<std::string, fs::path> files;
    fs::recursive_directory_iterator it(root, fs::directory_options::none, ec);
    if (ec) throw IoError(kModule, "cannot read root directory " + root.string());
    for (; it != fs::recursive_directory_iterator(); it.increment(ec)) {
        if (ec) throw IoError(kModule, "error while scanning " + root.string() + ": " + ec.message());
        const auto& entry = *it;
        if (skipped_name(entry.path())) {
            if (entry.is_directory(ec)) it.disable_recursion_pending();
            continue;
        }
        if (!entry.is_regular_file(ec)) continue;
        if (excluded.count(canonical_or_self(entry.path()))) continue;
        auto rel = normalize_path(entry.path().lexically_relative(root).generic_string());
        if (rel) files.emplace(*rel, entry.path());
    }

    Manifest manifest;
    std::optional<std::string> manifest_bytes;
    if (options.manifest) {
        manifest_bytes = read_file(*options.manifest);
        if (!manifest_bytes) {
            throw IoError(kModule, "cannot read manifest " + options.manifest->string());
        }
        manifest = parse_manifest(*manifest_bytes);
    }

    DependencyGraph graph;
    detail::Sha256 digest;
    Layout layout;
    std::map<std::string, std::string> contents;
    for (const auto& [rel, abs] : files) {
        FileNode node{rel, role_for_path(rel), "none"};
        for (auto g : options.grammars) {
            if (claims(g, rel)) {
                node.grammar = std::string(to_string(g));
                break;
            }
        }
        if (auto r = manifest.roles.find(rel); r != manifest.roles.end()) node.role = r->second;
        graph.add_node(node);
        layout.add(rel);

        auto bytes = read_file(abs);
        digest.update(rel);
        digest.update(std::string_view("\0", 1));
        if (!bytes) {
            graph.add_warning(rel + ": unreadable, no dependencies extracted");
            digest.update("<unreadable>");
        } else {
            digest.update(std::to_string(bytes->size()));
            digest.update(std::string_view("\0", 1));
            digest.update(*bytes);
            if (node.grammar != "none") contents.emplace(rel, std::move(*bytes));
        }
    }

    for (const auto& e : manifest.edges) {
        for (const auto& p : {e.from, e.to}) {
            if (graph.contains(p)) continue;
            auto r = manifest.roles.find(p);
            graph.add_node({p, r != manifest.roles.end() ? r->second : role_for_path(p), "manifest"});
            graph.add_warning(p + ": named in the manifest but not found under the root");
        }
    }

    for (const auto& [rel, text] : contents) {
        const auto& node = graph.node(rel);
        const bool python = node.grammar == "python";
        auto parsed = python ? parse_python_imports(text) : parse_c_includes(text);
        if (parsed.error) {
            graph.add_warning(rel + ": unparseable (" + *parsed.error + "), no dependencies extracted");
            continue;
        }
        for (const auto& st : parsed.statements) {
            if (python) {
                resolve_python(graph, layout, rel, st);
            } else {
                resolve_c(graph, rel, st);
            }
        }
    }

    for (const auto& e : manifest.edges) graph.add_edge(e);
    for (const auto& [p, v] : manifest.pins) graph.add_pin(p, v);

    if (manifest_bytes) {
        digest.update("manifest");
        digest.update(std::string_view("\0", 1));
        digest.update(*manifest_bytes);
    }
    graph.set_digest(digest.hex());
    return graph;
}

}  // namespace mereoscan::depgraph

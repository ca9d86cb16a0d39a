// SPDX-FileCopyrightText: © 2026 The mereoscan Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "mereoscan/depgraph/graph.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "mereoscan/error.hpp"

namespace mereoscan::depgraph {

namespace {

constexpr const char* kModule = "depgraph";

std::string lower_extension(std::string_view path) {
    auto slash = path.rfind('/');
    auto name = slash == std::string_view::npos ? path : path.substr(slash + 1);
    auto dot = name.rfind('.');
    if (dot == std::string_view::npos || dot == 0) return {};
    std::string ext(name.substr(dot));
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return ext;
}

}  // namespace

std::string_view to_string(FileRole r) noexcept {
    switch (r) {
        case FileRole::Source: return "source";
        case FileRole::Data: return "data";
        case FileRole::Config: return "config";
        case FileRole::Object: return "object";
        case FileRole::Unknown: return "unknown";
    }
    return "unknown";
}

std::optional<FileRole> parse_file_role(std::string_view s) noexcept {
    for (auto r : {FileRole::Source, FileRole::Data, FileRole::Config,
                   FileRole::Object, FileRole::Unknown}) {
        if (to_string(r) == s) return r;
    }
    return std::nullopt;
}

FileRole role_for_path(std::string_view path) noexcept {
    static const std::array<std::pair<const char*, FileRole>, 40> table{{
        {".py", FileRole::Source},   {".c", FileRole::Source},
        {".h", FileRole::Source},    {".cpp", FileRole::Source},
        {".hpp", FileRole::Source},  {".cc", FileRole::Source},
        {".hh", FileRole::Source},   {".cxx", FileRole::Source},
        {".hxx", FileRole::Source},  {".java", FileRole::Source},
        {".js", FileRole::Source},   {".ts", FileRole::Source},
        {".go", FileRole::Source},   {".rs", FileRole::Source},
        {".sh", FileRole::Source},   {".txt", FileRole::Data},
        {".csv", FileRole::Data},    {".tsv", FileRole::Data},
        {".dat", FileRole::Data},    {".owl", FileRole::Data},
        {".xml", FileRole::Data},    {".json", FileRole::Data},
        {".dic", FileRole::Data},    {".ttl", FileRole::Data},
        {".ini", FileRole::Config},  {".cfg", FileRole::Config},
        {".conf", FileRole::Config}, {".toml", FileRole::Config},
        {".yaml", FileRole::Config}, {".yml", FileRole::Config},
        {".o", FileRole::Object},    {".obj", FileRole::Object},
        {".so", FileRole::Object},   {".dll", FileRole::Object},
        {".dylib", FileRole::Object}, {".a", FileRole::Object},
        {".lib", FileRole::Object},  {".jar", FileRole::Object},
        {".exe", FileRole::Object},  {".class", FileRole::Object},
    }};
    const auto ext = lower_extension(path);
    for (const auto& [e, role] : table) {
        if (ext == e) return role;
    }
    return FileRole::Unknown;
}

std::string_view to_string(Mechanism m) noexcept {
    switch (m) {
        case Mechanism::Import: return "import";
        case Mechanism::Include: return "include";
        case Mechanism::DataRead: return "data-read";
        case Mechanism::FunctionCallManifest: return "function-call-manifest";
        case Mechanism::Link: return "link";
        case Mechanism::Socket: return "socket";
        case Mechanism::Pipe: return "pipe";
    }
    return "?";
}

std::optional<Mechanism> parse_mechanism(std::string_view s) noexcept {
    for (auto m : {Mechanism::Import, Mechanism::Include, Mechanism::DataRead,
                   Mechanism::FunctionCallManifest, Mechanism::Link,
                   Mechanism::Socket, Mechanism::Pipe}) {
        if (to_string(m) == s) return m;
    }
    return std::nullopt;
}

bool is_loose(Mechanism m) noexcept {
    return m == Mechanism::Socket || m == Mechanism::Pipe;
}

bool is_manifest_mechanism(Mechanism m) noexcept {
    return m != Mechanism::Import && m != Mechanism::Include;
}

bool CouplingPolicy::counts(Mechanism m) const noexcept {
    if (is_loose(m)) return include_loose;
    if (compiled) return is_manifest_mechanism(m);
    return true;
}

std::optional<std::string> normalize_path(std::string_view raw) {
    std::string s(raw);
    std::replace(s.begin(), s.end(), '\\', '/');
    if (s.empty() || s.front() == '/') return std::nullopt;
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= s.size()) {
        auto end = s.find('/', start);
        if (end == std::string::npos) end = s.size();
        std::string seg = s.substr(start, end - start);
        if (seg == "..") {
            if (parts.empty()) return std::nullopt;
            parts.pop_back();
        } else if (!seg.empty() && seg != ".") {
            parts.push_back(std::move(seg));
        }
        start = end + 1;
    }
    if (parts.empty()) return std::nullopt;
    std::string out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) out += "/" + parts[i];
    return out;
}

void DependencyGraph::add_node(FileNode node) {
    auto norm = normalize_path(node.path);
    if (!norm) throw ConsistencyError(kModule, "invalid node path '" + node.path + "'");
    node.path = *norm;
    nodes_.try_emplace(node.path, std::move(node));
}

void DependencyGraph::add_edge(DepEdge edge) {
    if (!contains(edge.from) || !contains(edge.to)) {
        throw ConsistencyError(kModule, "edge " + edge.from + " -> " + edge.to +
                                            " has an endpoint outside the node set");
    }
    if (edge.from == edge.to &&
        (edge.mechanism == Mechanism::Import || edge.mechanism == Mechanism::Include)) {
        throw ConsistencyError(kModule, "self-edge on " + edge.from);
    }
    edges_.insert(std::move(edge));
}

void DependencyGraph::add_unresolved(Unresolved u) { unresolved_.insert(std::move(u)); }

void DependencyGraph::add_pin(std::string path, std::string version) {
    pins_[std::move(path)] = std::move(version);
}

void DependencyGraph::set_entries(std::set<std::string> entries) {
    for (const auto& e : entries) {
        if (!contains(e)) {
            throw ConfigError(kModule, "declared entry '" + e + "' is not in the graph");
        }
    }
    entries_ = std::move(entries);
}

bool DependencyGraph::contains(std::string_view path) const {
    return nodes_.find(std::string(path)) != nodes_.end();
}

const FileNode& DependencyGraph::node(std::string_view path) const {
    auto it = nodes_.find(std::string(path));
    if (it == nodes_.end()) {
        throw LookupError(kModule, "unknown node '" + std::string(path) + "'");
    }
    return it->second;
}

std::optional<std::string> DependencyGraph::pinned_version(std::string_view path) const {
    const std::string p(path);
    if (auto it = pins_.find(p); it != pins_.end()) return it->second;
    for (const auto& [pin, version] : pins_) {
        if (!pin.empty() && pin.back() == '/' && p.rfind(pin, 0) == 0) return version;
    }
    return std::nullopt;
}

}  // namespace mereoscan::depgraph

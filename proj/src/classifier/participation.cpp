// SPDX-FileCopyrightText: © 2026 The mereoscan Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "mereoscan/classifier/participation.hpp"

#include <stdlib.h>

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "mereoscan/depgraph/algorithms.hpp"
#include "mereoscan/error.hpp"

namespace fs = std::filesystem;

namespace mereoscan::classifier {

namespace {

constexpr const char* kModule = "classifier";

struct EvidenceName {
    Evidence kind;
    std::string_view name;
};

constexpr std::array<EvidenceName, 9> kEvidenceNames{{
    {Evidence::Orphan, "orphan"},
    {Evidence::Unreachable, "unreachable"},
    {Evidence::RemovalProbePassed, "removal-probe-passed"},
    {Evidence::RemovalProbeFailed, "removal-probe-failed"},
    {Evidence::RemovalProbeTimeout, "removal-probe-timeout"},
    {Evidence::ReplacementProbePassed, "replacement-probe-passed"},
    {Evidence::ReplacementProbeFailed, "replacement-probe-failed"},
    {Evidence::ReplacementProbeTimeout, "replacement-probe-timeout"},
    {Evidence::PinnedVersion, "pinned-version"},
}};

std::string describe(const ProbeOutcome& o) {
    std::string d = std::string(to_string(o.status));
    if (o.exit_code >= 0) d += ", exit " + std::to_string(o.exit_code);
    if (!o.diagnostic.empty()) d += ", " + o.diagnostic;
    if (o.truncated) d += ", output truncated";
    return d;
}

// Removes the staging directory when it goes out of scope.
struct StagedTree {
    fs::path path;
    ~StagedTree() {
        std::error_code ec;
        if (!path.empty()) fs::remove_all(path, ec);
    }
};

fs::path staging_prefix(const ProbeSpec& spec) {
    return spec.staging_prefix ? *spec.staging_prefix : fs::temp_directory_path();
}

ParticipationClassification probe_file(const depgraph::DependencyGraph& graph,
                                       const std::string& file, const ClassifyOptions& options) {
    const auto& probe = *options.probe;
    const auto prefix = staging_prefix(probe);
    ParticipationClassification c{file, Mode::Mandatory, Basis::Probe, {}};
    const auto pin = graph.pinned_version(file);

    ProbeOutcome removal;
    {
        StagedTree staged{stage_tree(options.root, prefix, {file})};
        removal = run_probe(probe, staged.path);
    }
    const auto removal_kind = removal.status == ProbeStatus::Pass   ? Evidence::RemovalProbePassed
                              : removal.status == ProbeStatus::Fail ? Evidence::RemovalProbeFailed
                                                                    : Evidence::RemovalProbeTimeout;
    c.evidence.push_back({removal_kind, describe(removal), removal.transcript});

    auto stub = options.replacements.find(file);
    if (removal.status == ProbeStatus::Fail && !pin && stub != options.replacements.end()) {
        ProbeOutcome rep;
        {
            StagedTree staged{stage_tree(options.root, prefix, {}, {{file, stub->second}})};
            rep = run_probe(probe, staged.path);
        }
        const auto kind = rep.status == ProbeStatus::Pass   ? Evidence::ReplacementProbePassed
                          : rep.status == ProbeStatus::Fail ? Evidence::ReplacementProbeFailed
                                                            : Evidence::ReplacementProbeTimeout;
        c.evidence.push_back({kind, describe(rep) + ", stub " + stub->second.string(), rep.transcript});
    }
    if (pin) c.evidence.push_back({Evidence::PinnedVersion, "version " + *pin, {}});
    c.mode = derive_mode(c.evidence);
    return c;
}

}  // namespace

std::string_view to_string(Mode m) noexcept {
    switch (m) {
        case Mode::Optional: return "optional";
        case Mode::Mandatory: return "mandatory";
        case Mode::Essential: return "essential";
        case Mode::Unknown: return "unknown";
    }
    return "unknown";
}

std::string_view to_string(Basis b) noexcept {
    return b == Basis::GraphOnly ? "graph-only" : "probe";
}

std::string_view to_string(Evidence e) noexcept {
    for (const auto& n : kEvidenceNames) {
        if (n.kind == e) return n.name;
    }
    return "orphan";
}

std::optional<Mode> parse_mode(std::string_view s) noexcept {
    for (auto m : {Mode::Optional, Mode::Mandatory, Mode::Essential, Mode::Unknown}) {
        if (to_string(m) == s) return m;
    }
    return std::nullopt;
}

std::optional<Basis> parse_basis(std::string_view s) noexcept {
    if (s == "graph-only") return Basis::GraphOnly;
    if (s == "probe") return Basis::Probe;
    return std::nullopt;
}

std::optional<Evidence> parse_evidence(std::string_view s) noexcept {
    for (const auto& n : kEvidenceNames) {
        if (n.name == s) return n.kind;
    }
    return std::nullopt;
}

bool is_probe_evidence(Evidence e) noexcept {
    return e != Evidence::Orphan && e != Evidence::Unreachable && e != Evidence::PinnedVersion;
}

bool ParticipationClassification::has(Evidence e) const noexcept {
    return std::any_of(evidence.begin(), evidence.end(),
                       [e](const Observation& o) { return o.kind == e; });
}

Mode derive_mode(const std::vector<Observation>& evidence) noexcept {
    auto has = [&](std::initializer_list<Evidence> kinds) {
        return std::any_of(evidence.begin(), evidence.end(), [&](const Observation& o) {
            return std::find(kinds.begin(), kinds.end(), o.kind) != kinds.end();
        });
    };
    if (has({Evidence::RemovalProbeTimeout, Evidence::ReplacementProbeTimeout})) return Mode::Unknown;
    if (has({Evidence::RemovalProbePassed})) return Mode::Optional;
    if (has({Evidence::Orphan, Evidence::Unreachable})) return Mode::Optional;
    if (has({Evidence::PinnedVersion})) return Mode::Essential;
    if (has({Evidence::ReplacementProbePassed})) return Mode::Mandatory;
    if (has({Evidence::ReplacementProbeFailed})) return Mode::Essential;
    return Mode::Mandatory;
}

fs::path stage_tree(const fs::path& root, const fs::path& prefix, const std::set<std::string>& remove,
                    const std::map<std::string, fs::path>& replace) {
    std::error_code ec;
    fs::create_directories(prefix, ec);
    if (ec) throw IoError(kModule, "cannot create staging prefix " + prefix.string() + ": " + ec.message());
    std::string tmpl = (prefix / "mereoscan-stage-XXXXXX").string();
    if (!mkdtemp(tmpl.data())) {
        throw IoError(kModule, "cannot create staging directory under " + prefix.string());
    }
    const fs::path staged = tmpl;
    const auto skip = fs::weakly_canonical(staged, ec);

    auto fail = [&](const std::string& what, const std::string& file, const std::error_code& err) {
        std::error_code ignored;
        fs::remove_all(staged, ignored);
        throw IoError(kModule, "staging " + file + ": " + what + ": " + err.message());
    };

    fs::recursive_directory_iterator it(root, ec);
    if (ec) fail("cannot read tree", root.string(), ec);
    for (; it != fs::recursive_directory_iterator(); it.increment(ec)) {
        if (ec) fail("cannot read tree", root.string(), ec);
        const auto& entry = *it;
        std::error_code cec;
        if (fs::weakly_canonical(entry.path(), cec) == skip) {
            it.disable_recursion_pending();
            continue;
        }
        const auto rel = entry.path().lexically_relative(root);
        const auto target = staged / rel;
        if (entry.is_directory(cec)) {
            fs::create_directories(target, cec);
            if (cec) fail("cannot create directory", rel.generic_string(), cec);
            continue;
        }
        if (remove.count(rel.generic_string()) || replace.count(rel.generic_string())) continue;
        fs::copy(entry.path(), target, fs::copy_options::copy_symlinks, cec);
        if (cec) fail("cannot copy", rel.generic_string(), cec);
    }
    for (const auto& [file, stub] : replace) {
        const auto target = staged / file;
        std::error_code rec;
        fs::create_directories(target.parent_path(), rec);
        fs::copy_file(stub, target, fs::copy_options::overwrite_existing, rec);
        if (rec) fail("cannot install stub " + stub.string(), file, rec);
    }
    return staged;
}

std::vector<ParticipationClassification> classify_participation(
    const depgraph::DependencyGraph& graph, const std::set<std::string>& entries,
    const ClassifyOptions& options) {
    for (const auto& e : entries) {
        if (!graph.contains(e)) throw ConfigError(kModule, "entry '" + e + "' is not in the graph");
    }
    if (!options.replacements.empty() && !options.probe) {
        throw ConfigError(kModule, "replacement stubs need a probe");
    }
    for (const auto& [file, stub] : options.replacements) {
        if (!graph.contains(file)) {
            throw ConfigError(kModule, "replacement target '" + file + "' is not in the graph");
        }
        std::error_code ec;
        if (!fs::is_regular_file(stub, ec)) {
            throw IoError(kModule, "replacement stub for " + file + " not readable: " + stub.string());
        }
    }

    std::vector<std::string> files;
    for (const auto& [path, node] : graph.nodes()) files.push_back(path);
    std::vector<ParticipationClassification> out(files.size());

    if (!options.probe) {
        const auto orphans = depgraph::detect_orphans(graph, entries, options.policy);
        const auto reach = depgraph::forward_reachable(graph, entries, options.policy);
        for (std::size_t i = 0; i < files.size(); ++i) {
            auto& c = out[i];
            c.file = files[i];
            c.basis = Basis::GraphOnly;
            if (orphans.count(c.file)) {
                c.evidence.push_back({Evidence::Orphan, "no coupling path to an entry point", {}});
            } else if (!reach.count(c.file)) {
                c.evidence.push_back({Evidence::Unreachable, "not reachable from an entry point", {}});
            }
            if (auto pin = graph.pinned_version(c.file)) {
                c.evidence.push_back({Evidence::PinnedVersion, "version " + *pin, {}});
            }
            c.mode = derive_mode(c.evidence);
        }
        return out;
    }

    options.probe->validate();
    std::error_code ec;
    if (!fs::is_directory(options.root, ec)) {
        throw IoError(kModule, "probe root is not a directory: " + options.root.string());
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto worker = [&] {
        for (;;) {
            const auto i = next.fetch_add(1);
            if (i >= files.size()) return;
            try {
                out[i] = probe_file(graph, files[i], options);
            } catch (...) {
                std::lock_guard lock(failure_mu);
                if (!failure) failure = std::current_exception();
                next = files.size();
                return;
            }
        }
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(options.probe->jobs,
                                                          static_cast<unsigned>(files.size())));
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return out;
}

ProbeOutcome check_self_consistency(const fs::path& root, const ProbeSpec& probe,
                                    const std::vector<ParticipationClassification>& result) {
    std::set<std::string> remove;
    for (const auto& c : result) {
        if (c.basis == Basis::Probe && c.mode == Mode::Optional) remove.insert(c.file);
    }
    StagedTree staged{stage_tree(root, staging_prefix(probe), remove)};
    return run_probe(probe, staged.path);
}

}  // namespace mereoscan::classifier

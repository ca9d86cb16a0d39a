// SPDX-FileCopyrightText: © 2026 The mereoscan Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "mereoscan/verdict/report_io.hpp"

#include <sstream>

#include "json.hpp"
#include "mereoscan/error.hpp"

namespace mereoscan::verdict {

namespace {

constexpr const char* kModule = "verdict";
using ojson = nlohmann::ordered_json;

const ojson& at(const ojson& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key)) {
        throw SchemaError(kModule, std::string("missing field '") + key + "'");
    }
    return obj.at(key);
}

template <typename T>
T get(const ojson& obj, const char* key) {
    try {
        return at(obj, key).get<T>();
    } catch (const nlohmann::json::type_error&) {
        throw SchemaError(kModule, std::string("field '") + key + "' has the wrong type");
    }
}

const ojson& array(const ojson& obj, const char* key) {
    const auto& v = at(obj, key);
    if (!v.is_array()) throw SchemaError(kModule, std::string("field '") + key + "' must be an array");
    return v;
}

core::UnityDirection parse_direction(const std::string& s) {
    for (auto d : {core::UnityDirection::Forward, core::UnityDirection::Backward}) {
        if (core::to_string(d) == s) return d;
    }
    throw SchemaError(kModule, "unknown direction '" + s + "'");
}

core::WitnessKind parse_witness_kind(const std::string& s) {
    for (auto k : {core::WitnessKind::BoundWithoutCommonWhole, core::WitnessKind::CommonWholeWithoutBinding}) {
        if (core::to_string(k) == s) return k;
    }
    throw SchemaError(kModule, "unknown witness kind '" + s + "'");
}

ojson to_json(const WholenessVerdict& v) {
    auto files = ojson::array();
    for (const auto& f : v.files) files.push_back({{"path", f.path}, {"mode", f.mode}});
    auto cex = ojson::array();
    for (const auto& c : v.counterexamples) {
        cex.push_back({{"part", c.part},
                       {"whole", c.whole},
                       {"other", c.other},
                       {"time", c.time},
                       {"direction", core::to_string(c.direction)}});
    }
    auto evidence = ojson::array();
    for (const auto& e : v.evidence) {
        evidence.push_back({{"clause", e.clause}, {"passed", e.passed}, {"detail", e.detail}});
    }
    return {{"component", v.component},
            {"class", core::to_string(v.cls)},
            {"binding_name", v.binding_name},
            {"standalone", v.standalone},
            {"files", std::move(files)},
            {"counterexamples", std::move(cex)},
            {"evidence", std::move(evidence)},
            {"notes", v.notes}};
}

WholenessVerdict verdict_from_json(const ojson& j) {
    WholenessVerdict v;
    v.component = get<std::string>(j, "component");
    const auto cls_name = get<std::string>(j, "class");
    auto cls = core::parse_aggregate_class(cls_name);
    if (!cls) throw SchemaError(kModule, "unknown class '" + cls_name + "'");
    v.cls = *cls;
    v.binding_name = get<std::string>(j, "binding_name");
    v.standalone = get<bool>(j, "standalone");
    for (const auto& f : array(j, "files")) {
        v.files.push_back({get<std::string>(f, "path"), get<std::string>(f, "mode")});
    }
    for (const auto& c : array(j, "counterexamples")) {
        v.counterexamples.push_back({get<std::string>(c, "part"), get<std::string>(c, "whole"),
                                     get<std::string>(c, "other"), get<core::TimePoint>(c, "time"),
                                     parse_direction(get<std::string>(c, "direction"))});
    }
    for (const auto& e : array(j, "evidence")) {
        v.evidence.push_back({get<std::string>(e, "clause"), get<bool>(e, "passed"),
                              get<std::string>(e, "detail")});
    }
    v.notes = get<std::vector<std::string>>(j, "notes");
    return v;
}

std::string structured(const WholenessReport& r) {
    ojson doc;
    doc["schema"] = kReportSchema;
    doc["tool_version"] = r.tool_version;
    doc["input_digest"] = r.input_digest;
    doc["mode"] = r.mode;
    doc["binding_name"] = r.binding_name;
    doc["file_count"] = r.file_count;
    doc["entries"] = r.entries;
    auto verdicts = ojson::array();
    for (const auto& v : r.verdicts) verdicts.push_back(to_json(v));
    doc["verdicts"] = std::move(verdicts);
    doc["standalone_units"] = r.standalone_units;
    doc["infringement_units"] = r.infringement_units;
    doc["orphan_files"] = r.orphan_files;
    doc["cycles"] = r.cycles;
    doc["cycles_truncated"] = r.cycles_truncated;
    auto witnesses = ojson::array();
    for (const auto& w : r.noncontingency_witnesses) {
        witnesses.push_back({{"first", w.first},
                             {"second", w.second},
                             {"time", w.time},
                             {"kind", core::to_string(w.kind)}});
    }
    doc["noncontingency_witnesses"] = std::move(witnesses);
    doc["warnings"] = r.warnings;
    doc["notes"] = r.notes;
    return doc.dump(2) + "\n";
}

void list(std::ostringstream& out, const char* title, const std::vector<std::string>& items) {
    out << title << ":";
    if (items.empty()) {
        out << " none\n";
        return;
    }
    out << "\n";
    for (const auto& i : items) out << "  " << i << "\n";
}

std::string human(const WholenessReport& r) {
    std::ostringstream out;
    const auto wholes = r.infringement_units - r.standalone_units;
    out << "mereoscan " << r.tool_version << "\n";
    out << "input digest: " << r.input_digest << "\n";
    out << "mode: " << r.mode << " (binding: " << r.binding_name << ")\n";
    out << "files: " << r.file_count << "\n";
    out << "entries: " << (r.entries.empty() ? "none" : "") ;
    for (std::size_t i = 0; i < r.entries.size(); ++i) out << (i ? ", " : "") << r.entries[i];
    out << "\n";
    out << "verdicts: " << r.verdicts.size() << "\n";
    out << "infringement units: " << r.infringement_units << " (functional wholes: " << wholes
        << ", standalone: " << r.standalone_units << ")\n";

    for (const auto& v : r.verdicts) {
        out << "\ncomponent " << v.component << ": " << core::to_string(v.cls)
            << " (binding: " << v.binding_name << ")" << (v.standalone ? " [standalone]" : "") << "\n";
        out << "  files:\n";
        for (const auto& f : v.files) out << "    " << f.path << "  " << f.mode << "\n";
        out << "  evidence:\n";
        for (const auto& e : v.evidence) {
            out << "    [" << (e.passed ? "yes" : "no") << "] " << e.clause;
            if (!e.detail.empty()) out << ": " << e.detail;
            out << "\n";
        }
        if (!v.counterexamples.empty()) {
            out << "  counterexamples:\n";
            for (const auto& c : v.counterexamples) {
                out << "    x=" << c.part << " y=" << c.whole << " z=" << c.other << " t=" << c.time
                    << " " << core::to_string(c.direction) << "\n";
            }
        }
        for (const auto& n : v.notes) out << "  note: " << n << "\n";
    }

    out << "\n";
    list(out, "orphan files", r.orphan_files);
    std::vector<std::string> cycles;
    for (const auto& c : r.cycles) {
        std::string line;
        for (const auto& p : c) line += p + " -> ";
        cycles.push_back(line + c.front());
    }
    if (r.cycles_truncated) cycles.push_back("(truncated)");
    list(out, "cycles", cycles);
    std::vector<std::string> witnesses;
    for (const auto& w : r.noncontingency_witnesses) {
        witnesses.push_back("(" + w.first + ", " + w.second + ", " + std::to_string(w.time) + ") " +
                            std::string(core::to_string(w.kind)));
    }
    list(out, "non-contingency witnesses", witnesses);
    list(out, "warnings", r.warnings);
    list(out, "notes", r.notes);
    return out.str();
}

}  // namespace

std::optional<Format> parse_format(std::string_view s) noexcept {
    if (s == "human") return Format::Human;
    if (s == "structured" || s == "json") return Format::Structured;
    return std::nullopt;
}

Format format_or_throw(std::string_view s) {
    if (auto f = parse_format(s)) return *f;
    throw ConfigError(kModule, "unknown format '" + std::string(s) + "' (expected human or structured)");
}

std::string render_report(const WholenessReport& report, Format format) {
    return format == Format::Human ? human(report) : structured(report);
}

WholenessReport parse_report(std::string_view text) {
    ojson doc;
    try {
        doc = ojson::parse(text);
    } catch (const ojson::parse_error& e) {
        throw SchemaError(kModule, e.what());
    }
    if (get<std::string>(doc, "schema") != kReportSchema) {
        throw SchemaError(kModule, "unsupported schema, expected " + std::string(kReportSchema));
    }
    WholenessReport r;
    r.tool_version = get<std::string>(doc, "tool_version");
    r.input_digest = get<std::string>(doc, "input_digest");
    r.mode = get<std::string>(doc, "mode");
    r.binding_name = get<std::string>(doc, "binding_name");
    r.file_count = get<std::size_t>(doc, "file_count");
    r.entries = get<std::vector<std::string>>(doc, "entries");
    for (const auto& v : array(doc, "verdicts")) r.verdicts.push_back(verdict_from_json(v));
    r.standalone_units = get<std::size_t>(doc, "standalone_units");
    r.infringement_units = get<std::size_t>(doc, "infringement_units");
    r.orphan_files = get<std::vector<std::string>>(doc, "orphan_files");
    r.cycles = get<std::vector<std::vector<std::string>>>(doc, "cycles");
    r.cycles_truncated = get<bool>(doc, "cycles_truncated");
    for (const auto& w : array(doc, "noncontingency_witnesses")) {
        r.noncontingency_witnesses.push_back({get<std::string>(w, "first"), get<std::string>(w, "second"),
                                              get<core::TimePoint>(w, "time"),
                                              parse_witness_kind(get<std::string>(w, "kind"))});
    }
    r.warnings = get<std::vector<std::string>>(doc, "warnings");
    r.notes = get<std::vector<std::string>>(doc, "notes");
    return r;
}

}  // namespace mereoscan::verdict

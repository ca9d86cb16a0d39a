// SPDX-FileCopyrightText: © 2026 The mereoscan Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "mereoscan/classifier/classify_io.hpp"

#include "json.hpp"
#include "mereoscan/error.hpp"

namespace mereoscan::classifier {

namespace {

constexpr const char* kModule = "classifier";
using ojson = nlohmann::ordered_json;

std::string str(const ojson& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key) || !obj.at(key).is_string()) {
        throw SchemaError(kModule, std::string("missing string field '") + key + "'");
    }
    return obj.at(key).get<std::string>();
}

}  // namespace

std::string print_classification(const std::vector<ParticipationClassification>& result) {
    ojson doc;
    doc["schema"] = kClassifySchema;
    doc["immutable"] = "not-applicable";
    auto files = ojson::array();
    for (const auto& c : result) {
        auto evidence = ojson::array();
        for (const auto& o : c.evidence) {
            ojson e{{"kind", to_string(o.kind)}, {"detail", o.detail}};
            if (!o.transcript.empty()) e["transcript"] = o.transcript;
            evidence.push_back(std::move(e));
        }
        files.push_back({{"file", c.file},
                         {"mode", to_string(c.mode)},
                         {"basis", to_string(c.basis)},
                         {"evidence", std::move(evidence)}});
    }
    doc["files"] = std::move(files);
    return doc.dump(2) + "\n";
}

std::vector<ParticipationClassification> parse_classification(std::string_view text) {
    ojson doc;
    try {
        doc = ojson::parse(text);
    } catch (const ojson::parse_error& e) {
        throw SchemaError(kModule, e.what());
    }
    if (str(doc, "schema") != kClassifySchema) {
        throw SchemaError(kModule, "unsupported schema, expected " + std::string(kClassifySchema));
    }
    if (!doc.contains("files") || !doc["files"].is_array()) {
        throw SchemaError(kModule, "missing array field 'files'");
    }
    std::vector<ParticipationClassification> out;
    for (const auto& f : doc["files"]) {
        ParticipationClassification c;
        c.file = str(f, "file");
        auto mode = parse_mode(str(f, "mode"));
        auto basis = parse_basis(str(f, "basis"));
        if (!mode || !basis) throw SchemaError(kModule, c.file + ": unknown mode or basis");
        c.mode = *mode;
        c.basis = *basis;
        if (f.contains("evidence")) {
            if (!f["evidence"].is_array()) throw SchemaError(kModule, c.file + ": evidence must be an array");
            for (const auto& e : f["evidence"]) {
                auto kind = parse_evidence(str(e, "kind"));
                if (!kind) throw SchemaError(kModule, c.file + ": unknown evidence '" + str(e, "kind") + "'");
                c.evidence.push_back({*kind, str(e, "detail"), e.contains("transcript") ? str(e, "transcript") : ""});
            }
        }
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace mereoscan::classifier

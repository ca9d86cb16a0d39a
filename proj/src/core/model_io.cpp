// SPDX-FileCopyrightText: © 2026 The mereoscan Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "mereoscan/core/model_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "mereoscan/error.hpp"

namespace mereoscan::core {

namespace {

constexpr const char* kModule = "partwhole-core";

using nlohmann::ordered_json;

std::size_t line_of(std::string_view text, std::size_t byte) {
    byte = std::min(byte, text.size());
    return 1 + static_cast<std::size_t>(
                   std::count(text.begin(), text.begin() + byte, '\n'));
}

template <class T>
T field(const ordered_json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key)) {
        throw SchemaError(kModule, where + ": missing field '" + key + "'");
    }
    try {
        return obj.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw SchemaError(kModule, where + ": field '" + key +
                                       "' has the wrong type");
    }
}

}  // namespace

std::string print_model(const FiniteModel& model) {
    ordered_json doc;
    doc["schema"] = kModelSchema;
    doc["horizon"] = model.horizon();
    doc["binding_name"] = model.binding_name();
    auto& entities = doc["entities"] = ordered_json::array();
    for (const auto& e : model.entities()) {
        ordered_json j;
        j["id"] = e.id;
        j["label"] = e.label;
        j["kind"] = e.kind;
        if (e.level) j["level"] = *e.level;
        if (e.role) j["role"] = *e.role;
        if (!e.tags.empty()) j["tags"] = e.tags;
        entities.push_back(std::move(j));
    }
    auto& tuples = doc["tuples"] = ordered_json::array();
    for (const auto& t : model.tuples()) {
        ordered_json j;
        j["kind"] = to_string(t.kind);
        j["first"] = model.id(t.first);
        j["second"] = model.id(t.second);
        j["time"] = t.time;
        tuples.push_back(std::move(j));
    }
    return doc.dump(2) + "\n";
}

FiniteModel parse_model(std::string_view text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(kModule, std::string("malformed model: ") + e.what(),
                          line_of(text, e.byte));
    }
    if (!doc.is_object()) throw SchemaError(kModule, "model must be an object");
    auto schema = field<std::string>(doc, "schema", "model");
    if (schema != kModelSchema) {
        throw SchemaError(kModule, "unsupported schema '" + schema +
                                       "', expected " +
                                       std::string(kModelSchema));
    }

    ModelBuilder builder;
    long long horizon = field<long long>(doc, "horizon", "model");
    if (horizon < 1) throw ModelError(kModule, "horizon must be at least 1");
    builder.horizon(static_cast<std::size_t>(horizon));
    if (doc.contains("binding_name")) {
        builder.binding_name(field<std::string>(doc, "binding_name", "model"));
    }

    const auto entities = doc.value("entities", ordered_json::array());
    if (!entities.is_array()) throw SchemaError(kModule, "entities must be an array");
    for (std::size_t i = 0; i < entities.size(); ++i) {
        const auto& j = entities[i];
        const std::string where = "entities[" + std::to_string(i) + "]";
        if (!j.is_object()) throw SchemaError(kModule, where + " must be an object");
        Entity e;
        e.id = field<std::string>(j, "id", where);
        e.label = j.contains("label") ? field<std::string>(j, "label", where) : e.id;
        e.kind = j.contains("kind") ? field<std::string>(j, "kind", where) : "other";
        if (j.contains("level")) e.level = field<int>(j, "level", where);
        if (j.contains("role")) e.role = field<std::string>(j, "role", where);
        if (j.contains("tags")) {
            auto tags = field<std::vector<std::string>>(j, "tags", where);
            e.tags.insert(tags.begin(), tags.end());
        }
        builder.add_entity(std::move(e));
    }

    const auto tuples = doc.value("tuples", ordered_json::array());
    if (!tuples.is_array()) throw SchemaError(kModule, "tuples must be an array");
    for (std::size_t i = 0; i < tuples.size(); ++i) {
        const auto& j = tuples[i];
        const std::string where = "tuples[" + std::to_string(i) + "]";
        if (!j.is_object()) throw SchemaError(kModule, where + " must be an object");
        auto kind_name = field<std::string>(j, "kind", where);
        auto kind = parse_relation_kind(kind_name);
        if (!kind) {
            throw SchemaError(kModule,
                              where + ": unknown relation kind '" + kind_name + "'");
        }
        long long time = j.contains("time") ? field<long long>(j, "time", where) : 0;
        if (time < 0) throw SchemaError(kModule, where + ": negative time");
        builder.add_tuple(*kind, field<std::string>(j, "first", where),
                          field<std::string>(j, "second", where),
                          static_cast<TimePoint>(time));
    }
    return builder.build();
}

FiniteModel load_model(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(kModule, "cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_model(buf.str());
}

}  // namespace mereoscan::core

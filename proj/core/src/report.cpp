#include "containerlab/report.hpp"

#include <json.hpp>

namespace clab {

using nlohmann::json;

const char* to_string(ValueSource s) {
    switch (s) {
        case ValueSource::Published: return "published";
        case ValueSource::Exact: return "exact";
        case ValueSource::Computed: return "computed";
    }
    return "computed";
}

namespace {

json value_to_json(const ReportValue& v) {
    return std::visit([](const auto& x) { return json(x); }, v);
}

}  // namespace

bool Report::all_asserted_pass() const {
    for (const auto& c : checks) {
        if (c.asserted && !c.pass) return false;
    }
    return true;
}

std::string Report::render_json() const {
    json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = command;
    j["config"] = json::object();
    for (const auto& [k, v] : config) j["config"][k] = value_to_json(v);
    j["outputs"] = json::object();
    for (const auto& [k, v] : outputs) j["outputs"][k] = value_to_json(v);
    j["checks"] = json::array();
    for (const auto& c : checks) {
        j["checks"].push_back({{"name", c.name},
                               {"lhs", c.lhs},
                               {"relation", c.relation},
                               {"rhs", c.rhs},
                               {"pass", c.pass},
                               {"asserted", c.asserted},
                               {"source", to_string(c.source)}});
    }
    if (include_wall_time) j["wall_time_ms"] = wall_time_ms;
    return j.dump(2) + "\n";
}

std::string Report::render_csv() const {
    std::string out = "key,value\n";
    const auto emit = [&](const std::string& key, const ReportValue& v) {
        if (const auto* vec = std::get_if<std::vector<double>>(&v)) {
            for (std::size_t i = 0; i < vec->size(); ++i)
                out += key + "[" + std::to_string(i) + "]," + json((*vec)[i]).dump() + "\n";
        } else if (const auto* ivec = std::get_if<std::vector<std::int64_t>>(&v)) {
            for (std::size_t i = 0; i < ivec->size(); ++i)
                out += key + "[" + std::to_string(i) + "]," + std::to_string((*ivec)[i]) + "\n";
        } else {
            out += key + "," + value_to_json(v).dump() + "\n";
        }
    };
    out += "command," + command + "\n";
    for (const auto& [k, v] : config) emit("config." + k, v);
    for (const auto& [k, v] : outputs) emit("outputs." + k, v);
    for (const auto& c : checks) {
        out += "check." + c.name + ".lhs," + json(c.lhs).dump() + "\n";
        out += "check." + c.name + ".rhs," + json(c.rhs).dump() + "\n";
        out += "check." + c.name + ".pass," + (c.pass ? std::string("true") : std::string("false")) + "\n";
    }
    return out;
}

bool report_json_matches_schema(const std::string& json_text, std::string* why) {
    const auto fail = [&](const std::string& reason) {
        if (why) *why = reason;
        return false;
    };
    json j = json::parse(json_text, nullptr, false);
    if (j.is_discarded()) return fail("not valid JSON");
    if (!j.is_object()) return fail("top level must be an object");
    for (const char* key : {"tool", "version", "command"}) {
        if (!j.contains(key) || !j[key].is_string()) return fail(std::string(key) + " must be a string");
    }
    for (const char* key : {"config", "outputs"}) {
        if (!j.contains(key) || !j[key].is_object()) return fail(std::string(key) + " must be an object");
    }
    if (!j.contains("checks") || !j["checks"].is_array()) return fail("checks must be an array");
    for (const auto& c : j["checks"]) {
        if (!c.is_object()) return fail("each check must be an object");
        if (!c.contains("name") || !c["name"].is_string()) return fail("check.name must be a string");
        for (const char* key : {"lhs", "rhs"}) {
            if (!c.contains(key) || !c[key].is_number()) return fail("check sides must be numbers");
        }
        if (!c.contains("relation") || !c["relation"].is_string())
            return fail("check.relation must be a string");
        for (const char* key : {"pass", "asserted"}) {
            if (!c.contains(key) || !c[key].is_boolean()) return fail("check flags must be booleans");
        }
        if (!c.contains("source") || !c["source"].is_string())
            return fail("check.source must be a string");
        const std::string s = c["source"].get<std::string>();
        if (s != "published" && s != "exact" && s != "computed")
            return fail("check.source must be published|exact|computed");
    }
    if (j.contains("wall_time_ms") && !j["wall_time_ms"].is_number())
        return fail("wall_time_ms must be a number when present");
    return true;
}

}  // namespace clab

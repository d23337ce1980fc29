#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace clab {

inline constexpr const char* kToolName = "containerlab";
inline constexpr const char* kToolVersion = "0.1.0";

/// Where a reference value comes from: quoted from the literature, forced by
/// a definition or identity, or computed by an independent oracle here.
enum class ValueSource { Published, Exact, Computed };

const char* to_string(ValueSource s);

/// One named inequality with both sides recorded. Asserted checks decide the
/// process exit status; report-only checks never do.
struct Check {
    std::string name;
    double lhs = 0.0;
    std::string relation;  // "<=", ">=", "==", "~=", ...
    double rhs = 0.0;
    bool pass = false;
    bool asserted = true;
    ValueSource source = ValueSource::Computed;
};

using ReportValue = std::variant<std::int64_t, double, bool, std::string,
                                 std::vector<double>, std::vector<std::int64_t>>;

/// Everything a CLI run emits: the echoed config, the operation outputs and
/// the checks. Rendering is deterministic; wall time is the only field that
/// varies between identical runs and it can be suppressed.
struct Report {
    std::string command;
    std::map<std::string, ReportValue> config;
    std::map<std::string, ReportValue> outputs;
    std::vector<Check> checks;
    double wall_time_ms = 0.0;
    bool include_wall_time = true;

    void set_config(const std::string& key, ReportValue v) { config[key] = std::move(v); }
    void set_output(const std::string& key, ReportValue v) { outputs[key] = std::move(v); }
    void add_check(Check c) { checks.push_back(std::move(c)); }

    bool all_asserted_pass() const;

    std::string render_json() const;
    /// Flat key,value rows; curve vectors expand to one row per point.
    std::string render_csv() const;
};

/// Structural validation mirroring docs/report-schema.json.
bool report_json_matches_schema(const std::string& json_text, std::string* why = nullptr);

}  // namespace clab

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "containerlab/report.hpp"

using namespace clab;

namespace {

Report sample_report() {
    Report rep;
    rep.command = "metric count";
    rep.set_config("n", std::int64_t{3});
    rep.set_config("r", std::int64_t{3});
    rep.set_config("seed", std::int64_t{0});
    rep.set_output("metric_count", std::string("24"));
    rep.set_output("rate", 0.5);
    rep.set_output("curve", std::vector<double>{0.1, 0.2});
    rep.add_check({"count_equals_oracle", 24.0, "==", 24.0, true, true, ValueSource::Computed});
    rep.add_check({"direction_only", 1.0, "<=", 2.0, true, false, ValueSource::Published});
    rep.wall_time_ms = 12.5;
    return rep;
}

}  // namespace

TEST_CASE("json rendering validates against the shipped schema") {
    const Report rep = sample_report();
    const std::string text = rep.render_json();
    std::string why;
    CHECK(report_json_matches_schema(text, &why));
    CHECK(why.empty());
    CHECK(text.find("\"tool\": \"containerlab\"") != std::string::npos);
    CHECK(text.find("\"metric_count\": \"24\"") != std::string::npos);
    CHECK(text.find("\"source\": \"computed\"") != std::string::npos);
}

TEST_CASE("asserted checks decide the outcome, report-only ones do not") {
    Report rep = sample_report();
    CHECK(rep.all_asserted_pass());
    rep.add_check({"failing_but_report_only", 2.0, "<=", 1.0, false, false, ValueSource::Computed});
    CHECK(rep.all_asserted_pass());
    rep.add_check({"failing_asserted", 2.0, "<=", 1.0, false, true, ValueSource::Computed});
    CHECK_FALSE(rep.all_asserted_pass());
}

TEST_CASE("wall time can be suppressed for byte-identical replays") {
    Report rep = sample_report();
    rep.include_wall_time = false;
    const std::string a = rep.render_json();
    rep.wall_time_ms = 9999.0;
    const std::string b = rep.render_json();
    CHECK(a == b);
    CHECK(a.find("wall_time_ms") == std::string::npos);
}

TEST_CASE("schema validator rejects malformed payloads") {
    std::string why;
    CHECK_FALSE(report_json_matches_schema("not json", &why));
    CHECK_FALSE(report_json_matches_schema("[]", &why));
    CHECK_FALSE(report_json_matches_schema("{\"tool\":\"x\"}", &why));
    CHECK_FALSE(report_json_matches_schema(
        R"({"tool":"t","version":"v","command":"c","config":{},"outputs":{},
            "checks":[{"name":"n","lhs":1,"rhs":2,"relation":"<=","pass":true,
                       "asserted":true,"source":"guessed"}]})",
        &why));
    CHECK(why.find("source") != std::string::npos);
}

TEST_CASE("csv rendering expands curve vectors") {
    const std::string csv = sample_report().render_csv();
    CHECK(csv.rfind("key,value\n", 0) == 0);
    CHECK(csv.find("outputs.curve[0],0.1") != std::string::npos);
    CHECK(csv.find("outputs.curve[1],0.2") != std::string::npos);
    CHECK(csv.find("check.count_equals_oracle.pass,true") != std::string::npos);
}

TEST_CASE("the shipped schema file names exactly the keys the validator enforces") {
    std::ifstream in(SCHEMA_PATH);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string schema = ss.str();
    for (const char* key : {"tool", "version", "command", "config", "outputs", "checks", "name",
                            "lhs", "rhs", "relation", "pass", "asserted", "source",
                            "wall_time_ms", "published", "exact", "computed"}) {
        CHECK(schema.find(key) != std::string::npos);
    }
}

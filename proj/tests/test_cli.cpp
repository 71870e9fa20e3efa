#include <doctest.h>

#include <json.hpp>

#include "fixtures.hpp"

using nlohmann::json;

namespace {

fixtures::RunResult run_in_data(const std::string& args, const std::string& env = "") {
    std::string prefix = "cd " + std::string(QVC_DATA_DIR) + " &&";
    if (!env.empty()) prefix += " " + env;
    return fixtures::run_cli(args, prefix);
}

std::string golden(const std::string& name) {
    return fixtures::read_text_file(std::string(QVC_GOLDEN_DIR) + "/" + name);
}

}  // namespace

TEST_CASE("exit codes follow the documented contract") {
    CHECK(run_in_data("check bondal.quiver").exit_code == 0);
    CHECK(run_in_data("gram bondal.quiver").exit_code == 0);
    CHECK(run_in_data("certify-jh bondal.quiver").exit_code == 0);
    CHECK(run_in_data("certify-nonext bondal.quiver 1,1,1").exit_code == 0);

    // Not verified: extendable class, surveys without a violation.
    CHECK(run_in_data("certify-nonext bondal.quiver 0,0,1").exit_code == 1);
    CHECK(run_in_data("-B 2 certify-jh a2.quiver").exit_code == 1);

    // Input errors: bad class, missing file, malformed spec, usage mistakes.
    CHECK(run_in_data("certify-nonext bondal.quiver 1,0,1").exit_code == 2);
    CHECK(run_in_data("check no_such.quiver").exit_code == 2);
    CHECK(run_in_data("certify-nonext bondal.quiver 1,1").exit_code == 2);
    CHECK(run_in_data("frobnicate bondal.quiver").exit_code == 2);
    CHECK(run_in_data("check").exit_code == 2);
    CHECK(run_in_data("--format yaml check bondal.quiver").exit_code == 2);
    CHECK(run_in_data("-B 0 certify-jh bondal.quiver").exit_code == 2);

    CHECK(fixtures::run_cli("--help").exit_code == 0);
    CHECK(fixtures::run_cli("--version").exit_code == 0);
}

TEST_CASE("error text goes to stderr, reports to stdout") {
    fixtures::RunResult bad = run_in_data("check no_such.quiver");
    CHECK(bad.out.empty());  // stderr is discarded by the runner

    fixtures::RunResult good = run_in_data("check bondal.quiver");
    CHECK_FALSE(good.out.empty());
    json r = json::parse(good.out);
    CHECK(r["command"] == "check");
    CHECK(r["result"]["quiver"] == "bondal");
    CHECK(r["result"]["algebra_dimension"] == "9");
    CHECK(r["result"]["global_dimension"] == "2");
    CHECK(r["result"]["relations_minimal"] == true);
}

TEST_CASE("the ext table of the outer simples") {
    fixtures::RunResult r = run_in_data("ext S1.rep S2.rep");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["result"]["ext"] == json::array({"0", "2", "0"}));
    CHECK(j["result"]["euler_characteristic"] == "-2");
}

TEST_CASE("exceptional verdict for the flagship representation") {
    fixtures::RunResult r = run_in_data("exceptional bondal.quiver P.rep");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["result"]["class"] == json::array({"1", "1", "1"}));
    CHECK(j["result"]["exceptional"] == true);
    CHECK(j["result"]["self_ext"] == json::array({"1", "0", "0"}));
}

TEST_CASE("mutate applies braid words and round trips") {
    fixtures::RunResult fwd = run_in_data("mutate bondal.quiver -w \"1 2\"");
    REQUIRE(fwd.exit_code == 0);
    json j = json::parse(fwd.out);
    CHECK(j["result"]["exceptional"] == true);
    CHECK((j["result"]["determinant"] == "1" || j["result"]["determinant"] == "-1"));

    fixtures::RunResult back = run_in_data("mutate bondal.quiver -w \"1 2 -2 -1\"");
    REQUIRE(back.exit_code == 0);
    json b = json::parse(back.out);
    CHECK(b["result"]["final"] == b["result"]["initial"]);

    CHECK(run_in_data("mutate bondal.quiver -w 5").exit_code == 2);
    CHECK(run_in_data("mutate bondal.quiver -w 0").exit_code == 2);
    CHECK(run_in_data("mutate bondal.quiver -w x").exit_code == 2);
}

TEST_CASE("format selection by flag and environment") {
    fixtures::RunResult text = run_in_data("--format text gram bondal.quiver");
    REQUIRE(text.exit_code == 0);
    CHECK(text.out.find("command: gram") != std::string::npos);
    CHECK(text.out.find("{") == std::string::npos);

    fixtures::RunResult env = run_in_data("gram bondal.quiver", "QVC_FORMAT=text");
    CHECK(env.out == text.out);

    // The flag wins over the environment.
    fixtures::RunResult flag = run_in_data("--format json gram bondal.quiver", "QVC_FORMAT=text");
    CHECK(flag.out.find("\"command\": \"gram\"") != std::string::npos);

    // Text and JSON carry the same values.
    json j = json::parse(flag.out);
    CHECK(text.out.find(j["inputs"]["quiver"]["sha256"].get<std::string>()) != std::string::npos);
}

TEST_CASE("reports are byte-identical to the golden files") {
    CHECK(run_in_data("gram bondal.quiver").out == golden("bondal_gram.json"));
    CHECK(run_in_data("certify-nonext bondal.quiver 1,1,1").out == golden("bondal_nonext.json"));
    CHECK(run_in_data("certify-jh bondal.quiver").out == golden("bondal_jh.json"));
    CHECK(run_in_data("-B 2 certify-jh a2.quiver").out == golden("a2_jh_survey.json"));
    CHECK(run_in_data("--format text certify-jh bondal.quiver").out == golden("bondal_jh.txt"));
}

TEST_CASE("verify round trip through files") {
    std::string report = run_in_data("certify-jh bondal.quiver").out;
    fixtures::write_text_file("cli_jh_tmp.json", report);
    CHECK(fixtures::run_cli("verify cli_jh_tmp.json").exit_code == 0);

    std::string tampered = report;
    size_t pos = tampered.find("\"verified\": true");
    REQUIRE(pos != std::string::npos);
    tampered.replace(pos, 16, "\"verified\": false");
    fixtures::write_text_file("cli_tampered_tmp.json", tampered);
    fixtures::RunResult r = fixtures::run_cli("verify cli_tampered_tmp.json");
    CHECK(r.exit_code == 1);
    json j = json::parse(r.out);
    CHECK(j["result"]["accepted"] == false);

    fixtures::write_text_file("cli_bad_tmp.json", "not json at all");
    CHECK(fixtures::run_cli("verify cli_bad_tmp.json").exit_code == 2);
    CHECK(fixtures::run_cli("verify no_such_report.json").exit_code == 2);
}

TEST_CASE("identical invocations produce identical bytes") {
    std::string a = run_in_data("certify-jh bondal.quiver").out;
    std::string b = run_in_data("certify-jh bondal.quiver").out;
    CHECK(a == b);
    CHECK_FALSE(a.empty());
    CHECK(a.back() == '\n');
}

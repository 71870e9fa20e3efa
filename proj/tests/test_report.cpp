#include <doctest.h>

#include <regex>

#include "fixtures.hpp"
#include "report.hpp"

using namespace qvc;

namespace {

// Minimal JSON-schema checker covering the subset the report schema uses:
// type, enum, pattern, required, properties, additionalProperties and local
// $ref. Kept independent of any schema library on purpose.
bool schema_ok(const ojson& schema, const ojson& value, const ojson& root);

bool type_matches(const std::string& t, const ojson& v) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    if (t == "number") return v.is_number();
    return false;
}

const ojson& resolve_ref(const std::string& ref, const ojson& root) {
    REQUIRE(ref.rfind("#/", 0) == 0);
    const ojson* cur = &root;
    std::string rest = ref.substr(2);
    size_t pos = 0;
    while (pos < rest.size()) {
        size_t slash = rest.find('/', pos);
        std::string key = rest.substr(pos, slash == std::string::npos ? std::string::npos : slash - pos);
        cur = &cur->at(key);
        if (slash == std::string::npos) break;
        pos = slash + 1;
    }
    return *cur;
}

bool schema_ok(const ojson& schema, const ojson& value, const ojson& root) {
    if (schema.contains("$ref")) return schema_ok(resolve_ref(schema["$ref"], root), value, root);
    if (schema.contains("type") && !type_matches(schema["type"].get<std::string>(), value)) return false;
    if (schema.contains("enum")) {
        bool hit = false;
        for (const auto& e : schema["enum"]) hit = hit || e == value;
        if (!hit) return false;
    }
    if (schema.contains("pattern")) {
        if (!value.is_string()) return false;
        if (!std::regex_match(value.get<std::string>(), std::regex(schema["pattern"].get<std::string>())))
            return false;
    }
    if (schema.contains("required"))
        for (const auto& k : schema["required"])
            if (!value.contains(k.get<std::string>())) return false;
    if (schema.contains("properties"))
        for (const auto& [k, sub] : schema["properties"].items())
            if (value.contains(k) && !schema_ok(sub, value.at(k), root)) return false;
    if (schema.contains("additionalProperties") && schema["additionalProperties"].is_object()) {
        const ojson& props = schema.contains("properties") ? schema["properties"] : ojson::object();
        for (const auto& [k, v] : value.items())
            if (!props.contains(k) && !schema_ok(schema["additionalProperties"], v, root)) return false;
    }
    if (schema.contains("items") && value.is_array())
        for (const auto& v : value)
            if (!schema_ok(schema["items"], v, root)) return false;
    return true;
}

bool matches_report_schema(const ojson& report) {
    static const ojson schema = ojson::parse(fixtures::read_text_file(QVC_SCHEMA_PATH));
    return schema_ok(schema, report, schema);
}

// No JSON numbers anywhere: integers travel as decimal strings.
void require_stringly(const ojson& v) {
    if (v.is_object() || v.is_array())
        for (const auto& item : v) require_stringly(item);
    else
        CHECK_FALSE(v.is_number());
}

std::string scalar_text(const ojson& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
    if (v.is_null()) return "-";
    return v.dump();
}

void collect_scalars(const ojson& v, std::vector<std::string>& out) {
    if (v.is_object() || v.is_array())
        for (const auto& item : v) collect_scalars(item, out);
    else
        out.push_back(scalar_text(v));
}

ReportParams defaults() { return ReportParams{}; }

}  // namespace

TEST_CASE("certificate json carries exactly the relevant fields") {
    ojson zf = json_certificate(Certificate{"zero_form", 0, 0});
    CHECK(zf == ojson({{"kind", "zero_form"}}));

    ojson mod = json_certificate(Certificate{"modular", 5, 0});
    CHECK(mod["kind"] == "modular");
    CHECK(mod["modulus"] == "5");
    CHECK_FALSE(mod.contains("bound"));

    ojson box = json_certificate(Certificate{"box", 0, 250});
    CHECK(box["kind"] == "box");
    CHECK(box["bound"] == "250");
    CHECK(box["note"] == "bounded evidence only");
}

TEST_CASE("integers serialize as exact decimal strings at any size") {
    Int big = 1;
    for (int i = 0; i < 70; ++i) big *= 2;
    CHECK(int_str(big) == "1180591620717411303424");
    CHECK(int_str(-big) == "-1180591620717411303424");

    KClass v = {Int(0), -big, big};
    ojson j = json_kclass(v);
    CHECK(j.size() == 3);
    CHECK(j[1] == "-1180591620717411303424");

    IMat m(1, 2);
    m.at(0, 1) = big;
    CHECK(json_imat(m)[0][1] == big.get_str());
}

TEST_CASE("report envelope carries tool, version, inputs and params") {
    ReportParams p;
    p.box_bound = 7;
    p.modulus_cap = 3;
    p.seed = 42;
    ojson env = report_envelope("gram", {{"quiver", "x.quiver", std::string(64, 'a')}}, p);
    CHECK(env["tool"] == "quivercert");
    CHECK(env["version"] == QVC_VERSION);
    CHECK(env["command"] == "gram");
    CHECK(env["inputs"]["quiver"]["path"] == "x.quiver");
    CHECK(env["inputs"]["quiver"]["sha256"] == std::string(64, 'a'));
    CHECK(env["params"]["box_bound"] == "7");
    CHECK(env["params"]["modulus_cap"] == "3");
    CHECK(env["params"]["seed"] == "42");
}

TEST_CASE("every command emits a schema-conforming, number-free report") {
    std::string quiver = fixtures::data_path("bondal.quiver");
    std::vector<CmdResult> results;
    results.push_back(cmd_check(quiver, defaults()));
    results.push_back(cmd_gram(quiver, defaults()));
    results.push_back(cmd_ext(fixtures::data_path("S1.rep"), fixtures::data_path("S2.rep"), defaults()));
    results.push_back(cmd_exceptional(quiver, fixtures::data_path("P.rep"), defaults()));
    results.push_back(cmd_mutate(quiver, "1 2", {}, defaults()));
    results.push_back(cmd_certify_nonext(quiver, "1,1,1", defaults()));
    results.push_back(cmd_certify_jh(quiver, {"1,1,1"}, defaults()));

    fixtures::write_text_file("report_schema_tmp.json", results.back().report.dump(2) + "\n");
    results.push_back(cmd_verify("report_schema_tmp.json", defaults()));

    for (const CmdResult& r : results) {
        CHECK(matches_report_schema(r.report));
        require_stringly(r.report);
        CHECK(r.report["result"].is_object());
    }

    ojson broken = results[0].report;
    broken["tool"] = "other";
    CHECK_FALSE(matches_report_schema(broken));
    broken = results[0].report;
    broken["inputs"]["quiver"]["sha256"] = "xyz";
    CHECK_FALSE(matches_report_schema(broken));
}

TEST_CASE("text rendering is derived from the json values") {
    CmdResult r = cmd_certify_jh(fixtures::data_path("bondal.quiver"), {"1,1,1"}, defaults());
    std::string text = render_text(r.report);

    std::vector<std::string> scalars;
    collect_scalars(r.report, scalars);
    CHECK(scalars.size() > 50);
    for (const std::string& s : scalars) {
        CAPTURE(s);
        CHECK(text.find(s) != std::string::npos);
    }

    // Matrices render as inline rows.
    CHECK(text.find("[1, -2, 2]") != std::string::npos);
    CHECK(text.find("verdict: numerically nonextendable") != std::string::npos);
    CHECK(text.find("witnessed: yes") != std::string::npos);
}

TEST_CASE("reports are byte-deterministic across runs") {
    std::string quiver = fixtures::data_path("bondal.quiver");
    for (int round = 0; round < 2; ++round) {
        CmdResult a = cmd_certify_jh(quiver, {"1,1,1"}, defaults());
        CmdResult b = cmd_certify_jh(quiver, {"1,1,1"}, defaults());
        CHECK(a.report.dump() == b.report.dump());
        CmdResult c = cmd_gram(quiver, defaults());
        CmdResult d = cmd_gram(quiver, defaults());
        CHECK(c.report.dump() == d.report.dump());
    }
}

TEST_CASE("verify reports on the round trip") {
    CmdResult jh = cmd_certify_jh(fixtures::data_path("bondal.quiver"), {"1,1,1"}, defaults());
    fixtures::write_text_file("report_roundtrip_tmp.json", jh.report.dump(2) + "\n");

    CmdResult v = cmd_verify("report_roundtrip_tmp.json", defaults());
    CHECK(v.exit_code == 0);
    CHECK(v.report["result"]["report_command"] == "certify-jh");
    CHECK(v.report["result"]["accepted"] == true);
    CHECK(v.report["result"]["detail"].is_null());
    const ojson& checks = v.report["result"]["checks"];
    CHECK(checks.is_array());
    CHECK(checks.size() > 10);
    for (const auto& c : checks) {
        CHECK(c.contains("name"));
        CHECK(c["ok"] == true);
    }
}

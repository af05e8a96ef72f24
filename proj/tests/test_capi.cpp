#include <doctest.h>

#include <mk3/mk3.h>

#include <json.hpp>

#include <fstream>
#include <string>

using Json = nlohmann::json;

namespace {

// minimal structural validator for the shipped schema subset:
// type / required / properties / items
bool validate(const Json& schema, const Json& value, std::string& err) {
    if (schema.contains("type")) {
        std::string t = schema["type"];
        bool ok = (t == "object" && value.is_object()) || (t == "array" && value.is_array()) ||
                  (t == "string" && value.is_string()) || (t == "integer" && value.is_number_integer()) ||
                  (t == "number" && value.is_number()) || (t == "boolean" && value.is_boolean());
        if (!ok) {
            err = "type mismatch: expected " + t + " got " + value.dump().substr(0, 60);
            return false;
        }
    }
    if (schema.contains("required"))
        for (auto& r : schema["required"]) {
            if (!value.contains(r.get<std::string>())) {
                err = "missing required key " + r.get<std::string>();
                return false;
            }
        }
    if (schema.contains("properties") && value.is_object())
        for (auto& [k, sub] : schema["properties"].items())
            if (value.contains(k) && !validate(sub, value[k], err)) {
                err = k + ": " + err;
                return false;
            }
    if (schema.contains("items") && value.is_array())
        for (auto& el : value)
            if (!validate(schema["items"], el, err)) return false;
    return true;
}

Json load_schema(const std::string& name) {
    std::ifstream in(std::string(MK3_SCHEMA_DIR) + "/" + name);
    REQUIRE(in.good());
    Json j;
    in >> j;
    return j;
}

void check_schema(const char* schema_name, const char* json_text) {
    Json v = Json::parse(json_text);
    std::string err;
    bool ok = validate(load_schema(schema_name), v, err);
    CHECK_MESSAGE(ok, schema_name, ": ", err);
}

}  // namespace

TEST_CASE("surface lifecycle and exact evaluation") {
    mk3_surface* s = nullptr;
    REQUIRE(mk3_surface_new(2, 574, &s) == MK3_OK);
    char* val = nullptr;
    REQUIRE(mk3_surface_eval(s, "1", "1", "8", &val) == MK3_OK);
    CHECK(std::string(val) == "0");
    mk3_string_free(val);
    REQUIRE(mk3_surface_eval(s, "1/2", "1/3", "0", &val) == MK3_OK);
    CHECK(std::string(val) == std::string("-2295/4"));
    mk3_string_free(val);
    mk3_surface_free(s);
    mk3_surface* bad = nullptr;
    CHECK(mk3_surface_new(9, 1, &bad) == MK3_EINVAL);
    CHECK(std::string(mk3_last_error()).find("family") != std::string::npos);
}

TEST_CASE("hilbert symbol through the C boundary") {
    int h = -1;
    REQUIRE(mk3_hilbert_symbol("3", "-1", "2", &h) == MK3_OK);
    CHECK(h == 1);
    REQUIRE(mk3_hilbert_symbol("2", "3", "real", &h) == MK3_OK);
    CHECK(h == 0);
    CHECK(mk3_hilbert_symbol("0", "1", "2", &h) == MK3_EINVAL);
    CHECK(mk3_hilbert_symbol("1", "1", "6", &h) == MK3_EINVAL);
    int ok = 0;
    REQUIRE(mk3_product_formula_check("574", "5", &ok) == MK3_OK);
    CHECK(ok == 1);
}

TEST_CASE("search reports and schema") {
    mk3_surface* s = nullptr;
    REQUIRE(mk3_surface_new(2, 574, &s) == MK3_OK);
    mk3_report* rep = nullptr;
    REQUIRE(mk3_search_integral(s, 10, &rep) == MK3_OK);
    check_schema("search.schema.json", mk3_report_json(rep));
    std::string txt = mk3_report_text(rep);
    CHECK(txt.find("\"orbit_size\"") != std::string::npos);
    mk3_report_free(rep);
    mk3_surface_free(s);
}

TEST_CASE("obstruction: verdicts, exit codes, determinism, schema") {
    mk3_report* rep = nullptr;
    REQUIRE(mk3_obstruction(1, 1, nullptr, 60, 5, &rep) == MK3_OK);
    check_schema("obstruction.schema.json", mk3_report_json(rep));
    Json j = Json::parse(mk3_report_json(rep));
    CHECK(j["verdict"] == "obstructed");
    CHECK(mk3_report_exit_code(rep) == 0);
    std::string first = mk3_report_json(rep);
    mk3_report_free(rep);

    // identical configs produce byte-identical JSON
    REQUIRE(mk3_obstruction(1, 1, nullptr, 60, 5, &rep) == MK3_OK);
    CHECK(first == mk3_report_json(rep));
    mk3_report_free(rep);
}

TEST_CASE("solvable / assumption checks via C API") {
    mk3_surface* s = nullptr;
    REQUIRE(mk3_surface_new(1, -17, &s) == MK3_OK);
    mk3_report* rep = nullptr;
    REQUIRE(mk3_solvable(s, 50, "thm44", &rep) == MK3_OK);
    check_schema("solvable.schema.json", mk3_report_json(rep));
    CHECK(mk3_report_exit_code(rep) == 0);
    mk3_report_free(rep);
    mk3_surface_free(s);

    int pass = 0;
    char* violation = nullptr;
    REQUIRE(mk3_assumption_check("thm46", 241, &pass, &violation) == MK3_OK);
    CHECK(pass == 1);
    mk3_string_free(violation);
    REQUIRE(mk3_assumption_check("thm46", 31, &pass, &violation) == MK3_OK);
    CHECK(pass == 0);
    CHECK(std::string(violation).find("31") != std::string::npos);
    mk3_string_free(violation);
}

TEST_CASE("sa-failure and rational-bm reports") {
    mk3_surface* s = nullptr;
    REQUIRE(mk3_surface_new(2, 574, &s) == MK3_OK);
    mk3_report* rep = nullptr;
    REQUIRE(mk3_sa_failure(s, &rep) == MK3_OK);
    check_schema("sa_failure.schema.json", mk3_report_json(rep));
    Json j = Json::parse(mk3_report_json(rep));
    CHECK(j["failure_exhibited"] == true);
    mk3_report_free(rep);
    mk3_surface_free(s);

    REQUIRE(mk3_rational_bm(1, 1, nullptr, &rep) == MK3_OK);
    check_schema("rational_bm.schema.json", mk3_report_json(rep));
    Json r = Json::parse(mk3_report_json(rep));
    CHECK(r["witness_found"] == true);
    mk3_report_free(rep);
}

TEST_CASE("picard verification and matrix dumps") {
    mk3_report* rep = nullptr;
    REQUIRE(mk3_picard_verify(&rep) == MK3_OK);
    check_schema("picard.schema.json", mk3_report_json(rep));
    Json j = Json::parse(mk3_report_json(rep));
    CHECK(j["gram_det"] == "-48");
    CHECK(j["alt_basis_det"] == "-192");
    mk3_report_free(rep);

    char* text = nullptr;
    REQUIRE(mk3_picard_matrix("gram", &text) == MK3_OK);
    std::string g = text;
    mk3_string_free(text);
    // 18 rows of 18 space-separated integers; first row of the display
    CHECK(g.rfind("0 2 2 0 0 0 1 0 0 1 0 0 0 1 0 0 0 1\n", 0) == 0);
    CHECK(std::count(g.begin(), g.end(), '\n') == 18);
    CHECK(mk3_picard_matrix("nope", &text) == MK3_EINVAL);
}

TEST_CASE("frobenius through the C boundary") {
    mk3_report* rep = nullptr;
    REQUIRE(mk3_frobenius(5, 3, 3, &rep) == MK3_OK);
    check_schema("frobenius.schema.json", mk3_report_json(rep));
    Json j = Json::parse(mk3_report_json(rep));
    CHECK(j["counts"][0]["count"] == 42);
    CHECK(j["counts"][1]["count"] == 1032);
    CHECK(j["counts"][2]["count"] == 16122);
    CHECK(j["picard_rank_upper_bound"] == 18);
    mk3_report_free(rep);
    // singular reduction surfaces as a status code
    CHECK(mk3_frobenius(5, 0, 1, &rep) == MK3_ESINGULAR);
}

TEST_CASE("census through the C boundary") {
    mk3_report* rep = nullptr;
    REQUIRE(mk3_census_admissible("assumption1", 1000, 0, &rep) == MK3_OK);
    check_schema("census.schema.json", mk3_report_json(rep));
    mk3_report_free(rep);

    REQUIRE(mk3_census_hasse(1, 20, 50, 5, 0, nullptr, &rep) == MK3_OK);
    check_schema("hasse_census.schema.json", mk3_report_json(rep));
    Json j = Json::parse(mk3_report_json(rep));
    CHECK(j["obstructed"] >= 1);
    mk3_report_free(rep);
}

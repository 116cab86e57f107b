/*
 * Copyright 2026 the primavoid authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Exercises the shared-library surface only: opaque handles, status codes and
// JSON strings, exactly as an external client would.

#include <doctest.h>

#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>
#include <primavoid.h>

using nlohmann::json;

namespace {

std::string take(char* s) {
    std::string out(s);
    pv_string_free(s);
    return out;
}

} // namespace

TEST_CASE("version and status names") {
    CHECK(std::string(pv_version()) == "1.0.0");
    CHECK(std::string(pv_status_name(PV_OK)) == "Ok");
    CHECK(std::string(pv_status_name(PV_ERR_NOT_PRIME)) == "NotPrime");
}

TEST_CASE("field lifecycle and JSON round trip") {
    pv_field* f = nullptr;
    REQUIRE(pv_field_create(3, 1, 2, nullptr, 0, nullptr, 0, &f) == PV_OK);
    CHECK(pv_field_order(f) == 9);
    CHECK(pv_field_q(f) == 3);
    CHECK(pv_field_r(f) == 2);

    char* out = nullptr;
    REQUIRE(pv_field_to_json(f, &out) == PV_OK);
    json j = json::parse(take(out));
    CHECK(j["p"] == 3);
    CHECK(j["top_modulus"] == json::array({1, 0, 1}));
    pv_field_free(f);

    pv_field* g = nullptr;
    REQUIRE(pv_field_from_json(R"({"p":2,"s":2,"r":2})", &g) == PV_OK);
    CHECK(pv_field_order(g) == 16);
    char* gj = nullptr;
    REQUIRE(pv_field_to_json(g, &gj) == PV_OK);
    json parsed = json::parse(take(gj));
    CHECK(parsed["base_modulus"] == json::array({1, 1, 1}));
    // s = 2: F_q coefficients serialize as digit arrays, so x -> [0,1]
    CHECK(parsed["top_modulus"] ==
          json::array({json::array({0, 1}), json::array({1, 0}), json::array({1, 0})}));
    pv_field_free(g);
}

TEST_CASE("error codes and messages") {
    pv_field* f = nullptr;
    CHECK(pv_field_create(4, 1, 2, nullptr, 0, nullptr, 0, &f) == PV_ERR_NOT_PRIME);
    CHECK(std::strlen(pv_last_error()) > 0);

    CHECK(pv_field_from_json("{not json", &f) == PV_ERR_PARSE);
    CHECK(pv_field_create(3, 1, 2, nullptr, 0, nullptr, 0, nullptr) == PV_ERR_INVALID_ARGUMENT);

    // reducible supplied modulus
    uint32_t reducible[] = {2, 0, 1}; // y^2 + 2 over F_3 has the root 1
    CHECK(pv_field_create(3, 1, 2, nullptr, 0, reducible, 3, &f) == PV_ERR_POLY_REDUCIBLE);
}

TEST_CASE("configs through the C surface") {
    pv_field* f = nullptr;
    REQUIRE(pv_field_create(3, 1, 2, nullptr, 0, nullptr, 0, &f) == PV_OK);

    uint32_t c[] = {0, 0};
    pv_config* cfg = nullptr;
    REQUIRE(pv_config_standard(f, c, 2, &cfg) == PV_OK);
    char* out = nullptr;
    REQUIRE(pv_config_to_json(cfg, &out) == PV_OK);
    json j = json::parse(take(out));
    CHECK(j["c"] == json::array({0, 0}));
    CHECK(j["zero_in_coordinate_set"] == false);
    pv_config_free(cfg);

    // hyperplane form canonicalizes: the worked F_3 example
    const char* planes = R"({
      "field": {"p":3, "s":1, "r":2},
      "hyperplanes": [
        {"normal": [1,1], "constant": 1},
        {"normal": [1,2], "constant": 0}
      ]})";
    pv_config* canon = nullptr;
    REQUIRE(pv_config_from_json(planes, &canon) == PV_OK);
    char* cj = nullptr;
    REQUIRE(pv_config_to_json(canon, &cj) == PV_OK);
    json cjson = json::parse(take(cj));
    CHECK(cjson["basis"] == json::array({json::array({1, 1}), json::array({1, 2})}));
    CHECK(cjson["c"] == json::array({2, 0}));
    pv_config_free(canon);

    // degenerate family is refused with the right code
    const char* parallel = R"({
      "field": {"p":3, "s":1, "r":2},
      "hyperplanes": [
        {"normal": [1,0], "constant": 0},
        {"normal": [1,0], "constant": 1}
      ]})";
    pv_config* bad = nullptr;
    CHECK(pv_config_from_json(parallel, &bad) == PV_ERR_NOT_GENERAL_POSITION);

    pv_field_free(f);
}

TEST_CASE("random configs are deterministic per seed") {
    pv_field* f = nullptr;
    REQUIRE(pv_field_create(5, 1, 2, nullptr, 0, nullptr, 0, &f) == PV_OK);
    std::string s1, s2, s3;
    for (std::string* dst : {&s1, &s2}) {
        pv_config* cfg = nullptr;
        REQUIRE(pv_config_random(f, 99, &cfg) == PV_OK);
        char* out = nullptr;
        REQUIRE(pv_config_to_json(cfg, &out) == PV_OK);
        *dst = take(out);
        pv_config_free(cfg);
    }
    {
        pv_config* cfg = nullptr;
        REQUIRE(pv_config_random(f, 100, &cfg) == PV_OK);
        char* out = nullptr;
        REQUIRE(pv_config_to_json(cfg, &out) == PV_OK);
        s3 = take(out);
        pv_config_free(cfg);
    }
    CHECK(s1 == s2);
    CHECK(s1 != s3);
    pv_field_free(f);
}

TEST_CASE("count report") {
    pv_config* cfg = nullptr;
    REQUIRE(pv_config_from_json(R"({"field":{"p":3,"s":1,"r":2},"c":[0,0]})", &cfg) == PV_OK);
    char* out = nullptr;
    REQUIRE(pv_count_report(cfg, 0, 0, 0, &out) == PV_OK);
    std::string text1 = take(out);
    json rep = json::parse(text1);
    CHECK(rep["counts"]["vinogradov"] == 4);
    CHECK(rep["counts"]["brute_force"] == 4);
    CHECK(rep["counts"]["agree"] == true);
    CHECK_FALSE(rep["witness"].is_null());
    CHECK(rep["version"] == "1.0.0");
    CHECK(rep["field"]["top_modulus"] == json::array({1, 0, 1}));
    CHECK(rep["config"]["c"] == json::array({0, 0}));
    CHECK(rep["seed"].is_null());

    // byte-identical on identical input
    char* again = nullptr;
    REQUIRE(pv_count_report(cfg, 0, 0, 0, &again) == PV_OK);
    CHECK(take(again) == text1);
    pv_config_free(cfg);
}

TEST_CASE("verify report and the tamper hook") {
    pv_config* cfg = nullptr;
    REQUIRE(pv_config_from_json(R"({"field":{"p":4,"s":2,"r":2},"c":[1,2]})", &cfg) == PV_ERR_NOT_PRIME);
    REQUIRE(pv_config_from_json(R"({"field":{"p":2,"s":2,"r":2},"c":[1,2]})", &cfg) == PV_OK);

    char* out = nullptr;
    REQUIRE(pv_verify_bounds_report(cfg, 0, 0, 0, &out) == PV_OK);
    json rep = json::parse(take(out));
    CHECK(rep["all_hold"] == true);
    CHECK(rep["reports"].size() == 16);  // 14 characters + divisor bound + lower bound

    setenv("PRIMAVOID_TAMPER_SCALE", "10", 1);
    char* tampered = nullptr;
    REQUIRE(pv_verify_bounds_report(cfg, 0, 0, 0, &tampered) == PV_OK);
    json trep = json::parse(take(tampered));
    CHECK(trep["all_hold"] == false);
    unsetenv("PRIMAVOID_TAMPER_SCALE");

    pv_config_free(cfg);
}

TEST_CASE("threshold and table reports") {
    char* out = nullptr;
    REQUIRE(pv_threshold_report(4, &out) == PV_OK);
    json rep = json::parse(take(out));
    CHECK(rep["threshold"]["found"] == true);
    CHECK(rep["threshold"]["r_min"] == "30668739039322505552");
    CHECK(rep["threshold"]["bracket_verified"] == true);

    REQUIRE(pv_limits_table_report(&out) == PV_OK);
    json table = json::parse(take(out));
    REQUIRE(table["limits"].size() == 3);
    CHECK(table["limits"][0]["rhs_limit_printed"] == "0.936687");
    CHECK(table["limits"][1]["rhs_limit_printed"] == "1.02988");
    CHECK(table["limits"][2]["rhs_limit_printed"] == "1.09375");

    double v = 0.0;
    REQUIRE(pv_rhs_limit(3, &v) == PV_OK);
    CHECK(v == doctest::Approx(0.936687).epsilon(5e-6));
    CHECK(pv_rhs_limit(1, &v) == PV_ERR_DOMAIN);
}

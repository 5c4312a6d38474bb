// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include "helpers.hpp"
#include "twomat/twomat.h"

TEST_CASE("curves load through the C API") {
  twomat_curve* c = nullptr;
  REQUIRE(twomat_curve_from_file(testing::fixture_path("fixture_b.json").c_str(), &c) == TWOMAT_OK);
  CHECK(twomat_curve_d2(c) == 2);
  CHECK(std::string(twomat_curve_label(c)).find("cubic") != std::string::npos);
  char* text = nullptr;
  REQUIRE(twomat_curve_report(c, &text) == TWOMAT_OK);
  const auto j = nlohmann::json::parse(text);
  twomat_string_free(text);
  CHECK(j["d2"] == 2);
  CHECK(j["branch_points"].size() == 2);
  twomat_curve_free(c);
}

TEST_CASE("C API error codes") {
  twomat_curve* c = nullptr;
  CHECK(twomat_curve_from_file(testing::fixture_path("malformed.json").c_str(), &c) == TWOMAT_E_PARSE);
  CHECK(c == nullptr);
  CHECK(std::strlen(twomat_last_error()) > 0);
  CHECK(twomat_curve_from_file("/nonexistent/curve.json", &c) == TWOMAT_E_IO);
  CHECK(twomat_curve_from_json(nullptr, &c) == TWOMAT_E_NULL_POINTER);
  CHECK(twomat_curve_from_file(testing::fixture_path("nonsimple.json").c_str(), &c) ==
        TWOMAT_E_NON_SIMPLE_BRANCH_POINT);
  CHECK(std::string(twomat_status_name(TWOMAT_E_TRUNCATION_EXHAUSTED)) == "TruncationExhausted");
}

TEST_CASE("evaluation through the C API") {
  twomat_curve* c = nullptr;
  REQUIRE(twomat_curve_from_file(testing::fixture_path("fixture_b.json").c_str(), &c) == TWOMAT_OK);
  twomat_config cfg;
  twomat_config_default(&cfg);
  const twomat_complex pts[3] = {{3.0, 0.0}, {0.0, 4.0}, {-2.0, 1.0}};
  twomat_result r{};
  REQUIRE(twomat_eval(c, TWOMAT_METHOD_CUBIC, 2, 0, pts, &cfg, &r) == TWOMAT_OK);
  const testing::cx expect = 1.0 / ((testing::cx(3, 0) - testing::cx(0, 4)) * (testing::cx(3, 0) - testing::cx(0, 4)));
  CHECK(testing::rel({r.value.re, r.value.im}, expect) < 1e-14);
  twomat_result a{}, b{};
  REQUIRE(twomat_eval(c, TWOMAT_METHOD_EFFECTIVE, 3, 0, pts, &cfg, &a) == TWOMAT_OK);
  REQUIRE(twomat_eval(c, TWOMAT_METHOD_DIAGRAMS, 3, 0, pts, &cfg, &b) == TWOMAT_OK);
  CHECK(testing::rel({a.value.re, a.value.im}, {b.value.re, b.value.im}) < 1e-9);
  CHECK(twomat_eval(c, TWOMAT_METHOD_ONEMATRIX, 3, 0, pts, &cfg, &a) == TWOMAT_E_NOT_HYPERELLIPTIC);
  const twomat_complex bad[2] = {{1.0, 0.0}, {2.0, 1.0}};
  CHECK(twomat_eval(c, TWOMAT_METHOD_CUBIC, 2, 1, bad, &cfg, &a) == TWOMAT_E_BRANCH_POINT_ARGUMENT);
  CHECK(twomat_eval_R(c, 1, 0, {0.7, 1.3}, 0, nullptr, &cfg, &a) == TWOMAT_OK);
  CHECK(a.value.re == 0.0);
  CHECK(a.value.im == 0.0);
  twomat_curve_free(c);
}

TEST_CASE("diagrams through the C API") {
  size_t count = 0;
  char* text = nullptr;
  REQUIRE(twomat_diagrams(3, 0, TWOMAT_THEORY_CUBIC, 2, &count, &text) == TWOMAT_OK);
  CHECK(count == 18);
  CHECK(nlohmann::json::parse(text).size() == 18);
  twomat_string_free(text);
}

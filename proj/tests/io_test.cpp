// Copyright 2026 The paulicert developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "paulicert/io.hpp"

using namespace paulicert;

TEST_CASE("witness JSON round trip preserves matrix and coefficients") {
  const Witness wit = decompose_witness(isotropic_witness_matrix(), 1);
  const nlohmann::json j = witness_to_json(wit);
  CHECK(j.at("n") == 1);
  CHECK(j.at("omega").size() == wit.omega.size());

  const Witness back = witness_from_json(j);
  CHECK(back.n == 1);
  CHECK(max_abs_diff(back.matrix, wit.matrix) < 1e-12);
  REQUIRE(back.omega.size() == wit.omega.size());
  for (size_t i = 0; i < wit.omega.size(); ++i) {
    CHECK(back.omega[i].value == doctest::Approx(wit.omega[i].value).epsilon(1e-14));
    CHECK(back.omega[i].c == wit.omega[i].c);
    CHECK(back.omega[i].z == wit.omega[i].z);
    CHECK(back.omega[i].d == wit.omega[i].d);
    CHECK(back.omega[i].w == wit.omega[i].w);
  }
}

TEST_CASE("witness files survive a save/load cycle") {
  const Witness wit = decompose_witness(identity(4), 1);
  const std::string path = "io_test_witness.json";
  save_witness(wit, path);
  const Witness back = load_witness(path);
  CHECK(max_abs_diff(back.matrix, wit.matrix) < 1e-12);
  CHECK(back.omega.size() == 4);
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_witness("no_such_dir/missing.json"), std::runtime_error);
}

TEST_CASE("corrupted coefficients are rejected at load time") {
  const Witness wit = decompose_witness(isotropic_witness_matrix(), 1);
  nlohmann::json j = witness_to_json(wit);
  j["omega"][0]["value"] = double(j["omega"][0]["value"]) + 0.5;
  CHECK_THROWS_AS(witness_from_json(j), std::runtime_error);

  // Omitting the matrix is allowed (it is rebuilt from omega)...
  nlohmann::json no_matrix = witness_to_json(wit);
  no_matrix.erase("matrix");
  CHECK(max_abs_diff(witness_from_json(no_matrix).matrix, wit.matrix) < 1e-12);
  // ...but a term whose arity disagrees with n is not.
  nlohmann::json bad_arity = witness_to_json(wit);
  bad_arity["omega"][0]["z"] = std::vector<int>{1, 2};
  CHECK_THROWS_AS(witness_from_json(bad_arity), std::runtime_error);
}

TEST_CASE("malformed JSON text raises a parse error") {
  const std::string path = "io_test_bad.json";
  {
    std::ofstream f(path);
    f << "{ not json";
  }
  CHECK_THROWS(load_witness(path));
  std::remove(path.c_str());
}

TEST_CASE("significant-digit formatting") {
  CHECK(format_sig12(0.5) == "0.5");
  CHECK(format_sig12(-0.05) == "-0.05");
  CHECK(format_sig12(0.0) == "0");
  // Round-trips through parsing at full precision.
  const double x = 0.002928008;
  CHECK(std::stod(format_sig12(x)) == doctest::Approx(x).epsilon(1e-11));
}

TEST_CASE("curve CSV schema") {
  const auto curve = robustness_curve(0.6, {0.72, 1.0});
  const std::string csv = curve_to_csv(curve);
  std::istringstream lines(csv);
  std::string line;
  REQUIRE(std::getline(lines, line));
  CHECK(line == "eta,expected_I,theta_crit");
  REQUIRE(std::getline(lines, line));
  CHECK(line.rfind("0.72,", 0) == 0);
  REQUIRE(std::getline(lines, line));
  CHECK(line.rfind("1,", 0) == 0);
  CHECK(line.find("-0.05") != std::string::npos);
  CHECK_FALSE(std::getline(lines, line));
}

TEST_CASE("network correlation records cover every setting and outcome") {
  const NetworkStrategy ns = ideal_network(werner_state(1.0), 1);
  const nlohmann::json records = network_correlation_records(ns);
  CHECK(records.size() == 3 * 3 * 2 * 2 * 2 * 2);  // z, w settings x c,a,b,d
  double total = 0.0;
  bool found_pinned = false;
  for (const auto& r : records) {
    REQUIRE(r.contains("settings"));
    REQUIRE(r.contains("outcomes"));
    const double p = r.at("p");
    CHECK(p >= -1e-14);
    const bool first_settings =
        r["settings"]["z"] == "z=1" && r["settings"]["w"] == "z=1";
    if (first_settings) total += p;
    if (first_settings && r["outcomes"]["c"] == "+" && r["outcomes"]["a"] == "+" &&
        r["outcomes"]["b"] == "+" && r["outcomes"]["d"] == "+") {
      found_pinned = true;
      CHECK(p == doctest::Approx(1.0 / 32.0).epsilon(1e-12));
    }
  }
  CHECK(found_pinned);
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

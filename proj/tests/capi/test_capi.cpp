/*
   Copyright 2026 The modgal Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Links only the shared library and its public header.

#include <doctest.h>

#include <cstring>
#include <string>

#include "modgal/modgal.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  modgal_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version and status strings") {
  CHECK(std::strlen(modgal_version()) > 0);
  CHECK(std::string(modgal_status_string(MODGAL_OK)) == "ok");
  CHECK(std::string(modgal_status_string(MODGAL_E_PARSE)) == "parse error");
  CHECK(std::string(modgal_status_string(static_cast<modgal_status>(99))) == "unknown status");
}

TEST_CASE("null arguments") {
  modgal_data* d = nullptr;
  CHECK(modgal_data_load(nullptr, &d) == MODGAL_E_NULL_ARGUMENT);
  CHECK(modgal_data_fixture("fib", nullptr) == MODGAL_E_NULL_ARGUMENT);
  CHECK(std::string(modgal_last_error()).find("null argument") == 0);
  size_t r = 0;
  CHECK(modgal_data_rank(nullptr, &r) == MODGAL_E_NULL_ARGUMENT);
  modgal_data_free(nullptr);
  modgal_string_free(nullptr);
}

TEST_CASE("fixture, validate, orbit count") {
  modgal_data* d = nullptr;
  REQUIRE(modgal_data_fixture("sl2_12_A0", &d) == MODGAL_OK);
  size_t rank = 0, orbits = 0;
  unsigned cond = 0;
  CHECK(modgal_data_rank(d, &rank) == MODGAL_OK);
  CHECK(modgal_data_conductor(d, &cond) == MODGAL_OK);
  CHECK(rank == 5);
  CHECK(cond == 7);
  int passed = 0;
  char* text = nullptr;
  CHECK(modgal_validate(d, &passed, &text) == MODGAL_OK);
  CHECK(passed == 1);
  CHECK(take(text).find("valid") != std::string::npos);
  CHECK(modgal_orbit_count(d, &orbits) == MODGAL_OK);
  CHECK(orbits == 2);

  char* out = nullptr;
  CHECK(modgal_report(d, "a0", 64, 1, &passed, &out) == MODGAL_OK);
  auto json = take(out);
  CHECK(json.find("\"shape\": \"3+2\"") != std::string::npos);
  CHECK(passed == 1);
  modgal_data_free(d);
}

TEST_CASE("errors set the thread-local message") {
  modgal_data* d = nullptr;
  CHECK(modgal_data_fixture("no_such", &d) == MODGAL_E_INVALID_ARGUMENT);
  CHECK(d == nullptr);
  CHECK(std::string(modgal_last_error()).find("no_such") != std::string::npos);
  CHECK(modgal_data_parse("{", "x", &d) == MODGAL_E_PARSE);
  CHECK(modgal_data_load("/nonexistent.mtc", &d) == MODGAL_E_IO);
  modgal_data* f = nullptr;
  REQUIRE(modgal_data_fixture("fib", &f) == MODGAL_OK);
  CHECK(std::string(modgal_last_error()).empty());
  modgal_data_free(f);
}

TEST_CASE("serialize, parse and product") {
  modgal_data* fib = nullptr;
  REQUIRE(modgal_data_fixture("fib", &fib) == MODGAL_OK);
  char* text = nullptr;
  REQUIRE(modgal_data_serialize(fib, &text) == MODGAL_OK);
  modgal_data* again = nullptr;
  REQUIRE(modgal_data_parse(text, "fib", &again) == MODGAL_OK);
  modgal_string_free(text);

  modgal_data* prod = nullptr;
  REQUIRE(modgal_data_product(fib, again, &prod) == MODGAL_OK);
  size_t orbits = 0, rank = 0;
  CHECK(modgal_data_rank(prod, &rank) == MODGAL_OK);
  CHECK(rank == 4);
  CHECK(modgal_orbit_count(prod, &orbits) == MODGAL_OK);
  CHECK(orbits == 2);
  modgal_data_free(prod);
  modgal_data_free(again);
  modgal_data_free(fib);
}

TEST_CASE("pointed") {
  unsigned long long n = 0;
  CHECK(modgal_cyclic_subgroup_count("2,30,30", &n) == MODGAL_OK);
  CHECK(n == 280);
  CHECK(modgal_cyclic_subgroup_count("2,3", &n) == MODGAL_E_INVALID_ARGUMENT);

  int agrees = 0;
  char* text = nullptr;
  CHECK(modgal_pointed_orbits("5", nullptr, 64, &n, &agrees, &text) == MODGAL_OK);
  CHECK(n == 2);
  CHECK(agrees == 1);
  CHECK(take(text).find("orbits: 2") != std::string::npos);
  CHECK(modgal_pointed_orbits("2,2", "0,1;1,0", 64, &n, &agrees, nullptr) == MODGAL_OK);
  CHECK(n == 4);
  CHECK(modgal_pointed_orbits("5", "0", 64, &n, &agrees, nullptr) == MODGAL_E_INVALID_ARGUMENT);
  CHECK(modgal_pointed_orbits("1800", nullptr, 64, &n, &agrees, nullptr) == MODGAL_E_LIMIT_EXCEEDED);

  modgal_data* d = nullptr;
  REQUIRE(modgal_data_pointed("3,3", nullptr, &d) == MODGAL_OK);
  size_t orbits = 0;
  CHECK(modgal_orbit_count(d, &orbits) == MODGAL_OK);
  CHECK(orbits == 5);
  modgal_data_free(d);
}

TEST_CASE("fixture list and tables") {
  char* list = nullptr;
  REQUIRE(modgal_fixture_list(&list) == MODGAL_OK);
  auto s = take(list);
  CHECK(s.find("so5_3half_ad\t") != std::string::npos);

  int passed = 0;
  char* text = nullptr;
  CHECK(modgal_tables_check(11, &passed, &text) == MODGAL_OK);
  CHECK(passed == 1);
  CHECK(take(text).find("PASS") != std::string::npos);
}

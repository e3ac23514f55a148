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

#include <doctest.h>

#include <cmath>
#include <numeric>

#include "errors.hpp"
#include "test_support.hpp"

using namespace modgal;
using namespace modgal::test;

TEST_CASE("every catalog fixture validates") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    auto r = validate(fixture(name));
    CHECK(r.passed());
    CHECK(r.skipped.empty());
  }
}

TEST_CASE("exact Verlinde coefficients match the floating-point formula") {
  for (const auto& name : fixture_names()) {
    auto m = fixture(name);
    if (m.rank() > 30) continue;
    CAPTURE(name);
    auto f = verlinde(m);
    auto approx = float_verlinde(m);
    const std::size_t r = m.rank();
    bool same = true;
    for (std::size_t i = 0; i < r * r * r; ++i) same = same && f.coeff[i] == approx[i];
    CHECK(same);
    CHECK(f.is_associative());
  }
}

TEST_CASE("Fibonacci and Ising fusion rules") {
  auto fib = verlinde(fibonacci());
  CHECK(fib(1, 1, 0) == 1);
  CHECK(fib(1, 1, 1) == 1);
  CHECK(fib.dual == std::vector<std::size_t>{0, 1});

  auto is = verlinde(ising());
  CHECK(is(1, 1, 0) == 1);
  CHECK(is(1, 1, 1) == 0);
  CHECK(is(1, 1, 2) == 1);
  CHECK(is(2, 2, 0) == 1);
  CHECK(is(1, 2, 1) == 1);
}

TEST_CASE("global dimension and Frobenius-Perron dimensions") {
  const double phi = (1 + std::sqrt(5.0)) / 2;
  auto fib = fibonacci();
  CHECK(global_dim(fib).approx().real() == doctest::Approx(1 + phi * phi));
  auto fp = fp_dims(fib);
  CHECK(fp.values[1].approx().real() == doctest::Approx(phi));

  auto fibg = fibonacci(2);
  CHECK(fibg.dim(1).approx().real() == doctest::Approx(1 - phi));
  CHECK(fp_dims(fibg).values[1].approx().real() == doctest::Approx(phi));
  CHECK(global_dim(ising()).approx().real() == doctest::Approx(4.0));
}

TEST_CASE("charge conjugation") {
  auto c = charge_conjugation(slp_level_one(3));
  REQUIRE(c.has_value());
  CHECK(*c == std::vector<std::size_t>{0, 2, 1});
  auto ci = charge_conjugation(ising());
  REQUIRE(ci.has_value());
  CHECK(*ci == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("Galois conjugates of modular data are modular data") {
  for (const char* name : {"fib", "ising", "sl2_7_ad", "pointed_z4", "so5_3half_ad"}) {
    auto m = fixture(name);
    for (unsigned k = 1; k < m.conductor(); ++k) {
      if (std::gcd(k, m.conductor()) != 1) continue;
      CAPTURE(name);
      CAPTURE(k);
      CHECK(validate(m.galois_conjugate(k)).passed());
    }
  }
}

TEST_CASE("Deligne product") {
  auto a = fibonacci();
  auto b = sl2_level_adjoint(7);
  auto p = deligne_product(a, b);
  CHECK(p.rank() == 6);
  CHECK(p.conductor() == 35);
  CHECK(p.label(4) == "tau⊠2");
  CHECK(validate(p).passed());

  // N^{(x,y)(x',y')}_{(z,z')} = N_a N_b
  auto fa = verlinde(a), fb = verlinde(b), fp = verlinde(p);
  bool ok = true;
  for (std::size_t x = 0; x < 6; ++x)
    for (std::size_t y = 0; y < 6; ++y)
      for (std::size_t z = 0; z < 6; ++z)
        ok = ok && fp(x, y, z) == fa(x / 3, y / 3, z / 3) * fb(x % 3, y % 3, z % 3);
  CHECK(ok);

  auto back = restrict_to_subset(p, {0, 1, 2});
  CHECK(back.s() == b.s());
  CHECK(back.t() == b.t());
  CHECK(back.conductor() == 7);
}

TEST_CASE("validation reports broken data") {
  const std::string good = serialize_modular_data(fibonacci());

  SUBCASE("asymmetric s") {
    auto m = parse_modular_data(R"({"conductor":5,"rank":2,"labels":["1","tau"],"t":[0,2],
      "s":[[[[1,1,0]],[[1,1,0]]],[[[-1,1,2],[-1,1,3]],[[-1,1,0]]]]})");
    auto r = validate(m);
    CHECK_FALSE(r.passed());
    REQUIRE_FALSE(r.issues.empty());
    CHECK(r.issues.front().check == "symmetric");
    CHECK(r.issues.front().message == "s not symmetric at (0,1)");
  }
  SUBCASE("wrong twist") {
    auto m = parse_modular_data(R"({"conductor":5,"rank":2,"labels":["1","tau"],"t":[0,1],
      "s":[[[[1,1,0]],[[-1,1,2],[-1,1,3]]],[[[-1,1,2],[-1,1,3]],[[-1,1,0]]]]})");
    CHECK_FALSE(validate(m).passed());
  }
  SUBCASE("twist of the unit") {
    auto m = parse_modular_data(R"({"conductor":5,"rank":2,"labels":["1","tau"],"t":[1,2],
      "s":[[[[1,1,0]],[[-1,1,2],[-1,1,3]]],[[[-1,1,2],[-1,1,3]],[[-1,1,0]]]]})");
    CHECK_FALSE(validate(m).passed());
  }
  SUBCASE("non-integral fusion") {
    auto m = parse_modular_data(R"({"conductor":4,"rank":2,"labels":["1","x"],"t":[0,1],
      "s":[[[[1,1,0]],[[2,1,0]]],[[[2,1,0]],[[-1,1,0]]]]})");
    CHECK_FALSE(validate(m).passed());
  }
  SUBCASE("the good data") { CHECK(validate(parse_modular_data(good)).passed()); }
}

TEST_CASE("malformed construction is rejected") {
  CycMatrix s(2, 2, 5);
  CHECK_THROWS_AS(ModularData(5, {"1"}, s, {0, 2}), Error);
  CHECK_THROWS_AS(ModularData(0, {"1", "x"}, s, {0, 2}), Error);
  CHECK_THROWS_AS(ModularData(5, {"1", "x"}, s, {0, 2}, 7), Error);
}

TEST_CASE("unit index is moved to position zero") {
  auto fib = fibonacci();
  CycMatrix s(2, 2, 5);
  s(0, 0) = fib.s(1, 1);
  s(0, 1) = fib.s(1, 0);
  s(1, 0) = fib.s(0, 1);
  s(1, 1) = fib.s(0, 0);
  ModularData m(5, {"tau", "1"}, s, {2, 0}, 1);
  CHECK(m.label(0) == "1");
  CHECK(m.s() == fib.s());
  CHECK(m.t() == fib.t());
}

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

#include <numeric>

#include "errors.hpp"
#include "galois_action.hpp"
#include "pointed.hpp"
#include "test_support.hpp"

using namespace modgal;
using namespace modgal::test;

TEST_CASE("family variants are modular data") {
  for (unsigned v = 1; v <= 4; ++v) {
    auto m = fibonacci(v);
    CHECK(validate(m).passed());
    CHECK(is_transitive(m));
  }
  for (unsigned nu = 1; nu < 16; nu += 2) {
    CAPTURE(nu);
    auto m = ising(nu);
    CHECK(validate(m).passed());
    CHECK(m.t() == std::vector<long>{0, static_cast<long>(nu), 8});
  }
  for (unsigned p : {5u, 7u, 11u, 13u, 17u, 19u})
    for (unsigned k = 1; k < p; ++k) {
      CAPTURE(p);
      CAPTURE(k);
      auto m = sl2_level_adjoint(p, k);
      CHECK(m.rank() == (p - 1) / 2);
      CHECK(validate(m).passed());
      CHECK(is_transitive(m));
    }
  for (unsigned p : {2u, 3u, 5u, 7u, 11u}) {
    auto m = slp_level_one(p);
    CHECK(m.rank() == p);
    CHECK(validate(m).passed());
  }
  CHECK_THROWS_AS(fibonacci(5), Error);
  CHECK_THROWS_AS(ising(4), Error);
  CHECK_THROWS_AS(sl2_level_adjoint(9), Error);
  CHECK_THROWS_AS(fixture("nope"), Error);
}

TEST_CASE("C(sl2, p-2)_ad twists are a(a+1) mod p") {
  auto m = sl2_level_adjoint(11);
  for (std::size_t a = 0; a < m.rank(); ++a) CHECK(m.t(a) == static_cast<long>((a * (a + 1)) % 11));
  CHECK(m.conductor() == 11);
}

TEST_CASE("semion is C(sl2,1)") {
  auto m = slp_level_one(2);
  CHECK(m.conductor() == 4);
  CHECK(m.t() == std::vector<long>{0, 1});
}

TEST_CASE("orbits of Z/p^n pointed times C(sl2,p-2)_ad") {
  const struct {
    const char* name;
    unsigned long p;
    unsigned n;
  } cases[] = {{"z5_x_sl2_5_ad", 5, 1}, {"z25_x_sl2_5_ad", 5, 2}, {"z7_x_sl2_7_ad", 7, 1}};
  for (const auto& c : cases) {
    CAPTURE(c.name);
    CHECK(GaloisAction(load_fixture(c.name)).orbits().size() ==
          closed_form_counts(ClosedForm::product_cyclic, c.p, c.n));
  }
  CHECK(GaloisAction(load_fixture("z5xz5_x_sl2_5_ad")).orbits().size() ==
        closed_form_counts(ClosedForm::product_elementary, 5, 2));
}

TEST_CASE("transitive data squared has rank(T) orbits") {
  CHECK(transitive_square_orbit_count(fibonacci()) == 2);
  CHECK(transitive_square_orbit_count(sl2_level_adjoint(7)) == 3);
  CHECK(transitive_square_orbit_count(sl2_level_adjoint(11)) == 5);
  CHECK(GaloisAction(load_fixture("sl2_7_ad_sq")).orbits().size() == 3);
  CHECK_THROWS_AS(transitive_square_orbit_count(ising()), Error);
}

TEST_CASE("coprime conductors keep the product transitive") {
  CHECK(is_transitive(load_fixture("fib_x_sl2_7_ad")));
  CHECK_FALSE(is_transitive(deligne_product(fibonacci(), fibonacci())));
}

TEST_CASE("printed Fib x Fib matrices agree with the products") {
  auto printed = load_fixture("fib_x_fib");
  CHECK(printed.conductor() == 5);
  CHECK(validate(printed).passed());
  CHECK(validate(load_fixture("fib_x_fib_conj")).passed());
  auto so5 = load_fixture("so5_3half_ad");
  CHECK(so5.t() == std::vector<long>{0, 3, 6, 4, 1, 7});
  auto a0 = load_fixture("sl2_12_A0");
  CHECK(a0.t() == std::vector<long>{0, 1, 3, 6, 6});
}

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

#include <algorithm>
#include <set>

#include "errors.hpp"
#include "subcategories.hpp"
#include "test_support.hpp"

using namespace modgal;
using namespace modgal::test;

namespace {

// Every subset containing the unit that is closed under fusion and duals.
std::vector<IndexSet> brute_subcategories(const ModularData& m) {
  const std::size_t r = m.rank();
  auto f = verlinde(m);
  std::vector<IndexSet> out;
  for (unsigned long mask = 1; mask < (1ul << r); mask += 2) {
    auto in = [&](std::size_t x) { return (mask >> x) & 1; };
    bool closed = true;
    for (std::size_t x = 0; x < r && closed; ++x) {
      if (!in(x)) continue;
      closed = in(f.dual[x]);
      for (std::size_t y = 0; y < r && closed; ++y)
        for (std::size_t z = 0; z < r && closed && in(y); ++z)
          if (f(x, y, z) != 0 && !in(z)) closed = false;
    }
    if (!closed) continue;
    IndexSet s;
    for (std::size_t x = 0; x < r; ++x)
      if (in(x)) s.push_back(x);
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

IndexSet brute_centralizer(const ModularData& m, const IndexSet& d) {
  IndexSet c;
  for (std::size_t y = 0; y < m.rank(); ++y) {
    bool ok = true;
    for (std::size_t x : d) ok = ok && m.s(x, y) == m.dim(x) * m.dim(y);
    if (ok) c.push_back(y);
  }
  return c;
}

std::vector<IndexSet> members(const std::vector<FusionSubcategory>& subs) {
  std::vector<IndexSet> out;
  for (const auto& s : subs) out.push_back(s.members);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("subcategory enumeration matches subset search") {
  for (const auto& name : fixture_names()) {
    auto m = fixture(name);
    if (m.rank() > 16) continue;
    CAPTURE(name);
    CategoryView v(m);
    auto subs = all_subcategories(v);
    CHECK(members(subs) == brute_subcategories(m));
    CHECK(std::is_sorted(subs.begin(), subs.end(),
                         [](const auto& a, const auto& b) { return a.size() < b.size(); }));
    for (const auto& d : subs) CHECK(centralizer(v, d).members == brute_centralizer(m, d.members));
  }
}

TEST_CASE("known lattices") {
  CHECK(all_subcategories(CategoryView(load_fixture("fib_x_fib"))).size() == 4);
  CHECK(all_subcategories(CategoryView(ising())).size() == 3);
  CHECK(all_subcategories(CategoryView(fibonacci())).size() == 2);
  // Subgroups of Z/5 + Z/5: 1 + 6 + 1.
  CHECK(all_subcategories(CategoryView(load_fixture("pointed_z5xz5"))).size() == 8);
  CHECK_THROWS_AS(all_subcategories(CategoryView(load_fixture("pointed_z5xz5")), 10), Error);
}

TEST_CASE("pointed and adjoint parts") {
  CategoryView is(ising());
  CHECK(pointed_part(is).members == IndexSet{0, 2});
  CHECK(adjoint_part(is).members == IndexSet{0, 2});
  CHECK(is_symmetric(is, pointed_part(is)));  // sVec
  CHECK(is_integral(is, pointed_part(is)));
  CHECK_FALSE(is_integral(is, whole(is)));

  CategoryView a0(load_fixture("sl2_12_A0"));
  CHECK(pointed_part(a0).size() == 1);
  CHECK(adjoint_part(a0).size() == 5);

  CategoryView tc(load_fixture("toric_code"));
  CHECK(pointed_part(tc).size() == 4);
  CHECK(adjoint_part(tc).size() == 1);
  CHECK(is_nondegenerate(tc, whole(tc)));
  CHECK_FALSE(is_nondegenerate(tc, generated_subcategory(tc, {1})));
  CHECK(is_symmetric(tc, generated_subcategory(tc, {1})));
}

TEST_CASE("Galois closure iff integral centralizer, both directions") {
  for (const auto& name : fixture_names()) {
    auto m = fixture(name);
    if (m.rank() > 50) continue;
    CAPTURE(name);
    CategoryView v(m);
    auto subs = all_subcategories(v);
    for (const auto& d : subs) {
      bool closed = true;
      for (std::size_t x : d.members)
        for (std::size_t y : v.galois().orbit_of(x)) closed = closed && d.contains(y);
      bool integral = true;
      for (std::size_t y : brute_centralizer(m, d.members)) integral = integral && m.dim(y).is_rational_integer();
      CHECK(closed == integral);
      CHECK(is_galois_closed(v, d) == closed);
    }
    CHECK(check_theorem_galois_closure(v, subs).passed);
  }
}

TEST_CASE("lattice identities") {
  for (const auto& name : fixture_names()) {
    auto m = fixture(name);
    if (m.rank() > 50) continue;
    CAPTURE(name);
    CategoryView v(m);
    auto subs = all_subcategories(v);
    auto rep = check_subcategory_lattice(v, subs);
    CHECK(rep.passed);
    CHECK(rep.cases > 0);
    auto dim = global_dim(m);
    for (const auto& d : subs) {
      CHECK(centralizer(v, centralizer(v, d)) == d);
      CHECK(subcategory_dim(v, d) * subcategory_dim(v, centralizer(v, d)) == dim);
    }
  }
}

TEST_CASE("orbit lower bound") {
  struct Case {
    const char* name;
    std::size_t bound, orbits;
  };
  for (auto c : {Case{"pointed_z4", 3, 3}, Case{"pointed_z5xz5", 3, 7}, Case{"z5_x_sl2_5_ad", 2, 3},
                 Case{"z7_x_sl2_7_ad", 2, 4}, Case{"fib", 1, 1}}) {
    CAPTURE(c.name);
    auto r = check_orbit_lower_bound(CategoryView(load_fixture(c.name)));
    CHECK(r.passed);
    CHECK(r.bound == c.bound);
    CHECK(r.orbit_count == c.orbits);
  }
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    auto r = check_orbit_lower_bound(CategoryView(fixture(name)));
    CHECK(r.orbit_count >= r.bound);
  }
}

TEST_CASE("orbit intersections with subcategories") {
  for (const auto& name : fixture_names()) {
    auto m = fixture(name);
    if (m.rank() > 50) continue;
    CAPTURE(name);
    CategoryView v(m);
    for (const auto& d : all_subcategories(v)) CHECK(counting2_degree_check(v, d).passed);
  }
}

TEST_CASE("pseudoinvertibles") {
  CategoryView fib(fibonacci());
  CHECK(pseudoinvertibles(fib) == IndexSet{0});
  CHECK(orbitwise_pseudoinvertible(fib));
  CategoryView is(ising());
  CHECK(pseudoinvertibles(is) == IndexSet{0, 2});
  CHECK_FALSE(orbitwise_pseudoinvertible(is));
  CategoryView s7(sl2_level_adjoint(7));
  CHECK(pseudoinvertibles(s7).size() == 1);
  CHECK(orbitwise_pseudoinvertible(CategoryView(load_fixture("z5_x_sl2_5_ad"))));
  CHECK(orbitwise_pseudoinvertible(CategoryView(load_fixture("fib_x_sl2_7_ad"))));
}

TEST_CASE("two-orbit diagnosis") {
  auto clause = [](const ModularData& m) {
    CategoryView v(m);
    return two_orbit_diagnosis(v, all_subcategories(v)).clause;
  };
  CHECK(clause(ising()) == TwoOrbitClause::ising);
  for (unsigned p : {3u, 5u, 7u}) CHECK(clause(slp_level_one(p)) == TwoOrbitClause::pointed_prime);
  CHECK(clause(load_fixture("fib_x_fib")) == TwoOrbitClause::fibonacci_pair);
  CHECK(clause(load_fixture("fib_x_fib_conj")) == TwoOrbitClause::fibonacci_pair);
  CHECK(clause(load_fixture("so5_3half_ad")) == TwoOrbitClause::simple);
  CHECK(clause(load_fixture("sl2_12_A0")) == TwoOrbitClause::simple);

  CategoryView a0(load_fixture("sl2_12_A0"));
  CHECK(two_orbit_diagnosis(a0, all_subcategories(a0)).summary == "simple, two orbits");
  CHECK(to_string(TwoOrbitClause::ising) == "ising");
}

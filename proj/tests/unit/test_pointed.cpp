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
#include <map>
#include <numeric>
#include <set>

#include "errors.hpp"
#include "galois_action.hpp"
#include "pointed.hpp"
#include "test_support.hpp"

using namespace modgal;
using namespace modgal::test;

namespace {

FiniteAbelianGroup grp(std::vector<unsigned> f) { return FiniteAbelianGroup(std::move(f)); }

// Each cyclic subgroup of order d has phi(d) generators.
unsigned long brute_cyclic_subgroups(const FiniteAbelianGroup& a) {
  std::map<unsigned, unsigned long> by_order;
  for (std::size_t g = 0; g < a.order(); ++g) ++by_order[a.element_order(g)];
  unsigned long total = 0;
  for (auto [d, c] : by_order) total += c / euler_phi(d);
  return total;
}

// Number of partitions of e.
unsigned long partitions(unsigned e) {
  std::vector<unsigned long> p(e + 1, 0);
  p[0] = 1;
  for (unsigned part = 1; part <= e; ++part)
    for (unsigned i = part; i <= e; ++i) p[i] += p[i - part];
  return p[e];
}

unsigned long abelian_group_count(unsigned n) {
  unsigned long c = 1;
  for (unsigned p = 2; p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) n /= p, ++e;
    if (e) c *= partitions(e);
  }
  return c;
}

// {k g : gcd(k, ord g) = 1}, grouped from scratch.
std::vector<std::vector<std::size_t>> brute_generator_partition(const FiniteAbelianGroup& a) {
  std::set<std::vector<std::size_t>> blocks;
  for (std::size_t g = 0; g < a.order(); ++g) {
    auto x = a.element(g);
    const unsigned o = a.element_order(g);
    std::vector<std::size_t> b;
    for (unsigned k = 1; k <= std::max(o, 1u); ++k) {
      if (std::gcd(k, o) != 1) continue;
      std::vector<unsigned> y(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) y[i] = (x[i] * k) % a.factors()[i];
      b.push_back(a.index_of(y));
    }
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    blocks.insert(b);
  }
  return {blocks.begin(), blocks.end()};
}

}  // namespace

TEST_CASE("rank 1800 orbit counts") {
  const std::vector<std::pair<std::vector<unsigned>, unsigned long>> table{
      {{2, 30, 30}, 280}, {{10, 180}, 126}, {{2, 6, 150}, 120}, {{2, 900}, 54},
      {{2, 10, 90}, 168}, {{15, 120}, 140}, {{2, 2, 450}, 72}, {{3, 600}, 60},
      {{30, 60}, 210},    {{5, 360}, 84},   {{6, 300}, 90},    {{1800}, 36},
  };
  std::set<std::vector<unsigned>> listed;
  for (const auto& [f, count] : table) {
    auto a = grp(f);
    CAPTURE(a.to_string());
    CHECK(a.order() == 1800);
    CHECK(cyclic_subgroup_count(a) == count);
    CHECK(brute_cyclic_subgroups(a) == count);
    listed.insert(f);
  }
  // 1800 = 2^3 3^2 5^2 has exactly these twelve groups.
  auto all = abelian_groups_of_order(1800);
  CHECK(all.size() == 12);
  for (const auto& a : all) CHECK(listed.count(a.factors()) == 1);
}

TEST_CASE("Toth's formula against element counting") {
  for (unsigned n = 1; n <= 200; ++n) {
    auto groups = abelian_groups_of_order(n);
    CHECK(groups.size() == abelian_group_count(n));
    for (const auto& a : groups) {
      CAPTURE(a.to_string());
      CHECK(cyclic_subgroup_count(a) == brute_cyclic_subgroups(a));
    }
  }
}

TEST_CASE("closed forms") {
  CHECK(closed_form_counts(ClosedForm::cyclic_divisors, 0, 12) == 6);
  CHECK(closed_form_counts(ClosedForm::product_cyclic, 5, 1) == 3);
  for (unsigned n = 1; n <= 60; ++n)
    CHECK(closed_form_counts(ClosedForm::cyclic_divisors, 0, n) == cyclic_subgroup_count(grp({n})));
  for (unsigned p : {2u, 3u, 5u})
    for (unsigned n = 1; n <= 3; ++n) {
      std::vector<unsigned> f(n, p);
      CHECK(closed_form_counts(ClosedForm::elementary_abelian, p, n) == brute_cyclic_subgroups(grp(f)));
    }
  CHECK(closed_form_counts(ClosedForm::product_cyclic, 5, 2) == 5);
  CHECK(closed_form_counts(ClosedForm::product_cyclic, 7, 1) == 4);
  CHECK(closed_form_counts(ClosedForm::product_elementary, 5, 2) == 13);
  CHECK_THROWS_AS(closed_form_counts(ClosedForm::product_cyclic, 3, 1), Error);
  CHECK_THROWS_AS(closed_form_counts(ClosedForm::elementary_abelian, 6, 1), Error);
}

TEST_CASE("group parsing") {
  CHECK(FiniteAbelianGroup::parse("2,30,30").factors() == std::vector<unsigned>{2, 30, 30});
  CHECK(FiniteAbelianGroup::parse("1").order() == 1);
  CHECK(FiniteAbelianGroup::parse("1,5").factors() == std::vector<unsigned>{5});
  CHECK_THROWS_AS(FiniteAbelianGroup::parse("2,3"), Error);
  CHECK_THROWS_AS(FiniteAbelianGroup::parse("4,x"), Error);
  CHECK_THROWS_AS(FiniteAbelianGroup::parse("0"), Error);
}

TEST_CASE("built data: s is the inverse bicharacter of q") {
  for (auto f : std::vector<std::vector<unsigned>>{{5}, {4}, {2, 2}, {2, 6}, {3, 3}, {8}}) {
    auto a = grp(f);
    auto m = build_pointed(a, default_form(a));
    CAPTURE(a.to_string());
    CHECK(validate(m).passed());
    bool ok = true;
    for (std::size_t g = 0; g < a.order(); ++g)
      for (std::size_t h = 0; h < a.order(); ++h) {
        auto x = a.element(g), y = a.element(h);
        std::vector<unsigned> z(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) z[i] = (x[i] + y[i]) % a.factors()[i];
        ok = ok && m.s(g, h) * m.twist(a.index_of(z)) == m.twist(g) * m.twist(h);
      }
    CHECK(ok);
  }
}

TEST_CASE("Z/5 with q(x) = zeta_5^{x^2}") {
  auto a = grp({5});
  QuadraticFormSpec q{{{1}}};
  auto m = build_pointed(a, q);
  CHECK(m.conductor() == 5);
  CHECK(m.t() == std::vector<long>{0, 1, 4, 4, 1});
  CHECK(GaloisAction(m).orbits().size() == 2);
}

TEST_CASE("degenerate and ill-defined forms are rejected") {
  CHECK_FALSE(form_defect(grp({5}), QuadraticFormSpec{{{0}}}).empty());
  CHECK_FALSE(form_defect(grp({2, 2}), QuadraticFormSpec{{{1, 0}, {0, 0}}}).empty());
  CHECK_FALSE(form_defect(grp({4}), QuadraticFormSpec{{{2}}}).empty());
  CHECK(form_defect(grp({2, 2}), QuadraticFormSpec{{{0, 1}, {1, 0}}}).empty());
  CHECK_THROWS_AS(build_pointed(grp({5}), QuadraticFormSpec{{{0}}}), Error);
  CHECK_THROWS_AS(QuadraticFormSpec::parse("1,2", 2), Error);
  CHECK(QuadraticFormSpec::parse("0,1;1,0", 2).gram == std::vector<std::vector<long>>{{0, 1}, {1, 0}});
}

TEST_CASE("orbit partition equals the cyclic generator partition") {
  for (unsigned n = 1; n <= 24; ++n)
    for (const auto& a : abelian_groups_of_order(n)) {
      CAPTURE(a.to_string());
      auto oracle = brute_generator_partition(a);
      CHECK(cyclic_generator_partition(a) == oracle);
      CHECK(GaloisAction(build_pointed(a, default_form(a))).orbits() == oracle);
    }
}

TEST_CASE("forms and bicharacters on small groups") {
  // Z/p, p odd: p - 1 bicharacters, one refinement each. Z/2: one
  // bicharacter (-1) with refinements +-i. Z/4: two bicharacters, two each.
  auto count = [](const FiniteAbelianGroup& a) {
    std::size_t forms = 0;
    std::size_t bi = for_each_nondegenerate_bicharacter(a, [&](const Bicharacter&, std::size_t r) { forms += r; });
    return std::pair{bi, forms};
  };
  CHECK(count(grp({5})) == std::pair<std::size_t, std::size_t>{4, 4});
  CHECK(count(grp({7})) == std::pair<std::size_t, std::size_t>{6, 6});
  CHECK(count(grp({2})) == std::pair<std::size_t, std::size_t>{1, 2});
  CHECK(count(grp({4})) == std::pair<std::size_t, std::size_t>{2, 4});

  for (unsigned n = 1; n <= 16; ++n)
    for (const auto& a : abelian_groups_of_order(n)) {
      CAPTURE(a.to_string());
      auto full = orbit_form_independence_check(a);
      auto fast = orbit_form_independence_exponent(a);
      CHECK(full.passed);
      CHECK(fast.passed);
      CHECK(full.forms == fast.forms);
      CHECK(full.bicharacters == fast.bicharacters);
      CHECK(full.orbit_count == cyclic_subgroup_count(a));
    }
}

TEST_CASE("every refinement of a bicharacter has that bicharacter") {
  auto a = grp({2, 4});
  for_each_nondegenerate_bicharacter(a, [&](const Bicharacter& b, std::size_t) {
    auto q = refinement_of(a, b);
    CHECK(form_defect(a, q).empty());
    auto m = build_pointed(a, q);
    CHECK(GaloisAction(m).orbits() == pointed_orbits_exponent(a, b));
  });
}

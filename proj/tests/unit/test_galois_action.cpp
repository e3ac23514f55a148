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
#include <numeric>
#include <set>

#include "galois_action.hpp"
#include "test_support.hpp"

using namespace modgal;
using namespace modgal::test;

namespace {

using Partition = std::vector<std::vector<std::size_t>>;

std::vector<unsigned> units_mod(unsigned n) {
  std::vector<unsigned> u;
  for (unsigned k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) u.push_back(k % n == 0 ? 1 : k);
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  return u;
}

// sigma-hat_k by definition: the column of s that sigma_k sends the
// normalized column X to.
std::size_t sigma_hat_oracle(const ModularData& m, unsigned k, std::size_t x) {
  const std::size_t r = m.rank();
  for (std::size_t y = 0; y < r; ++y) {
    bool match = true;
    for (std::size_t z = 0; z < r && match; ++z)
      match = (m.s(z, x) * m.s(0, x).inverse()).galois(k) == m.s(z, y) * m.s(0, y).inverse();
    if (match) return y;
  }
  return r;
}

}  // namespace

TEST_CASE("orbit partitions of the printed s-matrices") {
  const Partition two_two{{0, 1}, {2, 3}};
  CHECK(GaloisAction(load_fixture("fib_x_fib")).orbits() == two_two);
  CHECK(GaloisAction(load_fixture("fib_x_fib_conj")).orbits() == two_two);
  CHECK(GaloisAction(load_fixture("so5_3half_ad")).orbits() == Partition{{0, 1, 2}, {3, 4, 5}});
  CHECK(GaloisAction(load_fixture("sl2_12_A0")).orbits() == Partition{{0, 1, 2}, {3, 4}});
}

TEST_CASE("small examples") {
  CHECK(GaloisAction(fibonacci()).is_transitive());
  CHECK(GaloisAction(ising()).orbits() == Partition{{0, 2}, {1}});
  CHECK(GaloisAction(trivial_data()).orbits() == Partition{{0}});
  CHECK(GaloisAction(load_fixture("toric_code")).orbits().size() == 4);
  for (unsigned p : {5u, 7u, 11u, 13u}) CHECK(is_transitive(sl2_level_adjoint(p)));
}

TEST_CASE("permutations agree with the defining column match") {
  for (const auto& name : fixture_names()) {
    auto m = fixture(name);
    if (m.rank() > 16) continue;
    CAPTURE(name);
    GaloisAction g(m);
    CHECK(g.units() == units_mod(m.conductor()));
    bool ok = true;
    for (unsigned k : g.units())
      for (std::size_t x = 0; x < m.rank(); ++x) ok = ok && g.permutation(k)[x] == sigma_hat_oracle(m, k, x);
    CHECK(ok);
  }
}

TEST_CASE("k -> sigma-hat_k is a homomorphism and orbits are its orbits") {
  for (const auto& name : fixture_names()) {
    auto m = fixture(name);
    CAPTURE(name);
    GaloisAction g(m);
    const unsigned n = m.conductor();
    bool hom = true;
    for (unsigned a : g.units())
      for (unsigned b : g.units()) {
        const auto& pa = g.permutation(a);
        const auto& pb = g.permutation(b);
        const auto& pab = g.permutation(static_cast<long>((a * b) % n));
        for (std::size_t x = 0; x < m.rank(); ++x) hom = hom && pab[x] == pa[pb[x]];
      }
    CHECK(hom);

    bool orbit_ok = true;
    for (std::size_t x = 0; x < m.rank(); ++x) {
      std::set<std::size_t> o;
      for (unsigned k : g.units()) o.insert(g.permutation(k)[x]);
      orbit_ok = orbit_ok && std::vector<std::size_t>(o.begin(), o.end()) == g.orbit_of(x);
    }
    CHECK(orbit_ok);
    CHECK(g.permutation(1)[m.rank() - 1] == m.rank() - 1);
  }
}

TEST_CASE("orbit size equals the degree of the field of normalized entries") {
  for (const auto& name : fixture_names()) {
    auto m = fixture(name);
    CAPTURE(name);
    GaloisAction g(m);
    const auto units = units_mod(m.conductor());
    for (std::size_t x = 0; x < m.rank(); ++x) {
      std::size_t fix = 0;
      for (unsigned k : units) {
        bool fixed = true;
        for (std::size_t y = 0; y < m.rank() && fixed; ++y) {
          auto ratio = m.s(y, x) * m.s(0, x).inverse();
          fixed = ratio.galois(k) == ratio;
        }
        if (fixed) ++fix;
      }
      CHECK(fix * g.orbit_of(x).size() == units.size());
      CHECK(verlinde_field_degree(m, g, x) == g.orbit_of(x).size());
      CHECK(g.stabilizer(x).size() == fix);
    }
  }
}

TEST_CASE("sigma_k^2 of twists against the permuted twists") {
  for (const auto& name : fixture_names()) {
    auto m = fixture(name);
    CAPTURE(name);
    GaloisAction g(m);
    const long n = m.conductor();
    bool constant = true;
    for (unsigned k : g.units()) {
      const auto& p = g.permutation(k);
      auto c = [&](std::size_t x) { return ((static_cast<long>(k) * k % n) * m.t(x) - m.t(p[x])) % n; };
      const long c0 = (c(0) + n) % n;
      for (std::size_t x = 1; x < m.rank(); ++x) constant = constant && (c(x) + n) % n == c0;
    }
    CHECK(constant);
    CHECK(square_twist_consistency(m, g).passed);
    CHECK(dims_ratio_check(m, g).passed);
  }
}

TEST_CASE("pointed orbits are sets of generators of cyclic subgroups") {
  // C(Z/4): g -> 3g swaps 1 and 3.
  CHECK(GaloisAction(load_fixture("pointed_z4")).orbits() == Partition{{0}, {1, 3}, {2}});
  CHECK(GaloisAction(load_fixture("sl5_1")).orbits() == Partition{{0}, {1, 2, 3, 4}});
}

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

#include <complex>
#include <numbers>
#include <random>

#include "arith.hpp"
#include "cyclotomic.hpp"
#include "errors.hpp"

using namespace modgal;

namespace {

using Cplx = std::complex<double>;

Cplx zeta_c(unsigned n, long k) {
  return std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / n);
}

// Naive oracle: multiply coefficient lists and evaluate at exp(2 pi i / N).
Cplx eval(const std::vector<long>& c, unsigned n) {
  Cplx acc = 0;
  for (std::size_t i = 0; i < c.size(); ++i) acc += static_cast<double>(c[i]) * zeta_c(n, static_cast<long>(i));
  return acc;
}

CycNum from_longs(unsigned n, const std::vector<long>& c) {
  std::vector<mpq_class> q(c.begin(), c.end());
  return CycNum::from_coefficients(n, q);
}

CycNum random_element(std::mt19937& rng, unsigned n, bool with_den = true) {
  std::uniform_int_distribution<long> coef(-4, 4);
  std::uniform_int_distribution<long> den(1, 3);
  std::vector<mpq_class> c(n);
  for (auto& x : c) x = mpq_class(coef(rng), with_den ? den(rng) : 1);
  for (auto& x : c) x.canonicalize();
  return CycNum::from_coefficients(n, c);
}

bool close(Cplx a, Cplx b, double tol = 1e-9) { return std::abs(a - b) < tol; }

}  // namespace

TEST_CASE("roots of unity") {
  CHECK(CycNum::root_of_unity(4, 2) == CycNum(4, -1));
  CHECK(CycNum::root_of_unity(1, 0).is_one());
  CHECK(CycNum::root_of_unity(7, 7).is_one());
  CHECK(CycNum::root_of_unity(7, -1) == CycNum::root_of_unity(7, 6));
  for (unsigned n : {5u, 8u, 9u, 12u, 15u})
    for (long k = 0; k < static_cast<long>(n); ++k)
      CHECK(close(CycNum::root_of_unity(n, k).approx(), zeta_c(n, k)));
}

TEST_CASE("golden ratio relation") {
  CycNum u = CycNum(5, 1) + root_of_unity(5, 1) + root_of_unity(5, 4);
  CHECK((u * u - u - CycNum(5, 1)).is_zero());
  CHECK(close(u.approx(), (1 + std::sqrt(5.0)) / 2));
}

TEST_CASE("arithmetic") {
  CHECK(root_of_unity(3, 1) + root_of_unity(3, 2) == CycNum(3, -1));
  CycNum a = root_of_unity(9, 2) + CycNum(9, 3);
  CHECK((a * CycNum(9)).is_zero());
  CycNum u = from_longs(5, {1, 1, 0, 0, 1});
  CycNum v = from_longs(5, {1, 0, 1, 1, 0});
  CHECK(u * v == CycNum(5, -1));
  CHECK_THROWS_AS(root_of_unity(5, 1) + root_of_unity(7, 1), Error);
}

TEST_CASE("multiplication agrees with naive convolution") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> coef(-5, 5);
  for (unsigned n : {3u, 7u, 8u, 12u, 16u, 20u, 21u, 36u}) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<long> a(n), b(n), prod(2 * n - 1, 0);
      for (auto& x : a) x = coef(rng);
      for (auto& x : b) x = coef(rng);
      for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) prod[i + j] += a[i] * b[j];
      CycNum p = from_longs(n, a) * from_longs(n, b);
      CHECK(p == from_longs(n, prod));
      CHECK(close(p.approx(), eval(prod, n), 1e-6));
    }
  }
}

TEST_CASE("cyclotomic polynomials") {
  for (unsigned n = 1; n <= 64; ++n) {
    const auto& phi = cyclotomic_polynomial(n);
    CHECK(phi.size() == euler_phi(n) + 1);
    CHECK(phi.back() == 1);
    // prod_{d|n} Phi_d = x^n - 1, multiplied out with plain integers.
    std::vector<long> prod{1};
    for (unsigned d : divisors(n)) {
      const auto& f = cyclotomic_polynomial(d);
      std::vector<long> next(prod.size() + f.size() - 1, 0);
      for (std::size_t i = 0; i < prod.size(); ++i)
        for (std::size_t j = 0; j < f.size(); ++j) next[i + j] += prod[i] * f[j];
      prod = next;
    }
    std::vector<long> expect(n + 1, 0);
    expect[0] = -1;
    expect[n] = 1;
    CHECK(prod == expect);
  }
  CHECK(cyclotomic_polynomial(5) == std::vector<long>{1, 1, 1, 1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
}

TEST_CASE("inverse") {
  CHECK(CycNum(3, 2).inverse() == CycNum(3, mpq_class(1, 2)));
  CHECK(root_of_unity(11, 3).inverse() == root_of_unity(11, -3));
  CycNum u = from_longs(5, {1, 1, 0, 0, 1});
  CHECK(u.inverse() == u - CycNum(5, 1));
  CHECK_THROWS_AS(CycNum(5).inverse(), Error);
  std::mt19937 rng(11);
  for (unsigned n : {5u, 8u, 9u, 15u, 16u, 24u, 35u}) {
    for (int trial = 0; trial < 5; ++trial) {
      CycNum a = random_element(rng, n);
      if (a.is_zero()) continue;
      CycNum b = a.inverse();
      CHECK((a * b).is_one());
      CHECK(b.inverse() == a);
      CHECK(close(b.approx(), 1.0 / a.approx(), 1e-6 * std::abs(b.approx()) + 1e-9));
    }
  }
}

TEST_CASE("galois automorphisms") {
  CycNum x = root_of_unity(5, 1) + root_of_unity(5, 4);
  CHECK(x.galois(2) == root_of_unity(5, 2) + root_of_unity(5, 3));
  CHECK(x.galois(1) == x);
  CHECK(CycNum(12, mpq_class(3, 7)).galois(5) == CycNum(12, mpq_class(3, 7)));
  CHECK_THROWS_AS(x.galois(5), Error);
  CHECK(root_of_unity(8, 1).conj() == root_of_unity(8, 7));
  CHECK(root_of_unity(4, 1).conj() == -root_of_unity(4, 1));
  CHECK(from_longs(5, {1, 1, 0, 0, 1}).is_real());

  std::mt19937 rng(3);
  for (unsigned n : {7u, 12u, 15u, 16u, 20u}) {
    auto units = units_mod(n);
    for (int trial = 0; trial < 4; ++trial) {
      CycNum a = random_element(rng, n), b = random_element(rng, n);
      for (unsigned k : units) {
        CHECK((a + b).galois(k) == a.galois(k) + b.galois(k));
        CHECK((a * b).galois(k) == a.galois(k) * b.galois(k));
        // sigma_k evaluated numerically: substitute zeta -> zeta^k.
        Cplx expect = 0;
        for (unsigned i = 0; i < a.degree(); ++i)
          expect += a.coefficient(i).get_d() * zeta_c(n, static_cast<long>(i * k));
        CHECK(close(a.galois(k).approx(), expect, 1e-6));
        for (unsigned j : units) CHECK(a.galois(j).galois(k) == a.galois(static_cast<long>(j * k % n)));
      }
    }
  }
}

TEST_CASE("canonical form is idempotent") {
  std::mt19937 rng(5);
  for (unsigned n : {9u, 10u, 18u}) {
    CycNum a = random_element(rng, n);
    std::vector<mpq_class> c;
    for (unsigned i = 0; i < a.degree(); ++i) c.push_back(a.coefficient(i));
    CHECK(CycNum::from_coefficients(n, c) == a);
  }
  // 1 + z + ... + z^4 in Q(zeta_5) is zero after reduction.
  CHECK(from_longs(5, {1, 1, 1, 1, 1}).is_zero());
}

TEST_CASE("embedding and minimal conductor") {
  CHECK(root_of_unity(3, 1).embed(6) == root_of_unity(6, 2));
  CHECK(CycNum(4, mpq_class(5, 3)).embed(20) == CycNum(20, mpq_class(5, 3)));
  CHECK_THROWS_AS(root_of_unity(3, 1).embed(8), Error);
  std::mt19937 rng(9);
  for (auto [n, m] : {std::pair{5u, 35u}, {8u, 24u}, {3u, 12u}, {9u, 45u}}) {
    CycNum a = random_element(rng, n);
    CycNum b = a.embed(m);
    CHECK(close(a.approx(), b.approx(), 1e-9));
    auto back = b.restrict_to(n);
    REQUIRE(back);
    CHECK(*back == a);
  }
  CHECK(root_of_unity(12, 4).minimal_conductor() == 3);
  CHECK(root_of_unity(6, 1).minimal_conductor() == 3);  // zeta_6 = -zeta_3^2
  CHECK(CycNum(10, 4).minimal_conductor() == 1);
  CHECK_FALSE(root_of_unity(12, 1).restrict_to(6));
  CycNum sqrt2 = root_of_unity(16, 2) + root_of_unity(16, 14);
  CHECK(sqrt2.minimal_conductor() == 8);
}

TEST_CASE("rational integers") {
  CHECK(CycNum(7, -3).is_rational_integer());
  CHECK_FALSE(CycNum(7, mpq_class(1, 2)).is_rational_integer());
  CHECK_FALSE((root_of_unity(5, 1) + root_of_unity(5, 4)).is_rational_integer());
  CHECK((root_of_unity(5, 1) + root_of_unity(5, 2) + root_of_unity(5, 3) + root_of_unity(5, 4)).is_rational_integer());
}

TEST_CASE("certified signs") {
  CHECK(sign_of_real(CycNum(5)) == Sign::zero);
  CHECK(sign_of_real(from_longs(5, {1, 1, 0, 0, 1})) == Sign::positive);
  CHECK(sign_of_real(root_of_unity(5, 2) + root_of_unity(5, 3)) == Sign::negative);
  CHECK_THROWS_AS(sign_of_real(root_of_unity(5, 1)), Error);
  // A tiny nonzero real: (u - 1.6180339887...)-style cancellation with a
  // rational approximant 987/610 of the golden ratio.
  CycNum u = from_longs(5, {1, 1, 0, 0, 1});
  CycNum tiny = CycNum(5, 2) * u - CycNum(5, 1) - CycNum(5, mpq_class(2 * 987 - 610, 610));
  CHECK(sign_of_real(tiny) == ((2 * (1 + std::sqrt(5.0)) / 2 - 1 - (2.0 * 987 - 610) / 610) > 0 ? Sign::positive : Sign::negative));
  CHECK(sign_of_real(tiny, 16) == sign_of_real(tiny, 256));
  std::mt19937 rng(1);
  for (unsigned n : {7u, 13u, 16u, 24u}) {
    for (int trial = 0; trial < 5; ++trial) {
      CycNum a = random_element(rng, n);
      CycNum re = a + a.conj();
      if (re.is_zero()) continue;
      double approx = re.approx().real();
      if (std::abs(approx) < 1e-6) continue;
      CHECK(sign_of_real(re) == (approx > 0 ? Sign::positive : Sign::negative));
    }
  }
}

TEST_CASE("root of unity order") {
  CHECK(CycNum(3, -1).root_of_unity_order() == 2u);
  CHECK(CycNum(1, -1).root_of_unity_order() == 2u);
  CHECK(root_of_unity(16, 3).root_of_unity_order() == 16u);
  CHECK_FALSE(CycNum(4, 2).root_of_unity_order());
  CHECK((-root_of_unity(5, 1)).root_of_unity_order() == 10u);
  CHECK(root_of_unity(12, 8).root_of_unity_order() == 3u);
  CHECK_FALSE((root_of_unity(5, 1) + root_of_unity(5, 4)).root_of_unity_order());
  auto r = (-root_of_unity(9, 2)).as_root_of_unity();
  REQUIRE(r);
  CHECK(r->first == 18);
  CHECK(CycNum::root_of_unity(18, r->second).embed(18) == (-root_of_unity(9, 2)).embed(18));
  for (unsigned k = 0; k < 24; ++k) {
    auto rk = root_of_unity(24, k).as_root_of_unity();
    REQUIRE(rk);
    CHECK(rk->first == 24 / std::gcd(24u, k));
    CHECK(std::gcd(rk->first, rk->second) == 1);
  }
}

TEST_CASE("dot product matches summed products") {
  std::mt19937 rng(21);
  for (bool dens : {false, true}) {
    std::vector<CycNum> a, b;
    for (int i = 0; i < 6; ++i) {
      a.push_back(random_element(rng, 15, dens));
      b.push_back(random_element(rng, 15, dens));
    }
    CycNum acc(15);
    for (int i = 0; i < 6; ++i) acc += a[i] * b[i];
    CHECK(dot(a, b) == acc);
  }
}

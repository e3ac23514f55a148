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

#include "families.hpp"

#include <functional>
#include <map>

#include "arith.hpp"
#include "errors.hpp"
#include "galois_action.hpp"
#include "pointed.hpp"

namespace modgal {

namespace {

CycNum z(unsigned n, long k) { return CycNum::root_of_unity(n, k); }
CycNum c(unsigned n, long v) { return CycNum(n, v); }

ModularData from_rows(unsigned n, std::vector<std::string> labels, const std::vector<std::vector<CycNum>>& rows,
                      std::vector<long> t) {
  const std::size_t r = rows.size();
  CycMatrix s(r, r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) s(i, j) = rows[i][j];
  return ModularData(n, std::move(labels), std::move(s), std::move(t));
}

// [n]_q = sum_{i<n} q^{n-1-2i} with q = zeta_{2p} = -zeta_p^{(p+1)/2}.
CycNum quantum_integer(unsigned p, long n) {
  CycNum acc(p);
  const long half = (static_cast<long>(p) + 1) / 2;
  for (long i = 0; i < n; ++i) {
    const long e = n - 1 - 2 * i;
    CycNum term = z(p, e * half);
    acc += (mod(e, 2) == 0) ? term : -term;
  }
  return acc;
}

ModularData fib_x_fib() {
  const unsigned n = 5;
  const CycNum u = c(n, 1) + z(n, 1) + z(n, 4);
  const CycNum u2 = u * u;
  return from_rows(n, {"X0", "X1", "X2", "X3"},
                   {{c(n, 1), u2, u, u}, {u2, c(n, 1), -u, -u}, {u, -u, c(n, -1), u2}, {u, -u, u2, c(n, -1)}},
                   {0, 4, 2, 2});
}

ModularData fib_x_fib_conj() {
  const unsigned n = 5;
  const CycNum u = c(n, 1) + z(n, 1) + z(n, 4);
  const CycNum su = u.galois(2);
  return from_rows(n, {"X0", "X1", "X2", "X3"},
                   {{c(n, 1), c(n, -1), u, su},
                    {c(n, -1), c(n, 1), -su, -u},
                    {u, -su, c(n, -1), c(n, -1)},
                    {su, -u, c(n, -1), c(n, -1)}},
                   {0, 3, 2, 1});
}

ModularData so5_3half_ad() {
  const unsigned n = 9;
  const CycNum u = z(n, 1) - z(n, 2) - z(n, 5);
  const CycNum su = u.galois(2), s2u = su.galois(2);
  const CycNum one = c(n, 1), m1 = c(n, -1);
  return from_rows(n, {"X0", "X1", "X2", "X3", "X4", "X5"},
                   {{one, m1, one, u, su, s2u},
                    {m1, one, m1, -su, -s2u, -u},
                    {one, m1, one, s2u, u, su},
                    {u, -su, s2u, one, one, one},
                    {su, -s2u, u, one, one, one},
                    {s2u, -u, su, one, one, one}},
                   {0, 3, 6, 4, 1, 7});
}

ModularData sl2_12_a0() {
  const unsigned n = 7;
  const CycNum one = c(n, 1);
  const CycNum a = one - z(n, 4) - z(n, 3);
  const CycNum b = -z(n, 5) - 2 * z(n, 4) - 2 * z(n, 3) - z(n, 2);
  const CycNum cc = -z(n, 3) - z(n, 2) - 2 * z(n, 1) - one;
  const CycNum w = one - a + b;
  const CycNum cb = cc.conj();
  return from_rows(n, {"X0", "X1", "X2", "X3", "X4"},
                   {{one, a, b, w, w},
                    {a, b, c(n, -1), -w, -w},
                    {b, c(n, -1), -a, w, w},
                    {w, -w, w, cc, cb},
                    {w, -w, w, cb, cc}},
                   {0, 1, 3, 6, 6});
}

ModularData pointed_default(std::vector<unsigned> factors) {
  FiniteAbelianGroup a(std::move(factors));
  return build_pointed(a, default_form(a));
}

struct Entry {
  FixtureInfo info;
  std::function<ModularData()> build;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> list = {
      {{"trivial", "rank-1 data"}, [] { return trivial_data(); }},
      {{"fib", "Fibonacci, t = (1, zeta_5^2)"}, [] { return fibonacci(1); }},
      {{"fib_galois", "Galois conjugate sigma_2 of fib"}, [] { return fibonacci(2); }},
      {{"ising", "Ising = C(sl2,2), t = (1, zeta_16, -1)"}, [] { return ising(1); }},
      {{"sl2_1", "C(sl2,1): semion on Z/2"}, [] { return slp_level_one(2); }},
      {{"sl3_1", "C(sl3,1): pointed on Z/3"}, [] { return slp_level_one(3); }},
      {{"sl5_1", "C(sl5,1): pointed on Z/5"}, [] { return slp_level_one(5); }},
      {{"sl7_1", "C(sl7,1): pointed on Z/7"}, [] { return slp_level_one(7); }},
      {{"pointed_z4", "pointed on Z/4, q(x) = zeta_8^{x^2}"}, [] { return pointed_default({4}); }},
      {{"toric_code", "pointed on Z/2+Z/2, q(x,y) = (-1)^{xy}"},
       [] {
         FiniteAbelianGroup a({2, 2});
         return build_pointed(a, QuadraticFormSpec{{{0, 1}, {1, 0}}});
       }},
      {{"pointed_z5xz5", "pointed on Z/5+Z/5, diagonal form"}, [] { return pointed_default({5, 5}); }},
      {{"sl2_5_ad", "C(sl2,3)_ad"}, [] { return sl2_level_adjoint(5); }},
      {{"sl2_7_ad", "C(sl2,5)_ad"}, [] { return sl2_level_adjoint(7); }},
      {{"sl2_11_ad", "C(sl2,9)_ad"}, [] { return sl2_level_adjoint(11); }},
      {{"sl2_13_ad", "C(sl2,11)_ad"}, [] { return sl2_level_adjoint(13); }},
      {{"fib_x_fib", "printed s-matrix of Fib x Fib; t from the product of fib with itself"},
       [] { return fib_x_fib(); }},
      {{"fib_x_fib_conj", "printed s-matrix of Fib x Fib^sigma; t from fib and sigma_3(fib)"},
       [] { return fib_x_fib_conj(); }},
      {{"so5_3half_ad", "printed s-matrix of C(so5,3/2)_ad; t found by solving (st)^3 = tau s^2"},
       [] { return so5_3half_ad(); }},
      {{"sl2_12_A0", "printed s-matrix of C(sl2,12)_A^0; t found by solving (st)^3 = tau s^2"},
       [] { return sl2_12_a0(); }},
      {{"z5_x_sl2_5_ad", "pointed Z/5 x C(sl2,3)_ad"},
       [] { return deligne_product(pointed_default({5}), sl2_level_adjoint(5)); }},
      {{"z25_x_sl2_5_ad", "pointed Z/25 x C(sl2,3)_ad"},
       [] { return deligne_product(pointed_default({25}), sl2_level_adjoint(5)); }},
      {{"z7_x_sl2_7_ad", "pointed Z/7 x C(sl2,5)_ad"},
       [] { return deligne_product(pointed_default({7}), sl2_level_adjoint(7)); }},
      {{"z5xz5_x_sl2_5_ad", "pointed Z/5+Z/5 x C(sl2,3)_ad"},
       [] { return deligne_product(pointed_default({5, 5}), sl2_level_adjoint(5)); }},
      {{"fib_x_sl2_7_ad", "fib x C(sl2,5)_ad, coprime conductors"},
       [] { return deligne_product(fibonacci(1), sl2_level_adjoint(7)); }},
      {{"ising_x_sl2_5_ad", "ising x C(sl2,3)_ad"},
       [] { return deligne_product(ising(1), sl2_level_adjoint(5)); }},
      {{"sl2_7_ad_sq", "C(sl2,5)_ad x C(sl2,5)_ad"},
       [] { return deligne_product(sl2_level_adjoint(7), sl2_level_adjoint(7)); }},
  };
  return list;
}

}  // namespace

ModularData trivial_data() {
  CycMatrix s(1, 1, 1);
  s(0, 0) = CycNum(1, 1);
  return ModularData(1, {"1"}, std::move(s), {0});
}

ModularData fibonacci(unsigned variant) {
  if (variant < 1 || variant > 4) throw Error(ErrorCode::invalid_argument, "Fibonacci variant must be 1..4");
  const unsigned n = 5;
  const CycNum u = c(n, 1) + z(n, 1) + z(n, 4);
  ModularData base = from_rows(n, {"1", "tau"}, {{c(n, 1), u}, {u, c(n, -1)}}, {0, 2});
  return variant == 1 ? base : base.galois_conjugate(variant);
}

ModularData ising(unsigned nu) {
  if (nu % 2 == 0 || nu >= 16) throw Error(ErrorCode::invalid_argument, "Ising variant must be odd and below 16");
  const unsigned n = 16;
  CycNum d = z(n, 2) + z(n, 14);
  if (((nu * nu - 1) / 8) % 2 == 1) d = -d;
  return from_rows(n, {"1", "sigma", "psi"},
                   {{c(n, 1), d, c(n, 1)}, {d, c(n, 0), -d}, {c(n, 1), -d, c(n, 1)}},
                   {0, static_cast<long>(nu), 8});
}

ModularData sl2_level_adjoint(unsigned p, unsigned galois_variant) {
  if (!is_prime(p) || p < 5) throw Error(ErrorCode::invalid_argument, "p must be a prime >= 5");
  if (galois_variant % p == 0) throw Error(ErrorCode::invalid_argument, "Galois variant must be a unit mod p");
  const std::size_t r = (p - 1) / 2;
  CycMatrix s(r, r, p);
  std::vector<long> t(r);
  std::vector<std::string> labels(r);
  for (std::size_t a = 0; a < r; ++a) {
    t[a] = mod(static_cast<long>(a * (a + 1)), p);
    labels[a] = std::to_string(2 * a);
    for (std::size_t b = 0; b < r; ++b) s(a, b) = quantum_integer(p, static_cast<long>((2 * a + 1) * (2 * b + 1)));
  }
  ModularData m(p, std::move(labels), std::move(s), std::move(t));
  return galois_variant % p == 1 ? m : m.galois_conjugate(galois_variant);
}

ModularData slp_level_one(unsigned p) {
  if (!is_prime(p)) throw Error(ErrorCode::invalid_argument, "p must be prime");
  FiniteAbelianGroup a({p});
  // h_1 = (p-1)/(2p): theta_1 = zeta_4 for p = 2, zeta_p^{(p-1)/2} otherwise.
  const long e = p == 2 ? 1 : (p - 1) / 2;
  return build_pointed(a, QuadraticFormSpec{{{e}}});
}

ModularData transcribed_fixture(const std::string& name) {
  if (name == "fib_x_fib") return fib_x_fib();
  if (name == "fib_x_fib_conj") return fib_x_fib_conj();
  if (name == "so5_3half_ad") return so5_3half_ad();
  if (name == "sl2_12_A0") return sl2_12_a0();
  throw Error(ErrorCode::invalid_argument, "unknown transcribed fixture \"" + name + "\"");
}

const std::vector<FixtureInfo>& fixture_catalog() {
  static const std::vector<FixtureInfo> infos = [] {
    std::vector<FixtureInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

ModularData fixture(const std::string& name) {
  for (const auto& e : entries())
    if (e.info.name == name) return e.build();
  throw Error(ErrorCode::invalid_argument, "unknown fixture \"" + name + "\"");
}

std::size_t transitive_square_orbit_count(const ModularData& t) {
  if (!is_transitive(t)) throw Error(ErrorCode::invalid_argument, "input is not transitive");
  const std::size_t count = GaloisAction(deligne_product(t, t)).orbits().size();
  if (count != t.rank())
    throw Error(ErrorCode::internal, "|Orb(T x T)| = " + std::to_string(count) + " but rank(T) = " +
                                         std::to_string(t.rank()));
  return count;
}

}  // namespace modgal

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

#include "tspectra.hpp"

#include <map>
#include <numeric>
#include <sstream>

#include "arith.hpp"
#include "errors.hpp"

namespace modgal {

namespace {

unsigned long ipow(unsigned long p, unsigned e) {
  unsigned long out = 1;
  while (e--) out *= p;
  return out;
}

std::vector<unsigned long> unit_squares(unsigned long n) {
  std::set<unsigned long> sq;
  for (unsigned long u : units_mod(n)) sq.insert(mulmod(u, u, n));
  return {sq.begin(), sq.end()};
}

}  // namespace

void RootSet::insert(unsigned long n, long e) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "root order must be positive");
  const unsigned long r = static_cast<unsigned long>(mod(e, static_cast<long>(n)));
  const unsigned long g = std::gcd(r, n);
  roots_.emplace(n / g, r / g);
}

void RootSet::merge(const RootSet& other) { roots_.insert(other.roots_.begin(), other.roots_.end()); }

bool RootSet::contains(unsigned long n, long e) const {
  RootSet one;
  one.insert(n, e);
  return roots_.count(*one.roots_.begin()) != 0;
}

bool RootSet::intersects(const RootSet& other) const {
  for (const Root& x : other.roots_)
    if (roots_.count(x)) return true;
  return false;
}

unsigned long RootSet::max_order() const {
  unsigned long m = 1;
  for (const Root& x : roots_) m = lcm_ul(m, x.first);
  return m;
}

std::string RootSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [n, e] : roots_) {
    os << (first ? "" : ",") << "z" << n << "^" << e;
    first = false;
  }
  os << '}';
  return os.str();
}

RootSet make_phi(unsigned long n) {
  RootSet s;
  for (unsigned long e = 0; e < n; ++e) s.insert(n, static_cast<long>(e));
  return s;
}

RootSet make_gamma(unsigned long n) {
  RootSet s;
  for (unsigned long u : units_mod(n)) s.insert(n, static_cast<long>(u));
  return s;
}

RootSet make_gamma_res(unsigned long p, unsigned lambda, long r) {
  if (!is_prime(p)) throw Error(ErrorCode::invalid_argument, "p must be prime");
  if (mod(r, static_cast<long>(p)) == 0) throw Error(ErrorCode::invalid_argument, "residue must be prime to p");
  RootSet s;
  if (lambda == 0) {
    s.insert(1, 0);
    return s;
  }
  const unsigned long n = ipow(p, lambda);
  const unsigned long base = static_cast<unsigned long>(mod(r, static_cast<long>(n)));
  for (unsigned long q : unit_squares(n)) s.insert(n, static_cast<long>(mulmod(base, q, n)));
  return s;
}

RootSet make_phi_res(unsigned long p, unsigned mu, long r) {
  RootSet s;
  s.insert(1, 0);
  for (unsigned j = 1; j <= mu; ++j) s.merge(make_gamma_res(p, j, r));
  return s;
}

namespace {

// Least element of the square orbit of zeta_n^e.
unsigned long orbit_key(unsigned long n, unsigned long e, const std::vector<unsigned long>& squares) {
  unsigned long best = n;
  for (unsigned long q : squares) best = std::min(best, mulmod(e, q, n));
  return best;
}

}  // namespace

std::size_t square_galois_orbit_count(const RootSet& s) {
  if (s.empty()) throw Error(ErrorCode::invalid_argument, "empty root set");
  std::map<unsigned long, std::vector<unsigned long>> squares;
  std::set<RootSet::Root> keys;
  for (const auto& [n, e] : s.roots()) {
    auto it = squares.find(n);
    if (it == squares.end()) it = squares.emplace(n, unit_squares(n)).first;
    keys.emplace(n, orbit_key(n, e, it->second));
  }
  return keys.size();
}

bool is_square_galois_closed(const RootSet& s) {
  std::map<unsigned long, std::vector<unsigned long>> squares;
  for (const auto& [n, e] : s.roots()) {
    auto it = squares.find(n);
    if (it == squares.end()) it = squares.emplace(n, unit_squares(n)).first;
    for (unsigned long q : it->second)
      if (!s.contains(n, static_cast<long>(mulmod(e, q, n)))) return false;
  }
  return true;
}

CheckReport psi_e_matrix_check(unsigned k) {
  CheckReport rep("psi_e_matrix k=" + std::to_string(k));
  const unsigned n = 8;
  const CycNum d = CycNum::root_of_unity(n, 1) + CycNum::root_of_unity(n, 7);
  const CycNum one(n, 1), zero(n);
  const CycNum scale = CycNum::root_of_unity(n, 2 * static_cast<long>(k)) * mpq_class(1, 2);
  const std::vector<std::vector<CycNum>> base = {{zero, d, -d}, {d, one, one}, {-d, one, one}};
  CycMatrix m(3, 3, n);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = scale * base[i][j];
  rep.cases = 2;
  if (d * d != CycNum(n, 2)) rep.fail("d^2 != 2");
  if (m.transpose() != m) rep.fail("matrix is not symmetric");
  const CycMatrix sq = m * m;
  const CycNum expected = CycNum::root_of_unity(n, 4 * static_cast<long>(k));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (sq(i, j) != (i == j ? expected : zero))
        rep.fail("square differs from zeta_4^" + std::to_string(2 * k) + " I at (" + std::to_string(i) + "," +
                 std::to_string(j) + ")");
  return rep;
}

}  // namespace modgal

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

#ifndef MODGAL_TSPECTRA_HPP
#define MODGAL_TSPECTRA_HPP

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "subcategories.hpp"

namespace modgal {

// A finite set of roots of unity, each stored as (order, exponent) with
// gcd(exponent, order) = 1 and 0 <= exponent < order.
class RootSet {
 public:
  using Root = std::pair<unsigned long, unsigned long>;

  void insert(unsigned long n, long e);  // zeta_n^e, any representative
  void merge(const RootSet& other);
  bool contains(unsigned long n, long e) const;
  bool intersects(const RootSet& other) const;
  std::size_t size() const { return roots_.size(); }
  bool empty() const { return roots_.empty(); }
  unsigned long max_order() const;  // lcm of orders
  const std::set<Root>& roots() const { return roots_; }
  std::string to_string() const;
  friend bool operator==(const RootSet&, const RootSet&) = default;

 private:
  std::set<Root> roots_;
};

RootSet make_phi(unsigned long n);
RootSet make_gamma(unsigned long n);
// Orbit of zeta_{p^lambda}^r under zeta -> zeta^{u^2}, u a unit.
RootSet make_gamma_res(unsigned long p, unsigned lambda, long r);
// {1} together with the classes of zeta_{p^j}^r for 1 <= j <= mu.
RootSet make_phi_res(unsigned long p, unsigned mu, long r);

std::size_t square_galois_orbit_count(const RootSet& s);
// True when s is a union of full square Galois orbits.
bool is_square_galois_closed(const RootSet& s);

// (zeta_4^k / 2) [[0,d,-d],[d,1,1],[-d,1,1]] with d^2 = 2.
CheckReport psi_e_matrix_check(unsigned k);

}  // namespace modgal

#endif

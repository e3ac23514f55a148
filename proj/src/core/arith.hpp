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

// Small integer number theory shared by the modules.

#ifndef MODGAL_ARITH_HPP
#define MODGAL_ARITH_HPP

#include <cstdint>
#include <numeric>
#include <vector>

namespace modgal {

inline long mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

inline unsigned long lcm_ul(unsigned long a, unsigned long b) {
  return a / std::gcd(a, b) * b;
}

inline std::vector<unsigned> divisors(unsigned n) {
  std::vector<unsigned> small, large;
  for (unsigned d = 1; static_cast<unsigned long>(d) * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

inline bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Units of Z/nZ in increasing order, written as representatives in [1, n].
// For n == 1 the group is trivial and is represented by {1}.
inline std::vector<unsigned> units_mod(unsigned n) {
  std::vector<unsigned> out;
  if (n == 1) return {1};
  for (unsigned k = 1; k < n; ++k)
    if (std::gcd(k, n) == 1) out.push_back(k);
  return out;
}

// Prime factorization as (prime, exponent) pairs.
inline std::vector<std::pair<unsigned long, unsigned>> factorize(unsigned long n) {
  std::vector<std::pair<unsigned long, unsigned>> out;
  for (unsigned long p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline unsigned long mulmod(unsigned long a, unsigned long b, unsigned long n) {
  return static_cast<unsigned long>((static_cast<unsigned __int128>(a) * b) % n);
}

}  // namespace modgal

#endif

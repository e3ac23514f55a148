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

#ifndef MODGAL_TEST_SUPPORT_HPP
#define MODGAL_TEST_SUPPORT_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "families.hpp"
#include "io.hpp"
#include "modular_data.hpp"

namespace modgal::test {

inline std::string fixture_path(const std::string& name) {
  return std::string(MODGAL_FIXTURE_DIR) + "/" + name + ".mtc";
}

inline ModularData load_fixture(const std::string& name) { return load_modular_data(fixture_path(name)); }

inline std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& f : fixture_catalog()) out.push_back(f.name);
  return out;
}

// Verlinde coefficients in double precision, rounded; the exact
// fusion table must agree with these.
inline std::vector<long> float_verlinde(const ModularData& m) {
  const std::size_t r = m.rank();
  auto s = m.s().approx();
  std::vector<long> out(r * r * r);
  std::complex<double> d2 = 0;
  for (std::size_t i = 0; i < r; ++i) d2 += s[i] * std::conj(s[i]);
  for (std::size_t x = 0; x < r; ++x)
    for (std::size_t y = 0; y < r; ++y)
      for (std::size_t z = 0; z < r; ++z) {
        std::complex<double> acc = 0;
        for (std::size_t w = 0; w < r; ++w)
          acc += s[x * r + w] * s[y * r + w] * std::conj(s[z * r + w]) / s[w];
        out[(x * r + y) * r + z] = std::lround((acc / d2).real());
      }
  return out;
}

inline unsigned long euler_phi(unsigned long n) {
  unsigned long c = 0;
  for (unsigned long k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++c;
  return c;
}

}  // namespace modgal::test

#endif

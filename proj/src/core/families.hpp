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

#ifndef MODGAL_FAMILIES_HPP
#define MODGAL_FAMILIES_HPP

#include <string>
#include <vector>

#include "modular_data.hpp"

namespace modgal {

ModularData trivial_data();

// sigma_k of the Fibonacci data s = [[1,u],[u,-1]], t = (1, zeta_5^2),
// u = 1 + zeta_5 + zeta_5^4; variant k in {1,2,3,4}.
ModularData fibonacci(unsigned variant = 1);

// Ising data over Q(zeta_16) with t = (1, zeta_16^nu, -1), nu odd.
ModularData ising(unsigned nu = 1);

// Adjoint subcategory of SU(2) at level p-2: objects of even spin 2m,
// s_{ab} = [(2a+1)(2b+1)]_q at q = zeta_{2p}, theta_m = zeta_p^{m(m+1)},
// then sigma_k applied entrywise.
ModularData sl2_level_adjoint(unsigned p, unsigned galois_variant = 1);

// C(sl_p, 1) as pointed data on Z/p.
ModularData slp_level_one(unsigned p);

// Transcribed s-matrices: "fib_x_fib", "fib_x_fib_conj",
// "so5_3half_ad", "sl2_12_A0".
ModularData transcribed_fixture(const std::string& name);

struct FixtureInfo {
  std::string name;
  std::string provenance;
};

const std::vector<FixtureInfo>& fixture_catalog();
ModularData fixture(const std::string& name);

// |Orb(T x T)|; throws unless T is transitive and the count is rank(T).
std::size_t transitive_square_orbit_count(const ModularData& t);

}  // namespace modgal

#endif

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

#ifndef MODGAL_GALOIS_ACTION_HPP
#define MODGAL_GALOIS_ACTION_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "modular_data.hpp"

namespace modgal {

using Permutation = std::vector<std::size_t>;

// The permutations sigma-hat_k for every unit k mod N, with the orbit
// partition and stabilizers they generate.
class GaloisAction {
 public:
  explicit GaloisAction(const ModularData& m);

  unsigned conductor() const { return conductor_; }
  std::size_t rank() const { return rank_; }
  const std::vector<unsigned>& units() const { return units_; }
  const Permutation& permutation(long k) const;
  // Orbits sorted by least element, each sorted.
  const std::vector<std::vector<std::size_t>>& orbits() const { return orbits_; }
  std::size_t orbit_index(std::size_t x) const { return orbit_of_[x]; }
  const std::vector<std::size_t>& orbit_of(std::size_t x) const { return orbits_[orbit_of_[x]]; }
  std::vector<unsigned> stabilizer(std::size_t x) const;
  bool is_transitive() const { return orbits_.size() == 1; }

 private:
  unsigned conductor_;
  std::size_t rank_;
  std::vector<unsigned> units_;
  std::vector<Permutation> perms_;       // aligned with units_
  std::vector<std::size_t> unit_slot_;  // k mod N -> index into units_
  std::vector<std::vector<std::size_t>> orbits_;
  std::vector<std::size_t> orbit_of_;
};

Permutation galois_permutation(const ModularData& m, long k);
inline GaloisAction orbits(const ModularData& m) { return GaloisAction(m); }
bool is_transitive(const ModularData& m);

// Units k with sigma_k fixing every s_{Y,X}/s_{0,X}, computed entrywise
// without the permutation table.
std::vector<unsigned> fixing_subgroup(const ModularData& m, std::size_t x);
unsigned verlinde_field_degree(const ModularData& m, std::size_t x);
// As above, and throws unless the degree equals the orbit size.
unsigned verlinde_field_degree(const ModularData& m, const GaloisAction& g, std::size_t x);

struct SquareTwistReport {
  bool passed = true;
  // (k, c) with sigma_k^2(t_X) / t_{sigma-hat_k(X)} = zeta_N^c for every X.
  std::vector<std::pair<unsigned, long>> constants;
  std::vector<std::string> failures;
};
SquareTwistReport square_twist_consistency(const ModularData& m, const GaloisAction& g);

struct DimsRatioReport {
  bool passed = true;
  std::size_t checked = 0;
  std::vector<std::string> failures;
};
DimsRatioReport dims_ratio_check(const ModularData& m, const GaloisAction& g);

}  // namespace modgal

#endif

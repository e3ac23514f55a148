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

#ifndef MODGAL_SUBCATEGORIES_HPP
#define MODGAL_SUBCATEGORIES_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "galois_action.hpp"
#include "modular_data.hpp"

namespace modgal {

using IndexSet = std::vector<std::size_t>;  // sorted, unique

inline constexpr std::size_t kDefaultMaxRank = 64;

// Validated data together with the derived tables every check needs.
class CategoryView {
 public:
  explicit CategoryView(ModularData m);

  const ModularData& data() const { return m_; }
  std::size_t rank() const { return m_.rank(); }
  const FusionTable& fusion() const { return fusion_; }
  const FpDims& fp() const { return fp_; }
  const GaloisAction& galois() const { return galois_; }
  // s_{X,Y} = dim(X) dim(Y)
  bool centralizes(std::size_t x, std::size_t y) const { return cent_[x * rank() + y] != 0; }

 private:
  ModularData m_;
  FusionTable fusion_;
  FpDims fp_;
  GaloisAction galois_;
  std::vector<char> cent_;
};

struct FusionSubcategory {
  IndexSet members;

  std::size_t size() const { return members.size(); }
  bool contains(std::size_t x) const;
  bool is_subset_of(const FusionSubcategory& other) const;
  friend bool operator==(const FusionSubcategory&, const FusionSubcategory&) = default;
  friend auto operator<=>(const FusionSubcategory&, const FusionSubcategory&) = default;
};

FusionSubcategory generated_subcategory(const CategoryView& v, const IndexSet& generators);
// Sorted by size, then lexicographically.
std::vector<FusionSubcategory> all_subcategories(const CategoryView& v, std::size_t max_rank = kDefaultMaxRank);
FusionSubcategory whole(const CategoryView& v);
FusionSubcategory centralizer(const CategoryView& v, const FusionSubcategory& d);
FusionSubcategory pointed_part(const CategoryView& v);
FusionSubcategory adjoint_part(const CategoryView& v);

bool is_integral(const CategoryView& v, const FusionSubcategory& d);
bool is_symmetric(const CategoryView& v, const FusionSubcategory& d);
bool is_galois_closed(const CategoryView& v, const FusionSubcategory& d);
bool is_nondegenerate(const CategoryView& v, const FusionSubcategory& d);
CycNum subcategory_dim(const CategoryView& v, const FusionSubcategory& d);

struct CheckReport {
  CheckReport() = default;
  explicit CheckReport(std::string n) : name(std::move(n)) {}

  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::vector<std::string> failures;

  void fail(std::string message) {
    passed = false;
    failures.push_back(std::move(message));
  }
};

std::string format_set(const ModularData& m, const IndexSet& s);

// D closed under Galois <=> C_C(D) integral, for every D in subs; C_ad closed.
CheckReport check_theorem_galois_closure(const CategoryView& v, const std::vector<FusionSubcategory>& subs);
// Double centralizer, inclusion reversal, dim(D) dim(C_C(D)) = dim(C),
// C_ad = C_C(C_pt) and the orbit of the unit inside C_ad.
CheckReport check_subcategory_lattice(const CategoryView& v, const std::vector<FusionSubcategory>& subs);

struct OrbitBoundReport {
  std::size_t pointed_rank = 1;
  std::vector<std::pair<unsigned long, unsigned>> prime_powers;
  std::size_t bound = 1;
  std::size_t orbit_count = 0;
  bool passed = true;
};
OrbitBoundReport check_orbit_lower_bound(const CategoryView& v);

IndexSet pseudoinvertibles(const CategoryView& v);
bool orbitwise_pseudoinvertible(const CategoryView& v);

// Units k with sigma_k fixing dim(Y) for all Y in the centralizer of d.
std::vector<unsigned> dimension_field_fixer(const CategoryView& v, const FusionSubcategory& d);
// |O_X cap D| against |O_X| / [K_D cap L_X : Q] for every X in d.
CheckReport counting2_degree_check(const CategoryView& v, const FusionSubcategory& d);

enum class TwoOrbitClause { none, pointed_prime, ising, fibonacci_pair, simple };
std::string to_string(TwoOrbitClause c);

struct TwoOrbitDiagnosis {
  TwoOrbitClause clause = TwoOrbitClause::none;
  IndexSet factor;      // D
  IndexSet transitive;  // T = C_C(D)
  std::string summary;
};
// Requires exactly two orbits; structural consistency only.
TwoOrbitDiagnosis two_orbit_diagnosis(const CategoryView& v, const std::vector<FusionSubcategory>& subs);

}  // namespace modgal

#endif

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

#ifndef MODGAL_POINTED_HPP
#define MODGAL_POINTED_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "modular_data.hpp"

namespace modgal {

class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  // Invariant factors n_1 | n_2 | ... ; factors equal to 1 are dropped.
  explicit FiniteAbelianGroup(std::vector<unsigned> factors);
  // "2,30,30"; "1" or "" is the trivial group.
  static FiniteAbelianGroup parse(const std::string& text);

  const std::vector<unsigned>& factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  unsigned long order() const;
  unsigned exponent() const { return factors_.empty() ? 1 : factors_.back(); }

  // Mixed radix with the first factor fastest; index 0 is the identity.
  std::vector<unsigned> element(std::size_t index) const;
  std::size_t index_of(const std::vector<unsigned>& x) const;
  unsigned element_order(std::size_t index) const;
  std::string element_label(std::size_t index) const;
  std::string to_string() const;

 private:
  std::vector<unsigned> factors_;
};

// All groups of the given order, as invariant factor chains.
std::vector<FiniteAbelianGroup> abelian_groups_of_order(unsigned n);

// Gram exponents e_ij with q(x) = zeta_M^{sum e_ij x_i x_j}, where
// M = form_modulus(A).
struct QuadraticFormSpec {
  std::vector<std::vector<long>> gram;
  static QuadraticFormSpec parse(const std::string& text, std::size_t k);
  std::string to_string() const;
};

unsigned form_modulus(const FiniteAbelianGroup& a);
// diag(M/n_i) or diag(M/(2 n_i)) depending on parity; always nondegenerate.
QuadraticFormSpec default_form(const FiniteAbelianGroup& a);
// Empty string when q is well defined and nondegenerate, else the reason.
std::string form_defect(const FiniteAbelianGroup& a, const QuadraticFormSpec& q);

// Pointed data C(A, q): s_{g,h} = b(g,h)^{-1}, t_g = q(g), conductor the
// order of t.
ModularData build_pointed(const FiniteAbelianGroup& a, const QuadraticFormSpec& q);

// Toth's divisor-tuple formula for the number of cyclic subgroups.
unsigned long cyclic_subgroup_count(const FiniteAbelianGroup& a);

enum class ClosedForm { cyclic_divisors, elementary_abelian, product_cyclic, product_elementary };
unsigned long closed_form_counts(ClosedForm kind, unsigned long p, unsigned n);

// Partition of A into generator sets of cyclic subgroups, by least index.
std::vector<std::vector<std::size_t>> cyclic_generator_partition(const FiniteAbelianGroup& a);

// A symmetric bicharacter written through its values b(e_i, e_j) =
// zeta_M^{c_ij} on the invariant-factor generators (c is k x k, row major).
struct Bicharacter {
  unsigned modulus = 1;
  std::vector<long> c;
};

// Calls visit(b, refinements) for every nondegenerate symmetric
// bicharacter of A, where refinements counts the Gram matrices q with
// that bicharacter. Returns the number of bicharacters visited.
std::size_t for_each_nondegenerate_bicharacter(
    const FiniteAbelianGroup& a, const std::function<void(const Bicharacter&, std::size_t)>& visit);

// A Gram matrix whose bicharacter is b.
QuadraticFormSpec refinement_of(const FiniteAbelianGroup& a, const Bicharacter& b);

// Galois orbits of C(A, q) computed on root-of-unity exponents: column h
// of s is the exponent vector of b(., h)^{-1}, sigma_k multiplies exponents
// by k, and columns are matched exactly as in the CycNum path.
std::vector<std::vector<std::size_t>> pointed_orbits_exponent(const FiniteAbelianGroup& a, const Bicharacter& b);

struct FormIndependenceReport {
  std::string group;
  std::size_t bicharacters = 0;
  std::size_t forms = 0;
  std::size_t orbit_count = 0;
  unsigned long toth = 0;
  bool passed = true;
  std::string counterexample;
};

// Every nondegenerate form on A (grouped by bicharacter, since s depends
// only on b) is built as CycNum data and its orbit partition compared with
// the cyclic-generator partition.
FormIndependenceReport orbit_form_independence_check(const FiniteAbelianGroup& a, unsigned long bound = 32);

// The same comparison on the exponent path; used for larger groups.
FormIndependenceReport orbit_form_independence_exponent(const FiniteAbelianGroup& a);

}  // namespace modgal

#endif

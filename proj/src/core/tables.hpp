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

#ifndef MODGAL_TABLES_HPP
#define MODGAL_TABLES_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tspectra.hpp"

namespace modgal {

enum class TermKind {
  phi,        // Phi_{p^L}
  gamma,      // Gamma_{p^L}
  gamma_res,  // Gamma_{p^L}^{res}
  phi_res,    // {1} u Gamma_{p^j}^{res}, 1 <= j <= L
  quad_odd,   // {zeta_{p^lambda}^{r(x^2 + p^sigma t y^2)} : p !| y, p | x}
  quad_two,   // {zeta_{2^lambda}^{r(x^2 + 2^sigma y^2)} : x or y odd}
};

// Level exponent L = level_lambda * lambda + level_const; residue
// res * r^r_pow * t^t_pow.
struct SpectrumTerm {
  TermKind kind = TermKind::phi;
  int level_lambda = 0;
  int level_const = 0;
  long res = 1;
  int r_pow = 0;
  int t_pow = 0;
};

enum class CaseKey { none, j, r, t, rt };

struct SpectrumCase {
  std::vector<long> key;
  std::vector<SpectrumTerm> terms;
};

// (c2 p^2 + c1 p + c0) p^{e_lambda lambda + e_const} / divisor
struct DimFormula {
  long c2 = 0, c1 = 0, c0 = 0;
  int e_lambda = 0, e_const = 0;
  long divisor = 1;
};

enum class MfRule { yes, no, unstated, yes_if_sigma_one, yes_if_lambda2_p3 };

// per_lambda * lambda + per_sigma * sigma + constant, or lambda6_value at
// lambda = 6 when set.
struct GalFormula {
  bool stated = true;
  bool lower_bound = false;
  long per_lambda = 0, per_sigma = 0, constant = 0;
  long lambda6_value = -1;
};

enum class SigmaRange { none, below_lambda, three_to_lambda_minus_three };

struct TableRow {
  int table = 0;
  std::string label;
  std::string constraint;
  DimFormula dim;
  CaseKey key = CaseKey::none;
  std::vector<SpectrumCase> spectrum;
  MfRule mf = MfRule::yes;
  GalFormula gal;
  std::vector<long> r_values;  // empty: r = 1 and a non-residue when used (odd p)
  std::vector<long> t_values;
  SigmaRange sigma = SigmaRange::none;
  unsigned min_lambda = 0, max_lambda = 0;  // Table 8 applicability, 0 = open
};

const std::vector<TableRow>& table_rows();

struct TableParams {
  unsigned long p = 2;
  unsigned lambda = 1;
  unsigned sigma = 0;
  long r = 1;
  long t = 1;
  long j = 0;
};

struct TableScope {
  std::vector<int> tables{1, 2, 3, 4, 5, 6, 7, 8};
  std::vector<unsigned long> table1_primes{3, 5, 7, 11};
  std::vector<std::pair<unsigned long, unsigned>> table2_levels;  // (p, lambda)
  std::vector<unsigned> table8_lambdas{6};

  static TableScope standard();
  // Rows whose level divides n.
  static TableScope dividing(unsigned long n);
};

struct RowCheck {
  int table = 0;
  std::string label;
  std::string params;
  unsigned long level = 1;
  long dim = 0;
  std::size_t spectrum_size = 0;
  std::size_t gal_computed = 0;
  std::string gal_expected;
  std::string mf;
  bool passed = true;
  std::vector<std::string> failures;
};

struct TablesReport {
  std::vector<RowCheck> rows;
  std::size_t failed() const;
  bool passed() const { return failed() == 0; }
};

RootSet instantiate_spectrum(const TableRow& row, const TableParams& params);
TablesReport verify_tables(const TableScope& scope);
std::string format_tables_report(const TablesReport& report);

}  // namespace modgal

#endif

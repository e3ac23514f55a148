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

#include "tables.hpp"

#include <algorithm>
#include <sstream>

#include "arith.hpp"
#include "errors.hpp"

namespace modgal {

namespace {

SpectrumTerm phi(int a, int b) { return {TermKind::phi, a, b}; }
SpectrumTerm gam(int a, int b) { return {TermKind::gamma, a, b}; }
SpectrumTerm gres(int a, int b, long res, int rp = 0, int tp = 0) { return {TermKind::gamma_res, a, b, res, rp, tp}; }
SpectrumTerm phires(int a, int b, long res, int rp = 0, int tp = 0) { return {TermKind::phi_res, a, b, res, rp, tp}; }

// Fixed 2-power levels for Tables 3-7.
SpectrumTerm P(int level) { return phi(0, level); }
SpectrumTerm G(int level) { return gam(0, level); }
SpectrumTerm Gr(int level, long res, int rp = 0) { return gres(0, level, res, rp); }

DimFormula constant(long v) { return {0, 0, v}; }
GalFormula exact(long v) { return {true, false, 0, 0, v}; }
GalFormula unstated() { return {false}; }

SpectrumCase only(std::vector<SpectrumTerm> terms) { return {{}, std::move(terms)}; }

TableRow row(int table, std::string label, std::string constraint, DimFormula dim, MfRule mf, GalFormula gal,
             std::vector<SpectrumCase> spectrum, CaseKey key = CaseKey::none) {
  TableRow r;
  r.table = table;
  r.label = std::move(label);
  r.constraint = std::move(constraint);
  r.dim = dim;
  r.mf = mf;
  r.gal = gal;
  r.spectrum = std::move(spectrum);
  r.key = key;
  return r;
}

TableRow with_values(TableRow r, std::vector<long> rs, std::vector<long> ts = {}) {
  r.r_values = std::move(rs);
  r.t_values = std::move(ts);
  return r;
}

TableRow lambda_range(TableRow r, unsigned lo, unsigned hi) {
  r.min_lambda = lo;
  r.max_lambda = hi;
  return r;
}

std::vector<TableRow> build_rows() {
  using M = MfRule;
  using K = CaseKey;
  std::vector<TableRow> rows;
  auto add = [&](TableRow r) { rows.push_back(std::move(r)); };

  // Table 1: SL(2, Z/p), p odd.
  add(row(1, "D_1(chi)", "", {0, 1, 1}, M::no, exact(3), {only({phi(0, 1)})}));
  add(row(1, "N_1(chi)", "", {0, 1, -1}, M::yes, exact(2), {only({gam(0, 1)})}));
  add(row(1, "R_1(r,chi_1)", "(r/p) = +-1", {0, 1, 1, 0, 0, 2}, M::yes, exact(2),
          {only({gam(0, 0), gres(0, 1, 1, 1)})}));
  add(row(1, "R_1(r,chi_-1)", "(r/p) = +-1", {0, 1, -1, 0, 0, 2}, M::yes, exact(1), {only({gres(0, 1, 1, 1)})}));
  add(row(1, "N_1(chi_1)", "", {0, 1, 0}, M::yes, exact(3), {only({phi(0, 1)})}));

  // Table 2: SL(2, Z/p^lambda), p odd, lambda > 1.
  add(row(2, "D_lambda(chi)", "", {0, 1, 1, 1, -1}, M::no, {true, false, 2, 0, 1}, {only({phi(1, 0)})}));
  add(row(2, "N_lambda(chi)", "", {0, 1, -1, 1, -1}, M::yes, exact(2), {only({gam(1, 0)})}));
  {
    TableRow r = row(2, "R_lambda^sigma(r,t,chi)", "1 <= sigma < lambda; (r/p), (t/p) = +-1", {1, 0, -1, 1, -2, 2},
                     M::yes_if_sigma_one, {true, true, 0, 1, 1},
                     {only({gres(1, 0, 1, 1), SpectrumTerm{TermKind::quad_odd}})});
    r.sigma = SigmaRange::below_lambda;
    add(std::move(r));
  }
  add(row(2, "R_lambda(r,chi_+-)_1", "(r/p) = +-1", {1, 0, -1, 1, -2, 2}, M::yes_if_lambda2_p3,
          {true, false, 1, 0, 0}, {only({gres(1, 0, 1, 1), phires(1, -2, 1, 1)})}));

  // Table 3: level 2.
  add(row(3, "C_2=N_1(chi)", "", constant(1), M::yes, exact(1), {only({G(1)})}));
  add(row(3, "N_1(chi_1)", "", constant(2), M::yes, exact(2), {only({P(1)})}));

  // Table 4: level 4.
  add(row(4, "R_2^0(1,1,chi_1)", "", constant(3), M::yes, exact(3), {only({P(1), Gr(2, 1)})}));
  add(row(4, "R_2^0(3,1,chi_1)", "", constant(3), M::yes, exact(3), {only({P(1), Gr(2, 3)})}));
  add(row(4, "R_2^0(1,3)_1", "", constant(3), M::yes, exact(3), {only({G(0), G(2)})}));
  add(row(4, "C_2 x R_2^0(1,3)_1", "", constant(3), M::yes, exact(3), {only({G(1), G(2)})}));
  add(row(4, "N_2(chi)", "chi != 1", constant(2), M::yes, exact(2), {only({G(2)})}));
  add(row(4, "C_3=R_2^0(3,1,chi)", "chi != 1", constant(1), M::yes, exact(1), {only({Gr(2, 3)})}));
  add(row(4, "C_4=R_2^0(1,1,chi)", "chi != 1", constant(1), M::yes, exact(1), {only({Gr(2, 1)})}));

  // Table 5: level 8.
  add(row(5, "R_3^1(r,t,chi_1)", "", constant(6), M::yes, exact(4),
          {{{1, 1}, {G(2), Gr(3, 1), Gr(3, 3)}},
           {{1, 3}, {G(2), Gr(3, 1), Gr(3, 7)}},
           {{3, 3}, {G(2), Gr(3, 3), Gr(3, 5)}},
           {{5, 1}, {G(2), Gr(3, 5), Gr(3, 7)}}},
          K::rt));
  add(row(5, "R_3^0(1,3,chi_1)_1", "", constant(6), M::yes, exact(6), {only({P(1), G(3)})}));
  add(row(5, "C_3 x R_3^0(1,3,chi_1)_1", "", constant(6), M::yes, exact(6), {only({G(2), G(3)})}));
  add(row(5, "N_3(chi)", "chi^2 != 1", constant(4), M::yes, exact(4),
          {only({Gr(3, 1), Gr(3, 3), Gr(3, 5), Gr(3, 7)})}));
  add(row(5, "C_j x N_3(chi)_+", "j = 1,2,3,4", constant(2), M::yes, exact(2),
          {{{1}, {Gr(3, 3), Gr(3, 5)}},
           {{2}, {Gr(3, 1), Gr(3, 7)}},
           {{3}, {Gr(3, 1), Gr(3, 3)}},
           {{4}, {Gr(3, 5), Gr(3, 7)}}},
          K::j));
  add(row(5, "C_j x R_3^0(1,3,chi)_+", "chi != 1; j = 1,2,3,4", constant(3), M::yes, exact(3),
          {{{1}, {G(1), Gr(3, 1), Gr(3, 5)}},
           {{2}, {G(0), Gr(3, 1), Gr(3, 5)}},
           {{3}, {Gr(2, 1), Gr(3, 3), Gr(3, 7)}},
           {{4}, {Gr(2, 3), Gr(3, 3), Gr(3, 7)}}},
          K::j));
  add(row(5, "C_j x R_3^0(1,3,chi)_-", "chi != 1; j = 1,2,3,4", constant(3), M::yes, exact(3),
          {{{1}, {G(1), Gr(3, 3), Gr(3, 7)}},
           {{2}, {G(0), Gr(3, 3), Gr(3, 7)}},
           {{3}, {Gr(2, 1), Gr(3, 1), Gr(3, 5)}},
           {{4}, {Gr(2, 3), Gr(3, 1), Gr(3, 5)}}},
          K::j));

  // Table 6: level 16.
  add(row(6, "D_4(chi)", "", constant(24), M::no, exact(12), {only({P(4)})}));
  add(row(6, "N_4(chi)", "", constant(8), M::yes, exact(4), {only({G(4)})}));
  add(with_values(row(6, "R_4^0(r,t,chi)", "chi != 1; r = 1,3; t = 1,5", constant(6), M::yes, exact(4),
                      {{{1}, {Gr(4, 1, 1), Gr(4, 5, 1), Gr(3, 1, 1), Gr(3, 5, 1)}},
                       {{5}, {Gr(4, 1, 1), Gr(4, 5, 1), Gr(3, 3, 1), Gr(3, 7, 1)}}},
                      K::t),
                  {1, 3}));
  add(row(6, "C_j x R_4^0(1,1,chi)_+", "chi^2 = 1; j = 1,2,3,4", constant(3), M::yes, exact(2),
          {{{1}, {Gr(3, 5), Gr(4, 1)}},
           {{2}, {Gr(3, 1), Gr(4, 1)}},
           {{3}, {Gr(3, 3), Gr(4, 5)}},
           {{4}, {Gr(3, 7), Gr(4, 5)}}},
          K::j));
  add(row(6, "C_j x R_4^0(1,1,chi)_-", "chi^2 = 1; j = 1,2,3,4", constant(3), M::yes, exact(2),
          {{{1}, {Gr(3, 1), Gr(4, 5)}},
           {{2}, {Gr(3, 5), Gr(4, 5)}},
           {{3}, {Gr(3, 7), Gr(4, 1)}},
           {{4}, {Gr(3, 3), Gr(4, 1)}}},
          K::j));
  add(row(6, "C_j x R_4^0(3,1,chi)_+", "chi^2 = 1; j = 1,2,3,4", constant(3), M::yes, exact(2),
          {{{1}, {Gr(3, 7), Gr(4, 3)}},
           {{2}, {Gr(3, 3), Gr(4, 3)}},
           {{3}, {Gr(3, 5), Gr(4, 7)}},
           {{4}, {Gr(3, 1), Gr(4, 7)}}},
          K::j));
  add(row(6, "C_j x R_4^0(3,1,chi)_-", "chi^2 = 1; j = 1,2,3,4", constant(3), M::yes, exact(2),
          {{{1}, {Gr(3, 3), Gr(4, 7)}},
           {{2}, {Gr(3, 7), Gr(4, 7)}},
           {{3}, {Gr(3, 1), Gr(4, 3)}},
           {{4}, {Gr(3, 5), Gr(4, 3)}}},
          K::j));
  add(row(6, "R_4^0(1,t,chi)_+-", "t = 3,7", constant(6), M::yes, exact(4),
          {{{3}, {Gr(4, 1), Gr(4, 7), Gr(3, 3), Gr(3, 5)}}, {{7}, {Gr(4, 1), Gr(4, 7), Gr(3, 1), Gr(3, 7)}}}, K::t));
  add(row(6, "R_4^2(r,t,chi)", "chi != 1; r,t in {1,3}", constant(6), M::yes, exact(4),
          {{{1, 1}, {G(1), Gr(2, 1), Gr(4, 1), Gr(4, 5)}},
           {{1, 3}, {G(0), Gr(2, 3), Gr(4, 1), Gr(4, 5)}},
           {{3, 1}, {G(1), Gr(2, 3), Gr(4, 3), Gr(4, 7)}},
           {{3, 3}, {G(0), Gr(2, 1), Gr(4, 3), Gr(4, 7)}}},
          K::rt));
  add(row(6, "C_2 x R_4^2(r,3,chi)", "chi != 1; r = 1,3", constant(6), M::yes, exact(4),
          {{{1}, {G(1), Gr(2, 1), Gr(4, 1), Gr(4, 5)}}, {{3}, {G(1), Gr(2, 3), Gr(4, 3), Gr(4, 7)}}}, K::r));
  add(with_values(row(6, "R_4^2(r,3,chi_1)_1", "r = 1,3", constant(6), M::yes, exact(4),
                      {only({G(0), Gr(2, 3), Gr(4, 1), Gr(4, 5)})}),
                  {1, 3}));
  add(row(6, "N_3(chi)_+ x R_4^0(1,7,psi)_+", "chi^2 = 1; psi != 1; psi^2 != 1; psi(-1) = 1", constant(12), M::no,
          exact(7), {only({G(1), G(2), G(4)})}));

  // Table 7: level 32.
  add(row(7, "D_5(chi)", "", constant(48), M::no, exact(16), {only({P(5)})}));
  add(row(7, "N_5(chi)", "", constant(16), M::yes, exact(4), {only({G(5)})}));
  add(with_values(row(7, "R_5^0(r,t,chi)", "r = 1,3; t = 1,5", constant(12), M::yes, exact(4),
                      {{{1}, {Gr(5, 1, 1), Gr(5, 5, 1), Gr(4, 1, 1), Gr(4, 5, 1)}},
                       {{5}, {Gr(5, 1, 1), Gr(5, 5, 1), Gr(4, 3, 1), Gr(4, 7, 1)}}},
                      K::t),
                  {1, 3}));
  add(row(7, "R_5^0(1,t,chi)", "t = 3,7", constant(24), M::no, exact(8),
          {{{3}, {G(5), G(3)}}, {{7}, {G(5), P(2)}}}, K::t));
  add(with_values(row(7, "R_5^1(r,1,chi)", "r = 1,5", constant(12), M::yes, exact(4),
                      {only({Gr(5, 1), Gr(5, 3), Gr(4, 1, 1), Gr(4, 3, 1)})}),
                  {1, 5}));
  add(with_values(row(7, "R_5^1(r,3,chi)", "r = 1,3", constant(12), M::yes, exact(4),
                      {only({Gr(5, 1), Gr(5, 7), Gr(4, 3, 1), Gr(4, 5, 1)})}),
                  {1, 3}));
  add(with_values(row(7, "R_5^1(r,5,chi)", "r = 1,5", constant(12), M::yes, exact(4),
                      {only({Gr(5, 1), Gr(5, 3), Gr(4, 5, 1), Gr(4, 7, 1)})}),
                  {1, 5}));
  add(with_values(row(7, "R_5^1(r,7,chi)", "r = 1,3", constant(12), M::yes, exact(4),
                      {only({Gr(5, 1), Gr(5, 7), Gr(4, 1, 1), Gr(4, 7, 1)})}),
                  {1, 3}));
  add(with_values(row(7, "R_5^2(r,t,chi)_+-", "r = 1,3; t = 1,3,5,7", constant(6), M::yes, exact(3),
                      {only({G(4), Gr(5, 1, 1)})}),
                  {1, 3}, {1, 3, 5, 7}));
  add(with_values(row(7, "R_5^2(r,1,chi)_1", "chi not in B; r = 1,3", constant(12), M::yes, exact(6),
                      {only({G(0), G(1), Gr(3, 1, 1), Gr(3, 5, 1), Gr(5, 1, 1), Gr(5, 5, 1)})}),
                  {1, 3}));
  add(with_values(row(7, "C_3 x R_5^2(r,1,chi)_1", "chi not in B; r = 1,3", constant(12), M::unstated, unstated(),
                      {only({G(2), Gr(3, 3, 1), Gr(3, 7, 1), Gr(5, 1, 1), Gr(5, 5, 1)})}),
                  {1, 3}));

  // Table 8: level 2^lambda, lambda > 5.
  const DimFormula d8_1{0, 0, 3, 1, -1}, d8_2{0, 0, 3, 1, -2}, d8_3{0, 0, 3, 1, -3}, d8_4{0, 0, 3, 1, -4};
  add(row(8, "D_lambda(chi)", "", d8_1, M::no, {true, false, 4, 0, -4}, {only({phi(1, 0)})}));
  add(row(8, "N_lambda(chi)", "", {0, 0, 1, 1, -1}, M::yes, exact(4), {only({gam(1, 0)})}));
  add(row(8, "R_lambda^0(1,3,chi)", "", d8_2, M::no, exact(8), {only({gam(1, 0), gam(1, -2)})}));
  add(row(8, "R_lambda^0(1,7,chi)", "", d8_2, M::no, {true, false, 4, 0, -12}, {only({gam(1, 0), phi(1, -3)})}));
  add(with_values(row(8, "R_lambda^0(r,t,chi)", "r = 1,3; t = 1,5", d8_3, M::yes, exact(4),
                      {{{1}, {gres(1, 0, 1, 1), gres(1, 0, 5, 1), gres(1, -1, 1, 1), gres(1, -1, 5, 1)}},
                       {{5}, {gres(1, 0, 1, 1), gres(1, 0, 5, 1), gres(1, -1, 3, 1), gres(1, -1, 7, 1)}}},
                      K::t),
                  {1, 3}));
  add(with_values(row(8, "R_lambda^1(r,t,chi)", "r = 1,3; t = 3,7", d8_3, M::yes, exact(4),
                      {only({gres(1, 0, 1, 1), gres(1, 0, 5, 1), gres(1, -1, 1, 1, 1), gres(1, -1, 7, 1, 1)})}),
                  {1, 3}, {3, 7}));
  add(with_values(row(8, "R_lambda^1(r,t,chi)", "r,t in {1,5}", d8_3, M::yes, exact(4),
                      {only({gres(1, 0, 1, 1), gres(1, 0, 5, 1), gres(1, -1, 1, 1, 1), gres(1, -1, 3, 1, 1)})}),
                  {1, 5}, {1, 5}));
  const std::vector<SpectrumTerm> r2_head = {gres(1, 0, 1, 1), gres(1, 0, 5, 1), gres(1, -2, 1, 1, 1),
                                             gres(1, -2, 5, 1, 1)};
  auto r2 = [&](std::vector<SpectrumTerm> tail) {
    std::vector<SpectrumTerm> out = r2_head;
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
  };
  add(with_values(row(8, "R_lambda^2(r,1,chi)", "r = 1,3", d8_3, M::no, exact(6),
                      {only(r2({gres(1, -3, 1, 1), gres(1, -3, 5, 1)}))}),
                  {1, 3}, {1}));
  add(with_values(row(8, "R_lambda^2(r,3,chi)", "r = 1,3", d8_3, M::no, exact(8), {only(r2({gam(1, -4)}))}),
                  {1, 3}, {3}));
  add(with_values(row(8, "R_lambda^2(r,5,chi)", "r = 1,3", d8_3, M::no, exact(6),
                      {only(r2({gres(1, -3, 3, 1), gres(1, -3, 7, 1)}))}),
                  {1, 3}, {5}));
  add(with_values(row(8, "R_lambda^2(r,7,chi)", "r = 1,3", d8_3, M::no, {true, false, 4, 0, -24, 6},
                      {only(r2({phi(1, -5)}))}),
                  {1, 3}, {7}));
  {
    TableRow r = with_values(row(8, "R_lambda^sigma(r,t,chi)", "sigma = 3..lambda-3; r,t in {1,3,5,7}", d8_4, M::no,
                                 {true, true, 0, 1, 1}, {only({SpectrumTerm{TermKind::quad_two}})}),
                             {1, 3, 5, 7}, {1, 3, 5, 7});
    r.sigma = SigmaRange::three_to_lambda_minus_three;
    add(std::move(r));
  }
  add(with_values(row(8, "R_lambda^{lambda-2}(r,t,chi)", "r = 1,3,5,7; t = 1,3", d8_4, M::no, {true, false, 1, 0, -2},
                      {only({gres(1, 0, 1, 1), gres(1, -2, 1, 1), gres(1, -4, 1, 1), phires(1, -6, 1, 1)})}),
                  {1, 3, 5, 7}, {1, 3}));
  add(lambda_range(
      with_values(row(8, "R_lambda^{lambda-3}(r,t,chi_+-1)_1", "lambda >= 7; r = 1,3,5,7; t = 1,3", d8_4, M::no,
                      {true, false, 1, 0, -2},
                      {only({gres(1, 0, 1, 1), gres(1, -2, 1, 1), gres(1, -4, 1, 1), phires(1, -6, 1, 1)})}),
                  {1, 3, 5, 7}, {1, 3}),
      7, 0));
  add(lambda_range(with_values(row(8, "R_6^4(r,1,chi_1)_1", "lambda = 6; r = 1,3,5,7; t = 1,3", constant(12), M::yes,
                                   exact(4), {only({G(0), Gr(2, 1, 1), Gr(4, 5, 1), Gr(6, 1, 1)})}),
                               {1, 3, 5, 7}, {1, 3}),
                   6, 6));
  add(lambda_range(with_values(row(8, "C_2 x R_6^4(r,t,chi_1)_1", "lambda = 6; r = 1,3,5,7; t = 1,3", constant(12),
                                   M::yes, exact(4), {only({G(1), Gr(2, 3, 1), Gr(4, 5, 1), Gr(6, 1, 1)})}),
                               {1, 3, 5, 7}, {1, 3}),
                   6, 6));
  return rows;
}

unsigned long ipow(unsigned long p, int e) {
  if (e < 0) throw Error(ErrorCode::invalid_argument, "negative level exponent");
  unsigned long out = 1;
  while (e--) out *= p;
  return out;
}

long least_nonresidue(unsigned long p) {
  for (unsigned long a = 2; a < p; ++a) {
    bool square = false;
    for (unsigned long x = 1; x < p && !square; ++x) square = (x * x) % p == a;
    if (!square) return static_cast<long>(a);
  }
  throw Error(ErrorCode::invalid_argument, "no quadratic non-residue");
}

long term_residue(const SpectrumTerm& term, const TableParams& q) {
  long v = term.res;
  if (term.r_pow) v *= q.r;
  if (term.t_pow) v *= q.t;
  return v;
}

RootSet quad_odd_set(const TableParams& q) {
  const unsigned long n = ipow(q.p, static_cast<int>(q.lambda));
  const unsigned long ps = ipow(q.p, static_cast<int>(q.sigma));
  RootSet s;
  for (unsigned long x = 0; x < n; x += q.p)
    for (unsigned long y = 1; y < n; ++y) {
      if (y % q.p == 0) continue;
      const unsigned long v = (mulmod(x, x, n) + mulmod(ps % n, mulmod(static_cast<unsigned long>(mod(q.t, static_cast<long>(n))), mulmod(y, y, n), n), n)) % n;
      s.insert(n, static_cast<long>(mulmod(static_cast<unsigned long>(mod(q.r, static_cast<long>(n))), v, n)));
    }
  return s;
}

RootSet quad_two_set(const TableParams& q) {
  const unsigned long n = ipow(2, static_cast<int>(q.lambda));
  const unsigned long ps = ipow(2, static_cast<int>(q.sigma));
  RootSet s;
  for (unsigned long x = 0; x < n; ++x)
    for (unsigned long y = 0; y < n; ++y) {
      if (x % 2 == 0 && y % 2 == 0) continue;
      const unsigned long v = (mulmod(x, x, n) + mulmod(ps % n, mulmod(y, y, n), n)) % n;
      s.insert(n, static_cast<long>(mulmod(static_cast<unsigned long>(mod(q.r, static_cast<long>(n))), v, n)));
    }
  return s;
}

RootSet term_set(const SpectrumTerm& term, const TableParams& q) {
  const int level = term.level_lambda * static_cast<int>(q.lambda) + term.level_const;
  switch (term.kind) {
    case TermKind::phi: return make_phi(ipow(q.p, level));
    case TermKind::gamma: return make_gamma(ipow(q.p, level));
    case TermKind::gamma_res:
      if (level < 0) throw Error(ErrorCode::invalid_argument, "negative level exponent");
      return make_gamma_res(q.p, static_cast<unsigned>(level), term_residue(term, q));
    case TermKind::phi_res:
      if (level < 0) throw Error(ErrorCode::invalid_argument, "negative level exponent");
      return make_phi_res(q.p, static_cast<unsigned>(level), term_residue(term, q));
    case TermKind::quad_odd: return quad_odd_set(q);
    case TermKind::quad_two: return quad_two_set(q);
  }
  throw Error(ErrorCode::internal, "unknown term kind");
}

const SpectrumCase& select_case(const TableRow& row, const TableParams& q) {
  std::vector<long> key;
  switch (row.key) {
    case CaseKey::none: return row.spectrum.front();
    case CaseKey::j: key = {q.j}; break;
    case CaseKey::r: key = {q.r}; break;
    case CaseKey::t: key = {q.t}; break;
    case CaseKey::rt: key = {q.r, q.t}; break;
  }
  for (const auto& c : row.spectrum)
    if (c.key == key) return c;
  throw Error(ErrorCode::invalid_argument, "no spectrum case for " + row.label);
}

bool uses(const TableRow& row, bool r) {
  for (const auto& c : row.spectrum)
    for (const auto& t : c.terms) {
      if (t.kind == TermKind::quad_odd || t.kind == TermKind::quad_two) return true;
      if (r ? t.r_pow : t.t_pow) return true;
    }
  return false;
}

bool has_param(const TableRow& row, char name) {
  return row.label.find(std::string("(") + name) != std::string::npos ||
         row.label.find(std::string(",") + name) != std::string::npos;
}

std::vector<TableParams> instantiations(const TableRow& row, const TableScope& scope) {
  std::vector<TableParams> base;
  switch (row.table) {
    case 1:
      for (unsigned long p : scope.table1_primes) base.push_back({p, 1});
      break;
    case 2:
      for (const auto& [p, l] : scope.table2_levels) base.push_back({p, l});
      break;
    case 8:
      for (unsigned l : scope.table8_lambdas)
        if ((row.min_lambda == 0 || l >= row.min_lambda) && (row.max_lambda == 0 || l <= row.max_lambda))
          base.push_back({2, l});
      break;
    default:
      base.push_back({2, static_cast<unsigned>(row.table - 2)});
  }
  std::vector<TableParams> out;
  for (const TableParams& b : base) {
    std::vector<unsigned> sigmas{0};
    if (row.sigma == SigmaRange::below_lambda) {
      sigmas.clear();
      for (unsigned s = 1; s < b.lambda; ++s) sigmas.push_back(s);
    } else if (row.sigma == SigmaRange::three_to_lambda_minus_three) {
      sigmas.clear();
      for (unsigned s = 3; s + 3 <= b.lambda; ++s) sigmas.push_back(s);
    }
    const bool odd = b.p != 2;
    auto legendre = [&](bool needed) {
      return needed ? std::vector<long>{1, least_nonresidue(b.p)} : std::vector<long>{1};
    };
    std::vector<std::vector<long>> keys;
    if (row.key == CaseKey::none) {
      keys.push_back({});
    } else {
      for (const auto& c : row.spectrum) keys.push_back(c.key);
    }
    for (unsigned s : sigmas)
      for (const auto& key : keys) {
        std::vector<long> rs = row.r_values, ts = row.t_values;
        if (row.key == CaseKey::r || row.key == CaseKey::rt) rs = {key[0]};
        if (row.key == CaseKey::t) ts = {key[0]};
        if (row.key == CaseKey::rt) ts = {key[1]};
        if (rs.empty()) rs = odd ? legendre(uses(row, true) || has_param(row, 'r')) : std::vector<long>{1};
        if (ts.empty()) ts = odd ? legendre(uses(row, false) || has_param(row, 't')) : std::vector<long>{1};
        for (long r : rs)
          for (long t : ts) {
            TableParams q = b;
            q.sigma = s;
            q.r = r;
            q.t = t;
            q.j = row.key == CaseKey::j ? key[0] : 0;
            out.push_back(q);
          }
      }
  }
  return out;
}

long eval_dim(const DimFormula& d, const TableParams& q) {
  const long p = static_cast<long>(q.p);
  const long head = d.c2 * p * p + d.c1 * p + d.c0;
  const int e = d.e_lambda * static_cast<int>(q.lambda) + d.e_const;
  const long v = head * static_cast<long>(ipow(q.p, e));
  if (v % d.divisor != 0) throw Error(ErrorCode::internal, "dimension formula not integral");
  return v / d.divisor;
}

std::string format_params(const TableRow& row, const TableParams& q) {
  std::ostringstream os;
  if (row.table <= 2) os << "p=" << q.p;
  if (row.table == 2 || row.table == 8) os << (row.table == 2 ? ", " : "") << "lambda=" << q.lambda;
  if (q.sigma) os << ", sigma=" << q.sigma;
  auto sep = [&] { return os.tellp() > 0 ? ", " : ""; };
  if (row.key == CaseKey::j) os << sep() << "j=" << q.j;
  if (has_param(row, 'r') || uses(row, true)) os << sep() << "r=" << q.r;
  if (has_param(row, 't')) os << sep() << "t=" << q.t;
  return os.str();
}

}  // namespace

const std::vector<TableRow>& table_rows() {
  static const std::vector<TableRow> rows = build_rows();
  return rows;
}

TableScope TableScope::standard() {
  TableScope s;
  for (unsigned long p : s.table1_primes)
    for (unsigned l : {2u, 3u}) s.table2_levels.emplace_back(p, l);
  return s;
}

TableScope TableScope::dividing(unsigned long n) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "level bound must be positive");
  TableScope s;
  s.tables.clear();
  s.table1_primes.clear();
  s.table8_lambdas.clear();
  unsigned v2 = 0;
  for (const auto& [p, a] : factorize(n)) {
    if (p == 2) {
      v2 = a;
      continue;
    }
    s.table1_primes.push_back(p);
    for (unsigned l = 2; l <= a; ++l) s.table2_levels.emplace_back(p, l);
  }
  if (!s.table1_primes.empty()) s.tables.push_back(1);
  if (!s.table2_levels.empty()) s.tables.push_back(2);
  for (unsigned l = 1; l <= std::min(v2, 5u); ++l) s.tables.push_back(static_cast<int>(l) + 2);
  for (unsigned l = 6; l <= v2; ++l) s.table8_lambdas.push_back(l);
  if (!s.table8_lambdas.empty()) s.tables.push_back(8);
  return s;
}

std::size_t TablesReport::failed() const {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.passed ? 0 : 1;
  return n;
}

RootSet instantiate_spectrum(const TableRow& row, const TableParams& params) {
  RootSet out;
  for (const auto& term : select_case(row, params).terms) out.merge(term_set(term, params));
  return out;
}

TablesReport verify_tables(const TableScope& scope) {
  TablesReport rep;
  for (const TableRow& row : table_rows()) {
    if (std::find(scope.tables.begin(), scope.tables.end(), row.table) == scope.tables.end()) continue;
    for (const TableParams& q : instantiations(row, scope)) {
      RowCheck c;
      c.table = row.table;
      c.label = row.label;
      c.params = format_params(row, q);
      c.level = ipow(q.p, static_cast<int>(row.table >= 3 && row.table <= 7 ? row.table - 2 : q.lambda));
      c.dim = eval_dim(row.dim, q);
      auto fail = [&](std::string m) {
        c.passed = false;
        c.failures.push_back(std::move(m));
      };

      RootSet spectrum;
      for (const auto& term : select_case(row, q).terms) {
        const RootSet part = term_set(term, q);
        if (spectrum.intersects(part)) fail("spectrum terms overlap");
        spectrum.merge(part);
      }
      c.spectrum_size = spectrum.size();
      if (!is_square_galois_closed(spectrum)) fail("spectrum is not a union of square Galois orbits");
      c.gal_computed = square_galois_orbit_count(spectrum);
      if (static_cast<long>(c.spectrum_size) > c.dim)
        fail("|spectrum| = " + std::to_string(c.spectrum_size) + " exceeds dim " + std::to_string(c.dim));

      if (!row.gal.stated) {
        c.gal_expected = "unstated";
      } else {
        long g = row.gal.per_lambda * static_cast<long>(q.lambda) + row.gal.per_sigma * static_cast<long>(q.sigma) +
                 row.gal.constant;
        if (row.gal.lambda6_value >= 0 && q.lambda == 6) g = row.gal.lambda6_value;
        c.gal_expected = (row.gal.lower_bound ? ">= " : "") + std::to_string(g);
        const long got = static_cast<long>(c.gal_computed);
        if (row.gal.lower_bound ? got < g : got != g)
          fail("|Gal| computed " + std::to_string(got) + ", table " + c.gal_expected);
      }

      bool mf_yes = false, mf_stated = true;
      switch (row.mf) {
        case MfRule::yes: mf_yes = true; break;
        case MfRule::no: break;
        case MfRule::unstated: mf_stated = false; break;
        case MfRule::yes_if_sigma_one: mf_yes = q.sigma == 1; break;
        case MfRule::yes_if_lambda2_p3: mf_yes = q.lambda == 2 && q.p == 3; break;
      }
      c.mf = mf_stated ? (mf_yes ? "yes" : "no") : "unstated";
      if (mf_stated) {
        const long size = static_cast<long>(c.spectrum_size);
        if (mf_yes && size != c.dim)
          fail("m.f. yes but |spectrum| = " + std::to_string(size) + " != dim " + std::to_string(c.dim));
        if (!mf_yes && size >= c.dim)
          fail("m.f. no but |spectrum| = " + std::to_string(size) + " >= dim " + std::to_string(c.dim));
      }
      rep.rows.push_back(std::move(c));
    }
  }
  return rep;
}

std::string format_tables_report(const TablesReport& report) {
  std::ostringstream os;
  for (const RowCheck& c : report.rows) {
    os << (c.passed ? "PASS" : "FAIL") << "  T" << c.table << "  " << c.label;
    if (!c.params.empty()) os << " [" << c.params << "]";
    os << "  dim=" << c.dim << " |spec|=" << c.spectrum_size << " m.f.=" << c.mf << " |Gal|=" << c.gal_computed
       << " (table " << c.gal_expected << ")\n";
    for (const auto& f : c.failures) os << "      " << f << '\n';
  }
  os << report.rows.size() - report.failed() << " of " << report.rows.size() << " instantiated rows pass\n";
  return os.str();
}

}  // namespace modgal

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

#include "modular_data.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "arith.hpp"
#include "errors.hpp"

namespace modgal {

namespace {

std::string pair_str(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

unsigned exponent_order(long e, unsigned n) {
  return n / static_cast<unsigned>(std::gcd(static_cast<unsigned long>(mod(e, n)), static_cast<unsigned long>(n)));
}

// Per-column data reused by Verlinde and FP dimension computations.
struct ColumnRatios {
  std::vector<CycNum> inv0;  // 1 / s_{0,a}
  CycMatrix w;               // s_{x,a} / s_{0,a}
};

ColumnRatios column_ratios(const ModularData& m) {
  const std::size_t r = m.rank();
  ColumnRatios out{{}, CycMatrix(r, r, m.conductor())};
  for (std::size_t a = 0; a < r; ++a) out.inv0.push_back(m.s(0, a).inverse());
  for (std::size_t x = 0; x < r; ++x)
    for (std::size_t a = 0; a < r; ++a) out.w(x, a) = m.s(x, a) * out.inv0[a];
  return out;
}

// Fusion coefficients via a rounded numeric candidate, certified exactly by
// sum_z N_{xy}^z s_{z,b} = s_{x,b} s_{y,b} / s_{0,b} for every column b.
// That identity determines N_{xy}^z because s is invertible. Uncertified
// pairs fall back to the closed formula, whose failures become issues.
std::optional<FusionTable> verlinde_impl(const ModularData& m, std::vector<ValidationIssue>* issues) {
  const std::size_t r = m.rank();
  const unsigned n = m.conductor();
  const ColumnRatios cr = column_ratios(m);
  const auto sa = m.s().approx();
  const std::complex<double> dn = global_dim(m).approx();
  std::vector<std::complex<double>> inv0a(r);
  for (std::size_t a = 0; a < r; ++a) inv0a[a] = 1.0 / sa[a];

  FusionTable table;
  table.rank = r;
  table.coeff.assign(r * r * r, 0);
  bool ok = true;
  CycNum dinv;
  bool have_dinv = false;

  for (std::size_t x = 0; x < r; ++x) {
    for (std::size_t y = x; y < r; ++y) {
      std::vector<long> cand(r);
      bool resolved = true;
      for (std::size_t z = 0; z < r && resolved; ++z) {
        std::complex<double> acc = 0;
        for (std::size_t a = 0; a < r; ++a)
          acc += sa[x * r + a] * sa[y * r + a] * std::conj(sa[z * r + a]) * inv0a[a];
        acc /= dn;
        const double rounded = std::round(acc.real());
        if (std::abs(acc.real() - rounded) > 0.25 || std::abs(acc.imag()) > 0.25 || rounded < 0)
          resolved = false;
        cand[z] = static_cast<long>(rounded);
      }
      bool certified = resolved;
      for (std::size_t b = 0; b < r && certified; ++b) {
        CycNum lhs(n);
        for (std::size_t z = 0; z < r; ++z)
          if (cand[z] != 0) lhs += m.s(z, b) * cand[z];
        certified = lhs == cr.w(x, b) * m.s(y, b);
      }
      if (!certified) {
        if (!have_dinv) {
          dinv = global_dim(m).inverse();
          have_dinv = true;
        }
        for (std::size_t z = 0; z < r; ++z) {
          CycNum acc(n);
          for (std::size_t a = 0; a < r; ++a) acc += cr.w(x, a) * m.s(y, a) * m.s(z, a).conj();
          acc *= dinv;
          auto q = acc.rational_value();
          if (q && q->get_den() == 1 && sgn(*q) >= 0 && q->get_num().fits_sint_p()) {
            cand[z] = q->get_num().get_si();
            continue;
          }
          ok = false;
          if (!issues) {
            throw Error(ErrorCode::invalid_data, "not modular data: N_{" + std::to_string(x) + "," +
                                                      std::to_string(y) + "}^" + std::to_string(z) +
                                                      " = " + acc.to_string());
          }
          issues->push_back({"verlinde",
                             "Verlinde coefficient N_{" + std::to_string(x) + "," + std::to_string(y) + "}^" +
                                 std::to_string(z) + " = " + acc.to_string() +
                                 " is not a nonnegative integer",
                             {x, y, z}});
        }
      }
      for (std::size_t z = 0; z < r; ++z) {
        table.coeff[(x * r + y) * r + z] = static_cast<int>(cand[z]);
        table.coeff[(y * r + x) * r + z] = static_cast<int>(cand[z]);
      }
    }
  }
  if (!ok) return std::nullopt;

  table.dual.assign(r, r);
  for (std::size_t x = 0; x < r; ++x) {
    for (std::size_t y = 0; y < r; ++y) {
      if (table(x, y, 0) == 0) continue;
      if (table(x, y, 0) != 1 || table.dual[x] != r) {
        ok = false;
        break;
      }
      table.dual[x] = y;
    }
    if (table.dual[x] == r) ok = false;
  }
  if (!ok) {
    if (!issues) throw Error(ErrorCode::invalid_data, "not modular data: fusion rules have no duality");
    issues->push_back({"verlinde", "fusion rules do not define a dual for every object", {}});
    return std::nullopt;
  }
  return table;
}

}  // namespace

CycMatrix::CycMatrix(std::size_t rows, std::size_t cols, unsigned conductor)
    : rows_(rows), cols_(cols), data_(rows * cols, CycNum(conductor)) {}

CycMatrix CycMatrix::transpose() const {
  CycMatrix out;
  out.rows_ = cols_;
  out.cols_ = rows_;
  out.data_.reserve(data_.size());
  for (std::size_t j = 0; j < cols_; ++j)
    for (std::size_t i = 0; i < rows_; ++i) out.data_.push_back((*this)(i, j));
  return out;
}

std::vector<std::complex<double>> CycMatrix::approx() const {
  std::vector<std::complex<double>> out;
  out.reserve(data_.size());
  for (const auto& x : data_) out.push_back(x.approx());
  return out;
}

CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::invalid_argument, "matrix shape mismatch");
  const unsigned n = a.data_.empty() ? 1 : a.data_[0].conductor();
  CycMatrix bt = b.transpose();
  CycMatrix out(a.rows_, b.cols_, n);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = dot(a.row(i), bt.row(j));
  return out;
}

ModularData::ModularData(unsigned conductor, std::vector<std::string> labels, CycMatrix s,
                         std::vector<long> t, std::size_t unit_index)
    : conductor_(conductor), labels_(std::move(labels)), s_(std::move(s)), t_(std::move(t)) {
  const std::size_t r = t_.size();
  if (conductor_ == 0) throw Error(ErrorCode::invalid_data, "conductor must be positive");
  if (r == 0) throw Error(ErrorCode::invalid_data, "rank must be positive");
  if (s_.rows() != r || s_.cols() != r)
    throw Error(ErrorCode::invalid_data, "s must be " + std::to_string(r) + "x" + std::to_string(r));
  if (labels_.empty())
    for (std::size_t i = 0; i < r; ++i) labels_.push_back("X" + std::to_string(i));
  if (labels_.size() != r) throw Error(ErrorCode::invalid_data, "labels must have one entry per object");
  if (unit_index >= r) throw Error(ErrorCode::invalid_data, "unit index out of range");
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (s_(i, j).conductor() != conductor_)
        throw Error(ErrorCode::conductor_mismatch, "s entry " + pair_str(i, j) + " has conductor " +
                                                       std::to_string(s_(i, j).conductor()));
  for (auto& e : t_) e = mod(e, conductor_);
  if (unit_index != 0) {
    std::vector<std::size_t> order(r);
    std::iota(order.begin(), order.end(), 0);
    std::swap(order[0], order[unit_index]);
    CycMatrix ps(r, r, conductor_);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) ps(i, j) = s_(order[i], order[j]);
    std::vector<long> pt(r);
    std::vector<std::string> pl(r);
    for (std::size_t i = 0; i < r; ++i) {
      pt[i] = t_[order[i]];
      pl[i] = labels_[order[i]];
    }
    s_ = std::move(ps);
    t_ = std::move(pt);
    labels_ = std::move(pl);
  }
}

ModularData ModularData::permuted(const std::vector<std::size_t>& order) const {
  const std::size_t r = rank();
  if (order.size() != r || order.empty() || order[0] != 0)
    throw Error(ErrorCode::invalid_argument, "permutation must fix the unit object");
  std::vector<bool> seen(r, false);
  for (auto i : order) {
    if (i >= r || seen[i]) throw Error(ErrorCode::invalid_argument, "not a permutation");
    seen[i] = true;
  }
  CycMatrix ps(r, r, conductor_);
  std::vector<long> pt(r);
  std::vector<std::string> pl(r);
  for (std::size_t i = 0; i < r; ++i) {
    pt[i] = t_[order[i]];
    pl[i] = labels_[order[i]];
    for (std::size_t j = 0; j < r; ++j) ps(i, j) = s_(order[i], order[j]);
  }
  return ModularData(conductor_, std::move(pl), std::move(ps), std::move(pt));
}

ModularData ModularData::galois_conjugate(long k) const {
  const std::size_t r = rank();
  CycMatrix gs(r, r, conductor_);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) gs(i, j) = s_(i, j).galois(k);
  std::vector<long> gt(r);
  for (std::size_t i = 0; i < r; ++i) gt[i] = mod(t_[i] * mod(k, conductor_), conductor_);
  return ModularData(conductor_, labels_, std::move(gs), std::move(gt));
}

ModularData ModularData::relabeled(std::vector<std::string> labels) const {
  return ModularData(conductor_, std::move(labels), s_, t_);
}

CycNum global_dim(const ModularData& m) {
  CycNum acc(m.conductor());
  for (std::size_t x = 0; x < m.rank(); ++x) acc += m.dim(x) * m.dim(x);
  return acc;
}

CycNum tau(const ModularData& m) {
  CycNum acc(m.conductor());
  for (std::size_t x = 0; x < m.rank(); ++x) acc += m.twist(x) * m.dim(x) * m.dim(x);
  return acc;
}

CycNum central_charge_squared(const ModularData& m) {
  CycNum t = tau(m);
  return t * t * global_dim(m).inverse();
}

std::complex<double> central_charge_approx(const ModularData& m) {
  return tau(m).approx() / std::sqrt(global_dim(m).approx().real());
}

bool FusionTable::is_associative() const {
  const std::size_t r = rank;
  for (std::size_t x = 0; x < r; ++x)
    for (std::size_t y = 0; y < r; ++y)
      for (std::size_t z = 0; z < r; ++z)
        for (std::size_t v = 0; v < r; ++v) {
          long lhs = 0, rhs = 0;
          for (std::size_t w = 0; w < r; ++w) {
            lhs += static_cast<long>((*this)(x, y, w)) * (*this)(w, z, v);
            rhs += static_cast<long>((*this)(y, z, w)) * (*this)(x, w, v);
          }
          if (lhs != rhs) return false;
        }
  return true;
}

FusionTable verlinde(const ModularData& m) { return *verlinde_impl(m, nullptr); }

std::optional<std::vector<std::size_t>> charge_conjugation(const ModularData& m) {
  const std::size_t r = m.rank();
  const CycNum d = global_dim(m);
  CycMatrix sq = m.s() * m.s();
  std::vector<std::size_t> perm(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if (sq(i, j).is_zero()) continue;
      if (sq(i, j) != d || perm[i] != r) return std::nullopt;
      perm[i] = j;
    }
    if (perm[i] == r) return std::nullopt;
  }
  for (std::size_t i = 0; i < r; ++i)
    if (perm[perm[i]] != i) return std::nullopt;
  return perm;
}

ValidationReport validate(const ModularData& m) {
  ValidationReport rep;
  const std::size_t r = m.rank();
  const unsigned n = m.conductor();
  auto fail = [&rep](std::string check, std::string msg, std::vector<std::size_t> idx) {
    rep.issues.push_back({std::move(check), std::move(msg), std::move(idx)});
  };
  auto failed_since = [&rep](std::size_t mark) { return rep.issues.size() > mark; };

  rep.checks.push_back("symmetric");
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      if (m.s(i, j) != m.s(j, i)) fail("symmetric", "s not symmetric at " + pair_str(i, j), {i, j});

  rep.checks.push_back("unit");
  if (!m.s(0, 0).is_one()) fail("unit", "s_{0,0} is not 1", {0, 0});

  rep.checks.push_back("dimensions");
  const std::size_t mark_dims = rep.issues.size();
  for (std::size_t x = 0; x < r; ++x) {
    if (m.dim(x).is_zero())
      fail("dimensions", "zero dimension at " + std::to_string(x), {x});
    else if (!m.dim(x).is_real())
      fail("dimensions", "dimension not real at " + std::to_string(x), {x});
  }

  rep.checks.push_back("twists");
  if (m.t(0) != 0) fail("twists", "twist of the unit object is not 1", {0});
  unsigned long l = 1;
  for (std::size_t x = 0; x < r; ++x) l = lcm_ul(l, exponent_order(m.t(x), n));
  if (l != n)
    fail("twists", "lcm of twist orders is " + std::to_string(l) + ", conductor is " + std::to_string(n), {});

  rep.checks.push_back("unitary");
  const std::size_t mark_unitary = rep.issues.size();
  const CycNum d = global_dim(m);
  {
    CycMatrix sbar(r, r, n);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) sbar(i, j) = m.s(i, j).conj();
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        CycNum v = dot(m.s().row(i), sbar.row(j));
        if (i == j ? v != d : !v.is_zero())
          fail("unitary", "s * conj(s)^T != dim(C) * I at " + pair_str(i, j), {i, j});
      }
  }
  const bool invertible = !failed_since(mark_unitary) && !d.is_zero() && !failed_since(mark_dims);

  std::optional<std::vector<std::size_t>> cc;
  if (invertible) {
    rep.checks.push_back("charge_conjugation");
    cc = charge_conjugation(m);
    if (!cc) fail("charge_conjugation", "s^2 / dim(C) is not an involutive permutation matrix", {});
  } else {
    rep.skipped.push_back("charge_conjugation");
  }

  if (invertible) {
    rep.checks.push_back("verlinde");
    auto table = verlinde_impl(m, &rep.issues);
    if (table && cc) {
      rep.checks.push_back("dual");
      for (std::size_t x = 0; x < r; ++x)
        if (table->dual[x] != (*cc)[x])
          fail("dual", "charge conjugation and fusion dual disagree at " + std::to_string(x), {x});
    } else {
      rep.skipped.push_back("dual");
    }
  } else {
    rep.skipped.push_back("verlinde");
    rep.skipped.push_back("dual");
  }

  // Projective SL(2,Z) relation (s t)^3 = tau * s^2 with unnormalized s, t.
  if (invertible) {
    rep.checks.push_back("modular_relation");
    CycMatrix st(r, r, n);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) st(i, j) = m.s(i, j) * m.twist(j);
    CycMatrix lhs = st * st * st;
    CycMatrix sq = m.s() * m.s();
    const CycNum tv = tau(m);
    bool ok = true;
    for (std::size_t i = 0; i < r && ok; ++i)
      for (std::size_t j = 0; j < r && ok; ++j) ok = lhs(i, j) == tv * sq(i, j);
    if (!ok) fail("modular_relation", "(s t)^3 != tau * s^2", {});
  } else {
    rep.skipped.push_back("modular_relation");
  }
  return rep;
}

FpDims fp_dims(const ModularData& m, const FusionTable& fusion) {
  const std::size_t r = m.rank();
  const auto sa = m.s().approx();
  std::vector<std::size_t> found;
  std::vector<CycNum> values;
  for (std::size_t y = 0; y < r; ++y) {
    // Cheap numeric screen first; every surviving column is decided exactly.
    bool plausible = true;
    for (std::size_t x = 0; x < r && plausible; ++x) {
      std::complex<double> q = sa[x * r + y] / sa[y];
      plausible = std::abs(q.imag()) < 1e-6 * (1 + std::abs(q)) && q.real() > -1e-6 * (1 + std::abs(q));
    }
    if (!plausible) continue;
    const CycNum inv = m.s(0, y).inverse();
    std::vector<CycNum> col;
    bool positive = true;
    for (std::size_t x = 0; x < r && positive; ++x) {
      CycNum q = m.s(x, y) * inv;
      positive = q.is_real() && sign_of_real(q) == Sign::positive;
      col.push_back(std::move(q));
    }
    if (!positive) continue;
    found.push_back(y);
    values = std::move(col);
  }
  if (found.size() != 1)
    throw Error(ErrorCode::invalid_data, found.empty() ? "no Frobenius-Perron column"
                                                       : "more than one Frobenius-Perron column");

  // A positive eigenvector of a nonnegative matrix belongs to its spectral
  // radius; check the Collatz-Wielandt bounds numerically for every N_X.
  std::vector<double> v(r);
  for (std::size_t x = 0; x < r; ++x) v[x] = values[x].approx().real();
  for (std::size_t x = 0; x < r; ++x) {
    double lo = INFINITY, hi = 0;
    for (std::size_t y = 0; y < r; ++y) {
      double acc = 0;
      for (std::size_t z = 0; z < r; ++z) acc += fusion(x, y, z) * v[z];
      lo = std::min(lo, acc / v[y]);
      hi = std::max(hi, acc / v[y]);
    }
    const double tol = 1e-8 * (1 + v[x]);
    if (lo < v[x] - tol || hi > v[x] + tol)
      throw Error(ErrorCode::internal, "FP dimension of " + std::to_string(x) + " is not a Perron eigenvalue");
  }
  return {found[0], std::move(values)};
}

FpDims fp_dims(const ModularData& m) { return fp_dims(m, verlinde(m)); }

ModularData deligne_product(const ModularData& a, const ModularData& b) {
  const unsigned n = static_cast<unsigned>(lcm_ul(a.conductor(), b.conductor()));
  const std::size_t ra = a.rank(), rb = b.rank(), r = ra * rb;
  std::vector<CycNum> ea, eb;
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < ra; ++j) ea.push_back(a.s(i, j).embed(n));
  for (std::size_t i = 0; i < rb; ++i)
    for (std::size_t j = 0; j < rb; ++j) eb.push_back(b.s(i, j).embed(n));
  CycMatrix s(r, r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      s(i, j) = ea[(i / rb) * ra + j / rb] * eb[(i % rb) * rb + j % rb];
  std::vector<long> t(r);
  std::vector<std::string> labels(r);
  const long fa = n / a.conductor(), fb = n / b.conductor();
  for (std::size_t i = 0; i < r; ++i) {
    t[i] = mod(a.t(i / rb) * fa + b.t(i % rb) * fb, n);
    labels[i] = a.label(i / rb) + "⊠" + b.label(i % rb);
  }
  return ModularData(n, std::move(labels), std::move(s), std::move(t));
}

ModularData restrict_to_subset(const ModularData& m, const std::vector<std::size_t>& members) {
  if (members.empty() || members[0] != 0)
    throw Error(ErrorCode::invalid_argument, "subset must start with the unit object");
  unsigned long l = 1;
  for (auto x : members) l = lcm_ul(l, exponent_order(m.t(x), m.conductor()));
  const unsigned n = static_cast<unsigned>(l);
  const std::size_t r = members.size();
  CycMatrix s(r, r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      auto v = m.s(members[i], members[j]).restrict_to(n);
      if (!v)
        throw Error(ErrorCode::invalid_data, "s entry " + pair_str(members[i], members[j]) +
                                                 " does not lie in Q(zeta_" + std::to_string(n) + ")");
      s(i, j) = std::move(*v);
    }
  std::vector<long> t(r);
  std::vector<std::string> labels(r);
  const long scale = m.conductor() / n;
  for (std::size_t i = 0; i < r; ++i) {
    t[i] = m.t(members[i]) / scale;
    labels[i] = m.label(members[i]);
  }
  return ModularData(n, std::move(labels), std::move(s), std::move(t));
}

}  // namespace modgal

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

#include "galois_action.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "arith.hpp"
#include "errors.hpp"

namespace modgal {

namespace {

std::size_t hash_column(const std::vector<CycNum>& col) {
  std::size_t h = 0;
  for (const auto& x : col) h = h * 1000003u ^ x.hash();
  return h;
}

class ColumnMatcher {
 public:
  explicit ColumnMatcher(const ModularData& m) : r_(m.rank()), cols_(m.rank()) {
    for (std::size_t y = 0; y < r_; ++y) {
      const CycNum inv = m.s(0, y).inverse();
      for (std::size_t x = 0; x < r_; ++x) cols_[y].push_back(m.s(x, y) * inv);
      index_[hash_column(cols_[y])].push_back(y);
    }
    for (std::size_t y = 0; y < r_; ++y)
      if (find(cols_[y]) != y)
        throw Error(ErrorCode::invalid_data, "columns of the normalized character table are not distinct");
  }

  std::size_t find(const std::vector<CycNum>& col) const {
    auto it = index_.find(hash_column(col));
    std::size_t hit = r_;
    if (it != index_.end())
      for (std::size_t y : it->second)
        if (cols_[y] == col) {
          if (hit != r_) return r_ + 1;
          hit = y;
        }
    return hit;
  }

  Permutation permutation(long k) const {
    Permutation p(r_);
    std::vector<bool> hit(r_, false);
    for (std::size_t y = 0; y < r_; ++y) {
      std::vector<CycNum> g;
      g.reserve(r_);
      for (const auto& x : cols_[y]) g.push_back(x.galois(k));
      std::size_t z = find(g);
      if (z >= r_ || hit[z])
        throw Error(ErrorCode::invalid_data, "Galois conjugate of column " + std::to_string(y) + " under k=" +
                                                 std::to_string(k) + " matches no unique column");
      hit[z] = true;
      p[y] = z;
    }
    return p;
  }

 private:
  std::size_t r_;
  std::vector<std::vector<CycNum>> cols_;
  std::unordered_map<std::size_t, std::vector<std::size_t>> index_;
};

}  // namespace

GaloisAction::GaloisAction(const ModularData& m)
    : conductor_(m.conductor()), rank_(m.rank()), units_(units_mod(m.conductor())) {
  const std::size_t r = rank_;
  ColumnMatcher matcher(m);
  unit_slot_.assign(conductor_ + 1, units_.size());
  for (std::size_t i = 0; i < units_.size(); ++i) {
    unit_slot_[units_[i] % conductor_] = i;
    if (units_[i] == 1) {
      Permutation id(r);
      std::iota(id.begin(), id.end(), 0);
      perms_.push_back(std::move(id));
    } else {
      perms_.push_back(matcher.permutation(units_[i]));
    }
  }

  std::vector<std::size_t> parent(r);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& p : perms_)
    for (std::size_t x = 0; x < r; ++x) {
      std::size_t a = root(x), b = root(p[x]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  orbit_of_.assign(r, 0);
  std::vector<std::size_t> slot(r, r);
  for (std::size_t x = 0; x < r; ++x) {
    std::size_t rt = root(x);
    if (slot[rt] == r) {
      slot[rt] = orbits_.size();
      orbits_.emplace_back();
    }
    orbits_[slot[rt]].push_back(x);
    orbit_of_[x] = slot[rt];
  }
}

const Permutation& GaloisAction::permutation(long k) const {
  const long km = mod(k, conductor_);
  const std::size_t i = unit_slot_[static_cast<std::size_t>(km)];
  if (i >= units_.size())
    throw Error(ErrorCode::not_a_unit, std::to_string(k) + " is not a unit modulo " + std::to_string(conductor_));
  return perms_[i];
}

std::vector<unsigned> GaloisAction::stabilizer(std::size_t x) const {
  std::vector<unsigned> out;
  for (std::size_t i = 0; i < units_.size(); ++i)
    if (perms_[i][x] == x) out.push_back(units_[i]);
  return out;
}

Permutation galois_permutation(const ModularData& m, long k) {
  const long km = mod(k, m.conductor());
  if (std::gcd(static_cast<unsigned long>(km), static_cast<unsigned long>(m.conductor())) != 1)
    throw Error(ErrorCode::not_a_unit, std::to_string(k) + " is not a unit modulo " + std::to_string(m.conductor()));
  return ColumnMatcher(m).permutation(km);
}

bool is_transitive(const ModularData& m) { return GaloisAction(m).is_transitive(); }

std::vector<unsigned> fixing_subgroup(const ModularData& m, std::size_t x) {
  const CycNum inv = m.s(0, x).inverse();
  std::vector<CycNum> ratios;
  for (std::size_t y = 0; y < m.rank(); ++y) ratios.push_back(m.s(y, x) * inv);
  std::vector<unsigned> out;
  for (unsigned k : units_mod(m.conductor())) {
    bool fixed = true;
    for (std::size_t y = 0; y < ratios.size() && fixed; ++y) fixed = ratios[y].galois(k) == ratios[y];
    if (fixed) out.push_back(k);
  }
  return out;
}

unsigned verlinde_field_degree(const ModularData& m, std::size_t x) {
  return static_cast<unsigned>(euler_phi(m.conductor()) / fixing_subgroup(m, x).size());
}

unsigned verlinde_field_degree(const ModularData& m, const GaloisAction& g, std::size_t x) {
  const unsigned d = verlinde_field_degree(m, x);
  if (d != g.orbit_of(x).size())
    throw Error(ErrorCode::internal, "[L_X:Q] = " + std::to_string(d) + " but |O_X| = " +
                                         std::to_string(g.orbit_of(x).size()) + " at " + std::to_string(x));
  return d;
}

SquareTwistReport square_twist_consistency(const ModularData& m, const GaloisAction& g) {
  SquareTwistReport rep;
  const long n = m.conductor();
  for (unsigned k : g.units()) {
    const auto& p = g.permutation(k);
    const long k2 = static_cast<long>(mulmod(k, k, static_cast<unsigned long>(n)));
    const long c = mod(k2 * m.t(0) - m.t(p[0]), n);
    for (std::size_t x = 1; x < m.rank(); ++x) {
      const long cx = mod(static_cast<long>(mulmod(static_cast<unsigned long>(k2), static_cast<unsigned long>(m.t(x)),
                                                   static_cast<unsigned long>(n))) -
                              m.t(p[x]),
                          n);
      if (cx != c) {
        rep.passed = false;
        rep.failures.push_back("k=" + std::to_string(k) + ": ratio at " + std::to_string(x) + " is zeta^" +
                               std::to_string(cx) + ", at 0 it is zeta^" + std::to_string(c));
        break;
      }
    }
    rep.constants.emplace_back(k, c);
  }
  return rep;
}

DimsRatioReport dims_ratio_check(const ModularData& m, const GaloisAction& g) {
  DimsRatioReport rep;
  const CycNum d = global_dim(m);
  for (unsigned k : g.units()) {
    const auto& p = g.permutation(k);
    const CycNum ratio = d * d.galois(k).inverse();
    for (std::size_t x = 0; x < m.rank(); ++x) {
      const CycNum sx = m.dim(x).galois(k);
      const CycNum& dy = m.dim(p[x]);
      ++rep.checked;
      if (dy * dy != ratio * sx * sx) {
        rep.passed = false;
        rep.failures.push_back("k=" + std::to_string(k) + ", X=" + std::to_string(x));
      }
    }
  }
  return rep;
}

}  // namespace modgal

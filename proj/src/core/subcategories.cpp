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

#include "subcategories.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "arith.hpp"
#include "errors.hpp"

namespace modgal {

namespace {

FusionSubcategory from_mask(const std::vector<char>& mask) {
  FusionSubcategory d;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i]) d.members.push_back(i);
  return d;
}

FusionSubcategory set_union(const FusionSubcategory& a, const FusionSubcategory& b) {
  FusionSubcategory out;
  std::set_union(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                 std::back_inserter(out.members));
  return out;
}

bool is_transitive_part(const CategoryView& v, const FusionSubcategory& d) {
  return d.size() <= 1 || GaloisAction(restrict_to_subset(v.data(), d.members)).is_transitive();
}

unsigned part_conductor(const CategoryView& v, const FusionSubcategory& d) {
  return restrict_to_subset(v.data(), d.members).conductor();
}

std::vector<unsigned> subgroup_product(const std::vector<unsigned>& a, const std::vector<unsigned>& b, unsigned n) {
  std::set<unsigned> out;
  for (unsigned x : a)
    for (unsigned y : b) out.insert(static_cast<unsigned>(mulmod(x, y, n)));
  return {out.begin(), out.end()};
}

bool has_fibonacci_fusion(const CategoryView& v, const FusionSubcategory& d) {
  if (d.size() != 2) return false;
  const std::size_t x = d.members[1];
  return v.fusion()(x, x, 0) == 1 && v.fusion()(x, x, x) == 1;
}

}  // namespace

CategoryView::CategoryView(ModularData m)
    : m_(std::move(m)), fusion_(verlinde(m_)), fp_(fp_dims(m_, fusion_)), galois_(m_) {
  const std::size_t r = rank();
  cent_.assign(r * r, 0);
  for (std::size_t x = 0; x < r; ++x)
    for (std::size_t y = x; y < r; ++y) {
      const char c = m_.s(x, y) == m_.dim(x) * m_.dim(y) ? 1 : 0;
      cent_[x * r + y] = cent_[y * r + x] = c;
    }
}

bool FusionSubcategory::contains(std::size_t x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

bool FusionSubcategory::is_subset_of(const FusionSubcategory& other) const {
  return std::includes(other.members.begin(), other.members.end(), members.begin(), members.end());
}

FusionSubcategory generated_subcategory(const CategoryView& v, const IndexSet& generators) {
  const std::size_t r = v.rank();
  const FusionTable& f = v.fusion();
  std::vector<char> in(r, 0);
  std::vector<std::size_t> members, queue;
  auto add = [&](std::size_t x) {
    if (!in[x]) {
      in[x] = 1;
      queue.push_back(x);
    }
  };
  add(0);
  for (std::size_t g : generators) {
    if (g >= r) throw Error(ErrorCode::invalid_argument, "generator index out of range");
    add(g);
  }
  while (!queue.empty()) {
    const std::size_t x = queue.back();
    queue.pop_back();
    members.push_back(x);
    add(f.dual[x]);
    for (std::size_t y : members)
      for (std::size_t z = 0; z < r; ++z)
        if (f(x, y, z) > 0) add(z);
  }
  return from_mask(in);
}

FusionSubcategory whole(const CategoryView& v) {
  FusionSubcategory d;
  d.members.resize(v.rank());
  std::iota(d.members.begin(), d.members.end(), std::size_t{0});
  return d;
}

std::vector<FusionSubcategory> all_subcategories(const CategoryView& v, std::size_t max_rank) {
  if (v.rank() > max_rank)
    throw Error(ErrorCode::limit_exceeded,
                "rank " + std::to_string(v.rank()) + " exceeds subcategory bound " + std::to_string(max_rank));
  std::set<FusionSubcategory> found;
  for (std::size_t x = 0; x < v.rank(); ++x) found.insert(generated_subcategory(v, {x}));
  std::vector<FusionSubcategory> frontier(found.begin(), found.end());
  const std::vector<FusionSubcategory> cyclic = frontier;
  while (!frontier.empty()) {
    std::vector<FusionSubcategory> next;
    for (const auto& a : frontier)
      for (const auto& b : cyclic) {
        if (b.is_subset_of(a)) continue;
        FusionSubcategory j = generated_subcategory(v, set_union(a, b).members);
        if (found.insert(j).second) next.push_back(std::move(j));
      }
    frontier = std::move(next);
  }
  std::vector<FusionSubcategory> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const FusionSubcategory& a, const FusionSubcategory& b) { return a.size() < b.size(); });
  return out;
}

FusionSubcategory centralizer(const CategoryView& v, const FusionSubcategory& d) {
  FusionSubcategory out;
  for (std::size_t x = 0; x < v.rank(); ++x) {
    bool ok = true;
    for (std::size_t y : d.members)
      if (!v.centralizes(x, y)) {
        ok = false;
        break;
      }
    if (ok) out.members.push_back(x);
  }
  return out;
}

FusionSubcategory pointed_part(const CategoryView& v) {
  FusionSubcategory d;
  for (std::size_t x = 0; x < v.rank(); ++x)
    if (v.fp().values[x].is_one()) d.members.push_back(x);
  return d;
}

FusionSubcategory adjoint_part(const CategoryView& v) {
  const std::size_t r = v.rank();
  IndexSet gens;
  for (std::size_t x = 0; x < r; ++x)
    for (std::size_t z = 0; z < r; ++z)
      if (v.fusion()(x, v.fusion().dual[x], z) > 0) gens.push_back(z);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return generated_subcategory(v, gens);
}

bool is_integral(const CategoryView& v, const FusionSubcategory& d) {
  return std::all_of(d.members.begin(), d.members.end(),
                     [&](std::size_t x) { return v.fp().values[x].is_rational_integer(); });
}

bool is_symmetric(const CategoryView& v, const FusionSubcategory& d) {
  return d.is_subset_of(centralizer(v, d));
}

bool is_galois_closed(const CategoryView& v, const FusionSubcategory& d) {
  for (unsigned k : v.galois().units()) {
    const Permutation& p = v.galois().permutation(k);
    for (std::size_t x : d.members)
      if (!d.contains(p[x])) return false;
  }
  return true;
}

bool is_nondegenerate(const CategoryView& v, const FusionSubcategory& d) {
  const FusionSubcategory c = centralizer(v, d);
  for (std::size_t x : d.members)
    if (x != 0 && c.contains(x)) return false;
  return true;
}

CycNum subcategory_dim(const CategoryView& v, const FusionSubcategory& d) {
  CycNum acc(v.data().conductor());
  for (std::size_t x : d.members) acc += v.data().dim(x) * v.data().dim(x);
  return acc;
}

std::string format_set(const ModularData& m, const IndexSet& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << m.label(s[i]);
  os << '}';
  return os.str();
}

CheckReport check_theorem_galois_closure(const CategoryView& v, const std::vector<FusionSubcategory>& subs) {
  CheckReport rep{"galois_closure_iff_integral_centralizer"};
  for (const auto& d : subs) {
    ++rep.cases;
    const bool closed = is_galois_closed(v, d);
    const bool integral = is_integral(v, centralizer(v, d));
    if (closed != integral)
      rep.fail(format_set(v.data(), d.members) + ": galois closed = " + (closed ? "true" : "false") +
               " but integral centralizer = " + (integral ? "true" : "false"));
  }
  ++rep.cases;
  if (!is_galois_closed(v, adjoint_part(v))) rep.fail("adjoint part is not galois closed");
  return rep;
}

CheckReport check_subcategory_lattice(const CategoryView& v, const std::vector<FusionSubcategory>& subs) {
  CheckReport rep{"subcategory_lattice"};
  const ModularData& m = v.data();
  const CycNum total = global_dim(m);
  std::vector<FusionSubcategory> cents;
  cents.reserve(subs.size());
  for (const auto& d : subs) {
    ++rep.cases;
    cents.push_back(centralizer(v, d));
    const FusionSubcategory& c = cents.back();
    if (generated_subcategory(v, c.members) != c)
      rep.fail("centralizer of " + format_set(m, d.members) + " is not a fusion subcategory");
    if (centralizer(v, c) != d) rep.fail("double centralizer of " + format_set(m, d.members) + " differs");
    if (subcategory_dim(v, d) * subcategory_dim(v, c) != total)
      rep.fail("dim(D) dim(C_C(D)) != dim(C) for D = " + format_set(m, d.members));
  }
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t j = 0; j < subs.size(); ++j)
      if (i != j && subs[i].is_subset_of(subs[j]) && !cents[j].is_subset_of(cents[i]))
        rep.fail("centralizer does not reverse " + format_set(m, subs[i].members) + " in " +
                 format_set(m, subs[j].members));
  const FusionSubcategory ad = adjoint_part(v);
  ++rep.cases;
  if (ad != centralizer(v, pointed_part(v))) rep.fail("adjoint part differs from centralizer of pointed part");
  ++rep.cases;
  for (std::size_t x : v.galois().orbit_of(0))
    if (!ad.contains(x)) rep.fail("unit orbit member " + m.label(x) + " lies outside the adjoint part");
  return rep;
}

OrbitBoundReport check_orbit_lower_bound(const CategoryView& v) {
  OrbitBoundReport rep;
  rep.pointed_rank = pointed_part(v).size();
  for (const auto& [p, a] : factorize(rep.pointed_rank)) {
    rep.prime_powers.emplace_back(p, a);
    rep.bound += a;
  }
  rep.orbit_count = v.galois().orbits().size();
  rep.passed = rep.orbit_count >= rep.bound;
  return rep;
}

IndexSet pseudoinvertibles(const CategoryView& v) {
  IndexSet out;
  const unsigned n = v.data().conductor();
  for (std::size_t x = 0; x < v.rank(); ++x) {
    const CycNum& d = v.data().dim(x);
    if (d.is_one() || d == CycNum(n, -1)) out.push_back(x);
  }
  return out;
}

bool orbitwise_pseudoinvertible(const CategoryView& v) {
  const IndexSet p = pseudoinvertibles(v);
  std::vector<char> hit(v.galois().orbits().size(), 0);
  for (std::size_t x : p) hit[v.galois().orbit_index(x)] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

std::vector<unsigned> dimension_field_fixer(const CategoryView& v, const FusionSubcategory& d) {
  const FusionSubcategory c = centralizer(v, d);
  std::vector<unsigned> out;
  for (unsigned k : v.galois().units()) {
    bool fixes = true;
    for (std::size_t y : c.members)
      if (v.data().dim(y).galois(k) != v.data().dim(y)) {
        fixes = false;
        break;
      }
    if (fixes) out.push_back(k);
  }
  return out;
}

CheckReport counting2_degree_check(const CategoryView& v, const FusionSubcategory& d) {
  CheckReport rep{"orbit_intersection_degree"};
  const unsigned n = v.data().conductor();
  const std::size_t phi = v.galois().units().size();
  const std::vector<unsigned> hk = dimension_field_fixer(v, d);
  for (std::size_t x : d.members) {
    ++rep.cases;
    const auto& orbit = v.galois().orbit_of(x);
    const std::size_t direct =
        static_cast<std::size_t>(std::count_if(orbit.begin(), orbit.end(), [&](std::size_t y) { return d.contains(y); }));
    const std::vector<unsigned> hx = fixing_subgroup(v.data(), x);
    const std::size_t meet_degree = phi / subgroup_product(hk, hx, n).size();
    const std::size_t orbit_size = phi / hx.size();
    if (orbit_size != orbit.size())
      rep.fail(v.data().label(x) + ": [L_X:Q] = " + std::to_string(orbit_size) + " but |O_X| = " +
               std::to_string(orbit.size()));
    if (orbit_size % meet_degree != 0 || orbit_size / meet_degree != direct)
      rep.fail(v.data().label(x) + " in " + format_set(v.data(), d.members) + ": |O_X cap D| = " +
               std::to_string(direct) + " but |O_X| / [K_D cap L_X : Q] = " + std::to_string(orbit_size) + "/" +
               std::to_string(meet_degree));
  }
  return rep;
}

std::string to_string(TwoOrbitClause c) {
  switch (c) {
    case TwoOrbitClause::pointed_prime: return "pointed_prime";
    case TwoOrbitClause::ising: return "ising";
    case TwoOrbitClause::fibonacci_pair: return "fibonacci_pair";
    case TwoOrbitClause::simple: return "simple";
    case TwoOrbitClause::none: break;
  }
  return "none";
}

TwoOrbitDiagnosis two_orbit_diagnosis(const CategoryView& v, const std::vector<FusionSubcategory>& subs) {
  if (v.galois().orbits().size() != 2)
    throw Error(ErrorCode::invalid_argument, "two-orbit diagnosis needs exactly two Galois orbits");
  const ModularData& m = v.data();
  const std::size_t r = v.rank();
  TwoOrbitDiagnosis out;
  auto factors = [&](const FusionSubcategory& d, FusionSubcategory& t) {
    if (!is_nondegenerate(v, d)) return false;
    t = centralizer(v, d);
    return d.size() * t.size() == r && is_transitive_part(v, t);
  };
  auto tail = [&](const FusionSubcategory& t) {
    return t.size() == 1 ? std::string() : " x transitive rank " + std::to_string(t.size());
  };

  const FusionSubcategory pt = pointed_part(v);
  FusionSubcategory t;
  if (pt.size() > 1) {
    if (is_prime(pt.size()) && factors(pt, t) && (t.size() == 1 || std::gcd<unsigned long>(pt.size(), part_conductor(v, t)) == 1)) {
      out.clause = TwoOrbitClause::pointed_prime;
      out.factor = pt.members;
      out.transitive = t.members;
      out.summary = "pointed of prime rank " + std::to_string(pt.size()) + tail(t);
      return out;
    }
    std::vector<std::size_t> roots;
    const CycNum two(m.conductor(), 2);
    for (std::size_t x = 0; x < r; ++x)
      if (v.fusion().dual[x] == x && m.dim(x) * m.dim(x) == two) roots.push_back(x);
    if (roots.size() == 1) {
      const FusionSubcategory ising = generated_subcategory(v, {roots[0]});
      if (ising.size() == 3 && factors(ising, t)) {
        out.clause = TwoOrbitClause::ising;
        out.factor = ising.members;
        out.transitive = t.members;
        out.summary = "Ising" + tail(t);
        return out;
      }
    }
    out.summary = "no clause matches a nontrivial pointed part";
    return out;
  }

  for (const auto& d : subs) {
    if (d.size() != 4 || !factors(d, t)) continue;
    std::vector<const FusionSubcategory*> fibs;
    for (const auto& f : subs)
      if (f.size() == 2 && f.is_subset_of(d) && has_fibonacci_fusion(v, f) && is_nondegenerate(v, f)) fibs.push_back(&f);
    if (fibs.size() == 2) {
      out.clause = TwoOrbitClause::fibonacci_pair;
      out.factor = d.members;
      out.transitive = t.members;
      out.summary = "Fib x Fib" + tail(t);
      return out;
    }
  }
  for (const auto& d : subs) {
    if (d.size() == 1 || !factors(d, t)) continue;
    const bool simple = std::none_of(subs.begin(), subs.end(), [&](const FusionSubcategory& e) {
      return e.size() > 1 && e.size() < d.size() && e.is_subset_of(d);
    });
    if (!simple) continue;
    if (t.size() > 1 && std::gcd(part_conductor(v, d), part_conductor(v, t)) != 1) continue;
    out.clause = TwoOrbitClause::simple;
    out.factor = d.members;
    out.transitive = t.members;
    out.summary = t.size() == 1 ? "simple, two orbits" : "simple rank " + std::to_string(d.size()) + tail(t);
    return out;
  }
  out.summary = "no clause matches a trivial pointed part";
  return out;
}

}  // namespace modgal

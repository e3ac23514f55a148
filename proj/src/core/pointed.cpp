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

#include "pointed.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <sstream>
#include <string_view>
#include <unordered_map>

#include "arith.hpp"
#include "errors.hpp"
#include "galois_action.hpp"

namespace modgal {

namespace {

void chains(unsigned rem, unsigned bound, std::vector<unsigned>& tail, std::vector<FiniteAbelianGroup>& out) {
  if (rem == 1) {
    out.emplace_back(std::vector<unsigned>(tail.rbegin(), tail.rend()));
    return;
  }
  for (unsigned d : divisors(rem)) {
    if (d < 2 || bound % d != 0) continue;
    tail.push_back(d);
    chains(rem / d, d, tail, out);
    tail.pop_back();
  }
}

std::vector<std::vector<std::size_t>> classes_by_key(const std::vector<std::size_t>& key) {
  std::vector<std::vector<std::size_t>> out;
  std::unordered_map<std::size_t, std::size_t> slot;
  for (std::size_t x = 0; x < key.size(); ++x) {
    auto [it, fresh] = slot.emplace(key[x], out.size());
    if (fresh) out.emplace_back();
    out[it->second].push_back(x);
  }
  return out;
}

// phi(g)_j = sum_i g_i c_ij mod M for every g, in index order.
std::vector<long> pairing_rows(const FiniteAbelianGroup& a, const Bicharacter& b) {
  const std::size_t k = a.rank();
  const long m = b.modulus;
  const std::size_t order = a.order();
  std::vector<long> rows(order * k, 0);
  std::vector<unsigned> g(k, 0);
  std::vector<long> cur(k, 0);
  for (std::size_t idx = 1; idx < order; ++idx) {
    std::size_t pos = 0;
    while (true) {
      for (std::size_t j = 0; j < k; ++j) cur[j] = (cur[j] + b.c[pos * k + j]) % m;
      if (++g[pos] < a.factors()[pos]) break;
      g[pos] = 0;
      ++pos;
    }
    std::copy(cur.begin(), cur.end(), rows.begin() + static_cast<long>(idx * k));
  }
  return rows;
}

std::size_t refinement_count(const FiniteAbelianGroup& a, const Bicharacter& b, std::vector<long>* diag) {
  const long m = b.modulus;
  const std::size_t k = a.rank();
  std::size_t count = 1;
  for (std::size_t i = 0; i < k; ++i) {
    const long n = a.factors()[i];
    const long c = b.c[i * k + i];
    std::vector<long> options;
    if (m % 2 == 0) {
      for (long e : {c / 2, c / 2 + m / 2})
        if ((e % m) * (n * n % m) % m == 0) options.push_back(e % m);
    } else {
      options.push_back(c * ((m + 1) / 2) % m);
    }
    if (options.empty()) throw Error(ErrorCode::internal, "bicharacter without quadratic refinement");
    count *= options.size();
    if (diag) diag->push_back(options[0]);
  }
  return count;
}

}  // namespace

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<unsigned> factors) {
  for (unsigned f : factors) {
    if (f == 0) throw Error(ErrorCode::invalid_argument, "invariant factors must be positive");
    if (f > 1) factors_.push_back(f);
  }
  for (std::size_t i = 1; i < factors_.size(); ++i)
    if (factors_[i] % factors_[i - 1] != 0)
      throw Error(ErrorCode::invalid_argument, "invariant factors must form a divisibility chain: " + to_string());
}

FiniteAbelianGroup FiniteAbelianGroup::parse(const std::string& text) {
  std::vector<unsigned> f;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    if (!std::all_of(item.begin(), item.end(), ::isdigit) || item.size() > 9)
      throw Error(ErrorCode::invalid_argument, "bad invariant factor \"" + item + "\"");
    f.push_back(static_cast<unsigned>(std::stoul(item)));
  }
  return FiniteAbelianGroup(std::move(f));
}

unsigned long FiniteAbelianGroup::order() const {
  unsigned long n = 1;
  for (unsigned f : factors_) n *= f;
  return n;
}

std::vector<unsigned> FiniteAbelianGroup::element(std::size_t index) const {
  std::vector<unsigned> x(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    x[i] = static_cast<unsigned>(index % factors_[i]);
    index /= factors_[i];
  }
  return x;
}

std::size_t FiniteAbelianGroup::index_of(const std::vector<unsigned>& x) const {
  std::size_t index = 0;
  for (std::size_t i = factors_.size(); i-- > 0;) index = index * factors_[i] + x[i] % factors_[i];
  return index;
}

unsigned FiniteAbelianGroup::element_order(std::size_t index) const {
  unsigned long o = 1;
  auto x = element(index);
  for (std::size_t i = 0; i < x.size(); ++i) o = lcm_ul(o, factors_[i] / std::gcd(factors_[i], x[i]));
  return static_cast<unsigned>(o);
}

std::string FiniteAbelianGroup::element_label(std::size_t index) const {
  auto x = element(index);
  if (x.empty()) return "0";
  if (x.size() == 1) return std::to_string(x[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
  return s + ")";
}

std::string FiniteAbelianGroup::to_string() const {
  if (factors_.empty()) return "Z/1";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) s += (i ? "+Z/" : "Z/") + std::to_string(factors_[i]);
  return s;
}

std::vector<FiniteAbelianGroup> abelian_groups_of_order(unsigned n) {
  std::vector<FiniteAbelianGroup> out;
  std::vector<unsigned> tail;
  chains(n, n, tail, out);
  return out;
}

QuadraticFormSpec QuadraticFormSpec::parse(const std::string& text, std::size_t k) {
  QuadraticFormSpec q;
  std::stringstream rows(text);
  std::string row;
  while (std::getline(rows, row, ';')) {
    std::vector<long> r;
    std::stringstream cells(row);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      try {
        std::size_t used = 0;
        r.push_back(std::stol(cell, &used));
        if (cell.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw Error(ErrorCode::invalid_argument, "bad Gram entry \"" + cell + "\"");
      }
    }
    q.gram.push_back(std::move(r));
  }
  if (q.gram.size() != k)
    throw Error(ErrorCode::invalid_argument, "Gram matrix must have " + std::to_string(k) + " rows");
  for (const auto& r : q.gram)
    if (r.size() != k) throw Error(ErrorCode::invalid_argument, "Gram matrix must be square");
  return q;
}

std::string QuadraticFormSpec::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < gram.size(); ++i) {
    if (i) s += ";";
    for (std::size_t j = 0; j < gram[i].size(); ++j) s += (j ? "," : "") + std::to_string(gram[i][j]);
  }
  return s;
}

unsigned form_modulus(const FiniteAbelianGroup& a) {
  return a.order() % 2 == 0 ? 2 * a.exponent() : a.exponent();
}

QuadraticFormSpec default_form(const FiniteAbelianGroup& a) {
  const std::size_t k = a.rank();
  const long m = form_modulus(a);
  QuadraticFormSpec q;
  q.gram.assign(k, std::vector<long>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    const long n = a.factors()[i];
    q.gram[i][i] = (m % 2 == 0 && n % 2 == 0) ? m / (2 * n) : m / n;
  }
  return q;
}

std::string form_defect(const FiniteAbelianGroup& a, const QuadraticFormSpec& q) {
  const std::size_t k = a.rank();
  const long m = form_modulus(a);
  if (q.gram.size() != k) return "Gram matrix has the wrong size";
  for (const auto& r : q.gram)
    if (r.size() != k) return "Gram matrix has the wrong size";
  for (std::size_t i = 0; i < k; ++i) {
    const long ni = a.factors()[i];
    for (std::size_t j = 0; j < k; ++j) {
      if (mod(q.gram[i][j] - q.gram[j][i], m) != 0) return "Gram matrix is not symmetric";
      if (mod(2 * ni * q.gram[i][j], m) != 0) return "q is not well defined (2 n_i e_ij != 0 mod M)";
    }
    if (mod(mod(q.gram[i][i], m) * ni % m * ni, m) != 0) return "q is not well defined (e_ii n_i^2 != 0 mod M)";
  }
  Bicharacter b{static_cast<unsigned>(m), std::vector<long>(k * k)};
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) b.c[i * k + j] = mod(2 * q.gram[i][j], m);
  const auto rows = pairing_rows(a, b);
  for (std::size_t g = 1; g < a.order(); ++g) {
    bool zero = true;
    for (std::size_t j = 0; j < k && zero; ++j) zero = rows[g * k + j] == 0;
    if (zero) return "degenerate form: " + a.element_label(g) + " pairs trivially with A";
  }
  return "";
}

ModularData build_pointed(const FiniteAbelianGroup& a, const QuadraticFormSpec& q) {
  if (std::string why = form_defect(a, q); !why.empty()) throw Error(ErrorCode::invalid_argument, why);
  const std::size_t k = a.rank();
  const long m = form_modulus(a);
  const std::size_t r = a.order();
  Bicharacter b{static_cast<unsigned>(m), std::vector<long>(k * k)};
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) b.c[i * k + j] = mod(2 * q.gram[i][j], m);
  const auto rows = pairing_rows(a, b);

  std::vector<long> qexp(r);
  unsigned long n = 1;
  for (std::size_t g = 0; g < r; ++g) {
    auto x = a.element(g);
    long e = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) e = mod(e + mod(q.gram[i][j], m) * x[i] % m * x[j], m);
    qexp[g] = e;
    n = lcm_ul(n, static_cast<unsigned long>(m) / std::gcd(static_cast<unsigned long>(m), static_cast<unsigned long>(e)));
  }
  const unsigned cond = static_cast<unsigned>(n);
  CycMatrix s(r, r, cond);
  std::vector<long> t(r);
  std::vector<std::string> labels(r);
  for (std::size_t g = 0; g < r; ++g) {
    t[g] = qexp[g] * static_cast<long>(cond) / m;
    labels[g] = a.element_label(g);
    for (std::size_t h = 0; h < r; ++h) {
      auto y = a.element(h);
      long e = 0;
      for (std::size_t j = 0; j < k; ++j) e = (e + rows[g * k + j] * y[j]) % m;
      if (e * static_cast<long>(cond) % m != 0) throw Error(ErrorCode::internal, "bicharacter leaves mu_N");
      s(g, h) = CycNum::root_of_unity(cond, -e * static_cast<long>(cond) / m);
    }
  }
  return ModularData(cond, std::move(labels), std::move(s), std::move(t));
}

unsigned long cyclic_subgroup_count(const FiniteAbelianGroup& a) {
  const auto& f = a.factors();
  std::vector<std::vector<unsigned>> divs;
  for (unsigned n : f) divs.push_back(divisors(n));
  std::vector<std::size_t> pick(f.size(), 0);
  mpq_class total = 0;
  while (true) {
    unsigned long l = 1;
    mpz_class num = 1;
    for (std::size_t i = 0; i < f.size(); ++i) {
      const unsigned d = divs[i][pick[i]];
      num *= euler_phi(d);
      l = lcm_ul(l, d);
    }
    total += mpq_class(num, euler_phi(static_cast<unsigned>(l)));
    std::size_t i = 0;
    while (i < f.size() && ++pick[i] == divs[i].size()) pick[i++] = 0;
    if (i == f.size()) break;
  }
  total.canonicalize();
  if (total.get_den() != 1) throw Error(ErrorCode::internal, "divisor-tuple sum is not an integer");
  return total.get_num().get_ui();
}

unsigned long closed_form_counts(ClosedForm kind, unsigned long p, unsigned n) {
  auto power = [](unsigned long b, unsigned e) {
    unsigned long r = 1;
    while (e--) r *= b;
    return r;
  };
  switch (kind) {
    case ClosedForm::cyclic_divisors:
      if (n < 1) throw Error(ErrorCode::invalid_argument, "n must be positive");
      return divisors(n).size();
    case ClosedForm::elementary_abelian:
      if (!is_prime(p)) throw Error(ErrorCode::invalid_argument, "p must be prime");
      return 1 + (power(p, n) - 1) / (p - 1);
    case ClosedForm::product_cyclic:
      if (!is_prime(p) || p < 5 || n < 1) throw Error(ErrorCode::invalid_argument, "need prime p >= 5 and n >= 1");
      return (n * (p - 1) + 2) / 2;
    case ClosedForm::product_elementary:
      if (!is_prime(p) || p < 5 || n < 1) throw Error(ErrorCode::invalid_argument, "need prime p >= 5 and n >= 1");
      return (power(p, n) + 1) / 2;
  }
  throw Error(ErrorCode::invalid_argument, "unknown closed form");
}

std::vector<std::vector<std::size_t>> cyclic_generator_partition(const FiniteAbelianGroup& a) {
  const std::size_t r = a.order();
  std::vector<std::size_t> key(r);
  for (std::size_t h = 0; h < r; ++h) {
    const unsigned o = a.element_order(h);
    const auto x = a.element(h);
    std::size_t best = h;
    for (unsigned u = 1; u < o; ++u) {
      if (std::gcd(u, o) != 1) continue;
      std::vector<unsigned> y(x.size());
      for (std::size_t i = 0; i < x.size(); ++i)
        y[i] = static_cast<unsigned>(static_cast<unsigned long>(x[i]) * u % a.factors()[i]);
      best = std::min(best, a.index_of(y));
    }
    key[h] = best;
  }
  return classes_by_key(key);
}

std::size_t for_each_nondegenerate_bicharacter(
    const FiniteAbelianGroup& a, const std::function<void(const Bicharacter&, std::size_t)>& visit) {
  const std::size_t k = a.rank();
  const long m = form_modulus(a);
  const auto& f = a.factors();
  if (k == 0) {
    visit(Bicharacter{1, {}}, 1);
    return 1;
  }
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  std::vector<long> step, range;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      const long g = std::gcd(f[i], f[j]);
      slots.emplace_back(i, j);
      step.push_back(m / g);
      range.push_back(g);
    }
  std::vector<long> v(slots.size(), 0);
  Bicharacter b{static_cast<unsigned>(m), std::vector<long>(k * k, 0)};
  std::size_t visited = 0;
  const std::size_t order = a.order();
  std::vector<long> cur(k);
  std::vector<unsigned> g(k);
  while (true) {
    for (std::size_t s = 0; s < slots.size(); ++s) {
      auto [i, j] = slots[s];
      b.c[i * k + j] = b.c[j * k + i] = step[s] * v[s];
    }
    // Walk A in mixed-radix order looking for a nonzero radical element.
    std::fill(cur.begin(), cur.end(), 0);
    std::fill(g.begin(), g.end(), 0);
    bool degenerate = false;
    for (std::size_t idx = 1; idx < order && !degenerate; ++idx) {
      std::size_t pos = 0;
      while (true) {
        for (std::size_t j = 0; j < k; ++j) {
          cur[j] += b.c[pos * k + j];
          if (cur[j] >= m) cur[j] -= m;
        }
        if (++g[pos] < f[pos]) break;
        g[pos] = 0;
        ++pos;
      }
      degenerate = std::all_of(cur.begin(), cur.end(), [](long x) { return x == 0; });
    }
    if (!degenerate) {
      visit(b, refinement_count(a, b, nullptr));
      ++visited;
    }
    std::size_t s = 0;
    while (s < v.size() && ++v[s] == range[s]) v[s++] = 0;
    if (s == v.size()) break;
  }
  return visited;
}

QuadraticFormSpec refinement_of(const FiniteAbelianGroup& a, const Bicharacter& b) {
  const std::size_t k = a.rank();
  const long m = b.modulus;
  std::vector<long> diag;
  refinement_count(a, b, &diag);
  QuadraticFormSpec q;
  q.gram.assign(k, std::vector<long>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      q.gram[i][j] = i == j ? diag[i] : (m % 2 == 0 ? b.c[i * k + j] / 2 : b.c[i * k + j] * ((m + 1) / 2) % m);
  return q;
}

std::vector<std::vector<std::size_t>> pointed_orbits_exponent(const FiniteAbelianGroup& a, const Bicharacter& b) {
  const std::size_t r = a.order();
  const std::size_t k = a.rank();
  const unsigned m = b.modulus;
  if (m > 255 || k > 8) throw Error(ErrorCode::limit_exceeded, "exponent path needs modulus < 256 and rank <= 8");

  thread_local std::vector<std::uint8_t> cols, times;
  thread_local std::vector<std::size_t> stride, parent, slot, low;
  thread_local std::vector<unsigned> low_key;
  thread_local std::vector<std::pair<std::uint64_t, std::size_t>> index;

  // cols[h * r + g] = exponent of s_{g,h} = b(g,h)^{-1}. Columns are
  // additive in h, so each is an earlier column plus a generator column.
  cols.assign(r * r, 0);
  stride.assign(k + 1, 1);
  for (std::size_t i = 0; i < k; ++i) stride[i + 1] = stride[i] * a.factors()[i];
  if (low_key != a.factors()) {
    low_key = a.factors();
    low.assign(r, 0);
    for (std::size_t h = 1; h < r; ++h)
      while ((h / stride[low[h]]) % a.factors()[low[h]] == 0) ++low[h];
  }
  auto lowest_nonzero_digit = [&](std::size_t h) { return low[h]; };
  for (std::size_t j = 0; j < k; ++j) {
    std::uint8_t* col = &cols[stride[j] * r];
    for (std::size_t g = 1; g < r; ++g) {
      const std::size_t pos = lowest_nonzero_digit(g);
      unsigned v = col[g - stride[pos]] + static_cast<unsigned>(mod(-b.c[pos * k + j], m));
      col[g] = static_cast<std::uint8_t>(v >= m ? v - m : v);
    }
  }
  for (std::size_t h = 1; h < r; ++h) {
    const std::size_t pos = lowest_nonzero_digit(h);
    if (h == stride[pos]) continue;
    const std::uint8_t* prev = &cols[(h - stride[pos]) * r];
    const std::uint8_t* add = &cols[stride[pos] * r];
    std::uint8_t* out = &cols[h * r];
    for (std::size_t g = 0; g < r; ++g) {
      unsigned v = static_cast<unsigned>(prev[g]) + add[g];
      v -= m & (0u - static_cast<unsigned>(v >= m));
      out[g] = static_cast<std::uint8_t>(v);
    }
  }

  // A column is determined by its entries at the generator rows; those
  // bytes are the lookup key and a full comparison confirms each match.
  auto key_of = [&](const std::uint8_t* col) {
    std::uint64_t key = 0;
    for (std::size_t j = 0; j < k; ++j) key = (key << 8) | col[stride[j]];
    return key;
  };
  index.resize(r);
  for (std::size_t h = 0; h < r; ++h) index[h] = {key_of(&cols[h * r]), h};
  std::sort(index.begin(), index.end());
  for (std::size_t i = 1; i < r; ++i)
    if (index[i].first == index[i - 1].first)
      throw Error(ErrorCode::invalid_data, "pointed s-matrix has repeated columns");
  auto find_key = [&](std::uint64_t key) -> std::size_t {
    auto it = std::lower_bound(index.begin(), index.end(), std::make_pair(key, std::size_t{0}));
    return it == index.end() || it->first != key ? r : it->second;
  };

  // Union by least element, so every root is the least member of its class.
  parent.resize(r);
  std::iota(parent.begin(), parent.end(), 0);
  times.resize(m);
  for (unsigned u : units_mod(m)) {
    if (u == 1) continue;
    for (unsigned x = 0; x < m; ++x) times[x] = static_cast<std::uint8_t>(x * u % m);
    for (std::size_t h = 0; h < r; ++h) {
      const std::uint8_t* col = &cols[h * r];
      std::uint64_t key = 0;
      for (std::size_t j = 0; j < k; ++j) key = (key << 8) | times[col[stride[j]]];
      const std::size_t z = find_key(key);
      bool match = z < r;
      const std::uint8_t* cz = match ? &cols[z * r] : nullptr;
      for (std::size_t g = 0; g < r && match; ++g) match = times[col[g]] == cz[g];
      if (!match) throw Error(ErrorCode::invalid_data, "Galois conjugate column not found");
      std::size_t x = h, y = z;
      while (parent[x] != x) x = parent[x];
      while (parent[y] != y) y = parent[y];
      if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
  }
  std::vector<std::vector<std::size_t>> out;
  slot.assign(r, r);
  for (std::size_t x = 0; x < r; ++x) {
    std::size_t y = x;
    while (parent[y] != y) y = parent[y];
    if (slot[y] == r) {
      slot[y] = out.size();
      out.emplace_back();
    }
    out[slot[y]].push_back(x);
  }
  return out;
}

FormIndependenceReport orbit_form_independence_check(const FiniteAbelianGroup& a, unsigned long bound) {
  if (a.order() > bound)
    throw Error(ErrorCode::limit_exceeded, "group order " + std::to_string(a.order()) + " exceeds bound " +
                                               std::to_string(bound));
  FormIndependenceReport rep;
  rep.group = a.to_string();
  rep.toth = cyclic_subgroup_count(a);
  const auto expected = cyclic_generator_partition(a);
  rep.orbit_count = expected.size();
  rep.bicharacters = for_each_nondegenerate_bicharacter(a, [&](const Bicharacter& b, std::size_t forms) {
    rep.forms += forms;
    if (!rep.passed) return;
    const QuadraticFormSpec q = refinement_of(a, b);
    const GaloisAction g(build_pointed(a, q));
    if (g.orbits() != expected) {
      rep.passed = false;
      rep.counterexample = "form " + q.to_string();
    }
  });
  if (rep.toth != rep.orbit_count) rep.passed = false;
  return rep;
}

FormIndependenceReport orbit_form_independence_exponent(const FiniteAbelianGroup& a) {
  FormIndependenceReport rep;
  rep.group = a.to_string();
  rep.toth = cyclic_subgroup_count(a);
  const auto expected = cyclic_generator_partition(a);
  rep.orbit_count = expected.size();
  rep.bicharacters = for_each_nondegenerate_bicharacter(a, [&](const Bicharacter& b, std::size_t forms) {
    rep.forms += forms;
    if (!rep.passed) return;
    if (pointed_orbits_exponent(a, b) != expected) {
      rep.passed = false;
      rep.counterexample = "form " + refinement_of(a, b).to_string();
    }
  });
  if (rep.toth != rep.orbit_count) rep.passed = false;
  return rep;
}

}  // namespace modgal

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

#include "cyclotomic.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

#include "arith.hpp"
#include "errors.hpp"

namespace modgal {

struct CyclotomicField {
  unsigned order = 1;
  unsigned degree = 1;
  std::vector<long> modulus;  // Phi_N, monic, size degree + 1
};

namespace {

using ZPoly = std::vector<mpz_class>;
using QPoly = std::vector<mpq_class>;

std::recursive_mutex& field_mutex() {
  static std::recursive_mutex m;
  return m;
}

std::map<unsigned, std::unique_ptr<CyclotomicField>>& field_table() {
  static std::map<unsigned, std::unique_ptr<CyclotomicField>> table;
  return table;
}

// Exact division by a monic integer polynomial; the remainder must vanish.
ZPoly divide_exact(ZPoly a, const std::vector<long>& b) {
  const std::size_t db = b.size() - 1;
  ZPoly q(a.size() - db);
  for (std::size_t m = a.size(); m-- > db;) {
    mpz_class c = a[m];
    q[m - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[m - db + j] -= c * b[j];
  }
  for (std::size_t j = 0; j < db; ++j)
    if (a[j] != 0) throw Error(ErrorCode::internal, "cyclotomic division left a remainder");
  return q;
}

const CyclotomicField& field_of(unsigned n) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "conductor must be positive");
  std::lock_guard<std::recursive_mutex> lock(field_mutex());
  auto& table = field_table();
  auto it = table.find(n);
  if (it != table.end()) return *it->second;

  ZPoly p(n + 1);
  p[0] = -1;
  p[n] = 1;
  for (unsigned d : divisors(n)) {
    if (d == n) break;
    p = divide_exact(std::move(p), field_of(d).modulus);
  }
  auto f = std::make_unique<CyclotomicField>();
  f->order = n;
  f->degree = static_cast<unsigned>(p.size() - 1);
  for (const auto& c : p) {
    if (!c.fits_slong_p()) throw Error(ErrorCode::limit_exceeded, "cyclotomic coefficient overflow");
    f->modulus.push_back(c.get_si());
  }
  const CyclotomicField& ref = *f;
  table.emplace(n, std::move(f));
  return ref;
}

void submul_long(mpz_class& acc, const mpz_class& c, long m) {
  if (m > 0)
    mpz_submul_ui(acc.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(m));
  else if (m < 0)
    mpz_addmul_ui(acc.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(-m));
}

// Reduces buf modulo Phi_N in place and truncates it to phi(N) entries.
void reduce(const CyclotomicField& f, ZPoly& buf) {
  const std::size_t d = f.degree;
  for (std::size_t m = buf.size(); m-- > d;) {
    if (sgn(buf[m]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) submul_long(buf[m - d + j], buf[m], f.modulus[j]);
    buf[m] = 0;
  }
  buf.resize(d);
}

ZPoly& scratch(std::size_t n) {
  thread_local ZPoly buf;
  if (buf.size() < n) buf.resize(n);
  for (std::size_t i = 0; i < n; ++i) mpz_set_ui(buf[i].get_mpz_t(), 0);
  return buf;
}

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, mpq_class(0));
  const mpq_class& lead = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    std::size_t shift = r.size() - b.size();
    mpq_class c = r.back() / lead;
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
    r.pop_back();
    trim(r);
  }
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

QPoly sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), mpq_class(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

unsigned default_precision() {
  if (const char* env = std::getenv("MODGAL_PRECISION")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && v >= 16 && v <= (1u << 20)) return static_cast<unsigned>(v);
  }
  return 64;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(unsigned n) { return field_of(n).modulus; }

CycNum::CycNum() : CycNum(1u) {}

CycNum::CycNum(unsigned conductor)
    : field_(&field_of(conductor)), num_(field_->degree), den_(1) {}

CycNum::CycNum(unsigned conductor, long value) : CycNum(conductor) { num_[0] = value; }

CycNum::CycNum(unsigned conductor, const mpq_class& value) : CycNum(conductor) {
  num_[0] = value.get_num();
  den_ = value.get_den();
}

CycNum CycNum::from_coefficients(unsigned conductor, const std::vector<mpq_class>& coeffs) {
  CycNum out(conductor);
  mpz_class den = 1;
  for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  ZPoly buf(std::max<std::size_t>(coeffs.size(), out.field_->degree));
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    buf[i] = coeffs[i].get_num() * (den / coeffs[i].get_den());
  reduce(*out.field_, buf);
  out.num_ = std::move(buf);
  out.den_ = den;
  out.normalize();
  return out;
}

CycNum CycNum::root_of_unity(unsigned conductor, long k) {
  CycNum out(conductor);
  const std::size_t e = static_cast<std::size_t>(mod(k, conductor));
  if (e < out.field_->degree) {
    out.num_[e] = 1;
    return out;
  }
  ZPoly buf(e + 1);
  buf[e] = 1;
  reduce(*out.field_, buf);
  out.num_ = std::move(buf);
  return out;
}

unsigned CycNum::conductor() const { return field_->order; }
unsigned CycNum::degree() const { return field_->degree; }

mpq_class CycNum::coefficient(unsigned i) const {
  if (i >= num_.size()) return 0;
  mpq_class q(num_[i], den_);
  q.canonicalize();
  return q;
}

void CycNum::normalize() {
  if (den_ == 1) return;
  if (sgn(den_) < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  mpz_class g = den_;
  for (const auto& c : num_) {
    if (g == 1) break;
    if (sgn(c) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (is_zero()) {
    den_ = 1;
    return;
  }
  if (g == 1) return;
  for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

bool CycNum::is_zero() const {
  return std::all_of(num_.begin(), num_.end(), [](const mpz_class& c) { return sgn(c) == 0; });
}

bool CycNum::is_one() const { return is_rational() && den_ == 1 && num_[0] == 1; }

bool CycNum::is_rational() const {
  return std::all_of(num_.begin() + 1, num_.end(), [](const mpz_class& c) { return sgn(c) == 0; });
}

bool CycNum::is_rational_integer() const { return den_ == 1 && is_rational(); }

std::optional<mpq_class> CycNum::rational_value() const {
  if (!is_rational()) return std::nullopt;
  mpq_class q(num_[0], den_);
  q.canonicalize();
  return q;
}

bool CycNum::is_real() const { return conj() == *this; }

static void check_same_field(const CyclotomicField* a, const CyclotomicField* b) {
  if (a != b)
    throw Error(ErrorCode::conductor_mismatch,
                "conductor mismatch: " + std::to_string(a->order) + " vs " + std::to_string(b->order));
}

CycNum& CycNum::operator+=(const CycNum& b) {
  check_same_field(field_, b.field_);
  if (den_ == b.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += b.num_[i];
  } else {
    for (std::size_t i = 0; i < num_.size(); ++i) {
      num_[i] *= b.den_;
      mpz_addmul(num_[i].get_mpz_t(), b.num_[i].get_mpz_t(), den_.get_mpz_t());
    }
    den_ *= b.den_;
  }
  normalize();
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& b) {
  check_same_field(field_, b.field_);
  if (den_ == b.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] -= b.num_[i];
  } else {
    for (std::size_t i = 0; i < num_.size(); ++i) {
      num_[i] *= b.den_;
      mpz_submul(num_[i].get_mpz_t(), b.num_[i].get_mpz_t(), den_.get_mpz_t());
    }
    den_ *= b.den_;
  }
  normalize();
  return *this;
}

CycNum& CycNum::operator*=(const CycNum& b) {
  check_same_field(field_, b.field_);
  const std::size_t d = num_.size();
  ZPoly& buf = scratch(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(num_[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j)
      if (sgn(b.num_[j]) != 0)
        mpz_addmul(buf[i + j].get_mpz_t(), num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
  }
  for (std::size_t m = 2 * d - 1; m-- > d;) {
    if (sgn(buf[m]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) submul_long(buf[m - d + j], buf[m], field_->modulus[j]);
    mpz_set_ui(buf[m].get_mpz_t(), 0);
  }
  for (std::size_t i = 0; i < d; ++i) mpz_swap(num_[i].get_mpz_t(), buf[i].get_mpz_t());
  den_ *= b.den_;
  normalize();
  return *this;
}

CycNum& CycNum::operator*=(long c) {
  for (auto& x : num_) x *= c;
  if (c == 0) den_ = 1;
  normalize();
  return *this;
}

CycNum& CycNum::operator*=(const mpq_class& c) {
  for (auto& x : num_) x *= c.get_num();
  den_ *= c.get_den();
  if (sgn(c) == 0) den_ = 1;
  normalize();
  return *this;
}

CycNum CycNum::operator-() const {
  CycNum out = *this;
  for (auto& c : out.num_) c = -c;
  return out;
}

bool operator==(const CycNum& a, const CycNum& b) {
  return a.field_ == b.field_ && a.den_ == b.den_ && a.num_ == b.num_;
}

CycNum dot(std::span<const CycNum> a, std::span<const CycNum> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::invalid_argument, "dot: length mismatch");
  if (a.empty()) return CycNum();
  const CyclotomicField* f = a[0].field_;
  bool integral = true;
  for (std::size_t k = 0; k < a.size(); ++k) {
    check_same_field(f, a[k].field_);
    check_same_field(f, b[k].field_);
    integral = integral && a[k].den_ == 1 && b[k].den_ == 1;
  }
  if (!integral) {
    CycNum acc(f->order);
    for (std::size_t k = 0; k < a.size(); ++k) acc += a[k] * b[k];
    return acc;
  }
  const std::size_t d = f->degree;
  ZPoly buf(2 * d - 1);
  for (std::size_t k = 0; k < a.size(); ++k) {
    const auto& x = a[k].num_;
    const auto& y = b[k].num_;
    for (std::size_t i = 0; i < d; ++i) {
      if (sgn(x[i]) == 0) continue;
      for (std::size_t j = 0; j < d; ++j)
        if (sgn(y[j]) != 0) mpz_addmul(buf[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
    }
  }
  reduce(*f, buf);
  CycNum out(f->order);
  out.num_ = std::move(buf);
  return out;
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw Error(ErrorCode::division_by_zero, "inverse of zero");
  if (is_rational()) {
    mpq_class q(den_, num_[0]);
    q.canonicalize();
    return CycNum(field_->order, q);
  }
  QPoly r0(field_->modulus.begin(), field_->modulus.end());
  QPoly r1(num_.begin(), num_.end());
  trim(r1);
  QPoly s0, s1{mpq_class(1)};
  QPoly q, r;
  while (!r1.empty()) {
    divmod(r0, r1, q, r);
    QPoly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    s0 = std::move(s1);
    r1 = std::move(r);
    s1 = std::move(s);
    if (!r1.empty()) {
      mpq_class lead = r1.back();
      for (auto& c : r1) c /= lead;
      for (auto& c : s1) c /= lead;
    }
  }
  if (r0.size() != 1) throw Error(ErrorCode::internal, "inverse: nontrivial gcd with Phi_N");
  for (auto& c : s0) c = c * den_ / r0[0];
  return from_coefficients(field_->order, s0);
}

CycNum CycNum::galois(long k) const {
  const unsigned n = field_->order;
  const long km = mod(k, n);
  if (std::gcd(static_cast<unsigned long>(km), static_cast<unsigned long>(n)) != 1)
    throw Error(ErrorCode::not_a_unit,
                std::to_string(k) + " is not a unit modulo " + std::to_string(n));
  if (n <= 2 || km == 1) return *this;
  ZPoly buf(n);
  for (std::size_t i = 0; i < num_.size(); ++i)
    if (sgn(num_[i]) != 0) buf[mulmod(i, static_cast<unsigned long>(km), n)] = num_[i];
  reduce(*field_, buf);
  CycNum out(n);
  out.num_ = std::move(buf);
  out.den_ = den_;
  return out;
}

CycNum CycNum::conj() const { return galois(static_cast<long>(field_->order) - 1); }

CycNum CycNum::embed(unsigned m) const {
  const unsigned n = field_->order;
  if (m == 0 || m % n != 0)
    throw Error(ErrorCode::invalid_argument,
                "cannot embed conductor " + std::to_string(n) + " into " + std::to_string(m));
  if (m == n) return *this;
  const unsigned step = m / n;
  CycNum out(m);
  ZPoly buf(std::max<std::size_t>(static_cast<std::size_t>(num_.size() - 1) * step + 1, out.field_->degree));
  for (std::size_t i = 0; i < num_.size(); ++i) buf[i * step] = num_[i];
  reduce(*out.field_, buf);
  out.num_ = std::move(buf);
  out.den_ = den_;
  return out;
}

std::optional<CycNum> CycNum::restrict_to(unsigned d) const {
  const unsigned n = field_->order;
  if (d == 0 || n % d != 0)
    throw Error(ErrorCode::invalid_argument,
                std::to_string(d) + " does not divide conductor " + std::to_string(n));
  if (d == n) return *this;
  if (auto q = rational_value()) return CycNum(d, *q);

  // Solve sum_j c_j zeta_d^j = a over Q by elimination on the columns.
  const unsigned dd = field_of(d).degree;
  const unsigned rows = field_->degree;
  std::vector<QPoly> m(rows, QPoly(dd + 1, mpq_class(0)));
  for (unsigned j = 0; j < dd; ++j) {
    CycNum b = CycNum::root_of_unity(d, j).embed(n);
    for (unsigned i = 0; i < rows; ++i) m[i][j] = b.num_[i];
  }
  for (unsigned i = 0; i < rows; ++i) m[i][dd] = mpq_class(num_[i], den_);
  unsigned row = 0;
  std::vector<unsigned> pivot_row(dd);
  for (unsigned col = 0; col < dd; ++col) {
    unsigned p = row;
    while (p < rows && m[p][col] == 0) ++p;
    if (p == rows) throw Error(ErrorCode::internal, "restrict_to: dependent basis");
    std::swap(m[p], m[row]);
    for (unsigned i = 0; i < rows; ++i) {
      if (i == row || m[i][col] == 0) continue;
      mpq_class f = m[i][col] / m[row][col];
      for (unsigned c = col; c <= dd; ++c) m[i][c] -= f * m[row][c];
    }
    pivot_row[col] = row++;
  }
  for (unsigned i = row; i < rows; ++i)
    if (m[i][dd] != 0) return std::nullopt;
  QPoly coeffs(dd);
  for (unsigned col = 0; col < dd; ++col) coeffs[col] = m[pivot_row[col]][dd] / m[pivot_row[col]][col];
  return from_coefficients(d, coeffs);
}

unsigned CycNum::minimal_conductor() const {
  for (unsigned d : divisors(field_->order))
    if (restrict_to(d)) return d;
  return field_->order;
}

std::optional<std::pair<unsigned, unsigned>> CycNum::as_root_of_unity() const {
  if (den_ != 1) return std::nullopt;
  const unsigned n = field_->order;
  std::complex<double> z = approx();
  if (std::abs(std::abs(z) - 1.0) > 1e-6) return std::nullopt;
  const double turns = std::arg(z) / (2 * std::numbers::pi);
  const long j = mod(std::lround(turns * 2.0 * n), 2L * n);
  // Candidate zeta_{2n}^j; it lies in Q(zeta_n) when j is even or n is odd.
  long e;
  bool negate = false;
  if (j % 2 == 0) {
    e = j / 2;
  } else if (n % 2 == 1) {
    e = mod((j - static_cast<long>(n)) / 2, n);
    negate = true;
  } else {
    return std::nullopt;
  }
  CycNum cand = CycNum::root_of_unity(n, e);
  if (negate) cand = -cand;
  if (cand != *this) return std::nullopt;
  const unsigned long order = 2UL * n / std::gcd(static_cast<unsigned long>(j), 2UL * n);
  const unsigned long exponent = static_cast<unsigned long>(j) / (2UL * n / order);
  return std::make_pair(static_cast<unsigned>(order), static_cast<unsigned>(exponent % order));
}

std::optional<unsigned> CycNum::root_of_unity_order() const {
  auto r = as_root_of_unity();
  if (!r) return std::nullopt;
  return r->first;
}

std::complex<double> CycNum::approx() const {
  const unsigned n = field_->order;
  std::complex<double> acc = 0;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (sgn(num_[i]) == 0) continue;
    mpq_class c(num_[i], den_);
    const double ang = 2 * std::numbers::pi * static_cast<double>(i) / n;
    acc += c.get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return acc;
}

std::size_t CycNum::hash() const {
  std::size_t h = 1469598103934665603ULL ^ field_->order;
  auto mix = [&h](std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  mix(mpz_get_ui(den_.get_mpz_t()));
  for (const auto& c : num_) mix(mpz_get_ui(c.get_mpz_t()) * 2 + (sgn(c) < 0));
  return h;
}

std::string CycNum::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (unsigned i = 0; i < num_.size(); ++i) {
    if (sgn(num_[i]) == 0) continue;
    mpq_class c = coefficient(i);
    const bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (i == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << "*";
    os << "z";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

Sign sign_of_real(const CycNum& a, unsigned precision) {
  if (!a.is_real()) throw Error(ErrorCode::not_real, "sign_of_real: argument is not real");
  if (a.is_zero()) return Sign::zero;
  if (auto q = a.rational_value()) return sgn(*q) < 0 ? Sign::negative : Sign::positive;

  const unsigned n = a.conductor();
  const auto& num = a.numerators();
  mpz_class l1 = 0;
  std::size_t maxbits = 1;
  for (const auto& c : num) {
    l1 += abs(c);
    maxbits = std::max<std::size_t>(maxbits, mpz_sizeinbase(c.get_mpz_t(), 2));
  }
  unsigned prec = precision ? precision : default_precision();
  prec = std::max<unsigned>(prec, static_cast<unsigned>(maxbits) + 16);

  for (int attempt = 0; attempt < 16; ++attempt, prec *= 2) {
    mpfr_t acc, term, angle, pi2, bound;
    mpfr_inits2(prec, acc, term, angle, pi2, bound, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_zero(acc, 1);
    mpfr_const_pi(pi2, MPFR_RNDN);
    mpfr_mul_2ui(pi2, pi2, 1, MPFR_RNDN);
    for (std::size_t i = 0; i < num.size(); ++i) {
      if (sgn(num[i]) == 0) continue;
      mpfr_mul_ui(angle, pi2, static_cast<unsigned long>(i), MPFR_RNDN);
      mpfr_div_ui(angle, angle, n, MPFR_RNDN);
      mpfr_cos(term, angle, MPFR_RNDN);
      mpfr_mul_z(term, term, num[i].get_mpz_t(), MPFR_RNDN);
      mpfr_add(acc, acc, term, MPFR_RNDN);
    }
    // Each term carries a relative error of a few ulps of 2*pi; the running
    // sum adds at most one rounding per term. (32 + 2 phi) * |a|_1 * 2^-prec
    // dominates both.
    mpfr_set_z(bound, l1.get_mpz_t(), MPFR_RNDU);
    mpfr_mul_ui(bound, bound, 32 + 2 * static_cast<unsigned long>(num.size()), MPFR_RNDU);
    mpfr_div_2ui(bound, bound, prec, MPFR_RNDU);
    mpfr_abs(term, acc, MPFR_RNDN);
    const bool certified = mpfr_cmp(term, bound) > 0;
    const int s = mpfr_sgn(acc);
    mpfr_clears(acc, term, angle, pi2, bound, static_cast<mpfr_ptr>(nullptr));
    if (certified) return s < 0 ? Sign::negative : Sign::positive;
  }
  throw Error(ErrorCode::limit_exceeded, "sign_of_real: precision limit reached");
}

const char* to_string(Sign s) {
  switch (s) {
    case Sign::negative: return "negative";
    case Sign::zero: return "zero";
    case Sign::positive: return "positive";
  }
  return "?";
}

}  // namespace modgal

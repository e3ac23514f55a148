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

#ifndef MODGAL_CYCLOTOMIC_HPP
#define MODGAL_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace modgal {

struct CyclotomicField;

// Coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<long>& cyclotomic_polynomial(unsigned n);

// An element of Q(zeta_N), stored as integer numerators over a common
// positive denominator in the power basis {zeta_N^i : 0 <= i < phi(N)}.
// The representation is always reduced modulo Phi_N, with the content of
// the numerators coprime to the denominator, so equality is coefficient
// equality.
class CycNum {
 public:
  CycNum();
  explicit CycNum(unsigned conductor);
  CycNum(unsigned conductor, long value);
  CycNum(unsigned conductor, const mpq_class& value);

  // Builds sum c_i zeta_N^i from a coefficient vector of any length.
  static CycNum from_coefficients(unsigned conductor,
                                  const std::vector<mpq_class>& coeffs);
  static CycNum root_of_unity(unsigned conductor, long k);

  unsigned conductor() const;
  unsigned degree() const;

  mpq_class coefficient(unsigned i) const;
  const std::vector<mpz_class>& numerators() const { return num_; }
  const mpz_class& denominator() const { return den_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  bool is_rational_integer() const;
  std::optional<mpq_class> rational_value() const;
  bool is_real() const;

  CycNum& operator+=(const CycNum& b);
  CycNum& operator-=(const CycNum& b);
  CycNum& operator*=(const CycNum& b);
  CycNum& operator*=(long c);
  CycNum& operator*=(const mpq_class& c);
  CycNum operator-() const;

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator*(CycNum a, long c) { return a *= c; }
  friend CycNum operator*(long c, CycNum a) { return a *= c; }
  friend CycNum operator*(CycNum a, const mpq_class& c) { return a *= c; }
  friend CycNum operator/(const CycNum& a, const CycNum& b) {
    return a * b.inverse();
  }
  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  CycNum inverse() const;
  CycNum galois(long k) const;
  CycNum conj() const;
  CycNum embed(unsigned m) const;

  // The same element written over Q(zeta_d), if it lies there.
  std::optional<CycNum> restrict_to(unsigned d) const;
  // Least d dividing N with the element in Q(zeta_d).
  unsigned minimal_conductor() const;

  std::optional<unsigned> root_of_unity_order() const;
  // (order, exponent) with the element equal to zeta_order^exponent and
  // gcd(exponent, order) = 1; empty if not a root of unity.
  std::optional<std::pair<unsigned, unsigned>> as_root_of_unity() const;

  std::complex<double> approx() const;
  std::size_t hash() const;
  std::string to_string() const;

 private:
  void normalize();
  const CyclotomicField* field_;
  std::vector<mpz_class> num_;
  mpz_class den_;

  friend CycNum dot(std::span<const CycNum> a, std::span<const CycNum> b);
};

// Free-function spellings of the core operations.
inline CycNum root_of_unity(unsigned n, long k) { return CycNum::root_of_unity(n, k); }
inline CycNum inverse(const CycNum& a) { return a.inverse(); }
inline CycNum galois_apply(const CycNum& a, long k) { return a.galois(k); }
inline CycNum conjugate(const CycNum& a) { return a.conj(); }
inline CycNum embed(const CycNum& a, unsigned m) { return a.embed(m); }
inline bool is_rational_integer(const CycNum& a) { return a.is_rational_integer(); }
inline std::optional<unsigned> root_of_unity_order(const CycNum& a) {
  return a.root_of_unity_order();
}

// sum a_i b_i, with a single reduction when all denominators are 1.
CycNum dot(std::span<const CycNum> a, std::span<const CycNum> b);

enum class Sign { negative = -1, zero = 0, positive = 1 };

// Certified sign of a real element. Starts at `precision` bits (0 means
// the MODGAL_PRECISION environment variable, else 64) and doubles until the
// error bound excludes zero.
Sign sign_of_real(const CycNum& a, unsigned precision = 0);

const char* to_string(Sign s);

}  // namespace modgal

template <>
struct std::hash<modgal::CycNum> {
  std::size_t operator()(const modgal::CycNum& a) const { return a.hash(); }
};

#endif

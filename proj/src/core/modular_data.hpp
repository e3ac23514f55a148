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

#ifndef MODGAL_MODULAR_DATA_HPP
#define MODGAL_MODULAR_DATA_HPP

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cyclotomic.hpp"

namespace modgal {

class CycMatrix {
 public:
  CycMatrix() = default;
  CycMatrix(std::size_t rows, std::size_t cols, unsigned conductor);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  CycNum& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const CycNum& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const CycNum> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  CycMatrix transpose() const;
  std::vector<std::complex<double>> approx() const;

  friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b);
  friend bool operator==(const CycMatrix& a, const CycMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<CycNum> data_;
};

// Modular data (s, t) over Q(zeta_N), N the order of t. The unit object is
// always index 0; the constructor moves a different unit_index there.
// Construction only checks shapes; use validate() for the algebraic contract.
class ModularData {
 public:
  ModularData(unsigned conductor, std::vector<std::string> labels, CycMatrix s,
              std::vector<long> t, std::size_t unit_index = 0);

  unsigned conductor() const { return conductor_; }
  std::size_t rank() const { return t_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const CycMatrix& s() const { return s_; }
  const CycNum& s(std::size_t i, std::size_t j) const { return s_(i, j); }
  const std::vector<long>& t() const { return t_; }
  long t(std::size_t i) const { return t_[i]; }
  CycNum twist(std::size_t i) const { return CycNum::root_of_unity(conductor_, t_[i]); }
  const CycNum& dim(std::size_t i) const { return s_(0, i); }

  // New index i is old index order[i]; order[0] must be 0.
  ModularData permuted(const std::vector<std::size_t>& order) const;
  // sigma_k applied entrywise to s and t.
  ModularData galois_conjugate(long k) const;
  ModularData relabeled(std::vector<std::string> labels) const;

 private:
  unsigned conductor_;
  std::vector<std::string> labels_;
  CycMatrix s_;
  std::vector<long> t_;
};

struct ValidationIssue {
  std::string check;
  std::string message;
  std::vector<std::size_t> indices;
};

struct ValidationReport {
  std::vector<std::string> checks;  // checks that ran, in order
  std::vector<std::string> skipped;
  std::vector<ValidationIssue> issues;
  bool passed() const { return issues.empty() && skipped.empty(); }
};

ValidationReport validate(const ModularData& m);

CycNum global_dim(const ModularData& m);
CycNum tau(const ModularData& m);
CycNum central_charge_squared(const ModularData& m);
std::complex<double> central_charge_approx(const ModularData& m);

struct FusionTable {
  std::size_t rank = 0;
  std::vector<int> coeff;  // N_{xy}^z at (x * rank + y) * rank + z
  std::vector<std::size_t> dual;

  int operator()(std::size_t x, std::size_t y, std::size_t z) const {
    return coeff[(x * rank + y) * rank + z];
  }
  bool is_associative() const;
  friend bool operator==(const FusionTable&, const FusionTable&) = default;
};

FusionTable verlinde(const ModularData& m);

// Permutation C with s^2 = dim(C) * C, if s^2 has that shape.
std::optional<std::vector<std::size_t>> charge_conjugation(const ModularData& m);

struct FpDims {
  std::size_t column = 0;
  std::vector<CycNum> values;
};

FpDims fp_dims(const ModularData& m, const FusionTable& fusion);
FpDims fp_dims(const ModularData& m);

ModularData deligne_product(const ModularData& a, const ModularData& b);

// The data restricted to `members` (which must contain 0), written over the
// conductor of the restricted t. Meaningful when the members form a modular
// subcategory; the caller validates.
ModularData restrict_to_subset(const ModularData& m, const std::vector<std::size_t>& members);

}  // namespace modgal

#endif

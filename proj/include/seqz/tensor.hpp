// Copyright 2026 The seqz Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SEQZ_TENSOR_HPP
#define SEQZ_TENSOR_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "seqz/sign.hpp"

namespace seqz {

/// Digits (k_{n-1}, ..., k_0) with per-digit radices (q_{n-1}, ..., q_0),
/// most significant first. value() = sum_r k_r * prod_{s<r} q_s.
class MixedRadixIndex {
 public:
  MixedRadixIndex(std::vector<std::size_t> digits_msd_first,
                  std::vector<std::size_t> radices_msd_first);
  /// n digits in a uniform base q.
  static MixedRadixIndex uniform(std::vector<std::size_t> digits_msd_first,
                                 std::size_t base);
  static MixedRadixIndex from_value(std::uint64_t value,
                                    std::vector<std::size_t> radices_msd_first);

  std::size_t digit_count() const noexcept { return digits_.size(); }
  /// k_r, r = 0 is the least significant digit.
  std::size_t digit(std::size_t r) const { return digits_.at(digits_.size() - 1 - r); }
  std::size_t radix(std::size_t r) const { return radices_.at(radices_.size() - 1 - r); }
  const std::vector<std::size_t>& digits() const noexcept { return digits_; }
  const std::vector<std::size_t>& radices() const noexcept { return radices_; }
  std::uint64_t value() const noexcept { return value_; }

 private:
  std::vector<std::size_t> digits_;
  std::vector<std::size_t> radices_;
  std::uint64_t value_ = 0;
};

/// Per-column sequency S_k and boundary flip p_k of one factor.
class FactorSummary {
 public:
  explicit FactorSummary(const SignMatrix& a);
  FactorSummary(std::vector<std::size_t> sequencies, std::vector<int> flips);

  std::size_t size() const noexcept { return sequencies_.size(); }
  std::size_t sequency(std::size_t k) const { return sequencies_.at(k); }
  int flip(std::size_t k) const { return flips_.at(k); }
  const std::vector<std::size_t>& sequencies() const noexcept { return sequencies_; }
  const std::vector<int>& flips() const noexcept { return flips_; }

 private:
  std::vector<std::size_t> sequencies_;
  std::vector<int> flips_;
};

/// (q1 q0) x (q1 q0) matrix with element (q0 i1 + i0, q0 k1 + k0) equal to
/// A(i1, k1) * B(i0, k0).
SignMatrix kronecker(const SignMatrix& a, const SignMatrix& b);

/// Kronecker power a^{(x)n}, n >= 1.
SignMatrix kronecker_power(const SignMatrix& a, std::size_t n);

/// Column `index` of factors[0] (x) factors[1] (x) ... without materializing
/// the product. The index digits are (column of factors[0], ..., column of
/// factors.back()), most significant first.
SignVector kronecker_column(std::span<const SignMatrix> factors,
                            const MixedRadixIndex& index);

/// Sequency of column q0 k1 + k0 of A (x) B:
///   q1 S_B(k0) + (q1 - 1) p_B(k0) + (-1)^{p_B(k0)} S_A(k1).
/// Both factors need q >= 2.
std::size_t predict_pair(const FactorSummary& a, const FactorSummary& b,
                         std::size_t k1, std::size_t k0);

/// predict_pair(a, a, k1, k0).
std::size_t predict_pair_special(const FactorSummary& a, std::size_t k1,
                                 std::size_t k0);

/// Sequency of column `index` of A^{(x)n}, n = index.digit_count():
///   sum_r (-1)^{p(k_0) + ... + p(k_{r-1})}
///         (q^{n-1-r} S(k_r) + (q^{n-1-r} - 1) p(k_r)).
/// Runs in O(n) without expanding the power.
std::uint64_t predict_nfold(const FactorSummary& a, const MixedRadixIndex& index);

/// Summary of A (x) B computed from the factor summaries alone.
FactorSummary compose(const FactorSummary& a, const FactorSummary& b);

/// Sequency of column j of A (x) A for the 5 x 5 sequency-ordered A, as the
/// piecewise closed form in j mod 5. j <= 24.
std::size_t mod_residue_profile_5(std::size_t j);

}  // namespace seqz

#endif  // SEQZ_TENSOR_HPP

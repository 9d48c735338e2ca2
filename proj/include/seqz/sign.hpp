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

#ifndef SEQZ_SIGN_HPP
#define SEQZ_SIGN_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace seqz {

/// Raised for structurally invalid input: wrong entries, wrong shape,
/// out-of-range indices, unsupported sizes.
class Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A finite sequence over {+1, -1}.
///
/// Entries are packed one bit per sign (bit clear <-> +1, bit set <-> -1), so
/// counting sign changes reduces to a popcount of the adjacent XOR. Bits past
/// size() are always zero.
class SignVector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  /// All +1 vector of the given length (length >= 1).
  explicit SignVector(std::size_t length);
  SignVector(std::initializer_list<int> signs);
  explicit SignVector(std::span<const int> signs);

  /// Builds a vector from the low `length` bits of `bits`; bit k set means
  /// entry k is -1. Requires 1 <= length <= 64.
  static SignVector from_bits(Word bits, std::size_t length);

  std::size_t size() const noexcept { return size_; }

  /// +1 or -1.
  int operator[](std::size_t k) const noexcept {
    return is_negative(k) ? -1 : 1;
  }
  int at(std::size_t k) const;
  bool is_negative(std::size_t k) const noexcept {
    return (words_[k / kWordBits] >> (k % kWordBits)) & 1U;
  }

  void set(std::size_t k, int sign);
  void set_negative(std::size_t k, bool negative) noexcept;

  SignVector negated() const;
  SignVector reversed() const;
  /// Entries [first, first + length).
  SignVector slice(std::size_t first, std::size_t length) const;

  std::span<const Word> words() const noexcept { return words_; }
  std::vector<int> to_ints() const;

  friend bool operator==(const SignVector&, const SignVector&) = default;

 private:
  SignVector(std::size_t length, std::vector<Word> words);
  void clear_tail() noexcept;

  std::vector<Word> words_;
  std::size_t size_ = 0;
};

/// Per-column sequencies of a matrix whose columns have length
/// `column_length`.
class SequencyProfile {
 public:
  SequencyProfile() = default;
  SequencyProfile(std::vector<std::size_t> values, std::size_t column_length);

  const std::vector<std::size_t>& values() const noexcept { return values_; }
  std::size_t column_length() const noexcept { return column_length_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::size_t operator[](std::size_t j) const noexcept { return values_[j]; }

  friend bool operator==(const SequencyProfile& a, const SequencyProfile& b) {
    return a.values_ == b.values_;
  }
  friend bool operator==(const SequencyProfile& a,
                         const std::vector<std::size_t>& b) {
    return a.values_ == b;
  }

 private:
  std::vector<std::size_t> values_;
  std::size_t column_length_ = 0;
};

/// Square matrix over {+1, -1}, stored column-major as SignVectors.
/// Element (i, j) is row i, column j, both 0-indexed.
class SignMatrix {
 public:
  /// All +1 matrix of order n >= 1.
  explicit SignMatrix(std::size_t n);
  /// Every column must have length columns.size().
  explicit SignMatrix(std::vector<SignVector> columns);

  /// Row-major list of rows; rejects ragged, non-square or non +-1 input.
  static SignMatrix from_rows(const std::vector<std::vector<int>>& rows);

  /// Fills element (i, j) with `negative(i, j) ? -1 : +1`.
  template <typename Pred>
  static SignMatrix from_predicate(std::size_t n, Pred&& negative) {
    SignMatrix m(n);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        if (negative(i, j)) m.columns_[j].set_negative(i, true);
      }
    }
    return m;
  }

  std::size_t size() const noexcept { return columns_.size(); }
  int operator()(std::size_t i, std::size_t j) const noexcept {
    return columns_[j][i];
  }
  int at(std::size_t i, std::size_t j) const;
  const SignVector& column(std::size_t j) const { return columns_.at(j); }
  const std::vector<SignVector>& columns() const noexcept { return columns_; }

  std::vector<std::vector<int>> to_rows() const;

  friend bool operator==(const SignMatrix&, const SignMatrix&) = default;

 private:
  std::vector<SignVector> columns_;
};

/// Number of adjacent sign changes; 0 for a length-1 vector.
std::size_t sequency(const SignVector& v) noexcept;

/// Indicator of adjacent differences: entry k is 1 iff v[k] != v[k+1].
/// Rejects length-1 input ("degenerate length").
std::vector<std::uint8_t> derived_sequence(const SignVector& v);

/// 1 if the first and last entries differ, else 0.
int boundary_flip(const SignVector& v) noexcept;

/// Number of positions where a and b differ. Lengths must match.
std::size_t hamming_distance(const SignVector& a, const SignVector& b);

/// Element-wise sign of a real square matrix given as rows. Zero maps to +1;
/// NaN and infinities are rejected ("non-finite entry").
SignMatrix project_signs(const std::vector<std::vector<double>>& rows);

SequencyProfile profile(const SignMatrix& a);

/// Column j of the result is column perm[j] of `a`.
SignMatrix permute_columns(const SignMatrix& a,
                           std::span<const std::size_t> perm);
SignMatrix negate_column(const SignMatrix& a, std::size_t j);

/// True when A^T A = n I.
bool is_hadamard(const SignMatrix& a);

}  // namespace seqz

#endif  // SEQZ_SIGN_HPP

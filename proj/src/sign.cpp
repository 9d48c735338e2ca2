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

#include "seqz/sign.hpp"

#include <bit>
#include <cmath>
#include <numeric>

namespace seqz {

namespace {

std::size_t word_count(std::size_t length) {
  return (length + SignVector::kWordBits - 1) / SignVector::kWordBits;
}

void require_length(std::size_t length) {
  if (length == 0) throw Error("sign vector length must be at least 1");
}

bool negative_from_int(int sign) {
  if (sign == 1) return false;
  if (sign == -1) return true;
  throw Error("sign entry must be +1 or -1, got " + std::to_string(sign));
}

}  // namespace

SignVector::SignVector(std::size_t length)
    : words_(word_count(length), 0), size_(length) {
  require_length(length);
}

SignVector::SignVector(std::initializer_list<int> signs)
    : SignVector(std::span<const int>(signs.begin(), signs.size())) {}

SignVector::SignVector(std::span<const int> signs)
    : words_(word_count(signs.size()), 0), size_(signs.size()) {
  require_length(size_);
  for (std::size_t k = 0; k < size_; ++k) {
    set_negative(k, negative_from_int(signs[k]));
  }
}

SignVector::SignVector(std::size_t length, std::vector<Word> words)
    : words_(std::move(words)), size_(length) {
  clear_tail();
}

SignVector SignVector::from_bits(Word bits, std::size_t length) {
  require_length(length);
  if (length > kWordBits) throw Error("from_bits supports at most 64 entries");
  return SignVector(length, std::vector<Word>{bits});
}

int SignVector::at(std::size_t k) const {
  if (k >= size_) throw Error("sign vector index out of range");
  return (*this)[k];
}

void SignVector::set(std::size_t k, int sign) {
  if (k >= size_) throw Error("sign vector index out of range");
  set_negative(k, negative_from_int(sign));
}

void SignVector::set_negative(std::size_t k, bool negative) noexcept {
  const Word mask = Word{1} << (k % kWordBits);
  if (negative) {
    words_[k / kWordBits] |= mask;
  } else {
    words_[k / kWordBits] &= ~mask;
  }
}

SignVector SignVector::negated() const {
  std::vector<Word> flipped(words_);
  for (auto& w : flipped) w = ~w;
  return SignVector(size_, std::move(flipped));
}

SignVector SignVector::reversed() const {
  SignVector out(size_);
  for (std::size_t k = 0; k < size_; ++k) {
    out.set_negative(size_ - 1 - k, is_negative(k));
  }
  return out;
}

SignVector SignVector::slice(std::size_t first, std::size_t length) const {
  if (length == 0 || first + length > size_) {
    throw Error("sign vector slice out of range");
  }
  SignVector out(length);
  for (std::size_t k = 0; k < length; ++k) {
    out.set_negative(k, is_negative(first + k));
  }
  return out;
}

std::vector<int> SignVector::to_ints() const {
  std::vector<int> out(size_);
  for (std::size_t k = 0; k < size_; ++k) out[k] = (*this)[k];
  return out;
}

void SignVector::clear_tail() noexcept {
  const std::size_t used = size_ % kWordBits;
  if (used != 0) words_.back() &= (Word{1} << used) - 1;
}

SequencyProfile::SequencyProfile(std::vector<std::size_t> values,
                                 std::size_t column_length)
    : values_(std::move(values)), column_length_(column_length) {
  for (auto v : values_) {
    if (column_length_ == 0 || v > column_length_ - 1) {
      throw Error("sequency value exceeds column length - 1");
    }
  }
}

SignMatrix::SignMatrix(std::size_t n) {
  if (n == 0) throw Error("matrix order must be at least 1");
  columns_.assign(n, SignVector(n));
}

SignMatrix::SignMatrix(std::vector<SignVector> columns)
    : columns_(std::move(columns)) {
  if (columns_.empty()) throw Error("matrix order must be at least 1");
  for (const auto& c : columns_) {
    if (c.size() != columns_.size()) {
      throw Error("matrix must be square: column length " +
                  std::to_string(c.size()) + " vs " +
                  std::to_string(columns_.size()) + " columns");
    }
  }
}

SignMatrix SignMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) throw Error("matrix order must be at least 1");
  for (const auto& r : rows) {
    if (r.size() != n) throw Error("matrix must be square");
  }
  SignMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m.columns_[j].set_negative(i, negative_from_int(rows[i][j]));
    }
  }
  return m;
}

int SignMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= size() || j >= size()) throw Error("matrix index out of range");
  return (*this)(i, j);
}

std::vector<std::vector<int>> SignMatrix::to_rows() const {
  const std::size_t n = size();
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = (*this)(i, j);
  }
  return rows;
}

std::size_t sequency(const SignVector& v) noexcept {
  using Word = SignVector::Word;
  constexpr std::size_t bits = SignVector::kWordBits;
  const auto words = v.words();
  // Transition k compares entries k and k+1, valid for k <= size - 2.
  const std::size_t transitions = v.size() - 1;
  std::size_t count = 0;
  for (std::size_t w = 0; w < words.size() && w * bits < transitions; ++w) {
    const Word carry = (w + 1 < words.size()) ? (words[w + 1] & 1U) : 0;
    const Word diff = words[w] ^ ((words[w] >> 1) | (carry << (bits - 1)));
    const std::size_t valid = transitions - w * bits;
    const Word mask = valid >= bits ? ~Word{0} : ((Word{1} << valid) - 1);
    count += static_cast<std::size_t>(std::popcount(diff & mask));
  }
  return count;
}

std::vector<std::uint8_t> derived_sequence(const SignVector& v) {
  if (v.size() < 2) throw Error("degenerate length: derived sequence needs at least 2 entries");
  std::vector<std::uint8_t> out(v.size() - 1);
  for (std::size_t k = 0; k + 1 < v.size(); ++k) {
    out[k] = v.is_negative(k) != v.is_negative(k + 1) ? 1 : 0;
  }
  return out;
}

int boundary_flip(const SignVector& v) noexcept {
  return v.is_negative(0) != v.is_negative(v.size() - 1) ? 1 : 0;
}

std::size_t hamming_distance(const SignVector& a, const SignVector& b) {
  if (a.size() != b.size()) throw Error("hamming distance needs equal lengths");
  std::size_t d = 0;
  const auto wa = a.words();
  const auto wb = b.words();
  for (std::size_t w = 0; w < wa.size(); ++w) {
    d += static_cast<std::size_t>(std::popcount(wa[w] ^ wb[w]));
  }
  return d;
}

SignMatrix project_signs(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) throw Error("matrix order must be at least 1");
  for (const auto& r : rows) {
    if (r.size() != n) throw Error("matrix must be square");
    for (double x : r) {
      if (!std::isfinite(x)) throw Error("non-finite entry in real matrix");
    }
  }
  return SignMatrix::from_predicate(
      n, [&](std::size_t i, std::size_t j) { return rows[i][j] < 0.0; });
}

SequencyProfile profile(const SignMatrix& a) {
  std::vector<std::size_t> values(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) values[j] = sequency(a.column(j));
  return SequencyProfile(std::move(values), a.size());
}

SignMatrix permute_columns(const SignMatrix& a,
                           std::span<const std::size_t> perm) {
  const std::size_t n = a.size();
  if (perm.size() != n) throw Error("permutation length must equal matrix order");
  std::vector<bool> seen(n, false);
  std::vector<SignVector> cols;
  cols.reserve(n);
  for (auto p : perm) {
    if (p >= n || seen[p]) throw Error("not a permutation");
    seen[p] = true;
    cols.push_back(a.column(p));
  }
  return SignMatrix(std::move(cols));
}

SignMatrix negate_column(const SignMatrix& a, std::size_t j) {
  if (j >= a.size()) throw Error("column index out of range");
  std::vector<SignVector> cols = a.columns();
  cols[j] = cols[j].negated();
  return SignMatrix(std::move(cols));
}

bool is_hadamard(const SignMatrix& a) {
  const std::size_t n = a.size();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      // Inner product is n - 2 * (number of disagreeing entries).
      if (2 * hamming_distance(a.column(j), a.column(k)) != n) return false;
    }
  }
  return true;
}

}  // namespace seqz

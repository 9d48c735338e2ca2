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

#include "seqz/tensor.hpp"

#include <limits>
#include <string>

namespace seqz {

namespace {

constexpr std::uint64_t kIndexLimit = std::uint64_t{1} << 62;

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kIndexLimit / a) throw Error("mixed-radix index overflows 62 bits");
  return a * b;
}

void require_factor_order(const FactorSummary& f) {
  if (f.size() < 2) throw Error("tensor prediction needs factor order q >= 2");
}

}  // namespace

MixedRadixIndex::MixedRadixIndex(std::vector<std::size_t> digits_msd_first,
                                 std::vector<std::size_t> radices_msd_first)
    : digits_(std::move(digits_msd_first)), radices_(std::move(radices_msd_first)) {
  if (digits_.empty()) throw Error("mixed-radix index needs at least one digit");
  if (digits_.size() != radices_.size()) throw Error("digit and radix counts differ");
  std::uint64_t place = 1;
  for (std::size_t r = 0; r < digits_.size(); ++r) {
    const std::size_t k = digit(r);
    const std::size_t q = radix(r);
    if (q == 0) throw Error("radix must be positive");
    if (k >= q) {
      throw Error("digit " + std::to_string(k) + " out of range for base " + std::to_string(q));
    }
    value_ += checked_mul(place, k);
    place = checked_mul(place, q);
  }
}

MixedRadixIndex MixedRadixIndex::uniform(std::vector<std::size_t> digits_msd_first,
                                         std::size_t base) {
  std::vector<std::size_t> radices(digits_msd_first.size(), base);
  return MixedRadixIndex(std::move(digits_msd_first), std::move(radices));
}

MixedRadixIndex MixedRadixIndex::from_value(std::uint64_t value,
                                            std::vector<std::size_t> radices_msd_first) {
  std::vector<std::size_t> digits(radices_msd_first.size());
  std::uint64_t rest = value;
  for (std::size_t pos = radices_msd_first.size(); pos-- > 0;) {
    const std::size_t q = radices_msd_first[pos];
    if (q == 0) throw Error("radix must be positive");
    digits[pos] = static_cast<std::size_t>(rest % q);
    rest /= q;
  }
  if (rest != 0) throw Error("value out of range for the given radices");
  return MixedRadixIndex(std::move(digits), std::move(radices_msd_first));
}

FactorSummary::FactorSummary(const SignMatrix& a) {
  sequencies_.reserve(a.size());
  flips_.reserve(a.size());
  for (const auto& col : a.columns()) {
    sequencies_.push_back(seqz::sequency(col));
    flips_.push_back(boundary_flip(col));
  }
}

FactorSummary::FactorSummary(std::vector<std::size_t> sequencies, std::vector<int> flips)
    : sequencies_(std::move(sequencies)), flips_(std::move(flips)) {
  if (sequencies_.empty()) throw Error("factor summary needs at least one column");
  if (sequencies_.size() != flips_.size()) throw Error("sequency and flip counts differ");
  for (std::size_t k = 0; k < size(); ++k) {
    if (sequencies_[k] > size() - 1) throw Error("sequency exceeds q - 1");
    if (flips_[k] != 0 && flips_[k] != 1) throw Error("boundary flip must be 0 or 1");
  }
}

SignMatrix kronecker(const SignMatrix& a, const SignMatrix& b) {
  const std::size_t q1 = a.size();
  const std::size_t q0 = b.size();
  return SignMatrix::from_predicate(q1 * q0, [&](std::size_t i, std::size_t k) {
    return a(i / q0, k / q0) * b(i % q0, k % q0) < 0;
  });
}

SignMatrix kronecker_power(const SignMatrix& a, std::size_t n) {
  if (n == 0) throw Error("Kronecker power needs n >= 1");
  SignMatrix out = a;
  for (std::size_t r = 1; r < n; ++r) out = kronecker(out, a);
  return out;
}

SignVector kronecker_column(std::span<const SignMatrix> factors,
                            const MixedRadixIndex& index) {
  if (factors.size() != index.digit_count()) {
    throw Error("index digit count must equal the number of factors");
  }
  const std::size_t count = factors.size();
  std::uint64_t length = 1;
  for (std::size_t f = 0; f < count; ++f) {
    if (index.radices()[f] != factors[f].size()) {
      throw Error("index radix does not match factor order");
    }
    length = checked_mul(length, factors[f].size());
  }
  // Fold left to right: the product column is the Kronecker product of the
  // selected factor columns.
  SignVector out = factors[0].column(index.digits()[0]);
  for (std::size_t f = 1; f < count; ++f) {
    const SignVector& c = factors[f].column(index.digits()[f]);
    const std::size_t q = c.size();
    SignVector next(out.size() * q);
    for (std::size_t i = 0; i < out.size(); ++i) {
      const bool high = out.is_negative(i);
      for (std::size_t r = 0; r < q; ++r) next.set_negative(i * q + r, high != c.is_negative(r));
    }
    out = std::move(next);
  }
  return out;
}

std::size_t predict_pair(const FactorSummary& a, const FactorSummary& b,
                         std::size_t k1, std::size_t k0) {
  require_factor_order(a);
  require_factor_order(b);
  if (k1 >= a.size() || k0 >= b.size()) throw Error("column index out of range");
  const std::size_t q1 = a.size();
  const int p = b.flip(k0);
  const std::size_t base = q1 * b.sequency(k0) + (q1 - 1) * static_cast<std::size_t>(p);
  // With p = 1 the S_A term is subtracted; base >= q1 - 1 >= S_A(k1) then.
  return p == 0 ? base + a.sequency(k1) : base - a.sequency(k1);
}

std::size_t predict_pair_special(const FactorSummary& a, std::size_t k1, std::size_t k0) {
  return predict_pair(a, a, k1, k0);
}

std::uint64_t predict_nfold(const FactorSummary& a, const MixedRadixIndex& index) {
  require_factor_order(a);
  const std::size_t q = a.size();
  const std::size_t n = index.digit_count();
  for (std::size_t r = 0; r < n; ++r) {
    if (index.radix(r) != q) throw Error("index base must equal the factor order");
  }
  // place[r] = q^{n-1-r}; q^n itself is bounded by the index constructor.
  std::vector<std::uint64_t> place(n, 1);
  for (std::size_t r = n - 1; r-- > 0;) place[r] = place[r + 1] * q;

  // The signed sum nests as t_0 + (-1)^{p(k_0)} (t_1 + (-1)^{p(k_1)} (...)).
  // Each bracket is the sequency of a column of a smaller power, so it stays
  // in [0, q^{n-r}) and the subtraction never underflows.
  std::uint64_t inner = 0;
  for (std::size_t r = n; r-- > 0;) {
    const std::size_t k = index.digit(r);
    const auto p = static_cast<std::uint64_t>(a.flip(k));
    const std::uint64_t term = place[r] * a.sequency(k) + (place[r] - 1) * p;
    inner = p == 0 ? term + inner : term - inner;
  }
  return inner;
}

FactorSummary compose(const FactorSummary& a, const FactorSummary& b) {
  require_factor_order(a);
  require_factor_order(b);
  const std::size_t q1 = a.size();
  const std::size_t q0 = b.size();
  std::vector<std::size_t> seq(q1 * q0);
  std::vector<int> flips(q1 * q0);
  for (std::size_t k1 = 0; k1 < q1; ++k1) {
    for (std::size_t k0 = 0; k0 < q0; ++k0) {
      seq[q0 * k1 + k0] = predict_pair(a, b, k1, k0);
      // First and last rows of the product column are products of the
      // factors' first and last rows.
      flips[q0 * k1 + k0] = a.flip(k1) ^ b.flip(k0);
    }
  }
  return FactorSummary(std::move(seq), std::move(flips));
}

std::size_t mod_residue_profile_5(std::size_t j) {
  if (j > 24) throw Error("column index must be at most 24");
  switch (j % 5) {
    case 0: return j / 5;
    case 1: return 9 - (j - 1) / 5;
    case 2: return 10 + (j - 2) / 5;
    case 3: return 19 - (j - 3) / 5;
    default: return 20 + (j - 4) / 5;
  }
}

}  // namespace seqz

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

#ifndef SEQZ_GENERATORS_HPP
#define SEQZ_GENERATORS_HPP

#include <cstddef>
#include <optional>
#include <string_view>

#include "seqz/sign.hpp"

namespace seqz {

enum class GeneratorKind {
  power_residue,
  threshold,
  ordered_threshold,
  walsh_natural,
  walsh_sequency,
};

/// CLI name, e.g. "ordered-threshold".
std::string_view name(GeneratorKind kind) noexcept;
std::optional<GeneratorKind> parse_generator_kind(std::string_view name) noexcept;

/// Checks the size constraint of `kind` and builds the matrix.
SignMatrix generate(GeneratorKind kind, std::size_t n);

/// A(i, j) = (-1)^(ij mod n). n >= 2.
SignMatrix power_residue(std::size_t n);

/// Closed-form profile of power_residue(n):
///   n odd:  S_0 = 0, S_j = j - 1 for even j, S_j = n - j for odd j;
///   n even: S_j = 0 for even j, n - 1 for odd j.
SequencyProfile power_residue_profile(std::size_t n);

/// Sign changes in rows 0..i of column j of power_residue(n), in closed form.
/// Requires j < n and 0 < i < n.
std::size_t prefix_sign_changes(std::size_t n, std::size_t j, std::size_t i);

/// A(i, j) = +1 iff (ij mod n) < ceil(n / 2). Sequency-complete for n >= 2.
SignMatrix threshold(std::size_t n);

/// Closed-form profile of threshold(n): 0, then 2j - 1 up to floor(n/2), then
/// 2(n - j).
SequencyProfile threshold_profile(std::size_t n);

/// Sequency-ordered matrix of order n >= 2. With p = i(j + 1) and
/// u = floor(p / 2) mod n, the entry is +1 iff
///   n = 2m:                u <= m - 1;
///   n = 2m + 1, p odd:     u <= m - 1;
///   n = 2m + 1, p even:    u <= m.
SignMatrix ordered_threshold(std::size_t n);

/// Kronecker power of [[1, 1], [1, -1]]; N must be a power of two.
SignMatrix walsh_natural(std::size_t n);

/// Column k holds the Walsh function W_k sampled at x_i = (i + 1/2) / N.
SignMatrix walsh_sequency(std::size_t n);

/// W_k(x) at x = numerator / denominator from the sequency-order recursion;
/// returns 1, -1, or 0 outside [0, 1]. denominator must be positive.
int walsh_function(std::size_t k, long long numerator, long long denominator);

bool is_power_of_two(std::size_t n) noexcept;

}  // namespace seqz

#endif  // SEQZ_GENERATORS_HPP

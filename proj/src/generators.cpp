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

#include "seqz/generators.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace seqz {

namespace {

constexpr std::array<std::pair<GeneratorKind, std::string_view>, 5> kNames{{
    {GeneratorKind::power_residue, "power-residue"},
    {GeneratorKind::threshold, "threshold"},
    {GeneratorKind::ordered_threshold, "ordered-threshold"},
    {GeneratorKind::walsh_natural, "walsh-natural"},
    {GeneratorKind::walsh_sequency, "walsh-sequency"},
}};

void require_order_at_least_two(std::size_t n) {
  if (n < 2) throw Error("matrix order must be at least 2, got " + std::to_string(n));
}

void require_power_of_two(std::size_t n) {
  if (!is_power_of_two(n)) {
    throw Error("Walsh matrix order must be a power of two, got " + std::to_string(n));
  }
}

}  // namespace

std::string_view name(GeneratorKind kind) noexcept {
  for (const auto& [k, s] : kNames) {
    if (k == kind) return s;
  }
  return "unknown";
}

std::optional<GeneratorKind> parse_generator_kind(std::string_view s) noexcept {
  for (const auto& [k, n] : kNames) {
    if (n == s) return k;
  }
  return std::nullopt;
}

bool is_power_of_two(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

SignMatrix generate(GeneratorKind kind, std::size_t n) {
  switch (kind) {
    case GeneratorKind::power_residue: return power_residue(n);
    case GeneratorKind::threshold: return threshold(n);
    case GeneratorKind::ordered_threshold: return ordered_threshold(n);
    case GeneratorKind::walsh_natural: return walsh_natural(n);
    case GeneratorKind::walsh_sequency: return walsh_sequency(n);
  }
  throw Error("unknown generator kind");
}

SignMatrix power_residue(std::size_t n) {
  require_order_at_least_two(n);
  return SignMatrix::from_predicate(
      n, [n](std::size_t i, std::size_t j) { return ((i * j) % n) % 2 == 1; });
}

SequencyProfile power_residue_profile(std::size_t n) {
  require_order_at_least_two(n);
  std::vector<std::size_t> s(n, 0);
  for (std::size_t j = 1; j < n; ++j) {
    if (n % 2 == 1) {
      s[j] = (j % 2 == 0) ? j - 1 : n - j;
    } else {
      s[j] = (j % 2 == 0) ? 0 : n - 1;
    }
  }
  return SequencyProfile(std::move(s), n);
}

std::size_t prefix_sign_changes(std::size_t n, std::size_t j, std::size_t i) {
  require_order_at_least_two(n);
  if (j >= n) throw Error("column index out of range");
  if (i == 0 || i >= n) throw Error("row index must satisfy 0 < i < n");
  if (n % 2 == 0) return (j % 2 == 0) ? 0 : i;
  const std::size_t q = (i * j) / n;
  return (j % 2 == 0) ? q : i - q;
}

SignMatrix threshold(std::size_t n) {
  require_order_at_least_two(n);
  const std::size_t half_up = (n + 1) / 2;
  return SignMatrix::from_predicate(
      n, [=](std::size_t i, std::size_t j) { return (i * j) % n >= half_up; });
}

SequencyProfile threshold_profile(std::size_t n) {
  require_order_at_least_two(n);
  std::vector<std::size_t> s(n, 0);
  for (std::size_t j = 1; j < n; ++j) {
    s[j] = (j <= n / 2) ? 2 * j - 1 : 2 * (n - j);
  }
  return SequencyProfile(std::move(s), n);
}

SignMatrix ordered_threshold(std::size_t n) {
  require_order_at_least_two(n);
  const std::size_t m = n / 2;
  const bool odd_order = n % 2 == 1;
  return SignMatrix::from_predicate(n, [=](std::size_t i, std::size_t j) {
    const std::size_t p = i * (j + 1);
    const std::size_t u = (p / 2) % n;
    // Odd orders get the wider window only when p is even.
    const std::size_t limit = (odd_order && p % 2 == 0) ? m : m - 1;
    return u > limit;
  });
}

SignMatrix walsh_natural(std::size_t n) {
  require_power_of_two(n);
  // H_2^{(x)m}(i, j) = (-1)^{popcount(i & j)}.
  return SignMatrix::from_predicate(n, [](std::size_t i, std::size_t j) {
    return __builtin_parityll(static_cast<unsigned long long>(i & j)) != 0;
  });
}

int walsh_function(std::size_t k, long long numerator, long long denominator) {
  if (denominator <= 0) throw Error("denominator must be positive");
  if (numerator < 0 || numerator > denominator) return 0;
  if (k == 0) return 1;
  const std::size_t half = k / 2;
  const int twist = (half % 2 == 0) ? 1 : -1;
  const int combine = (k % 2 == 0) ? twist : -twist;
  return walsh_function(half, 2 * numerator, denominator) +
         combine * walsh_function(half, 2 * numerator - denominator, denominator);
}

SignMatrix walsh_sequency(std::size_t n) {
  require_power_of_two(n);
  const auto denominator = static_cast<long long>(2 * n);
  return SignMatrix::from_predicate(n, [=](std::size_t i, std::size_t k) {
    const int w = walsh_function(k, static_cast<long long>(2 * i + 1), denominator);
    if (w != 1 && w != -1) {
      throw Error("Walsh function sampled on a discontinuity");
    }
    return w < 0;
  });
}

}  // namespace seqz

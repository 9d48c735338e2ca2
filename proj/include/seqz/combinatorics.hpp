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

#ifndef SEQZ_COMBINATORICS_HPP
#define SEQZ_COMBINATORICS_HPP

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "json.hpp"
#include "seqz/sign.hpp"

namespace seqz {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Largest n for which the brute-force oracles run. Full matrix enumeration
/// covers 2^(n*n) matrices; the columnwise oracles cover 2^n vectors.
inline constexpr std::size_t kMatrixEnumerationMax = 4;
inline constexpr std::size_t kVectorEnumerationMax = 20;
/// Largest n accepted by count_maximal_chains (the factorials grow as
/// (2 * C(n - 1, k))!).
inline constexpr std::size_t kMaximalChainsMax = 24;
/// Largest n accepted by the ordered / complete counts.
inline constexpr std::size_t kCountMax = 4096;

/// Exact count with an optional independently computed oracle value.
struct CountReport {
  std::size_t n = 0;
  BigInt formula_value;
  std::optional<BigInt> oracle_value;
  std::optional<bool> agree;

  void attach_oracle(BigInt value);
};

struct OracleOptions {
  bool enabled = false;
  /// Worker threads for matrix enumeration.
  unsigned jobs = 1;
};

/// Sign vectors of length n with exactly k sign changes: 2 * C(n - 1, k).
BigInt columns_with_sequency(std::size_t n, std::size_t k);

/// Histogram of sequencies over all 2^n sign vectors of length n, by direct
/// enumeration. n <= kVectorEnumerationMax.
std::vector<std::uint64_t> sequency_histogram(std::size_t n);

/// N_n = 2^n * prod_k C(n - 1, k).
/// Oracle: full enumeration for n <= 4, otherwise the product of the
/// enumerated per-sequency vector counts.
CountReport count_sequency_ordered(std::size_t n, OracleOptions oracle = {});

/// n! * N_n. Oracle: full enumeration for n <= 4, otherwise n! times the
/// columnwise ordered oracle.
CountReport count_sequency_complete(std::size_t n, OracleOptions oracle = {});

/// prod_k (2 * C(n - 1, k))!. Oracle: product of factorials of the
/// enumerated per-sequency vector counts.
CountReport count_maximal_chains(std::size_t n, OracleOptions oracle = {});

/// Per-k columns_with_sequency, each with the enumerated count as oracle.
std::vector<CountReport> count_per_sequency(std::size_t n, OracleOptions oracle = {});

struct GridCheck {
  std::size_t n = 0;
  BigInt lhs;        // prod_{k=0}^{n-1} C(n - 1, k)
  BigRational rhs;   // prod_{k=1}^{n} k^(2k - 1 - n), exact
  bool agree = false;
};

/// Evaluates both sides of the product identity used for the ordered count,
/// exactly as written, and reports whether they coincide.
GridCheck grid_identity_check(std::size_t n);

/// Visits every n x n sign matrix once, in increasing order of the n*n-bit
/// row-major code (most significant bit = element (0, 0), set bit = -1), and
/// calls `visitor` on each sequency-ordered one. Returns the number of
/// matches. n <= kMatrixEnumerationMax. With jobs > 1 the scan is split
/// across threads; the visitor still runs on the calling thread, in order.
std::size_t enumerate_ordered(std::size_t n,
                              const std::function<void(const SignMatrix&)>& visitor,
                              unsigned jobs = 1);

/// Number of sequency-complete n x n matrices by full enumeration.
std::size_t enumerate_complete_count(std::size_t n, unsigned jobs = 1);

/// Matrix with the given enumeration code.
SignMatrix matrix_from_code(std::size_t n, std::uint64_t code);

/// Two arithmetic routes to the same big integers, kept separate so each can
/// check the other.
namespace exact {
/// (m)! / (k! (m - k)!) from full factorials.
BigInt binomial_by_factorials(std::size_t m, std::size_t k);
/// prod_{t=1}^{k} (m - k + t) / t, accumulated one factor at a time.
BigInt binomial_incremental(std::size_t m, std::size_t k);
BigInt factorial(std::size_t n);
}  // namespace exact

/// Big integers are emitted as decimal strings.
nlohmann::ordered_json to_json(const CountReport& r);
nlohmann::ordered_json to_json(const GridCheck& g);

}  // namespace seqz

#endif  // SEQZ_COMBINATORICS_HPP

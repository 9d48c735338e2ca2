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

#include "seqz/combinatorics.hpp"

#include <algorithm>
#include <string>
#include <thread>

namespace seqz {

namespace {

void require_positive(std::size_t n) {
  if (n < 1) throw Error("n must be at least 1");
}

void require_at_most(std::size_t n, std::size_t bound, const char* what) {
  if (n > bound) {
    throw Error(std::string("search space too large: ") + what + " supports n <= " +
                std::to_string(bound) + ", got " + std::to_string(n));
  }
}

unsigned long to_ulong(std::size_t v) {
  if (v > static_cast<std::size_t>(static_cast<unsigned long>(-1))) {
    throw Error("argument too large");
  }
  return static_cast<unsigned long>(v);
}

BigInt pow2(std::size_t e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, to_ulong(e));
  return r;
}

BigInt binomial_row_product(std::size_t m) {
  BigInt p = 1;
  for (std::size_t k = 0; k <= m; ++k) p *= exact::binomial_by_factorials(m, k);
  return p;
}

// Column j of the matrix with enumeration code `code`, as vector bits.
std::uint64_t column_bits(std::size_t n, std::uint64_t code, std::size_t j) {
  const std::size_t top = n * n - 1;
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < n; ++i) {
    bits |= ((code >> (top - (i * n + j))) & 1U) << i;
  }
  return bits;
}

enum class Want { ordered, complete };

bool matches(std::size_t n, std::uint64_t code, Want want) {
  std::uint64_t seen = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t s = sequency(SignVector::from_bits(column_bits(n, code, j), n));
    if (want == Want::ordered) {
      if (s != j) return false;
    } else {
      if (seen & (std::uint64_t{1} << s)) return false;
      seen |= std::uint64_t{1} << s;
    }
  }
  return true;
}

// Codes of all matching matrices, in increasing order.
std::vector<std::uint64_t> scan(std::size_t n, Want want, unsigned jobs) {
  require_positive(n);
  require_at_most(n, kMatrixEnumerationMax, "matrix enumeration");
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  const unsigned workers =
      static_cast<unsigned>(std::clamp<std::uint64_t>(jobs == 0 ? 1 : jobs, 1, total));

  std::vector<std::vector<std::uint64_t>> found(workers);
  auto run = [&](unsigned w) {
    const std::uint64_t begin = total * w / workers;
    const std::uint64_t end = total * (w + 1) / workers;
    for (std::uint64_t code = begin; code < end; ++code) {
      if (matches(n, code, want)) found[w].push_back(code);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }

  std::vector<std::uint64_t> all;
  for (auto& part : found) all.insert(all.end(), part.begin(), part.end());
  return all;
}

BigInt columnwise_ordered_oracle(std::size_t n) {
  BigInt p = 1;
  for (auto c : sequency_histogram(n)) p *= BigInt(static_cast<unsigned long>(c));
  return p;
}

}  // namespace

void CountReport::attach_oracle(BigInt value) {
  agree = (value == formula_value);
  oracle_value = std::move(value);
}

namespace exact {

BigInt factorial(std::size_t n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), to_ulong(n));
  return r;
}

BigInt binomial_by_factorials(std::size_t m, std::size_t k) {
  if (k > m) return 0;
  return factorial(m) / (factorial(k) * factorial(m - k));
}

BigInt binomial_incremental(std::size_t m, std::size_t k) {
  if (k > m) return 0;
  BigInt r = 1;
  for (std::size_t t = 1; t <= k; ++t) {
    r *= to_ulong(m - k + t);
    r /= to_ulong(t);  // exact: r is now C(m - k + t, t)
  }
  return r;
}

}  // namespace exact

BigInt columns_with_sequency(std::size_t n, std::size_t k) {
  require_positive(n);
  if (k > n - 1) {
    throw Error("sequency " + std::to_string(k) + " out of range for length " +
                std::to_string(n));
  }
  return 2 * exact::binomial_by_factorials(n - 1, k);
}

std::vector<std::uint64_t> sequency_histogram(std::size_t n) {
  require_positive(n);
  require_at_most(n, kVectorEnumerationMax, "vector enumeration");
  std::vector<std::uint64_t> counts(n, 0);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    std::size_t changes = 0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      changes += ((bits >> k) ^ (bits >> (k + 1))) & 1U;
    }
    ++counts[changes];
  }
  return counts;
}

CountReport count_sequency_ordered(std::size_t n, OracleOptions oracle) {
  require_positive(n);
  require_at_most(n, kCountMax, "ordered count");
  CountReport r;
  r.n = n;
  r.formula_value = pow2(n) * binomial_row_product(n - 1);
  if (oracle.enabled) {
    if (n <= kMatrixEnumerationMax) {
      r.attach_oracle(static_cast<unsigned long>(
          enumerate_ordered(n, [](const SignMatrix&) {}, oracle.jobs)));
    } else {
      require_at_most(n, kVectorEnumerationMax, "ordered-count oracle");
      r.attach_oracle(columnwise_ordered_oracle(n));
    }
  }
  return r;
}

CountReport count_sequency_complete(std::size_t n, OracleOptions oracle) {
  require_positive(n);
  require_at_most(n, kCountMax, "complete count");
  CountReport r;
  r.n = n;
  r.formula_value = exact::factorial(n) * count_sequency_ordered(n).formula_value;
  if (oracle.enabled) {
    if (n <= kMatrixEnumerationMax) {
      r.attach_oracle(static_cast<unsigned long>(enumerate_complete_count(n, oracle.jobs)));
    } else {
      require_at_most(n, kVectorEnumerationMax, "complete-count oracle");
      r.attach_oracle(exact::factorial(n) * columnwise_ordered_oracle(n));
    }
  }
  return r;
}

CountReport count_maximal_chains(std::size_t n, OracleOptions oracle) {
  require_positive(n);
  require_at_most(n, kMaximalChainsMax, "maximal chain count");
  CountReport r;
  r.n = n;
  r.formula_value = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const BigInt c = columns_with_sequency(n, k);
    r.formula_value *= exact::factorial(c.get_ui());
  }
  if (oracle.enabled) {
    require_at_most(n, kVectorEnumerationMax, "maximal-chain oracle");
    BigInt p = 1;
    for (auto c : sequency_histogram(n)) p *= exact::factorial(c);
    r.attach_oracle(std::move(p));
  }
  return r;
}

std::vector<CountReport> count_per_sequency(std::size_t n, OracleOptions oracle) {
  require_positive(n);
  std::vector<std::uint64_t> hist;
  if (oracle.enabled) {
    require_at_most(n, kVectorEnumerationMax, "per-sequency oracle");
    hist = sequency_histogram(n);
  }
  std::vector<CountReport> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    CountReport r;
    r.n = n;
    r.formula_value = columns_with_sequency(n, k);
    if (oracle.enabled) r.attach_oracle(static_cast<unsigned long>(hist[k]));
    out.push_back(std::move(r));
  }
  return out;
}

GridCheck grid_identity_check(std::size_t n) {
  require_positive(n);
  GridCheck g;
  g.n = n;
  g.lhs = binomial_row_product(n - 1);
  BigInt num = 1;
  BigInt den = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    const long e = 2 * static_cast<long>(k) - 1 - static_cast<long>(n);
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), to_ulong(k), static_cast<unsigned long>(e < 0 ? -e : e));
    if (e >= 0) {
      num *= power;
    } else {
      den *= power;
    }
  }
  g.rhs = BigRational(num, den);
  g.rhs.canonicalize();
  g.agree = (BigRational(g.lhs) == g.rhs);
  return g;
}

SignMatrix matrix_from_code(std::size_t n, std::uint64_t code) {
  require_positive(n);
  require_at_most(n, kMatrixEnumerationMax, "matrix code");
  std::vector<SignVector> cols;
  cols.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    cols.push_back(SignVector::from_bits(column_bits(n, code, j), n));
  }
  return SignMatrix(std::move(cols));
}

std::size_t enumerate_ordered(std::size_t n,
                              const std::function<void(const SignMatrix&)>& visitor,
                              unsigned jobs) {
  const auto codes = scan(n, Want::ordered, jobs);
  for (auto code : codes) visitor(matrix_from_code(n, code));
  return codes.size();
}

std::size_t enumerate_complete_count(std::size_t n, unsigned jobs) {
  return scan(n, Want::complete, jobs).size();
}

nlohmann::ordered_json to_json(const CountReport& r) {
  nlohmann::ordered_json j{{"n", r.n}, {"formula", r.formula_value.get_str()}};
  if (r.oracle_value) {
    j["oracle"] = r.oracle_value->get_str();
    j["agree"] = *r.agree;
  }
  return j;
}

nlohmann::ordered_json to_json(const GridCheck& g) {
  return {
      {"n", g.n},
      {"lhs", g.lhs.get_str()},
      {"rhs", g.rhs.get_str()},
      {"agree", g.agree},
  };
}

}  // namespace seqz

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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. All checks are exact; the time budgets are part of each
// criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "seqz/classifier.hpp"
#include "seqz/combinatorics.hpp"
#include "seqz/generators.hpp"
#include "seqz/tensor.hpp"

using namespace seqz;
using Profile = std::vector<std::size_t>;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

struct Criterion {
  const char* id;
  const char* title;
  double budget_ms;
  std::function<void(Outcome&)> body;
};

SignMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  std::bernoulli_distribution coin(0.5);
  return SignMatrix::from_predicate(n, [&](std::size_t, std::size_t) { return coin(rng); });
}

Profile iota(std::size_t n) {
  Profile p(n);
  for (std::size_t k = 0; k < n; ++k) p[k] = k;
  return p;
}

std::string str(std::size_t v) { return std::to_string(v); }

void golden_walsh(Outcome& o) {
  const std::vector<std::vector<int>> expected{
      {1, 1, 1, 1, 1, 1, 1, 1},         {1, 1, 1, 1, -1, -1, -1, -1},
      {1, 1, -1, -1, -1, -1, 1, 1},     {1, 1, -1, -1, 1, 1, -1, -1},
      {1, -1, -1, 1, 1, -1, -1, 1},     {1, -1, -1, 1, -1, 1, 1, -1},
      {1, -1, 1, -1, -1, 1, -1, 1},     {1, -1, 1, -1, 1, -1, 1, -1},
  };
  o.expect(walsh_sequency(8).to_rows() == expected, "walsh_sequency(8) differs from H8");
}

void small_order_profiles(Outcome& o) {
  const std::vector<Profile> residue{
      {0, 2, 1}, {0, 3, 0, 3}, {0, 4, 1, 2, 3}, {0, 5, 0, 5, 0, 5},
      {0, 6, 1, 4, 3, 2, 5}, {0, 7, 0, 7, 0, 7, 0, 7}};
  for (std::size_t n = 3; n <= 8; ++n) {
    o.expect(profile(power_residue(n)) == residue[n - 3], "power_residue n=" + str(n));
  }
  const std::vector<Profile> thresh{
      {0, 1}, {0, 1, 2}, {0, 1, 3, 2}, {0, 1, 3, 4, 2}, {0, 1, 3, 5, 4, 2},
      {0, 1, 3, 5, 6, 4, 2}};
  for (std::size_t n = 2; n <= 7; ++n) {
    o.expect(profile(threshold(n)) == thresh[n - 2], "threshold n=" + str(n));
  }
}

void closed_form_profiles(Outcome& o) {
  for (std::size_t n = 2; n <= 64; ++n) {
    Profile residue(n, 0);
    Profile thresh(n, 0);
    for (std::size_t j = 1; j < n; ++j) {
      if (n % 2 == 1) {
        residue[j] = j % 2 == 0 ? j - 1 : n - j;
      } else {
        residue[j] = j % 2 == 0 ? 0 : n - 1;
      }
      thresh[j] = j <= n / 2 ? 2 * j - 1 : 2 * (n - j);
    }
    o.expect(profile(power_residue(n)) == residue, "power_residue n=" + str(n));
    o.expect(profile(threshold(n)) == thresh, "threshold n=" + str(n));
    o.expect(profile(ordered_threshold(n)) == iota(n), "ordered_threshold n=" + str(n));
  }
}

void tensor_golden(Outcome& o) {
  const Profile listed{0, 9,  10, 19, 20, 1, 8,  11, 18, 21, 2,  7, 12,
                       17, 22, 3, 6,  13, 16, 23, 4, 5,  14, 15, 24};
  const FactorSummary a(ordered_threshold(5));
  for (std::size_t j = 0; j < 25; ++j) {
    o.expect(predict_pair_special(a, j / 5, j % 5) == listed[j], "predict j=" + str(j));
    o.expect(mod_residue_profile_5(j) == listed[j], "mod-5 form j=" + str(j));
  }
}

void tensor_oracle(Outcome& o) {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::size_t> order(2, 8);
  for (int pair = 0; pair < 200; ++pair) {
    const SignMatrix a = random_matrix(rng, order(rng));
    const SignMatrix b = random_matrix(rng, order(rng));
    const SignMatrix ab = kronecker(a, b);
    const FactorSummary sa(a);
    const FactorSummary sb(b);
    for (std::size_t k = 0; k < ab.size(); ++k) {
      o.expect(predict_pair(sa, sb, k / b.size(), k % b.size()) == sequency(ab.column(k)),
               "pair " + str(pair) + " column " + str(k));
    }
  }
  for (int trial = 0; trial < 5; ++trial) {
    for (std::size_t q = 2; q <= 4; ++q) {
      for (std::size_t n = 1; n <= 4; ++n) {
        const SignMatrix a = random_matrix(rng, q);
        const SignMatrix power = kronecker_power(a, n);
        const FactorSummary s(a);
        const std::vector<std::size_t> radices(n, q);
        for (std::size_t k = 0; k < power.size(); ++k) {
          o.expect(predict_nfold(s, MixedRadixIndex::from_value(k, radices)) ==
                       sequency(power.column(k)),
                   "q=" + str(q) + " n=" + str(n) + " column " + str(k));
        }
      }
    }
  }
}

void counting_oracle(Outcome& o) {
  const std::vector<long> ordered{4, 16, 144};
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto r = count_sequency_ordered(n, {.enabled = true, .jobs = 1});
    o.expect(r.formula_value == ordered[n - 2] && r.oracle_value == BigInt(ordered[n - 2]),
             "ordered n=" + str(n));
  }
  const std::vector<long> complete{8, 96};
  for (std::size_t n = 2; n <= 3; ++n) {
    const auto r = count_sequency_complete(n, {.enabled = true, .jobs = 1});
    o.expect(r.formula_value == complete[n - 2] && r.oracle_value == BigInt(complete[n - 2]),
             "complete n=" + str(n));
  }
  for (std::size_t n = 1; n <= 12; ++n) {
    o.expect(count_maximal_chains(n, {.enabled = true}).agree == true, "chains n=" + str(n));
  }
}

void partition_identity(Outcome& o) {
  for (std::size_t n = 1; n <= 20; ++n) {
    BigInt sum = 0;
    for (std::size_t k = 0; k < n; ++k) sum += columns_with_sequency(n, k);
    o.expect(sum == BigInt(1) << static_cast<mp_bitcnt_t>(n), "sum n=" + str(n));
  }
  for (std::size_t n = 1; n <= 16; ++n) {
    std::vector<std::uint64_t> counts(n, 0);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      ++counts[sequency(SignVector::from_bits(bits, n))];
    }
    for (std::size_t k = 0; k < n; ++k) {
      o.expect(columns_with_sequency(n, k) == BigInt(static_cast<unsigned long>(counts[k])),
               "n=" + str(n) + " k=" + str(k));
    }
  }
}

void structural(Outcome& o) {
  for (std::size_t q = 2; q <= 8; ++q) {
    for (auto kind : {GeneratorKind::power_residue, GeneratorKind::threshold,
                      GeneratorKind::ordered_threshold}) {
      const SignMatrix a = generate(kind, q);
      if (!classify(a).complete) continue;
      o.expect(classify(kronecker(a, a)).complete,
               std::string(name(kind)) + " q=" + str(q) + " squared");
    }
  }
  for (std::size_t q = 1; q <= 3; ++q) {
    const SignMatrix w = walsh_sequency(std::size_t{1} << q);
    o.expect(classify(kronecker(w, w)).complete, "walsh squared");
    o.expect(!classify(kronecker(w, w)).ordered, "walsh squared ordered");
  }
  for (std::size_t q1 = 2; q1 <= 6; ++q1) {
    const SignMatrix a = ordered_threshold(q1);
    for (std::size_t q0 = 2; q0 <= 6; ++q0) {
      o.expect(classify(kronecker(a, ordered_threshold(q0))).complete,
               "A(x)B " + str(q1) + "x" + str(q0));
    }
    o.expect(!classify(kronecker(a, a)).ordered, "A(x)A ordered q=" + str(q1));
  }
}

void prefix_changes(Outcome& o) {
  for (std::size_t n = 2; n <= 32; ++n) {
    const SignMatrix a = power_residue(n);
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t direct = 0;
      for (std::size_t i = 1; i < n; ++i) {
        direct += a(i - 1, j) != a(i, j);
        o.expect(prefix_sign_changes(n, j, i) == direct,
                 "n=" + str(n) + " j=" + str(j) + " i=" + str(i));
      }
    }
  }
}

void grid_diagnostic(Outcome& o) {
  for (std::size_t n = 1; n <= 10; ++n) {
    const GridCheck g = grid_identity_check(n);
    BigInt binomials = 1;
    for (std::size_t k = 0; k < n; ++k) binomials *= exact::binomial_incremental(n - 1, k);
    o.expect(g.lhs == binomials, "lhs n=" + str(n));
    o.expect(count_sequency_ordered(n).formula_value ==
                 (binomials << static_cast<mp_bitcnt_t>(n)),
             "normative count n=" + str(n));
    std::printf("       n=%-2zu lhs=%s rhs=%s agree=%s\n", n, g.lhs.get_str().c_str(),
                g.rhs.get_str().c_str(), g.agree ? "true" : "false");
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "golden sequency-ordered Walsh matrix of order 8", 1, golden_walsh},
      {"AC2", "small-order generator profiles", 1, small_order_profiles},
      {"AC3", "closed-form profiles for 2 <= n <= 64", 1000, closed_form_profiles},
      {"AC4", "A(x)A golden list for the 5x5 ordered matrix", 1, tensor_golden},
      {"AC5", "Kronecker prediction vs direct sequency", 10000, tensor_oracle},
      {"AC6", "counting formulas vs brute-force oracles", 5000, counting_oracle},
      {"AC7", "partition identity of F^n by sequency", 10000, partition_identity},
      {"AC8", "completeness of Kronecker products", 5000, structural},
      {"AC9", "prefix sign-change closed form, n <= 32", 1000, prefix_changes},
      {"AC10", "product identity diagnostic, n = 1..10", 1000, grid_diagnostic},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    if (ms > c.budget_ms) o.expect(false, "over time budget");
    std::printf("[%s] %-4s %-48s %9.3f ms (budget %.0f ms)%s%s\n", o.ok ? "PASS" : "FAIL",
                c.id, c.title, ms, c.budget_ms, o.ok ? "" : "  ", o.detail.c_str());
    failures += o.ok ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}

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

#include "seqz/cli.hpp"

#include <algorithm>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "seqz/classifier.hpp"
#include "seqz/combinatorics.hpp"
#include "seqz/generators.hpp"
#include "seqz/io.hpp"
#include "seqz/tensor.hpp"

namespace seqz::cli {

namespace {

using Json = nlohmann::ordered_json;

// Products with at most this many entries are materialized whole.
constexpr std::uint64_t kMaterializeEntries = std::uint64_t{1} << 20;
// Column listings beyond this need --samples.
constexpr std::uint64_t kMaxListedColumns = std::uint64_t{1} << 20;

// Sequency-ordered Walsh-Hadamard matrix of order 8, row by row.
constexpr const char* kWalsh8Reference[] = {
    "++++++++", "++++----", "++----++", "++--++--",
    "+--++--+", "+--+-++-", "+-+--+-+", "+-+-+-+-",
};

struct GenerateArgs {
  std::string kind;
  std::size_t n = 0;
  std::string format = "text";
};

struct ClassifyArgs {
  std::string input;
  std::string format = "json";
};

struct CountArgs {
  std::size_t n = 0;
  std::string what;
  bool oracle = false;
  unsigned jobs = 1;
};

struct TensorArgs {
  std::string a_path;
  std::string b_path;
  std::size_t power = 0;
  std::string mode;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

struct WalshArgs {
  std::size_t n = 0;
  std::string format = "text";
};

SignMatrix load(const std::string& path) {
  if (path == "-") return read_sgn(std::cin);
  return read_sgn_file(path);
}

void print(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int run_generate(const GenerateArgs& args, std::ostream& out) {
  const auto kind = parse_generator_kind(args.kind);
  if (!kind) throw Error("unknown generator kind '" + args.kind + "'");
  const SignMatrix m = generate(*kind, args.n);
  if (args.format == "text") {
    write_sgn(out, m);
  } else if (args.format == "csv") {
    write_csv(out, m);
  } else if (args.format == "pbm") {
    write_pbm(out, m);
  } else {
    print(out, Json{{"kind", args.kind},
                    {"n", args.n},
                    {"matrix", to_json(m)},
                    {"profile", to_json(profile(m))}});
  }
  return kExitOk;
}

int run_classify(const ClassifyArgs& args, std::ostream& out) {
  const SignMatrix m = load(args.input);
  const Classification c = classify(m);
  if (args.format == "text") {
    out << "n " << m.size() << "\ncomplete " << (c.complete ? "yes" : "no")
        << "\nordered " << (c.ordered ? "yes" : "no") << "\nprofile";
    for (auto v : c.profile.values()) out << ' ' << v;
    out << '\n';
    for (const auto& d : c.duplicate_sequencies) {
      out << "duplicate " << d.sequency << ':';
      for (auto col : d.columns) out << ' ' << col;
      out << '\n';
    }
    out << "hadamard " << (is_hadamard(m) ? "yes" : "no") << '\n';
    return kExitOk;
  }
  Json j = to_json(c);
  j["hadamard"] = is_hadamard(m);
  print(out, j);
  return kExitOk;
}

int run_count(const CountArgs& args, std::ostream& out) {
  const OracleOptions oracle{args.oracle, args.jobs};
  Json j{{"what", args.what}};
  bool agree = true;
  auto merge = [&](const Json& part) {
    for (const auto& [key, value] : part.items()) j[key] = value;
  };
  if (args.what == "ordered") {
    const auto r = count_sequency_ordered(args.n, oracle);
    merge(to_json(r));
    agree = r.agree.value_or(true);
  } else if (args.what == "complete") {
    const auto r = count_sequency_complete(args.n, oracle);
    merge(to_json(r));
    agree = r.agree.value_or(true);
  } else if (args.what == "chains") {
    const auto r = count_maximal_chains(args.n, oracle);
    merge(to_json(r));
    agree = r.agree.value_or(true);
  } else if (args.what == "per-sequency") {
    j["n"] = args.n;
    Json values = Json::array();
    const auto reports = count_per_sequency(args.n, oracle);
    for (std::size_t k = 0; k < reports.size(); ++k) {
      Json entry{{"k", k}};
      const Json report = to_json(reports[k]);
      for (const auto& [key, value] : report.items()) {
        if (key != "n") entry[key] = value;
      }
      values.push_back(std::move(entry));
      agree = agree && reports[k].agree.value_or(true);
    }
    j["values"] = std::move(values);
    if (args.oracle) j["agree"] = agree;
  } else {
    // grid-check
    const auto g = grid_identity_check(args.n);
    merge(to_json(g));
    agree = g.agree;
  }
  print(out, j);
  return agree ? kExitOk : kExitMismatch;
}

std::vector<std::uint64_t> choose_columns(std::uint64_t total, std::size_t samples,
                                          std::uint64_t seed) {
  std::vector<std::uint64_t> cols;
  if (samples == 0 || samples >= total) {
    if (total > kMaxListedColumns) {
      throw Error("product has " + std::to_string(total) +
                  " columns; pass --samples to select a subset (limit " +
                  std::to_string(kMaxListedColumns) + ")");
    }
    cols.resize(total);
    for (std::uint64_t k = 0; k < total; ++k) cols[k] = k;
    return cols;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
  cols.reserve(samples);
  for (std::size_t s = 0; s < samples; ++s) cols.push_back(pick(rng));
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  return cols;
}

int run_tensor(const TensorArgs& args, std::ostream& out) {
  std::vector<SignMatrix> factors;
  factors.push_back(load(args.a_path));
  const bool pair = !args.b_path.empty();
  if (pair) {
    if (args.power != 0) throw Error("--power cannot be combined with --b");
    factors.push_back(load(args.b_path));
  } else {
    const std::size_t power = args.power == 0 ? 2 : args.power;
    factors.assign(power, factors.front());
  }
  std::vector<std::size_t> radices;
  std::uint64_t total = 1;
  for (const auto& f : factors) {
    radices.push_back(f.size());
    if (total > (std::uint64_t{1} << 62) / f.size()) throw Error("product too large");
    total *= f.size();
  }

  const FactorSummary summary_a(factors.front());
  const FactorSummary summary_last(factors.back());
  const bool want_predicted = args.mode != "expand";
  const bool want_actual = args.mode != "predict";

  // verify samples automatically once the product is too big to expand.
  const bool materialize = want_actual && total <= kMaterializeEntries / total;
  std::size_t samples = args.samples;
  if (args.mode == "verify" && samples == 0 && !materialize) samples = 64;
  const auto columns = choose_columns(total, samples, args.seed);

  std::optional<SignMatrix> product;
  if (materialize) {
    product = factors.front();
    for (std::size_t f = 1; f < factors.size(); ++f) product = kronecker(*product, factors[f]);
  }

  Json rows = Json::array();
  bool agree = true;
  for (auto col : columns) {
    const auto index = MixedRadixIndex::from_value(col, radices);
    Json entry{{"index", col}, {"digits", index.digits()}};
    std::uint64_t predicted = 0;
    if (want_predicted) {
      predicted = pair ? predict_pair(summary_a, summary_last, index.digits()[0],
                                      index.digits()[1])
                       : predict_nfold(summary_a, index);
      entry["predicted"] = predicted;
    }
    if (want_actual) {
      const std::size_t actual =
          product ? sequency(product->column(static_cast<std::size_t>(col)))
                  : sequency(kronecker_column(factors, index));
      entry["actual"] = actual;
      if (want_predicted) {
        entry["agree"] = actual == predicted;
        agree = agree && actual == predicted;
      }
    }
    rows.push_back(std::move(entry));
  }

  Json j{{"mode", args.mode}, {"factors", radices}, {"columns", std::move(rows)}};
  if (args.mode == "verify") {
    j["sampled"] = !materialize;
    j["agree"] = agree;
  }
  print(out, j);
  return agree ? kExitOk : kExitMismatch;
}

int run_walsh_check(const WalshArgs& args, std::ostream& out) {
  const SignMatrix sequency_order = walsh_sequency(args.n);
  const SignMatrix natural = walsh_natural(args.n);

  std::vector<std::size_t> order(args.n);
  for (std::size_t k = 0; k < args.n; ++k) order[k] = k;
  const auto natural_profile = profile(natural);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return natural_profile[x] < natural_profile[y];
  });
  const bool sorted_match = permute_columns(natural, order) == sequency_order;
  const bool ordered = classify(sequency_order).ordered;

  std::optional<bool> golden_match;
  if (args.n == 8) {
    std::string text;
    for (const char* row : kWalsh8Reference) text += std::string(row) + '\n';
    golden_match = read_sgn(text) == sequency_order;
  }
  const bool ok = sorted_match && ordered && golden_match.value_or(true);

  if (args.format == "json") {
    Json j{{"n", args.n}, {"sorted_natural", sorted_match}, {"ordered", ordered}};
    if (golden_match) j["golden"] = *golden_match;
    j["match"] = ok;
    print(out, j);
  } else {
    out << "sorted-natural " << (sorted_match ? "match" : "mismatch") << '\n';
    out << "sequency-ordered " << (ordered ? "yes" : "no") << '\n';
    if (golden_match) out << "golden " << (*golden_match ? "match" : "mismatch") << '\n';
    out << (ok ? "match" : "mismatch") << '\n';
  }
  return ok ? kExitOk : kExitMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sequency analysis of +-1 matrices", "seqz"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate_cmd = app.add_subcommand("generate", "Build a matrix family member");
  generate_cmd->add_option("--kind", gen.kind, "Generator kind")
      ->required()
      ->check(CLI::IsMember({"power-residue", "threshold", "ordered-threshold",
                             "walsh-natural", "walsh-sequency"}));
  generate_cmd->add_option("--n", gen.n, "Matrix order")->required();
  generate_cmd->add_option("--format", gen.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv", "pbm"}));

  ClassifyArgs cls;
  auto* classify_cmd = app.add_subcommand("classify", "Classify an sgn-v1 matrix");
  classify_cmd->add_option("--input", cls.input, "sgn-v1 file, '-' for stdin")->required();
  classify_cmd->add_option("--format", cls.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  CountArgs cnt;
  auto* count_cmd = app.add_subcommand("count", "Exact counts with optional brute-force oracle");
  count_cmd->add_option("--n", cnt.n, "Matrix order / vector length")->required();
  count_cmd->add_option("--what", cnt.what, "Quantity to count")
      ->required()
      ->check(CLI::IsMember({"ordered", "complete", "chains", "per-sequency", "grid-check"}));
  count_cmd->add_flag("--oracle", cnt.oracle, "Also compute the brute-force value");
  count_cmd->add_option("--jobs", cnt.jobs, "Worker threads for enumeration")
      ->check(CLI::Range(1U, 256U));

  TensorArgs ten;
  auto* tensor_cmd = app.add_subcommand("tensor", "Kronecker-product sequency prediction");
  tensor_cmd->add_option("--a", ten.a_path, "First factor (sgn-v1)")->required();
  tensor_cmd->add_option("--b", ten.b_path, "Second factor (sgn-v1)");
  tensor_cmd->add_option("--power", ten.power, "Kronecker power of A (default 2)")
      ->check(CLI::Range(std::size_t{1}, std::size_t{64}));
  tensor_cmd->add_option("--mode", ten.mode, "predict, expand or verify")
      ->required()
      ->check(CLI::IsMember({"predict", "expand", "verify"}));
  tensor_cmd->add_option("--samples", ten.samples, "Only report this many random columns");
  tensor_cmd->add_option("--seed", ten.seed, "Seed for --samples");

  WalshArgs wal;
  auto* walsh_cmd = app.add_subcommand("walsh-check", "Check sequency-order Walsh generation");
  walsh_cmd->add_option("--n", wal.n, "Matrix order (power of two)")->required();
  walsh_cmd->add_option("--format", wal.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitFailure;
  }

  try {
    if (*generate_cmd) return run_generate(gen, out);
    if (*classify_cmd) return run_classify(cls, out);
    if (*count_cmd) return run_count(cnt, out);
    if (*tensor_cmd) return run_tensor(ten, out);
    return run_walsh_check(wal, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace seqz::cli

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

#include <random>
#include <sstream>

#include "doctest.h"
#include "seqz/io.hpp"
#include "test_support.hpp"

using namespace seqz;

TEST_CASE("read sgn-v1") {
  CHECK(read_sgn("++\n+-\n") == SignMatrix::from_rows({{1, 1}, {1, -1}}));
  CHECK(read_sgn("+ +\n+ -\n\n") == SignMatrix::from_rows({{1, 1}, {1, -1}}));
  CHECK(read_sgn("\n\n-\n") == SignMatrix::from_rows({{-1}}));
  // Stops at the first blank line after the matrix.
  CHECK(read_sgn("+-\n-+\n\n+++\n") == SignMatrix::from_rows({{1, -1}, {-1, 1}}));
  CHECK(read_sgn("++\r\n+-\r\n") == SignMatrix::from_rows({{1, 1}, {1, -1}}));
}

TEST_CASE("sgn-v1 diagnostics") {
  try {
    read_sgn("++\n+x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 2);
  }
  try {
    read_sgn("+++\n++\n+++\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("ragged") != std::string::npos);
  }
  CHECK_THROWS_WITH_AS(read_sgn("++\n"), doctest::Contains("not square"), ParseError);
  CHECK_THROWS_WITH_AS(read_sgn(""), doctest::Contains("no matrix rows"), ParseError);
  CHECK_THROWS_AS(read_sgn_file("/nonexistent/matrix.sgn"), Error);
}

TEST_CASE("sgn-v1 write then read is the identity") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const SignMatrix m = testing::random_matrix(rng, 1 + trial % 10);
    CHECK(read_sgn(to_sgn(m)) == m);
  }
}

TEST_CASE("text encodings") {
  const SignMatrix m = SignMatrix::from_rows({{1, 1}, {1, -1}});
  CHECK(to_sgn(m) == "++\n+-\n\n");

  std::ostringstream csv;
  write_csv(csv, m);
  CHECK(csv.str() == "1,1\n1,-1\n");

  std::ostringstream pbm;
  write_pbm(pbm, m);
  CHECK(pbm.str() == "P1\n2 2\n0 0\n0 1\n");

  CHECK(to_json(m).dump() == "[[1,1],[1,-1]]");
  CHECK(to_json(profile(m)).dump() == "[0,1]");
}

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

#ifndef SEQZ_IO_HPP
#define SEQZ_IO_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

#include "json.hpp"
#include "seqz/sign.hpp"

namespace seqz {

/// Malformed sgn-v1 text. line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// sgn-v1: one matrix row per line, '+' for +1 and '-' for -1, optionally
// separated by spaces or tabs. The matrix ends at the first blank line after
// its first row, or at end of input. Leading blank lines are skipped.
SignMatrix read_sgn(std::istream& in);
SignMatrix read_sgn(std::string_view text);
SignMatrix read_sgn_file(const std::string& path);

/// Rows without separators, followed by one blank line.
void write_sgn(std::ostream& out, const SignMatrix& m);
std::string to_sgn(const SignMatrix& m);

/// Comma-separated 1 / -1, one row per line.
void write_csv(std::ostream& out, const SignMatrix& m);

/// Plain PBM (P1), row-major; +1 -> 0 (white), -1 -> 1 (black).
void write_pbm(std::ostream& out, const SignMatrix& m);

nlohmann::ordered_json to_json(const SequencyProfile& p);
/// Row-major array of arrays of 1 / -1.
nlohmann::ordered_json to_json(const SignMatrix& m);

}  // namespace seqz

#endif  // SEQZ_IO_HPP

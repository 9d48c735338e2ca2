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

#include "seqz/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace seqz {

ParseError::ParseError(std::size_t line, std::size_t column,
                       const std::string& what)
    : Error("sgn-v1 line " + std::to_string(line) + ", column " +
            std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

bool is_blank(std::string_view s) {
  return s.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

SignMatrix read_sgn(std::istream& in) {
  std::vector<std::vector<int>> rows;
  std::string line;
  std::size_t line_no = 0;
  std::size_t first_row_line = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line)) {
      if (rows.empty()) continue;
      break;
    }
    std::vector<int> row;
    for (std::size_t c = 0; c < line.size(); ++c) {
      const char ch = line[c];
      if (ch == '+') {
        row.push_back(1);
      } else if (ch == '-') {
        row.push_back(-1);
      } else if (ch == ' ' || ch == '\t' || ch == '\r') {
        continue;
      } else {
        throw ParseError(line_no, c + 1,
                         std::string("unexpected character '") + ch + "'");
      }
    }
    if (rows.empty()) {
      first_row_line = line_no;
    } else if (row.size() != rows.front().size()) {
      throw ParseError(line_no, 1,
                       "ragged row: " + std::to_string(row.size()) +
                           " entries, expected " +
                           std::to_string(rows.front().size()) +
                           " (from line " + std::to_string(first_row_line) +
                           ")");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError(line_no + 1, 1, "no matrix rows");
  if (rows.size() != rows.front().size()) {
    throw ParseError(line_no, 1,
                     "matrix is not square: " + std::to_string(rows.size()) +
                         " rows of " + std::to_string(rows.front().size()) +
                         " entries");
  }
  return SignMatrix::from_rows(rows);
}

SignMatrix read_sgn(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_sgn(in);
}

SignMatrix read_sgn_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_sgn(in);
}

void write_sgn(std::ostream& out, const SignMatrix& m) {
  const std::size_t n = m.size();
  std::string row(n, '+');
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) row[j] = m(i, j) > 0 ? '+' : '-';
    out << row << '\n';
  }
  out << '\n';
}

std::string to_sgn(const SignMatrix& m) {
  std::ostringstream out;
  write_sgn(out, m);
  return out.str();
}

void write_csv(std::ostream& out, const SignMatrix& m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j) out << ',';
      out << m(i, j);
    }
    out << '\n';
  }
}

void write_pbm(std::ostream& out, const SignMatrix& m) {
  const std::size_t n = m.size();
  out << "P1\n" << n << ' ' << n << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j) out << ' ';
      out << (m(i, j) > 0 ? '0' : '1');
    }
    out << '\n';
  }
}

nlohmann::ordered_json to_json(const SequencyProfile& p) {
  return nlohmann::ordered_json(p.values());
}

nlohmann::ordered_json to_json(const SignMatrix& m) { return nlohmann::ordered_json(m.to_rows()); }

}  // namespace seqz

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

#ifndef SEQZ_CLASSIFIER_HPP
#define SEQZ_CLASSIFIER_HPP

#include <cstddef>
#include <vector>

#include "json.hpp"
#include "seqz/sign.hpp"

namespace seqz {

/// A sequency value shared by two or more columns.
struct DuplicateSequency {
  std::size_t sequency;
  std::vector<std::size_t> columns;

  friend bool operator==(const DuplicateSequency&, const DuplicateSequency&) = default;
};

struct Classification {
  bool complete = false;
  bool ordered = false;
  SequencyProfile profile;
  /// Sorted by sequency value; empty iff complete.
  std::vector<DuplicateSequency> duplicate_sequencies;
};

/// Complete: the profile is a permutation of 0..n-1. Ordered: it is the
/// identity.
Classification classify(const SignMatrix& a);

/// classify(project_signs(rows)).
Classification classify_real(const std::vector<std::vector<double>>& rows);

/// {"n", "complete", "ordered", "profile", "duplicates": {"<seq>": [cols]}}
nlohmann::ordered_json to_json(const Classification& c);

}  // namespace seqz

#endif  // SEQZ_CLASSIFIER_HPP

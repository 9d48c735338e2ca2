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

#include "seqz/classifier.hpp"

#include <string>

#include "seqz/io.hpp"

namespace seqz {

Classification classify(const SignMatrix& a) {
  Classification c;
  c.profile = profile(a);
  const std::size_t n = a.size();

  std::vector<std::vector<std::size_t>> by_value(n);
  for (std::size_t j = 0; j < n; ++j) by_value[c.profile[j]].push_back(j);

  c.ordered = true;
  for (std::size_t j = 0; j < n; ++j) {
    if (c.profile[j] != j) c.ordered = false;
  }
  // n columns over n possible values: a bijection iff nothing repeats.
  for (std::size_t s = 0; s < n; ++s) {
    if (by_value[s].size() > 1) {
      c.duplicate_sequencies.push_back({s, std::move(by_value[s])});
    }
  }
  c.complete = c.duplicate_sequencies.empty();
  return c;
}

Classification classify_real(const std::vector<std::vector<double>>& rows) {
  return classify(project_signs(rows));
}

nlohmann::ordered_json to_json(const Classification& c) {
  nlohmann::ordered_json dups = nlohmann::ordered_json::object();
  for (const auto& d : c.duplicate_sequencies) {
    dups[std::to_string(d.sequency)] = d.columns;
  }
  return {
      {"n", c.profile.size()},
      {"complete", c.complete},
      {"ordered", c.ordered},
      {"profile", to_json(c.profile)},
      {"duplicates", std::move(dups)},
  };
}

}  // namespace seqz

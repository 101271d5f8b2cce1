// Copyright 2026 The Arasent Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ARASENT_SYNTHETIC_H_
#define ARASENT_SYNTHETIC_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "arasent/corpus.h"

namespace arasent {

// Shape of a generated corpus. The defaults mirror the published corpus: 1000
// reviews, 702 positive / 171 negative / 127 neutral, and the per-bin review
// counts of the standard length bins, with the remaining 29 reviews falling
// in the 80-89 token gap.
struct SyntheticCorpusOptions {
  uint64_t seed = 1;
  size_t positive = 702;
  size_t negative = 171;
  size_t neutral = 127;
  // (lower, upper) inclusive token ranges and how many reviews to draw from
  // each. Counts must sum to positive + negative + neutral.
  std::vector<std::pair<std::pair<size_t, size_t>, size_t>> length_plan = {
      {{1000, 1200}, 5}, {{500, 999}, 32}, {{100, 499}, 268}, {{90, 99}, 24},
      {{80, 89}, 29},    {{70, 79}, 30},   {{60, 69}, 31},    {{50, 59}, 57},
      {{40, 49}, 53},    {{30, 39}, 70},   {{20, 29}, 99},    {{10, 19}, 149},
      {{5, 9}, 90},      {{1, 4}, 63}};
  // Probability (percent) that an emotion tag agrees with the gold label.
  int agreement_percent = 65;
  // Tag streams rotate through horizontal, vertical and XML when true.
  bool mixed_formats = true;
};

// Deterministic across platforms for a given options value: uses
// std::mt19937_64 with hand-written range reduction and shuffling.
// Throws Error(kInvalidArgument) when the length plan and label counts
// disagree.
std::vector<Review> GenerateSyntheticCorpus(const SyntheticCorpusOptions& options);

}  // namespace arasent

#endif  // ARASENT_SYNTHETIC_H_

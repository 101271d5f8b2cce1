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

#ifndef ARASENT_SWEEP_H_
#define ARASENT_SWEEP_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arasent/classifier.h"
#include "arasent/corpus.h"
#include "arasent/evaluation.h"

namespace arasent {

// Evaluation settings that the published tables leave unstated. A sweep
// evaluates every combination for one tool.
struct SweepConfig {
  Tool tool = Tool::kSemanticOnly;
  Aggregation aggregation = Aggregation::kMacro;
  CandidatePolicy candidates = CandidatePolicy::kFirstTag;
  GoldReference gold = GoldReference::kOverall;

  // e.g. "tool1/macro/first/overall".
  std::string Name() const;
};

// 3 aggregations x 2 candidate policies x 2 gold references.
std::vector<SweepConfig> SweepConfigs(Tool tool);

struct RowDelta {
  std::string category;
  size_t review_count = 0;
  size_t reference_count = 0;
  Metrics ours;
  Metrics reference;
  Metrics delta;  // ours - reference
};

struct SweepResult {
  SweepConfig config;
  EvaluationReport report;
  // Rows present in both the report and the reference, in report order.
  std::vector<RowDelta> deltas;
  // Mean |delta| over every P/R/F cell of `deltas`; unset without a
  // reference.
  std::optional<double> mean_abs_delta;
};

struct SweepOptions {
  BinScheme bins = BinScheme::kStandard;
  MetaphorNeutralPolicy metaphor_neutral = MetaphorNeutralPolicy::kZeroContribution;
  // Reference tables to measure each configuration against, per tool.
  std::vector<ReportRecord> reference_tool1;
  std::vector<ReportRecord> reference_tool2;
};

struct SweepOutcome {
  std::vector<SweepResult> results;  // tool 1 configs, then tool 2
  // Index into results of the configuration nearest each reference.
  std::optional<size_t> closest_tool1;
  std::optional<size_t> closest_tool2;
};

SweepOutcome RunSweep(std::span<const Review> corpus, const SweepOptions& options);

// tool,aggregation,candidate_policy,gold_reference,mean_abs_delta,closest
std::string FormatSweepSummaryCsv(const SweepOutcome& outcome);
// One line per configuration and category with our values, the reference
// values and the deltas.
std::string FormatSweepDeltasCsv(const SweepOutcome& outcome);

}  // namespace arasent

#endif  // ARASENT_SWEEP_H_

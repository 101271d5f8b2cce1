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

#include "arasent/sweep.h"

#include <cmath>
#include <cstdio>
#include <map>
#include <unordered_map>

#include "arasent/csv.h"

namespace arasent {
namespace {

std::string_view ToolName(Tool tool) {
  return tool == Tool::kSemanticOnly ? "tool1" : "tool2";
}

std::string_view CandidateName(CandidatePolicy c) {
  return c == CandidatePolicy::kFirstTag ? "first" : "all";
}

std::string_view GoldName(GoldReference g) {
  return g == GoldReference::kOverall ? "overall" : "metaphor";
}

std::string Fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.8f", v);
  return buf;
}

void AttachDeltas(const std::vector<ReportRecord>& reference, SweepResult* result) {
  if (reference.empty()) return;
  std::unordered_map<std::string, const ReportRecord*> by_label;
  for (const ReportRecord& rec : reference) by_label.emplace(rec.category, &rec);
  double sum = 0.0;
  size_t cells = 0;
  for (const MetricsRow& row : result->report.rows) {
    const auto it = by_label.find(row.category.Label());
    if (it == by_label.end()) continue;
    RowDelta d;
    d.category = row.category.Label();
    d.review_count = row.review_count;
    d.reference_count = it->second->review_count;
    d.ours = row.metrics;
    d.reference = it->second->metrics;
    d.delta = {d.ours.precision - d.reference.precision, d.ours.recall - d.reference.recall,
               d.ours.f_score - d.reference.f_score};
    sum += std::abs(d.delta.precision) + std::abs(d.delta.recall) + std::abs(d.delta.f_score);
    cells += 3;
    result->deltas.push_back(std::move(d));
  }
  if (cells > 0) result->mean_abs_delta = sum / static_cast<double>(cells);
}

}  // namespace

std::string SweepConfig::Name() const {
  std::string name(ToolName(tool));
  name += '/';
  name += AggregationName(aggregation);
  name += '/';
  name += CandidateName(candidates);
  name += '/';
  name += GoldName(gold);
  return name;
}

std::vector<SweepConfig> SweepConfigs(Tool tool) {
  std::vector<SweepConfig> configs;
  for (Aggregation a : {Aggregation::kMacro, Aggregation::kMicro, Aggregation::kWeighted}) {
    for (CandidatePolicy c : {CandidatePolicy::kFirstTag, CandidatePolicy::kAllTags}) {
      for (GoldReference g : {GoldReference::kOverall, GoldReference::kMetaphor}) {
        configs.push_back({tool, a, c, g});
      }
    }
  }
  return configs;
}

SweepOutcome RunSweep(std::span<const Review> corpus, const SweepOptions& options) {
  SweepOutcome outcome;
  // Classification only depends on (tool, candidate policy).
  std::map<std::pair<Tool, CandidatePolicy>, std::vector<ClassificationResult>> cache;
  for (Tool tool : {Tool::kSemanticOnly, Tool::kWithMetaphor}) {
    const auto& reference =
        tool == Tool::kSemanticOnly ? options.reference_tool1 : options.reference_tool2;
    std::optional<size_t>& closest =
        tool == Tool::kSemanticOnly ? outcome.closest_tool1 : outcome.closest_tool2;
    for (const SweepConfig& config : SweepConfigs(tool)) {
      auto key = std::make_pair(tool, config.candidates);
      auto it = cache.find(key);
      if (it == cache.end()) {
        ClassifierOptions copts;
        copts.tool = tool;
        copts.tag_stream.candidates = config.candidates;
        copts.metaphor_neutral = options.metaphor_neutral;
        it = cache.emplace(key, ClassifyCorpus(corpus, copts)).first;
      }
      SweepResult result;
      result.config = config;
      result.report = Evaluate(corpus, it->second,
                               {config.aggregation, options.bins, config.gold});
      AttachDeltas(reference, &result);
      if (result.mean_abs_delta &&
          (!closest || *result.mean_abs_delta < *outcome.results[*closest].mean_abs_delta)) {
        closest = outcome.results.size();
      }
      outcome.results.push_back(std::move(result));
    }
  }
  return outcome;
}

std::string FormatSweepSummaryCsv(const SweepOutcome& outcome) {
  std::string out = csv::FormatRow(
      {"tool", "aggregation", "candidate_policy", "gold_reference", "mean_abs_delta", "closest"});
  for (size_t i = 0; i < outcome.results.size(); ++i) {
    const SweepResult& r = outcome.results[i];
    const bool closest = outcome.closest_tool1 == i || outcome.closest_tool2 == i;
    out += csv::FormatRow({std::string(ToolName(r.config.tool)),
                           std::string(AggregationName(r.config.aggregation)),
                           std::string(CandidateName(r.config.candidates)),
                           std::string(GoldName(r.config.gold)),
                           r.mean_abs_delta ? Fixed(*r.mean_abs_delta) : "",
                           closest ? "yes" : ""});
  }
  return out;
}

std::string FormatSweepDeltasCsv(const SweepOutcome& outcome) {
  std::string out = csv::FormatRow(
      {"config", "category", "review_count", "reference_count", "precision", "recall",
       "f_score", "ref_precision", "ref_recall", "ref_f_score", "delta_precision",
       "delta_recall", "delta_f_score"});
  for (const SweepResult& r : outcome.results) {
    for (const RowDelta& d : r.deltas) {
      out += csv::FormatRow({r.config.Name(), d.category, std::to_string(d.review_count),
                             std::to_string(d.reference_count), Fixed(d.ours.precision),
                             Fixed(d.ours.recall), Fixed(d.ours.f_score),
                             Fixed(d.reference.precision), Fixed(d.reference.recall),
                             Fixed(d.reference.f_score), Fixed(d.delta.precision),
                             Fixed(d.delta.recall), Fixed(d.delta.f_score)});
    }
  }
  return out;
}

}  // namespace arasent

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

#ifndef ARASENT_EVALUATION_H_
#define ARASENT_EVALUATION_H_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arasent/classifier.h"
#include "arasent/corpus.h"
#include "arasent/tagset.h"

namespace arasent {

// Gold-by-predicted counts over the three polarity classes.
class ConfusionMatrix {
 public:
  void Add(Polarity gold, Polarity predicted, uint64_t n = 1) {
    counts_[PolarityIndex(gold)][PolarityIndex(predicted)] += n;
  }
  uint64_t at(Polarity gold, Polarity predicted) const {
    return counts_[PolarityIndex(gold)][PolarityIndex(predicted)];
  }
  uint64_t RowSum(Polarity gold) const;
  uint64_t ColumnSum(Polarity predicted) const;
  uint64_t Total() const;
  uint64_t Trace() const;

  bool operator==(const ConfusionMatrix&) const = default;

 private:
  std::array<std::array<uint64_t, 3>, 3> counts_{};
};

ConfusionMatrix Confusion(std::span<const std::pair<Polarity, Polarity>> pairs);

// One-vs-rest counts for a target class.
struct ClassCounts {
  uint64_t tp = 0;
  uint64_t fp = 0;
  uint64_t fn = 0;
};

ClassCounts ExtractClassCounts(const ConfusionMatrix& m, Polarity target);

// Undefined ratios (zero denominators) are reported as 0.
double Precision(const ClassCounts& c);
double Recall(const ClassCounts& c);
double FScore(double precision, double recall);

struct Metrics {
  double precision = 0.0;
  double recall = 0.0;
  double f_score = 0.0;
};

Metrics ClassMetrics(const ConfusionMatrix& m, Polarity target);

// How a multi-class category row is reduced to one precision/recall/F.
enum class Aggregation {
  // Unweighted mean of per-class P, R and F over all three classes, including
  // classes with no support.
  kMacro,
  // Pooled counts; P = R = F = accuracy.
  kMicro,
  // Per-class P, R and F weighted by gold support.
  kWeighted,
};

std::string_view AggregationName(Aggregation a);
Metrics AggregateMetrics(const ConfusionMatrix& m, Aggregation aggregation);
inline Metrics MacroMetrics(const ConfusionMatrix& m) {
  return AggregateMetrics(m, Aggregation::kMacro);
}

// Inclusive token-count interval; no upper bound for the open top bin.
struct LengthBin {
  size_t lower = 0;
  std::optional<size_t> upper;

  bool Contains(size_t tokens) const {
    return tokens >= lower && (!upper || tokens <= *upper);
  }
  bool operator==(const LengthBin&) const = default;
};

enum class BinScheme {
  // >=1000, 500-999, 100-499, 90-99, 70-79, ..., 10-19, 5-9, 1-4. Counts of 0
  // and 80-89 fall outside every bin.
  kStandard,
  // kStandard plus 80-89 and a 0-token bin, so nothing is unbinned.
  kComplete,
};

// Bins in report order (descending).
std::vector<LengthBin> LengthBins(BinScheme scheme);

struct CategoryKey {
  enum class Kind { kAllReviews, kByGoldPolarity, kByLength, kUnbinned };

  Kind kind = Kind::kAllReviews;
  Polarity polarity = Polarity::kNeutral;  // kByGoldPolarity only
  LengthBin bin;                           // kByLength only

  static CategoryKey All() { return {}; }
  static CategoryKey Gold(Polarity p) { return {Kind::kByGoldPolarity, p, {}}; }
  static CategoryKey Length(LengthBin b) { return {Kind::kByLength, Polarity::kNeutral, b}; }
  static CategoryKey Unbinned() { return {Kind::kUnbinned, Polarity::kNeutral, {}}; }

  // "All reviews", "Positive reviews", ">=1000 tks", "999 tks ~500 tks",
  // "4 tks ~1 tks", "0 tks", "Unbinned".
  std::string Label() const;

  bool operator==(const CategoryKey&) const = default;
};

CategoryKey Bucket(size_t token_count, BinScheme scheme = BinScheme::kStandard);

struct MetricsRow {
  CategoryKey category;
  size_t review_count = 0;
  Metrics metrics;
};

// Rows in fixed order: all reviews, positive, negative, neutral, then the
// length bins from longest to shortest. Reviews outside every bin are
// summarised in the unbinned member instead of a row.
struct EvaluationReport {
  std::vector<MetricsRow> rows;
  MetricsRow unbinned{CategoryKey::Unbinned(), 0, {}};
};

// Which gold label a review is scored against.
enum class GoldReference {
  kOverall,   // the review's overall annotation
  kMetaphor,  // MetaphorGoldPolarity(review)
};

struct EvaluationOptions {
  Aggregation aggregation = Aggregation::kMacro;
  BinScheme bins = BinScheme::kStandard;
  GoldReference gold = GoldReference::kOverall;
};

struct LabeledItem {
  Polarity gold = Polarity::kNeutral;
  Polarity predicted = Polarity::kNeutral;
  size_t token_count = 0;
};

EvaluationReport EvaluateItems(std::span<const LabeledItem> items,
                               const EvaluationOptions& options = {});

// Matches results to reviews by id. Throws Error(kMissingResult) when a
// review has no result, Error(kDuplicateResult) when one has several, and
// Error(kIdMismatch) for a result naming no review.
EvaluationReport Evaluate(std::span<const Review> corpus,
                          std::span<const ClassificationResult> results,
                          const EvaluationOptions& options = {});

// Category label and F-score, in report order.
using FScoreColumn = std::vector<std::pair<std::string, double>>;

FScoreColumn FScores(const EvaluationReport& report);

struct ComparisonRow {
  std::string category;
  double f_tool1 = 0.0;
  double f_tool2 = 0.0;
  double f_best = 0.0;
  bool tie = false;
};

// Per category, the better of the two F-scores, in tool1's order. Throws
// Error(kCategoryMismatch) unless both cover the same categories.
std::vector<ComparisonRow> Compare(const FScoreColumn& tool1, const FScoreColumn& tool2);
std::vector<ComparisonRow> Compare(const EvaluationReport& tool1,
                                   const EvaluationReport& tool2);

// category,review_count,precision,recall,f_score with 8 decimals.
std::string FormatReportCsv(const EvaluationReport& report);
// Reads the category and f_score columns of a report CSV; other columns are
// optional. Throws kMissingColumn, kBadFormat or kCsvError.
FScoreColumn ParseFScoreColumn(std::string_view csv_text);
struct ReportRecord {
  std::string category;
  size_t review_count = 0;
  Metrics metrics;
};

// Reads every column of a report CSV.
std::vector<ReportRecord> ParseReportCsv(std::string_view csv_text);

// category,f_tool1,f_tool2,f_best,tie with 8 decimals.
std::string FormatComparisonCsv(std::span<const ComparisonRow> rows);

// Aligned text tables for the terminal: 3 decimals for reports, 8 for the
// comparison.
std::string RenderReportTable(const EvaluationReport& report);
std::string RenderComparisonTable(std::span<const ComparisonRow> rows);

}  // namespace arasent

#endif  // ARASENT_EVALUATION_H_

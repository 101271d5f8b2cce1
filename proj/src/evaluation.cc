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

#include "arasent/evaluation.h"

#include <algorithm>
#include <cstdio>
#include <set>
#include <unordered_map>

#include "arasent/csv.h"
#include "arasent/error.h"

namespace arasent {
namespace {

std::string FormatFixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  return buf;
}

double SafeRatio(uint64_t num, uint64_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

std::string PadRight(const std::string& s, size_t width) {
  // Width counts code points so Arabic labels would still align.
  size_t cps = 0;
  for (unsigned char c : s) cps += (c & 0xC0) != 0x80;
  return cps >= width ? s : s + std::string(width - cps, ' ');
}

double ParseDouble(const std::string& text, const std::string& context) {
  size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw Error(ErrorCode::kBadFormat, context + ": bad number '" + text + "'");
  }
  return value;
}

}  // namespace

uint64_t ConfusionMatrix::RowSum(Polarity gold) const {
  uint64_t sum = 0;
  for (uint64_t c : counts_[PolarityIndex(gold)]) sum += c;
  return sum;
}

uint64_t ConfusionMatrix::ColumnSum(Polarity predicted) const {
  uint64_t sum = 0;
  for (const auto& row : counts_) sum += row[PolarityIndex(predicted)];
  return sum;
}

uint64_t ConfusionMatrix::Total() const {
  uint64_t sum = 0;
  for (const auto& row : counts_) {
    for (uint64_t c : row) sum += c;
  }
  return sum;
}

uint64_t ConfusionMatrix::Trace() const {
  return counts_[0][0] + counts_[1][1] + counts_[2][2];
}

ConfusionMatrix Confusion(std::span<const std::pair<Polarity, Polarity>> pairs) {
  ConfusionMatrix m;
  for (const auto& [gold, predicted] : pairs) m.Add(gold, predicted);
  return m;
}

ClassCounts ExtractClassCounts(const ConfusionMatrix& m, Polarity target) {
  ClassCounts c;
  c.tp = m.at(target, target);
  c.fp = m.ColumnSum(target) - c.tp;
  c.fn = m.RowSum(target) - c.tp;
  return c;
}

double Precision(const ClassCounts& c) { return SafeRatio(c.tp, c.tp + c.fp); }

double Recall(const ClassCounts& c) { return SafeRatio(c.tp, c.tp + c.fn); }

double FScore(double precision, double recall) {
  const double sum = precision + recall;
  return sum == 0.0 ? 0.0 : 2.0 * precision * recall / sum;
}

Metrics ClassMetrics(const ConfusionMatrix& m, Polarity target) {
  const ClassCounts c = ExtractClassCounts(m, target);
  Metrics out;
  out.precision = Precision(c);
  out.recall = Recall(c);
  out.f_score = FScore(out.precision, out.recall);
  return out;
}

std::string_view AggregationName(Aggregation a) {
  switch (a) {
    case Aggregation::kMacro: return "macro";
    case Aggregation::kMicro: return "micro";
    case Aggregation::kWeighted: return "weighted";
  }
  return "macro";
}

Metrics AggregateMetrics(const ConfusionMatrix& m, Aggregation aggregation) {
  Metrics out;
  switch (aggregation) {
    case Aggregation::kMacro:
      for (Polarity p : kAllPolarities) {
        const Metrics c = ClassMetrics(m, p);
        out.precision += c.precision;
        out.recall += c.recall;
        out.f_score += c.f_score;
      }
      out.precision /= 3.0;
      out.recall /= 3.0;
      out.f_score /= 3.0;
      break;
    case Aggregation::kMicro: {
      // Pooled fp and fn both equal the off-diagonal mass.
      ClassCounts pooled{m.Trace(), m.Total() - m.Trace(), m.Total() - m.Trace()};
      out.precision = Precision(pooled);
      out.recall = Recall(pooled);
      out.f_score = FScore(out.precision, out.recall);
      break;
    }
    case Aggregation::kWeighted: {
      const uint64_t total = m.Total();
      if (total == 0) break;
      for (Polarity p : kAllPolarities) {
        const double w = SafeRatio(m.RowSum(p), total);
        const Metrics c = ClassMetrics(m, p);
        out.precision += w * c.precision;
        out.recall += w * c.recall;
        out.f_score += w * c.f_score;
      }
      break;
    }
  }
  return out;
}

std::vector<LengthBin> LengthBins(BinScheme scheme) {
  std::vector<LengthBin> bins = {{1000, std::nullopt}, {500, 999}, {100, 499}, {90, 99}};
  if (scheme == BinScheme::kComplete) bins.push_back({80, 89});
  for (size_t lower : {70, 60, 50, 40, 30, 20, 10}) bins.push_back({lower, lower + 9});
  bins.push_back({5, 9});
  bins.push_back({1, 4});
  if (scheme == BinScheme::kComplete) bins.push_back({0, 0});
  return bins;
}

std::string CategoryKey::Label() const {
  switch (kind) {
    case Kind::kAllReviews:
      return "All reviews";
    case Kind::kByGoldPolarity: {
      std::string name(PolarityName(polarity));
      name[0] = static_cast<char>(name[0] - 'a' + 'A');
      return name + " reviews";
    }
    case Kind::kByLength:
      if (!bin.upper) return ">=" + std::to_string(bin.lower) + " tks";
      if (*bin.upper == bin.lower) return std::to_string(bin.lower) + " tks";
      return std::to_string(*bin.upper) + " tks ~" + std::to_string(bin.lower) + " tks";
    case Kind::kUnbinned:
      return "Unbinned";
  }
  return "";
}

CategoryKey Bucket(size_t token_count, BinScheme scheme) {
  for (const LengthBin& bin : LengthBins(scheme)) {
    if (bin.Contains(token_count)) return CategoryKey::Length(bin);
  }
  return CategoryKey::Unbinned();
}

EvaluationReport EvaluateItems(std::span<const LabeledItem> items,
                               const EvaluationOptions& options) {
  const std::vector<LengthBin> bins = LengthBins(options.bins);
  ConfusionMatrix all;
  std::vector<ConfusionMatrix> by_bin(bins.size());
  ConfusionMatrix unbinned;
  for (const LabeledItem& item : items) {
    all.Add(item.gold, item.predicted);
    const auto it = std::find_if(bins.begin(), bins.end(), [&](const LengthBin& b) {
      return b.Contains(item.token_count);
    });
    ConfusionMatrix& target =
        it == bins.end() ? unbinned : by_bin[static_cast<size_t>(it - bins.begin())];
    target.Add(item.gold, item.predicted);
  }

  EvaluationReport report;
  report.rows.push_back({CategoryKey::All(), static_cast<size_t>(all.Total()),
                         AggregateMetrics(all, options.aggregation)});
  for (Polarity p : kAllPolarities) {
    report.rows.push_back({CategoryKey::Gold(p), static_cast<size_t>(all.RowSum(p)),
                           ClassMetrics(all, p)});
  }
  for (size_t i = 0; i < bins.size(); ++i) {
    report.rows.push_back({CategoryKey::Length(bins[i]),
                           static_cast<size_t>(by_bin[i].Total()),
                           AggregateMetrics(by_bin[i], options.aggregation)});
  }
  report.unbinned = {CategoryKey::Unbinned(), static_cast<size_t>(unbinned.Total()),
                     AggregateMetrics(unbinned, options.aggregation)};
  return report;
}

EvaluationReport Evaluate(std::span<const Review> corpus,
                          std::span<const ClassificationResult> results,
                          const EvaluationOptions& options) {
  std::unordered_map<std::string_view, const ClassificationResult*> by_id;
  by_id.reserve(results.size());
  for (const ClassificationResult& r : results) {
    if (!by_id.emplace(r.review_id, &r).second) {
      throw Error(ErrorCode::kDuplicateResult,
                  "more than one result for review '" + r.review_id + "'");
    }
  }
  std::vector<LabeledItem> items;
  items.reserve(corpus.size());
  for (const Review& review : corpus) {
    const auto it = by_id.find(review.id);
    if (it == by_id.end()) {
      throw Error(ErrorCode::kMissingResult, "no result for review '" + review.id + "'");
    }
    const Polarity gold = options.gold == GoldReference::kOverall
                              ? review.gold_overall
                              : MetaphorGoldPolarity(review);
    items.push_back({gold, it->second->predicted, review.token_count});
    by_id.erase(it);
  }
  if (!by_id.empty()) {
    throw Error(ErrorCode::kIdMismatch,
                "result for unknown review '" + std::string(by_id.begin()->first) + "'");
  }
  return EvaluateItems(items, options);
}

FScoreColumn FScores(const EvaluationReport& report) {
  FScoreColumn column;
  for (const MetricsRow& row : report.rows) {
    column.emplace_back(row.category.Label(), row.metrics.f_score);
  }
  return column;
}

std::vector<ComparisonRow> Compare(const FScoreColumn& tool1, const FScoreColumn& tool2) {
  std::unordered_map<std::string, double> second;
  for (const auto& [label, f] : tool2) {
    if (!second.emplace(label, f).second) {
      throw Error(ErrorCode::kCategoryMismatch, "category '" + label + "' repeated");
    }
  }
  std::set<std::string> first_labels;
  std::vector<ComparisonRow> rows;
  for (const auto& [label, f1] : tool1) {
    if (!first_labels.insert(label).second) {
      throw Error(ErrorCode::kCategoryMismatch, "category '" + label + "' repeated");
    }
    const auto it = second.find(label);
    if (it == second.end()) {
      throw Error(ErrorCode::kCategoryMismatch,
                  "category '" + label + "' missing from the second report");
    }
    ComparisonRow row;
    row.category = label;
    row.f_tool1 = f1;
    row.f_tool2 = it->second;
    row.f_best = std::max(f1, it->second);
    row.tie = f1 == it->second;
    rows.push_back(std::move(row));
  }
  if (second.size() != first_labels.size()) {
    for (const auto& [label, f] : tool2) {
      if (!first_labels.contains(label)) {
        throw Error(ErrorCode::kCategoryMismatch,
                    "category '" + label + "' missing from the first report");
      }
    }
  }
  return rows;
}

std::vector<ComparisonRow> Compare(const EvaluationReport& tool1,
                                   const EvaluationReport& tool2) {
  return Compare(FScores(tool1), FScores(tool2));
}

std::string FormatReportCsv(const EvaluationReport& report) {
  std::string out = csv::FormatRow({"category", "review_count", "precision", "recall", "f_score"});
  for (const MetricsRow& row : report.rows) {
    out += csv::FormatRow({row.category.Label(), std::to_string(row.review_count),
                           FormatFixed(row.metrics.precision, 8),
                           FormatFixed(row.metrics.recall, 8),
                           FormatFixed(row.metrics.f_score, 8)});
  }
  return out;
}

FScoreColumn ParseFScoreColumn(std::string_view csv_text) {
  const csv::Table table = csv::Table::FromText(csv_text);
  const size_t category_col = table.RequireColumn("category");
  const size_t f_col = table.RequireColumn("f_score");
  FScoreColumn column;
  for (size_t r = 0; r < table.rows().size(); ++r) {
    const std::string& label = table.Cell(r, category_col);
    column.emplace_back(label, ParseDouble(table.Cell(r, f_col), "category '" + label + "'"));
  }
  return column;
}

std::vector<ReportRecord> ParseReportCsv(std::string_view csv_text) {
  const csv::Table table = csv::Table::FromText(csv_text);
  const size_t category_col = table.RequireColumn("category");
  const size_t count_col = table.RequireColumn("review_count");
  const size_t p_col = table.RequireColumn("precision");
  const size_t r_col = table.RequireColumn("recall");
  const size_t f_col = table.RequireColumn("f_score");
  std::vector<ReportRecord> records;
  for (size_t r = 0; r < table.rows().size(); ++r) {
    ReportRecord record;
    record.category = table.Cell(r, category_col);
    const std::string context = "category '" + record.category + "'";
    const double count = ParseDouble(table.Cell(r, count_col), context);
    if (count < 0 || count != static_cast<double>(static_cast<size_t>(count))) {
      throw Error(ErrorCode::kBadFormat, context + ": bad review count");
    }
    record.review_count = static_cast<size_t>(count);
    record.metrics.precision = ParseDouble(table.Cell(r, p_col), context);
    record.metrics.recall = ParseDouble(table.Cell(r, r_col), context);
    record.metrics.f_score = ParseDouble(table.Cell(r, f_col), context);
    records.push_back(std::move(record));
  }
  return records;
}

std::string FormatComparisonCsv(std::span<const ComparisonRow> rows) {
  std::string out = csv::FormatRow({"category", "f_tool1", "f_tool2", "f_best", "tie"});
  for (const ComparisonRow& row : rows) {
    out += csv::FormatRow({row.category, FormatFixed(row.f_tool1, 8),
                           FormatFixed(row.f_tool2, 8), FormatFixed(row.f_best, 8),
                           row.tie ? "tie" : ""});
  }
  return out;
}

std::string RenderReportTable(const EvaluationReport& report) {
  size_t width = 16;
  for (const MetricsRow& row : report.rows) width = std::max(width, row.category.Label().size());
  std::string out = PadRight("Category", width) + "  Reviews  Precision  Recall  F-score\n";
  auto line = [&](const MetricsRow& row) {
    char nums[96];
    std::snprintf(nums, sizeof(nums), "  %7zu  %9.3f  %6.3f  %7.3f\n", row.review_count,
                  row.metrics.precision, row.metrics.recall, row.metrics.f_score);
    out += PadRight(row.category.Label(), width) + nums;
  };
  for (const MetricsRow& row : report.rows) line(row);
  if (report.unbinned.review_count > 0) line(report.unbinned);
  return out;
}

std::string RenderComparisonTable(std::span<const ComparisonRow> rows) {
  size_t width = 16;
  for (const ComparisonRow& row : rows) width = std::max(width, row.category.size());
  std::string out = PadRight("Category", width) + "  F (tool 1)  F (tool 2)  Highest F\n";
  for (const ComparisonRow& row : rows) {
    char nums[96];
    std::snprintf(nums, sizeof(nums), "  %10.8f  %10.8f  %10.8f%s\n", row.f_tool1,
                  row.f_tool2, row.f_best, row.tie ? "  tie" : "");
    out += PadRight(row.category, width) + nums;
  }
  return out;
}

}  // namespace arasent

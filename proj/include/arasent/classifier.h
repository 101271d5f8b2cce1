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

#ifndef ARASENT_CLASSIFIER_H_
#define ARASENT_CLASSIFIER_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arasent/corpus.h"
#include "arasent/tagset.h"

namespace arasent {

// A sentiment score in exact half units: every weight the classifiers use is
// a multiple of 0.5, so scores are kept as integers and never drift.
class SentimentScore {
 public:
  constexpr SentimentScore() = default;
  static constexpr SentimentScore FromHalfUnits(int64_t half_units) {
    SentimentScore s;
    s.half_units_ = half_units;
    return s;
  }

  constexpr int64_t half_units() const { return half_units_; }
  constexpr double value() const { return static_cast<double>(half_units_) * 0.5; }

  // Decimal with exactly one fractional digit: "0.5", "-1.0", "0.0".
  std::string ToString() const;
  // Inverse of ToString; accepts any decimal that is a multiple of 0.5.
  // Throws Error(kBadFormat).
  static SentimentScore Parse(const std::string& text);

  constexpr SentimentScore operator+(SentimentScore o) const {
    return FromHalfUnits(half_units_ + o.half_units_);
  }
  constexpr SentimentScore operator-(SentimentScore o) const {
    return FromHalfUnits(half_units_ - o.half_units_);
  }
  constexpr SentimentScore operator-() const { return FromHalfUnits(-half_units_); }
  SentimentScore& operator+=(SentimentScore o) {
    half_units_ += o.half_units_;
    return *this;
  }
  constexpr auto operator<=>(const SentimentScore&) const = default;

 private:
  int64_t half_units_ = 0;
};

// Tool 2 treatment of neutral or absent metaphor annotations.
enum class MetaphorNeutralPolicy {
  // Neutral and null annotations add nothing to the tag score.
  kZeroContribution,
  // A review whose annotations are all neutral or null scores zero overall.
  kZeroTotal,
};

struct ClassificationResult {
  std::string review_id;
  SentimentScore base_score;
  SentimentScore metaphor_contribution;
  SentimentScore final_score;
  Polarity predicted = Polarity::kNeutral;
  std::vector<SemanticTag> counted_tags;
};

// +/-0.5 per sign character; unsigned emotion tags weigh 0.
// Throws Error(kNotEmotionTag) for tags outside the E field.
SentimentScore TagScore(const SemanticTag& tag);

struct ReviewScore {
  SentimentScore score;
  std::vector<SemanticTag> counted_tags;  // signed E tags, in token order
};

// Sums TagScore over every signed E tag of every token. Unsigned E tags and
// other fields are skipped, so "E1" never shadows or doubles "E1+".
ReviewScore ScoreTags(std::span<const SemanticTag> tags);
ReviewScore ScoreReview(const TaggedReview& tagged);

// Positive above zero, negative below, neutral at zero.
constexpr Polarity Classify(SentimentScore score) {
  if (score.half_units() > 0) return Polarity::kPositive;
  if (score.half_units() < 0) return Polarity::kNegative;
  return Polarity::kNeutral;
}

// +2 for positive, -2 for negative, 0 for neutral or null.
SentimentScore MetaphorContribution(const MetaphorAnnotation& annotation);

// Gold label on the score scale: +1, -1 or 0.
SentimentScore GoldToScore(Polarity polarity);

// Tool 1: emotion tags only.
ClassificationResult ClassifySemantic(const TaggedReview& tagged);

// Tool 2: Tool 1 plus the summed metaphor contributions of review.metaphors.
// Throws Error(kIdMismatch) when tagged and review disagree on the id.
ClassificationResult ClassifyWithMetaphor(
    const TaggedReview& tagged, const Review& review,
    MetaphorNeutralPolicy policy = MetaphorNeutralPolicy::kZeroContribution);

// Review-level label derived from the metaphor gold annotations: the sign of
// the summed GoldToScore values, with null annotations counted as 0.
Polarity MetaphorGoldPolarity(const Review& review);

enum class Tool {
  kSemanticOnly,  // Tool 1
  kWithMetaphor,  // Tool 2
};

struct ClassifierOptions {
  Tool tool = Tool::kSemanticOnly;
  TagStreamOptions tag_stream;
  MetaphorNeutralPolicy metaphor_neutral = MetaphorNeutralPolicy::kZeroContribution;
  // Parse every review's tagged_text in this format instead of its own.
  std::optional<TaggedFormat> format_override;
};

// One result per review, in corpus order. Parse errors carry the review id.
std::vector<ClassificationResult> ClassifyCorpus(std::span<const Review> corpus,
                                                 const ClassifierOptions& options = {},
                                                 std::vector<ParseWarning>* warnings = nullptr);

// id,base_score,metaphor_contribution,final_score,predicted,counted_tags
// with one fractional digit per score and ';'-joined raw tags.
std::string FormatClassificationsCsv(std::span<const ClassificationResult> results);
// Throws kMissingColumn, kBadPolarityLabel, kBadFormat, kTagParseError.
std::vector<ClassificationResult> ParseClassificationsCsv(std::string_view csv_text);

}  // namespace arasent

#endif  // ARASENT_CLASSIFIER_H_

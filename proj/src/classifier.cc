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

#include "arasent/classifier.h"

#include <charconv>

#include "arasent/csv.h"
#include "arasent/error.h"

namespace arasent {

std::string SentimentScore::ToString() const {
  const int64_t magnitude = half_units_ < 0 ? -half_units_ : half_units_;
  std::string out = half_units_ < 0 ? "-" : "";
  out += std::to_string(magnitude / 2);
  out += magnitude % 2 == 0 ? ".0" : ".5";
  return out;
}

SentimentScore SentimentScore::Parse(const std::string& text) {
  auto fail = [&]() -> SentimentScore {
    throw Error(ErrorCode::kBadFormat, "bad sentiment score '" + text + "'");
  };
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const size_t dot = s.find('.');
  const std::string_view whole = s.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? "" : s.substr(dot + 1);
  if (whole.empty()) return fail();
  int64_t units = 0;
  auto [ptr, ec] = std::from_chars(whole.data(), whole.data() + whole.size(), units);
  if (ec != std::errc() || ptr != whole.data() + whole.size()) return fail();
  while (!frac.empty() && frac.back() == '0') frac.remove_suffix(1);
  int64_t half = units * 2;
  if (frac == "5") {
    half += 1;
  } else if (!frac.empty()) {
    return fail();
  }
  return FromHalfUnits(negative ? -half : half);
}

SentimentScore TagScore(const SemanticTag& tag) {
  if (!IsEmotionTag(tag)) {
    throw Error(ErrorCode::kNotEmotionTag, "not an emotion tag: '" + tag.raw() + "'");
  }
  switch (tag.sign) {
    case TagSign::kPlus: return SentimentScore::FromHalfUnits(tag.intensity);
    case TagSign::kMinus: return SentimentScore::FromHalfUnits(-tag.intensity);
    case TagSign::kNone: return {};
  }
  return {};
}

ReviewScore ScoreTags(std::span<const SemanticTag> tags) {
  ReviewScore result;
  for (const SemanticTag& tag : tags) {
    if (!IsEmotionTag(tag) || tag.sign == TagSign::kNone) continue;
    result.score += TagScore(tag);
    result.counted_tags.push_back(tag);
  }
  return result;
}

ReviewScore ScoreReview(const TaggedReview& tagged) {
  ReviewScore result;
  for (const TaggedToken& token : tagged.tokens) {
    ReviewScore part = ScoreTags(token.tags);
    result.score += part.score;
    result.counted_tags.insert(result.counted_tags.end(), part.counted_tags.begin(),
                               part.counted_tags.end());
  }
  return result;
}

SentimentScore MetaphorContribution(const MetaphorAnnotation& annotation) {
  switch (annotation.gold_polarity) {
    case MetaphorPolarity::kPositive: return SentimentScore::FromHalfUnits(4);
    case MetaphorPolarity::kNegative: return SentimentScore::FromHalfUnits(-4);
    case MetaphorPolarity::kNeutral:
    case MetaphorPolarity::kNull:
      return {};
  }
  return {};
}

SentimentScore GoldToScore(Polarity polarity) {
  switch (polarity) {
    case Polarity::kPositive: return SentimentScore::FromHalfUnits(2);
    case Polarity::kNegative: return SentimentScore::FromHalfUnits(-2);
    case Polarity::kNeutral: return {};
  }
  return {};
}

ClassificationResult ClassifySemantic(const TaggedReview& tagged) {
  ReviewScore scored = ScoreReview(tagged);
  ClassificationResult result;
  result.review_id = tagged.review_id;
  result.base_score = scored.score;
  result.final_score = scored.score;
  result.predicted = Classify(scored.score);
  result.counted_tags = std::move(scored.counted_tags);
  return result;
}

ClassificationResult ClassifyWithMetaphor(const TaggedReview& tagged,
                                          const Review& review,
                                          MetaphorNeutralPolicy policy) {
  if (tagged.review_id != review.id) {
    throw Error(ErrorCode::kIdMismatch, "tagged review '" + tagged.review_id +
                                            "' does not match review '" +
                                            review.id + "'");
  }
  ClassificationResult result = ClassifySemantic(tagged);
  SentimentScore contribution;
  bool any_signed = false;
  for (const MetaphorAnnotation& annotation : review.metaphors) {
    contribution += MetaphorContribution(annotation);
    any_signed = any_signed ||
                 annotation.gold_polarity == MetaphorPolarity::kPositive ||
                 annotation.gold_polarity == MetaphorPolarity::kNegative;
  }
  if (policy == MetaphorNeutralPolicy::kZeroTotal && !review.metaphors.empty() &&
      !any_signed) {
    contribution = -result.base_score;
  }
  result.metaphor_contribution = contribution;
  result.final_score = result.base_score + contribution;
  result.predicted = Classify(result.final_score);
  return result;
}

Polarity MetaphorGoldPolarity(const Review& review) {
  SentimentScore total;
  for (const MetaphorAnnotation& annotation : review.metaphors) {
    switch (annotation.gold_polarity) {
      case MetaphorPolarity::kPositive: total += GoldToScore(Polarity::kPositive); break;
      case MetaphorPolarity::kNegative: total += GoldToScore(Polarity::kNegative); break;
      case MetaphorPolarity::kNeutral: total += GoldToScore(Polarity::kNeutral); break;
      case MetaphorPolarity::kNull: break;
    }
  }
  return Classify(total);
}

std::vector<ClassificationResult> ClassifyCorpus(std::span<const Review> corpus,
                                                 const ClassifierOptions& options,
                                                 std::vector<ParseWarning>* warnings) {
  std::vector<ClassificationResult> results;
  results.reserve(corpus.size());
  for (const Review& review : corpus) {
    TaggedReview tagged;
    if (options.format_override) {
      Review reformatted = review;
      reformatted.tagged_format = *options.format_override;
      tagged = TagReview(reformatted, options.tag_stream, warnings);
    } else {
      tagged = TagReview(review, options.tag_stream, warnings);
    }
    results.push_back(options.tool == Tool::kSemanticOnly
                          ? ClassifySemantic(tagged)
                          : ClassifyWithMetaphor(tagged, review, options.metaphor_neutral));
  }
  return results;
}

std::string FormatClassificationsCsv(std::span<const ClassificationResult> results) {
  std::string out = csv::FormatRow({"id", "base_score", "metaphor_contribution",
                                    "final_score", "predicted", "counted_tags"});
  for (const ClassificationResult& r : results) {
    std::string tags;
    for (size_t i = 0; i < r.counted_tags.size(); ++i) {
      if (i > 0) tags += ';';
      tags += r.counted_tags[i].raw();
    }
    out += csv::FormatRow({r.review_id, r.base_score.ToString(),
                           r.metaphor_contribution.ToString(), r.final_score.ToString(),
                           std::string(PolarityName(r.predicted)), tags});
  }
  return out;
}

std::vector<ClassificationResult> ParseClassificationsCsv(std::string_view csv_text) {
  const csv::Table table = csv::Table::FromText(csv_text);
  const size_t id_col = table.RequireColumn("id");
  const size_t base_col = table.RequireColumn("base_score");
  const size_t contribution_col = table.RequireColumn("metaphor_contribution");
  const size_t final_col = table.RequireColumn("final_score");
  const size_t predicted_col = table.RequireColumn("predicted");
  const size_t tags_col = table.RequireColumn("counted_tags");

  std::vector<ClassificationResult> results;
  for (size_t r = 0; r < table.rows().size(); ++r) {
    ClassificationResult result;
    result.review_id = table.Cell(r, id_col);
    result.base_score = SentimentScore::Parse(table.Cell(r, base_col));
    result.metaphor_contribution = SentimentScore::Parse(table.Cell(r, contribution_col));
    result.final_score = SentimentScore::Parse(table.Cell(r, final_col));
    result.predicted = ParsePolarityLabel(table.Cell(r, predicted_col));
    if (result.final_score != result.base_score + result.metaphor_contribution ||
        result.predicted != Classify(result.final_score)) {
      throw Error(ErrorCode::kBadFormat,
                  "inconsistent scores for review '" + result.review_id + "'");
    }
    const std::string& tags = table.Cell(r, tags_col);
    size_t start = 0;
    while (start < tags.size()) {
      size_t end = tags.find(';', start);
      if (end == std::string::npos) end = tags.size();
      try {
        result.counted_tags.push_back(ParseTag(std::string_view(tags).substr(start, end - start)));
      } catch (const Error& e) {
        throw Error(ErrorCode::kTagParseError,
                    "review '" + result.review_id + "': " + e.what());
      }
      start = end + 1;
    }
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace arasent

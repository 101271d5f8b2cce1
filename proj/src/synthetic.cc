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

#include "arasent/synthetic.h"

#include <array>
#include <random>
#include <string>
#include <string_view>

#include "arasent/error.h"

namespace arasent {
namespace {

constexpr std::array<std::string_view, 24> kWords = {
    "كتاب",  "رائع",   "جدا",   "الرواية", "جميلة", "ممل",   "القصة", "الكاتب",
    "اسلوب", "ضعيف",   "ممتع",  "النهاية", "حزين",  "قرأت",  "الفصل", "الشخصيات",
    "لغة",   "سهلة",   "بحر",   "قلبي",    "نور",   "ظلام",  "صفحات", "أنصح"};

constexpr std::array<std::string_view, 9> kOtherTags = {
    "Z5", "A1.1.1", "N1", "X2.1", "S2mf", "T1.1.2", "O1", "Q2.1", "Z99"};

constexpr std::array<std::string_view, 7> kEmotionCodes = {
    "1", "2", "3", "4.1", "4.2", "5", "6"};

constexpr std::array<std::string_view, 4> kMetaphors = {
    "بحر من المشاعر", "قلبي يطير", "نور في الظلام", "جبل من الملل"};

class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}
  // Uniform-enough integer in [0, n).
  size_t Below(size_t n) { return static_cast<size_t>(engine_() % n); }
  bool Percent(int p) { return Below(100) < static_cast<size_t>(p); }

  template <typename T>
  void Shuffle(std::vector<T>* v) {
    for (size_t i = v->size(); i > 1; --i) std::swap((*v)[i - 1], (*v)[Below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

// Sign of a generated emotion tag: +1, -1, or 0 for an unsigned tag.
int DrawSign(Rng& rng, Polarity gold, int agreement) {
  if (rng.Percent(15)) return 0;
  const int agreeing = gold == Polarity::kPositive ? 1 : gold == Polarity::kNegative ? -1 : 0;
  if (agreeing != 0 && rng.Percent(agreement)) return agreeing;
  return rng.Percent(50) ? 1 : -1;
}

std::string EmotionTag(Rng& rng, int sign) {
  std::string tag = "E";
  tag += kEmotionCodes[rng.Below(kEmotionCodes.size())];
  if (sign != 0) tag.append(1 + rng.Below(3), sign > 0 ? '+' : '-');
  return tag;
}

MetaphorPolarity DrawMetaphor(Rng& rng, Polarity gold) {
  if (rng.Percent(40)) return MetaphorPolarity::kNull;
  if (rng.Percent(60)) {
    switch (gold) {
      case Polarity::kPositive: return MetaphorPolarity::kPositive;
      case Polarity::kNegative: return MetaphorPolarity::kNegative;
      case Polarity::kNeutral: return MetaphorPolarity::kNeutral;
    }
  }
  constexpr MetaphorPolarity kAny[] = {MetaphorPolarity::kPositive,
                                       MetaphorPolarity::kNegative,
                                       MetaphorPolarity::kNeutral};
  return kAny[rng.Below(3)];
}

}  // namespace

std::vector<Review> GenerateSyntheticCorpus(const SyntheticCorpusOptions& options) {
  const size_t total = options.positive + options.negative + options.neutral;
  std::vector<size_t> lengths;
  Rng rng(options.seed);
  for (const auto& [range, count] : options.length_plan) {
    if (range.first > range.second) {
      throw Error(ErrorCode::kInvalidArgument, "inverted length range");
    }
    for (size_t i = 0; i < count; ++i) {
      lengths.push_back(range.first + rng.Below(range.second - range.first + 1));
    }
  }
  if (lengths.size() != total) {
    throw Error(ErrorCode::kInvalidArgument,
                "length plan covers " + std::to_string(lengths.size()) +
                    " reviews but labels cover " + std::to_string(total));
  }
  std::vector<Polarity> labels;
  labels.insert(labels.end(), options.positive, Polarity::kPositive);
  labels.insert(labels.end(), options.negative, Polarity::kNegative);
  labels.insert(labels.end(), options.neutral, Polarity::kNeutral);
  rng.Shuffle(&labels);
  rng.Shuffle(&lengths);

  std::vector<Review> reviews;
  reviews.reserve(total);
  for (size_t r = 0; r < total; ++r) {
    Review review;
    review.id = "r" + std::to_string(r + 1);
    review.gold_overall = labels[r];
    review.token_count = lengths[r];

    std::vector<TaggedToken> tokens;
    for (size_t t = 0; t < lengths[r]; ++t) {
      TaggedToken token;
      token.surface = std::string(kWords[rng.Below(kWords.size())]);
      if (t > 0) review.raw_text += ' ';
      review.raw_text += token.surface;
      if (rng.Percent(3)) {
        // Left untagged, as the tagger does for some special characters.
      } else if (rng.Percent(12)) {
        token.tags.push_back(ParseTag(EmotionTag(rng, DrawSign(rng, labels[r],
                                                               options.agreement_percent))));
        if (rng.Percent(20)) token.tags.push_back(ParseTag(EmotionTag(rng, DrawSign(rng, labels[r], 50))));
      } else {
        token.tags.push_back(ParseTag(kOtherTags[rng.Below(kOtherTags.size())]));
        if (rng.Percent(10)) token.tags.push_back(ParseTag(EmotionTag(rng, DrawSign(rng, labels[r], 50))));
      }
      tokens.push_back(std::move(token));
    }
    review.tagged_format = options.mixed_formats ? static_cast<TaggedFormat>(r % 3)
                                                 : TaggedFormat::kHorizontal;
    review.tagged_text = RenderTagStream(tokens, review.tagged_format);

    MetaphorAnnotation annotation;
    annotation.gold_polarity = DrawMetaphor(rng, labels[r]);
    if (annotation.gold_polarity != MetaphorPolarity::kNull) {
      annotation.surface = std::string(kMetaphors[rng.Below(kMetaphors.size())]);
    }
    review.metaphors.push_back(std::move(annotation));
    reviews.push_back(std::move(review));
  }
  return reviews;
}

}  // namespace arasent

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

#include "arasent/tagset.h"

#include <random>
#include <string>

#include "arasent/error.h"
#include "gtest/gtest.h"

namespace arasent {
namespace {

ErrorCode ParseError(const std::string& raw) {
  try {
    ParseTag(raw);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error for '" << raw << "'";
  return ErrorCode::kInvalidArgument;
}

TEST(ParseTag, SignedEmotionTag) {
  const SemanticTag tag = ParseTag("E4.1+");
  EXPECT_EQ(tag.field_letter, 'E');
  EXPECT_EQ(tag.category_code, "4.1");
  EXPECT_EQ(tag.sign, TagSign::kPlus);
  EXPECT_EQ(tag.intensity, 1);
}

TEST(ParseTag, UnsignedTag) {
  const SemanticTag tag = ParseTag("Z5");
  EXPECT_EQ(tag.field_letter, 'Z');
  EXPECT_EQ(tag.category_code, "5");
  EXPECT_EQ(tag.sign, TagSign::kNone);
  EXPECT_EQ(tag.intensity, 0);
}

TEST(ParseTag, TripleMinus) {
  const SemanticTag tag = ParseTag("E2---");
  EXPECT_EQ(tag.category_code, "2");
  EXPECT_EQ(tag.sign, TagSign::kMinus);
  EXPECT_EQ(tag.intensity, 3);
}

TEST(ParseTag, BareLetterAndSignOnlyCode) {
  const SemanticTag bare = ParseTag("E");
  EXPECT_EQ(bare.category_code, "");
  EXPECT_EQ(bare.sign, TagSign::kNone);
  const SemanticTag signed_bare = ParseTag("E++");
  EXPECT_EQ(signed_bare.category_code, "");
  EXPECT_EQ(signed_bare.intensity, 2);
}

TEST(ParseTag, ModifiersStayInCategoryCode) {
  const SemanticTag tag = ParseTag("S2mf");
  EXPECT_EQ(tag.category_code, "2mf");
  EXPECT_EQ(tag.sign, TagSign::kNone);
  const SemanticTag pct = ParseTag("A5.1%+");
  EXPECT_EQ(pct.category_code, "5.1%");
  EXPECT_EQ(pct.sign, TagSign::kPlus);
  // A sign that is not at the end belongs to the code.
  EXPECT_EQ(ParseTag("E+1").category_code, "+1");
}

TEST(ParseTag, Errors) {
  EXPECT_EQ(ParseError(""), ErrorCode::kEmptyTag);
  EXPECT_EQ(ParseError("e1+"), ErrorCode::kBadLeadingChar);
  EXPECT_EQ(ParseError("4E"), ErrorCode::kBadLeadingChar);
  EXPECT_EQ(ParseError("+E"), ErrorCode::kBadLeadingChar);
  EXPECT_EQ(ParseError("E1+-"), ErrorCode::kMixedSigns);
  EXPECT_EQ(ParseError("E1-+"), ErrorCode::kMixedSigns);
  EXPECT_EQ(ParseError("E1++++"), ErrorCode::kExcessIntensity);
  EXPECT_EQ(ParseError("E1 +"), ErrorCode::kInvalidCharacter);
  EXPECT_EQ(ParseError("E1/E2"), ErrorCode::kInvalidCharacter);
}

TEST(TagPolarity, FollowsSign) {
  EXPECT_EQ(TagPolarity(ParseTag("E4.1++")), Polarity::kPositive);
  EXPECT_EQ(TagPolarity(ParseTag("E1")), Polarity::kNeutral);
  EXPECT_EQ(TagPolarity(ParseTag("E2---")), Polarity::kNegative);
}

TEST(IsEmotionTag, FieldLetterOnly) {
  EXPECT_TRUE(IsEmotionTag(ParseTag("E1+")));
  EXPECT_FALSE(IsEmotionTag(ParseTag("Z5")));
  EXPECT_TRUE(IsEmotionTag(ParseTag("E")));
}

std::string RandomValidTag(std::mt19937_64& rng) {
  static const std::string kCodeChars = "0123456789.abcfmn%@";
  std::string raw(1, static_cast<char>('A' + rng() % 26));
  const size_t code_len = rng() % 6;
  for (size_t i = 0; i < code_len; ++i) raw += kCodeChars[rng() % kCodeChars.size()];
  const int intensity = static_cast<int>(rng() % 4);
  raw.append(static_cast<size_t>(intensity), rng() % 2 ? '+' : '-');
  return raw;
}

// Round trip and sign/intensity consistency over the accepted grammar.
TEST(ParseTagProperty, RoundTripAndSignHomogeneity) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 20000; ++i) {
    const std::string raw = RandomValidTag(rng);
    const SemanticTag tag = ParseTag(raw);
    ASSERT_EQ(tag.raw(), raw);
    ASSERT_EQ(tag.sign == TagSign::kNone, tag.intensity == 0) << raw;
    ASSERT_LE(tag.intensity, kMaxIntensity);
  }
}

// Any byte string either parses into a well-formed tag or raises a typed
// error.
TEST(ParseTagProperty, TotalOverArbitraryBytes) {
  std::mt19937_64 rng(7);
  static const std::string kBiased = "E+-Z5.1 /\t\x80\xff";
  for (int i = 0; i < 50000; ++i) {
    std::string raw;
    const size_t len = rng() % 9;
    for (size_t k = 0; k < len; ++k) {
      raw += rng() % 2 ? kBiased[rng() % kBiased.size()] : static_cast<char>(rng() % 256);
    }
    try {
      const SemanticTag tag = ParseTag(raw);
      ASSERT_EQ(tag.raw(), raw);
      ASSERT_EQ(tag.sign == TagSign::kNone, tag.intensity == 0);
    } catch (const Error&) {
      // Typed rejection is the only permitted failure.
    }
  }
}

}  // namespace
}  // namespace arasent

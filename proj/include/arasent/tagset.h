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

#ifndef ARASENT_TAGSET_H_
#define ARASENT_TAGSET_H_

#include <string>
#include <string_view>

namespace arasent {

enum class Polarity { kPositive, kNegative, kNeutral };

inline constexpr Polarity kAllPolarities[] = {
    Polarity::kPositive, Polarity::kNegative, Polarity::kNeutral};

// Lowercase label used in every file format: "positive", "negative",
// "neutral".
std::string_view PolarityName(Polarity p);

// Index into 3-element arrays, in kAllPolarities order.
constexpr int PolarityIndex(Polarity p) { return static_cast<int>(p); }

enum class TagSign { kNone, kPlus, kMinus };

// One semantic tag as emitted by a USAS-style tagger, e.g. "E4.1+".
//
// A tag is an uppercase field letter, an opaque category code, and an
// optional homogeneous run of 1-3 '+' or '-' characters. The number of sign
// characters is the intensity; an unsigned tag has intensity 0.
struct SemanticTag {
  char field_letter = 'Z';
  std::string category_code;
  TagSign sign = TagSign::kNone;
  int intensity = 0;

  // The tag text, rebuilt from the parts. Equal to the parsed input.
  std::string raw() const;

  bool operator==(const SemanticTag&) const = default;
};

inline constexpr int kMaxIntensity = 3;

// Parses one tag. Throws arasent::Error with kEmptyTag, kBadLeadingChar,
// kInvalidCharacter (whitespace, control bytes or '/'), kMixedSigns or
// kExcessIntensity.
//
// Anything between the field letter and the sign suffix is kept verbatim as
// the category code, so USAS modifiers such as "f", "m", "%" or "@" pass
// through untouched.
SemanticTag ParseTag(std::string_view raw);

// True for the emotion field ('E').
inline bool IsEmotionTag(const SemanticTag& tag) {
  return tag.field_letter == 'E';
}

Polarity TagPolarity(const SemanticTag& tag);

}  // namespace arasent

#endif  // ARASENT_TAGSET_H_

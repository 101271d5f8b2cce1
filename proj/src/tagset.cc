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

#include <string>

#include "arasent/error.h"

namespace arasent {

std::string_view PolarityName(Polarity p) {
  switch (p) {
    case Polarity::kPositive: return "positive";
    case Polarity::kNegative: return "negative";
    case Polarity::kNeutral: return "neutral";
  }
  return "neutral";
}

std::string SemanticTag::raw() const {
  std::string out(1, field_letter);
  out += category_code;
  if (sign != TagSign::kNone) {
    out.append(static_cast<size_t>(intensity), sign == TagSign::kPlus ? '+' : '-');
  }
  return out;
}

SemanticTag ParseTag(std::string_view raw) {
  if (raw.empty()) throw Error(ErrorCode::kEmptyTag, "empty tag");
  const unsigned char lead = static_cast<unsigned char>(raw.front());
  if (lead < 'A' || lead > 'Z') {
    throw Error(ErrorCode::kBadLeadingChar,
                "tag must start with an uppercase ASCII letter: '" +
                    std::string(raw) + "'");
  }
  for (char ch : raw) {
    const unsigned char c = static_cast<unsigned char>(ch);
    if (c <= 0x20 || c == 0x7f || c == '/') {
      throw Error(ErrorCode::kInvalidCharacter,
                  "invalid character in tag '" + std::string(raw) + "'");
    }
  }

  size_t suffix_begin = raw.size();
  while (suffix_begin > 1 &&
         (raw[suffix_begin - 1] == '+' || raw[suffix_begin - 1] == '-')) {
    --suffix_begin;
  }
  const std::string_view suffix = raw.substr(suffix_begin);

  SemanticTag tag;
  tag.field_letter = raw.front();
  tag.category_code = std::string(raw.substr(1, suffix_begin - 1));
  if (suffix.empty()) return tag;

  if (suffix.find_first_not_of(suffix.front()) != std::string_view::npos) {
    throw Error(ErrorCode::kMixedSigns,
                "mixed '+' and '-' in tag '" + std::string(raw) + "'");
  }
  if (suffix.size() > static_cast<size_t>(kMaxIntensity)) {
    throw Error(ErrorCode::kExcessIntensity,
                "more than 3 sign characters in tag '" + std::string(raw) + "'");
  }
  tag.sign = suffix.front() == '+' ? TagSign::kPlus : TagSign::kMinus;
  tag.intensity = static_cast<int>(suffix.size());
  return tag;
}

Polarity TagPolarity(const SemanticTag& tag) {
  switch (tag.sign) {
    case TagSign::kPlus: return Polarity::kPositive;
    case TagSign::kMinus: return Polarity::kNegative;
    case TagSign::kNone: return Polarity::kNeutral;
  }
  return Polarity::kNeutral;
}

}  // namespace arasent

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

#include "arasent/error.h"

namespace arasent {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyTag: return "EmptyTag";
    case ErrorCode::kBadLeadingChar: return "BadLeadingChar";
    case ErrorCode::kInvalidCharacter: return "InvalidCharacter";
    case ErrorCode::kMixedSigns: return "MixedSigns";
    case ErrorCode::kExcessIntensity: return "ExcessIntensity";
    case ErrorCode::kTagParseError: return "TagParseError";
    case ErrorCode::kXmlError: return "XmlError";
    case ErrorCode::kCsvError: return "CsvError";
    case ErrorCode::kMissingColumn: return "MissingColumn";
    case ErrorCode::kBadPolarityLabel: return "BadPolarityLabel";
    case ErrorCode::kBadFormat: return "BadFormat";
    case ErrorCode::kCollidingPlaceholder: return "CollidingPlaceholder";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNotEmotionTag: return "NotEmotionTag";
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kIdMismatch: return "IdMismatch";
    case ErrorCode::kMissingResult: return "MissingResult";
    case ErrorCode::kDuplicateResult: return "DuplicateResult";
    case ErrorCode::kCategoryMismatch: return "CategoryMismatch";
  }
  return "Unknown";
}

int ExitStatusFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateId:
    case ErrorCode::kIdMismatch:
    case ErrorCode::kMissingResult:
    case ErrorCode::kDuplicateResult:
    case ErrorCode::kCategoryMismatch:
      return 3;
    default:
      return 2;
  }
}

}  // namespace arasent

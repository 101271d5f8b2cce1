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

#ifndef ARASENT_ERROR_H_
#define ARASENT_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace arasent {

// Every failure raised by the library carries one of these codes. The CLI
// prints the code name as a machine-parsable prefix and maps it to an exit
// status (see ExitStatusFor).
enum class ErrorCode {
  // Tag grammar.
  kEmptyTag,
  kBadLeadingChar,
  kInvalidCharacter,
  kMixedSigns,
  kExcessIntensity,
  // Tag streams and files.
  kTagParseError,
  kXmlError,
  kCsvError,
  kMissingColumn,
  kBadPolarityLabel,
  kBadFormat,
  kCollidingPlaceholder,
  kIoError,
  kInvalidArgument,
  // Scoring.
  kNotEmotionTag,
  // Input consistency.
  kDuplicateId,
  kIdMismatch,
  kMissingResult,
  kDuplicateResult,
  kCategoryMismatch,
};

std::string_view ErrorCodeName(ErrorCode code);

// Process exit status for an error: 3 for input-consistency failures, 2 for
// everything else (I/O and parse errors).
int ExitStatusFor(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace arasent

#endif  // ARASENT_ERROR_H_

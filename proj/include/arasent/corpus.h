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

#ifndef ARASENT_CORPUS_H_
#define ARASENT_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arasent/tagset.h"

namespace arasent {

enum class TaggedFormat { kHorizontal, kVertical, kXml };

std::string_view TaggedFormatName(TaggedFormat format);
// Case-insensitive; throws Error(kBadFormat).
TaggedFormat ParseTaggedFormat(std::string_view name);

// Gold sentiment of one annotated metaphor. kNull means no annotation.
enum class MetaphorPolarity { kPositive, kNegative, kNeutral, kNull };

struct MetaphorAnnotation {
  std::string surface;
  MetaphorPolarity gold_polarity = MetaphorPolarity::kNull;

  bool operator==(const MetaphorAnnotation&) const = default;
};

// One corpus row. tagged_text holds the tagger output for the review in
// tagged_format and is parsed on demand by TagReview.
struct Review {
  std::string id;
  std::string raw_text;
  size_t token_count = 0;
  Polarity gold_overall = Polarity::kNeutral;
  std::string tagged_text;
  TaggedFormat tagged_format = TaggedFormat::kHorizontal;
  std::vector<MetaphorAnnotation> metaphors;

  bool operator==(const Review&) const = default;
};

struct TaggedToken {
  std::string surface;
  std::vector<SemanticTag> tags;  // empty for tokens the tagger skipped

  bool operator==(const TaggedToken&) const = default;
};

struct TaggedReview {
  std::string review_id;
  std::vector<TaggedToken> tokens;
};

struct Batch {
  size_t index = 0;
  std::vector<Review> reviews;
};

inline constexpr size_t kDefaultBatchSize = 100;

// Which of several '/'-separated candidate tags on one token are kept.
enum class CandidatePolicy { kFirstTag, kAllTags };

struct TagStreamOptions {
  CandidatePolicy candidates = CandidatePolicy::kFirstTag;
};

// Recoverable oddities in tagger output. The token is kept with no tags.
struct ParseWarning {
  size_t token_index = 0;
  std::string message;
};

// Horizontal format: whitespace separated "surface_TAG[/TAG...]" items; the
// last '_' separates surface from tags. An item without '_' becomes an
// untagged token and records a warning; an empty tag field ("*_") is an
// untagged token without a warning. Tag errors are rethrown as
// Error(kTagParseError) naming the token position.
std::vector<TaggedToken> ParseHorizontal(std::string_view text,
                                         const TagStreamOptions& options = {},
                                         std::vector<ParseWarning>* warnings = nullptr);

// Vertical format: one token per line, surface and tags separated by a tab.
// When a line has more than two tab-separated columns the last one holds the
// tags. Blank lines are skipped.
std::vector<TaggedToken> ParseVertical(std::string_view text,
                                       const TagStreamOptions& options = {},
                                       std::vector<ParseWarning>* warnings = nullptr);

// XML format: every element carrying a "tag" attribute, and every <w> or
// <token> element, is one token whose surface is its trimmed text content.
// Malformed XML throws Error(kXmlError) with the byte offset.
std::vector<TaggedToken> ParseXml(std::string_view text,
                                  const TagStreamOptions& options = {},
                                  std::vector<ParseWarning>* warnings = nullptr);

std::vector<TaggedToken> ParseTagStream(std::string_view text, TaggedFormat format,
                                        const TagStreamOptions& options = {},
                                        std::vector<ParseWarning>* warnings = nullptr);

std::string RenderHorizontal(std::span<const TaggedToken> tokens);
std::string RenderVertical(std::span<const TaggedToken> tokens);
std::string RenderXml(std::span<const TaggedToken> tokens);
std::string RenderTagStream(std::span<const TaggedToken> tokens, TaggedFormat format);

// Parses review.tagged_text. Errors are rethrown with the review id in the
// message.
TaggedReview TagReview(const Review& review, const TagStreamOptions& options = {},
                       std::vector<ParseWarning>* warnings = nullptr);

// Token counting splits on a configurable set of code points; the default is
// ASCII whitespace. Invalid UTF-8 bytes count as token characters.
struct TokenizerOptions {
  std::u32string delimiters = U" \t\n\r\v\f";
};

size_t CountTokens(std::string_view text, const TokenizerOptions& options = {});

// Accepts positive/pos, negative/neg, neutral/neu (any case, surrounding
// whitespace ignored) and the Arabic labels. Throws Error(kBadPolarityLabel).
Polarity ParsePolarityLabel(std::string_view label);

// As ParsePolarityLabel, plus "" and "null"/"none" for kNull.
MetaphorPolarity ParseMetaphorPolarityLabel(std::string_view label);
// Empty string for kNull.
std::string_view MetaphorPolarityName(MetaphorPolarity p);

struct CorpusOptions {
  TokenizerOptions tokenizer;
};

// Corpus CSV with header
//   id,text,gold_overall,tagged_text,tagged_format[,metaphor_K_surface,metaphor_K_polarity...]
// Metaphor groups are numbered from 1 and every group in the header yields
// one annotation per review (kNull when both cells are empty).
// Errors: kMissingColumn, kBadPolarityLabel, kBadFormat, kDuplicateId,
// kCsvError, and kIoError for unreadable files.
std::vector<Review> ParseCorpus(std::string_view csv_text,
                                const CorpusOptions& options = {});
std::vector<Review> LoadCorpus(const std::filesystem::path& path,
                               const CorpusOptions& options = {});

// Writes as many metaphor groups as the longest annotation list, and at
// least one.
std::string FormatCorpus(std::span<const Review> reviews);
void WriteCorpus(const std::filesystem::path& path, std::span<const Review> reviews);

// Ordered (character, placeholder) pairs. The character is one UTF-8 encoded
// code point; the placeholder is ASCII letters surrounded by single spaces.
using SubstitutionMap = std::vector<std::pair<std::string, std::string>>;

// {'.' -> " FS ", '!' -> " EX "}.
SubstitutionMap DefaultSubstitutionMap();

// Parses "CHAR=LETTERS[,CHAR=LETTERS...]", e.g. ".=FS,!=EX,؟=QM". The
// placeholder for each entry is " LETTERS ". Throws Error(kInvalidArgument)
// on malformed specs, non-letter placeholders, or placeholders where one
// contains another.
SubstitutionMap ParseSubstitutionSpec(std::string_view spec);

// Replaces every occurrence of each mapped character with its placeholder.
// Throws Error(kCollidingPlaceholder) when a placeholder's letters already
// occur in text, since the substitution could then not be undone.
std::string PreprocessForTagger(std::string_view text, const SubstitutionMap& map);

// Inverse of PreprocessForTagger on collision-free input.
std::string RestoreFromTagger(std::string_view text, const SubstitutionMap& map);

// Splits into consecutive batches of batch_size reviews; the last may be
// shorter. Throws Error(kInvalidArgument) for batch_size 0.
std::vector<Batch> BatchSplit(std::span<const Review> reviews,
                              size_t batch_size = kDefaultBatchSize);

// "batch_000.csv", "batch_001.csv", ...
std::string BatchFileName(size_t index);

// Whole-file helpers; throw Error(kIoError).
std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, std::string_view contents);

}  // namespace arasent

#endif  // ARASENT_CORPUS_H_

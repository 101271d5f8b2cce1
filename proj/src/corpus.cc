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

#include "arasent/corpus.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>
#include <unordered_set>

#include "arasent/csv.h"
#include "arasent/error.h"
#include "arasent/xml.h"

namespace arasent {
namespace {

bool IsAsciiSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && IsAsciiSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsAsciiSpace(s.back())) s.remove_suffix(1);
  return s;
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

// Decodes one code point starting at s[*i] and advances *i. Malformed bytes
// decode to U+FFFD and advance by one.
char32_t NextCodePoint(std::string_view s, size_t* i) {
  const auto b0 = static_cast<unsigned char>(s[*i]);
  int len = 0;
  char32_t cp = 0;
  if (b0 < 0x80) {
    ++*i;
    return b0;
  } else if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    ++*i;
    return U'\uFFFD';
  }
  if (*i + len > s.size()) {
    ++*i;
    return U'\uFFFD';
  }
  for (int k = 1; k < len; ++k) {
    const auto b = static_cast<unsigned char>(s[*i + k]);
    if ((b & 0xC0) != 0x80) {
      ++*i;
      return U'\uFFFD';
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  *i += len;
  return cp;
}

// Splits a tag field on '/' and parses the kept candidates.
std::vector<SemanticTag> ParseTagField(std::string_view field,
                                       const TagStreamOptions& options,
                                       size_t token_index) {
  std::vector<SemanticTag> tags;
  size_t start = 0;
  while (start <= field.size()) {
    size_t slash = field.find('/', start);
    if (slash == std::string_view::npos) slash = field.size();
    const std::string_view piece = Trim(field.substr(start, slash - start));
    start = slash + 1;
    if (piece.empty()) continue;
    try {
      tags.push_back(ParseTag(piece));
    } catch (const Error& e) {
      throw Error(ErrorCode::kTagParseError,
                  "token " + std::to_string(token_index) + ": " +
                      std::string(ErrorCodeName(e.code())) + ": " + e.what());
    }
    if (options.candidates == CandidatePolicy::kFirstTag) break;
  }
  return tags;
}

void Warn(std::vector<ParseWarning>* warnings, size_t index, std::string message) {
  if (warnings != nullptr) warnings->push_back({index, std::move(message)});
}

void CheckSurface(std::string_view surface, size_t index) {
  if (surface.empty()) {
    throw Error(ErrorCode::kTagParseError,
                "token " + std::to_string(index) + ": empty surface");
  }
}

std::string JoinTags(const std::vector<SemanticTag>& tags) {
  std::string out;
  for (size_t i = 0; i < tags.size(); ++i) {
    if (i > 0) out += '/';
    out += tags[i].raw();
  }
  return out;
}

void CollectXmlTokens(const xml::Node& node, const TagStreamOptions& options,
                      std::vector<TaggedToken>* tokens,
                      std::vector<ParseWarning>* warnings) {
  if (node.is_text) return;
  const std::string* tag_attr = node.Attribute("tag");
  if (tag_attr != nullptr || node.name == "w" || node.name == "token") {
    const size_t index = tokens->size();
    TaggedToken token;
    token.surface = std::string(Trim(node.InnerText()));
    CheckSurface(token.surface, index);
    if (tag_attr == nullptr) {
      Warn(warnings, index, "element <" + node.name + "> has no tag attribute");
    } else {
      token.tags = ParseTagField(*tag_attr, options, index);
    }
    tokens->push_back(std::move(token));
    return;
  }
  for (const xml::Node& child : node.children) {
    CollectXmlTokens(child, options, tokens, warnings);
  }
}

}  // namespace

std::string_view TaggedFormatName(TaggedFormat format) {
  switch (format) {
    case TaggedFormat::kHorizontal: return "horizontal";
    case TaggedFormat::kVertical: return "vertical";
    case TaggedFormat::kXml: return "xml";
  }
  return "horizontal";
}

TaggedFormat ParseTaggedFormat(std::string_view name) {
  const std::string key = Lower(Trim(name));
  if (key == "horizontal") return TaggedFormat::kHorizontal;
  if (key == "vertical") return TaggedFormat::kVertical;
  if (key == "xml") return TaggedFormat::kXml;
  throw Error(ErrorCode::kBadFormat,
              "unknown tagged format '" + std::string(name) + "'");
}

std::vector<TaggedToken> ParseHorizontal(std::string_view text,
                                         const TagStreamOptions& options,
                                         std::vector<ParseWarning>* warnings) {
  std::vector<TaggedToken> tokens;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsAsciiSpace(text[i])) ++i;
    if (i == text.size()) break;
    const size_t start = i;
    while (i < text.size() && !IsAsciiSpace(text[i])) ++i;
    const std::string_view item = text.substr(start, i - start);

    const size_t index = tokens.size();
    TaggedToken token;
    const size_t sep = item.rfind('_');
    if (sep == std::string_view::npos) {
      token.surface = std::string(item);
      Warn(warnings, index, "missing '_' tag separator in '" + token.surface + "'");
    } else {
      token.surface = std::string(item.substr(0, sep));
      CheckSurface(token.surface, index);
      token.tags = ParseTagField(item.substr(sep + 1), options, index);
    }
    tokens.push_back(std::move(token));
  }
  return tokens;
}

std::vector<TaggedToken> ParseVertical(std::string_view text,
                                       const TagStreamOptions& options,
                                       std::vector<ParseWarning>* warnings) {
  std::vector<TaggedToken> tokens;
  size_t start = 0;
  while (start < text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (Trim(line).empty()) continue;

    const size_t index = tokens.size();
    TaggedToken token;
    const size_t tab = line.find('\t');
    if (tab == std::string_view::npos) {
      token.surface = std::string(Trim(line));
      Warn(warnings, index, "missing tab separator in '" + token.surface + "'");
    } else {
      token.surface = std::string(Trim(line.substr(0, tab)));
      CheckSurface(token.surface, index);
      token.tags = ParseTagField(line.substr(line.rfind('\t') + 1), options, index);
    }
    tokens.push_back(std::move(token));
  }
  return tokens;
}

std::vector<TaggedToken> ParseXml(std::string_view text,
                                  const TagStreamOptions& options,
                                  std::vector<ParseWarning>* warnings) {
  const xml::Node root = xml::Parse(text);
  std::vector<TaggedToken> tokens;
  CollectXmlTokens(root, options, &tokens, warnings);
  return tokens;
}

std::vector<TaggedToken> ParseTagStream(std::string_view text, TaggedFormat format,
                                        const TagStreamOptions& options,
                                        std::vector<ParseWarning>* warnings) {
  switch (format) {
    case TaggedFormat::kHorizontal: return ParseHorizontal(text, options, warnings);
    case TaggedFormat::kVertical: return ParseVertical(text, options, warnings);
    case TaggedFormat::kXml: return ParseXml(text, options, warnings);
  }
  return {};
}

std::string RenderHorizontal(std::span<const TaggedToken> tokens) {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out += ' ';
    out += tokens[i].surface;
    out += '_';
    out += JoinTags(tokens[i].tags);
  }
  return out;
}

std::string RenderVertical(std::span<const TaggedToken> tokens) {
  std::string out;
  for (const TaggedToken& token : tokens) {
    out += token.surface;
    out += '\t';
    out += JoinTags(token.tags);
    out += '\n';
  }
  return out;
}

std::string RenderXml(std::span<const TaggedToken> tokens) {
  std::string out = "<text>\n";
  for (const TaggedToken& token : tokens) {
    out += "<w tag=\"";
    out += xml::Escape(JoinTags(token.tags));
    out += "\">";
    out += xml::Escape(token.surface);
    out += "</w>\n";
  }
  out += "</text>\n";
  return out;
}

std::string RenderTagStream(std::span<const TaggedToken> tokens, TaggedFormat format) {
  switch (format) {
    case TaggedFormat::kHorizontal: return RenderHorizontal(tokens);
    case TaggedFormat::kVertical: return RenderVertical(tokens);
    case TaggedFormat::kXml: return RenderXml(tokens);
  }
  return {};
}

TaggedReview TagReview(const Review& review, const TagStreamOptions& options,
                       std::vector<ParseWarning>* warnings) {
  TaggedReview tagged;
  tagged.review_id = review.id;
  try {
    tagged.tokens = ParseTagStream(review.tagged_text, review.tagged_format,
                                   options, warnings);
  } catch (const Error& e) {
    throw Error(e.code(), "review '" + review.id + "': " + e.what());
  }
  return tagged;
}

size_t CountTokens(std::string_view text, const TokenizerOptions& options) {
  size_t count = 0;
  bool in_token = false;
  size_t i = 0;
  while (i < text.size()) {
    const char32_t cp = NextCodePoint(text, &i);
    const bool delimiter = options.delimiters.find(cp) != std::u32string::npos;
    if (!delimiter && !in_token) ++count;
    in_token = !delimiter;
  }
  return count;
}

Polarity ParsePolarityLabel(std::string_view label) {
  const std::string key = Lower(Trim(label));
  if (key == "positive" || key == "pos" || key == "إيجابي" || key == "ايجابي") {
    return Polarity::kPositive;
  }
  if (key == "negative" || key == "neg" || key == "سلبي") {
    return Polarity::kNegative;
  }
  if (key == "neutral" || key == "neu" || key == "محايد") {
    return Polarity::kNeutral;
  }
  throw Error(ErrorCode::kBadPolarityLabel,
              "bad polarity label '" + std::string(label) + "'");
}

MetaphorPolarity ParseMetaphorPolarityLabel(std::string_view label) {
  const std::string key = Lower(Trim(label));
  if (key.empty() || key == "null" || key == "none") return MetaphorPolarity::kNull;
  switch (ParsePolarityLabel(key)) {
    case Polarity::kPositive: return MetaphorPolarity::kPositive;
    case Polarity::kNegative: return MetaphorPolarity::kNegative;
    case Polarity::kNeutral: return MetaphorPolarity::kNeutral;
  }
  return MetaphorPolarity::kNull;
}

std::string_view MetaphorPolarityName(MetaphorPolarity p) {
  switch (p) {
    case MetaphorPolarity::kPositive: return "positive";
    case MetaphorPolarity::kNegative: return "negative";
    case MetaphorPolarity::kNeutral: return "neutral";
    case MetaphorPolarity::kNull: return "";
  }
  return "";
}

std::vector<Review> ParseCorpus(std::string_view csv_text, const CorpusOptions& options) {
  // A file with nothing in it is an empty corpus rather than a missing header.
  if (csv_text.find_first_not_of(" \t\r\n") == std::string_view::npos) return {};
  const csv::Table table = csv::Table::FromText(csv_text);
  const size_t id_col = table.RequireColumn("id");
  const size_t text_col = table.RequireColumn("text");
  const size_t gold_col = table.RequireColumn("gold_overall");
  const size_t tagged_col = table.RequireColumn("tagged_text");
  const size_t format_col = table.RequireColumn("tagged_format");

  std::vector<std::pair<size_t, size_t>> metaphor_cols;
  for (int k = 1;; ++k) {
    const std::string prefix = "metaphor_" + std::to_string(k);
    auto surface = table.ColumnIndex(prefix + "_surface");
    auto polarity = table.ColumnIndex(prefix + "_polarity");
    if (!surface && !polarity) break;
    if (!surface) table.RequireColumn(prefix + "_surface");
    if (!polarity) table.RequireColumn(prefix + "_polarity");
    metaphor_cols.emplace_back(*surface, *polarity);
  }

  std::vector<Review> reviews;
  reviews.reserve(table.rows().size());
  std::unordered_set<std::string> seen;
  for (size_t r = 0; r < table.rows().size(); ++r) {
    const std::string where = "data row " + std::to_string(r + 1) + ": ";
    try {
      Review review;
      review.id = table.Cell(r, id_col);
      if (review.id.empty()) throw Error(ErrorCode::kBadFormat, "empty id");
      if (!seen.insert(review.id).second) {
        throw Error(ErrorCode::kDuplicateId, "duplicate id '" + review.id + "'");
      }
      review.raw_text = table.Cell(r, text_col);
      review.token_count = CountTokens(review.raw_text, options.tokenizer);
      review.gold_overall = ParsePolarityLabel(table.Cell(r, gold_col));
      review.tagged_text = table.Cell(r, tagged_col);
      const std::string& format = table.Cell(r, format_col);
      review.tagged_format =
          Trim(format).empty() ? TaggedFormat::kHorizontal : ParseTaggedFormat(format);
      for (const auto& [surface_col, polarity_col] : metaphor_cols) {
        MetaphorAnnotation annotation;
        annotation.surface = table.Cell(r, surface_col);
        annotation.gold_polarity =
            ParseMetaphorPolarityLabel(table.Cell(r, polarity_col));
        if (annotation.surface.empty() &&
            annotation.gold_polarity != MetaphorPolarity::kNull) {
          throw Error(ErrorCode::kBadFormat,
                      "metaphor polarity without a metaphor surface");
        }
        review.metaphors.push_back(std::move(annotation));
      }
      reviews.push_back(std::move(review));
    } catch (const Error& e) {
      throw Error(e.code(), where + e.what());
    }
  }
  return reviews;
}

std::vector<Review> LoadCorpus(const std::filesystem::path& path,
                               const CorpusOptions& options) {
  const std::string text = ReadFile(path);
  try {
    return ParseCorpus(text, options);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

std::string FormatCorpus(std::span<const Review> reviews) {
  size_t groups = 1;
  for (const Review& review : reviews) groups = std::max(groups, review.metaphors.size());

  csv::Row header = {"id", "text", "gold_overall", "tagged_text", "tagged_format"};
  for (size_t k = 1; k <= groups; ++k) {
    header.push_back("metaphor_" + std::to_string(k) + "_surface");
    header.push_back("metaphor_" + std::to_string(k) + "_polarity");
  }
  std::string out = csv::FormatRow(header);
  for (const Review& review : reviews) {
    csv::Row row = {review.id, review.raw_text,
                    std::string(PolarityName(review.gold_overall)),
                    review.tagged_text,
                    std::string(TaggedFormatName(review.tagged_format))};
    for (size_t k = 0; k < groups; ++k) {
      if (k < review.metaphors.size()) {
        row.push_back(review.metaphors[k].surface);
        row.emplace_back(MetaphorPolarityName(review.metaphors[k].gold_polarity));
      } else {
        row.emplace_back();
        row.emplace_back();
      }
    }
    out += csv::FormatRow(row);
  }
  return out;
}

void WriteCorpus(const std::filesystem::path& path, std::span<const Review> reviews) {
  WriteFile(path, FormatCorpus(reviews));
}

SubstitutionMap DefaultSubstitutionMap() {
  return {{".", " FS "}, {"!", " EX "}};
}

SubstitutionMap ParseSubstitutionSpec(std::string_view spec) {
  SubstitutionMap map;
  size_t start = 0;
  while (start <= spec.size()) {
    size_t comma = spec.find(',', start);
    // A ',' immediately followed by '=' is the comma character being mapped.
    if (comma == start && comma + 1 < spec.size() && spec[comma + 1] == '=') {
      comma = spec.find(',', start + 1);
    }
    if (comma == std::string_view::npos) comma = spec.size();
    const std::string_view entry = spec.substr(start, comma - start);
    start = comma + 1;
    if (entry.empty()) continue;

    size_t first_len = 0;
    NextCodePoint(entry, &first_len);
    if (first_len >= entry.size() || entry[first_len] != '=') {
      throw Error(ErrorCode::kInvalidArgument,
                  "substitution entry must be CHAR=LETTERS: '" + std::string(entry) + "'");
    }
    const std::string_view letters = entry.substr(first_len + 1);
    if (letters.empty() ||
        !std::all_of(letters.begin(), letters.end(), [](char c) {
          return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
        })) {
      throw Error(ErrorCode::kInvalidArgument,
                  "placeholder must be ASCII letters: '" + std::string(entry) + "'");
    }
    map.emplace_back(std::string(entry.substr(0, first_len)),
                     " " + std::string(letters) + " ");
  }
  for (size_t a = 0; a < map.size(); ++a) {
    for (size_t b = 0; b < map.size(); ++b) {
      if (a == b) continue;
      if (map[a].first == map[b].first) {
        throw Error(ErrorCode::kInvalidArgument,
                    "character '" + map[a].first + "' mapped twice");
      }
      if (Trim(map[a].second).find(Trim(map[b].second)) != std::string_view::npos) {
        throw Error(ErrorCode::kInvalidArgument,
                    "placeholder '" + std::string(Trim(map[a].second)) +
                        "' contains placeholder '" +
                        std::string(Trim(map[b].second)) + "'");
      }
    }
  }
  return map;
}

std::string PreprocessForTagger(std::string_view text, const SubstitutionMap& map) {
  for (const auto& [ch, placeholder] : map) {
    const std::string_view letters = Trim(placeholder);
    if (!letters.empty() && text.find(letters) != std::string_view::npos) {
      throw Error(ErrorCode::kCollidingPlaceholder,
                  "placeholder '" + std::string(letters) + "' already occurs in text");
    }
  }
  std::string out;
  out.reserve(text.size());
  size_t i = 0;
  while (i < text.size()) {
    bool replaced = false;
    for (const auto& [ch, placeholder] : map) {
      if (!ch.empty() && text.substr(i).starts_with(ch)) {
        out += placeholder;
        i += ch.size();
        replaced = true;
        break;
      }
    }
    if (!replaced) out += text[i++];
  }
  return out;
}

std::string RestoreFromTagger(std::string_view text, const SubstitutionMap& map) {
  std::string out;
  out.reserve(text.size());
  size_t i = 0;
  while (i < text.size()) {
    bool replaced = false;
    for (const auto& [ch, placeholder] : map) {
      if (!placeholder.empty() && text.substr(i).starts_with(placeholder)) {
        out += ch;
        i += placeholder.size();
        replaced = true;
        break;
      }
    }
    if (!replaced) out += text[i++];
  }
  return out;
}

std::vector<Batch> BatchSplit(std::span<const Review> reviews, size_t batch_size) {
  if (batch_size == 0) throw Error(ErrorCode::kInvalidArgument, "batch size must be >= 1");
  std::vector<Batch> batches;
  for (size_t start = 0; start < reviews.size(); start += batch_size) {
    const size_t end = std::min(reviews.size(), start + batch_size);
    Batch batch;
    batch.index = batches.size();
    batch.reviews.assign(reviews.begin() + static_cast<std::ptrdiff_t>(start),
                         reviews.begin() + static_cast<std::ptrdiff_t>(end));
    batches.push_back(std::move(batch));
  }
  return batches;
}

std::string BatchFileName(size_t index) {
  char name[32];
  std::snprintf(name, sizeof(name), "batch_%03zu.csv", index);
  return name;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIoError, "error reading '" + path.string() + "'");
  return buffer.str();
}

void WriteFile(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write '" + path.string() + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorCode::kIoError, "error writing '" + path.string() + "'");
}

}  // namespace arasent

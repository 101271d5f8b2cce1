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

#include "arasent/xml.h"

#include <cstdint>

#include "arasent/error.h"

namespace arasent::xml {
namespace {

bool IsNameStart(unsigned char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_' ||
         c == ':' || c >= 0x80;
}

bool IsNameChar(unsigned char c) {
  return IsNameStart(c) || (c >= '0' && c <= '9') || c == '-' || c == '.';
}

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

void AppendUtf8(uint32_t cp, std::string* out) {
  if (cp < 0x80) {
    *out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    *out += static_cast<char>(0xC0 | (cp >> 6));
    *out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    *out += static_cast<char>(0xE0 | (cp >> 12));
    *out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    *out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    *out += static_cast<char>(0xF0 | (cp >> 18));
    *out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    *out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    *out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Node ParseDocument() {
    if (text_.starts_with("\xEF\xBB\xBF")) pos_ = 3;
    SkipMisc();
    if (AtEnd() || Peek() != '<') Fail("expected root element");
    Node root = ParseElement();
    SkipMisc();
    if (!AtEnd()) Fail("content after root element");
    return root;
  }

 private:
  [[noreturn]] void Fail(const std::string& what) const {
    throw Error(ErrorCode::kXmlError,
                what + " at byte " + std::to_string(pos_));
  }

  bool AtEnd() const { return pos_ >= text_.size(); }
  char Peek() const { return text_[pos_]; }
  bool LookingAt(std::string_view s) const {
    return text_.substr(pos_).starts_with(s);
  }
  void Expect(std::string_view s) {
    if (!LookingAt(s)) Fail("expected '" + std::string(s) + "'");
    pos_ += s.size();
  }
  void SkipSpace() {
    while (!AtEnd() && IsSpace(Peek())) ++pos_;
  }
  void SkipPast(std::string_view terminator, const char* what) {
    const size_t end = text_.find(terminator, pos_);
    if (end == std::string_view::npos) Fail(std::string("unterminated ") + what);
    pos_ = end + terminator.size();
  }

  // Whitespace, comments, processing instructions and DOCTYPE outside the
  // root element.
  void SkipMisc() {
    for (;;) {
      SkipSpace();
      if (LookingAt("<?")) {
        SkipPast("?>", "processing instruction");
      } else if (LookingAt("<!--")) {
        SkipPast("-->", "comment");
      } else if (LookingAt("<!DOCTYPE")) {
        SkipPast(">", "DOCTYPE");
      } else {
        return;
      }
    }
  }

  std::string ParseName() {
    if (AtEnd() || !IsNameStart(static_cast<unsigned char>(Peek()))) {
      Fail("expected a name");
    }
    const size_t start = pos_;
    while (!AtEnd() && IsNameChar(static_cast<unsigned char>(Peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void ParseReference(std::string* out) {
    const size_t start = pos_;
    ++pos_;  // '&'
    const size_t semi = text_.find(';', pos_);
    if (semi == std::string_view::npos || semi - pos_ > 10) {
      pos_ = start;
      Fail("unterminated entity reference");
    }
    const std::string_view ref = text_.substr(pos_, semi - pos_);
    if (ref == "lt") {
      *out += '<';
    } else if (ref == "gt") {
      *out += '>';
    } else if (ref == "amp") {
      *out += '&';
    } else if (ref == "quot") {
      *out += '"';
    } else if (ref == "apos") {
      *out += '\'';
    } else if (ref.size() > 1 && ref[0] == '#') {
      const bool hex = ref[1] == 'x';
      const std::string_view digits = ref.substr(hex ? 2 : 1);
      uint32_t cp = 0;
      if (digits.empty()) {
        pos_ = start;
        Fail("empty character reference");
      }
      for (char d : digits) {
        int v;
        if (d >= '0' && d <= '9') {
          v = d - '0';
        } else if (hex && d >= 'a' && d <= 'f') {
          v = d - 'a' + 10;
        } else if (hex && d >= 'A' && d <= 'F') {
          v = d - 'A' + 10;
        } else {
          pos_ = start;
          Fail("bad character reference");
        }
        cp = cp * (hex ? 16 : 10) + static_cast<uint32_t>(v);
        if (cp > 0x10FFFF) {
          pos_ = start;
          Fail("character reference out of range");
        }
      }
      if (cp == 0 || (cp >= 0xD800 && cp <= 0xDFFF)) {
        pos_ = start;
        Fail("invalid character reference");
      }
      AppendUtf8(cp, out);
    } else {
      pos_ = start;
      Fail("unknown entity '" + std::string(ref) + "'");
    }
    pos_ = semi + 1;
  }

  std::string ParseAttributeValue() {
    if (AtEnd() || (Peek() != '"' && Peek() != '\'')) {
      Fail("expected quoted attribute value");
    }
    const char quote = Peek();
    ++pos_;
    std::string value;
    for (;;) {
      if (AtEnd()) Fail("unterminated attribute value");
      const char c = Peek();
      if (c == quote) break;
      if (c == '<') Fail("'<' in attribute value");
      if (c == '&') {
        ParseReference(&value);
      } else {
        value += c;
        ++pos_;
      }
    }
    ++pos_;
    return value;
  }

  Node ParseElement() {
    const size_t open = pos_;
    Expect("<");
    Node node;
    node.name = ParseName();
    for (;;) {
      const size_t before = pos_;
      SkipSpace();
      if (AtEnd()) Fail("unterminated start tag");
      if (LookingAt("/>")) {
        pos_ += 2;
        return node;
      }
      if (Peek() == '>') {
        ++pos_;
        break;
      }
      if (before == pos_) Fail("expected whitespace before attribute");
      std::string key = ParseName();
      SkipSpace();
      Expect("=");
      SkipSpace();
      std::string value = ParseAttributeValue();
      if (node.Attribute(key) != nullptr) Fail("duplicate attribute '" + key + "'");
      node.attributes.emplace_back(std::move(key), std::move(value));
    }

    std::string text;
    auto flush_text = [&] {
      if (text.empty()) return;
      Node t;
      t.is_text = true;
      t.text = std::move(text);
      text.clear();
      node.children.push_back(std::move(t));
    };
    for (;;) {
      if (AtEnd()) {
        pos_ = open;
        Fail("element '" + node.name + "' is never closed");
      }
      if (LookingAt("</")) {
        flush_text();
        const size_t close_start = pos_;
        pos_ += 2;
        const std::string closing = ParseName();
        if (closing != node.name) {
          pos_ = close_start;
          Fail("mismatched closing tag '" + closing + "' for '" + node.name + "'");
        }
        SkipSpace();
        Expect(">");
        return node;
      }
      if (LookingAt("<!--")) {
        SkipPast("-->", "comment");
      } else if (LookingAt("<![CDATA[")) {
        pos_ += 9;
        const size_t end = text_.find("]]>", pos_);
        if (end == std::string_view::npos) Fail("unterminated CDATA section");
        text.append(text_.substr(pos_, end - pos_));
        pos_ = end + 3;
      } else if (LookingAt("<?")) {
        SkipPast("?>", "processing instruction");
      } else if (Peek() == '<') {
        flush_text();
        node.children.push_back(ParseElement());
      } else if (Peek() == '&') {
        ParseReference(&text);
      } else {
        text += Peek();
        ++pos_;
      }
    }
  }

  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

const std::string* Node::Attribute(std::string_view key) const {
  for (const auto& [k, v] : attributes) {
    if (k == key) return &v;
  }
  return nullptr;
}

std::string Node::InnerText() const {
  if (is_text) return text;
  std::string out;
  for (const Node& child : children) out += child.InnerText();
  return out;
}

Node Parse(std::string_view text) { return Parser(text).ParseDocument(); }

std::string Escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace arasent::xml

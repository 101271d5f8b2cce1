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

#ifndef ARASENT_XML_H_
#define ARASENT_XML_H_

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace arasent::xml {

// A minimal DOM: element name, attributes in document order, and children
// that are either elements or character data.
struct Node {
  bool is_text = false;
  std::string name;  // element name, or empty for text nodes
  std::string text;  // character data for text nodes
  std::vector<std::pair<std::string, std::string>> attributes;
  std::vector<Node> children;

  // nullptr when absent.
  const std::string* Attribute(std::string_view key) const;
  // Concatenated character data of the subtree.
  std::string InnerText() const;
};

// Parses a well-formed document with exactly one root element. Supports the
// XML declaration, processing instructions, comments, a DOCTYPE without an
// internal subset, CDATA sections, the five predefined entities and numeric
// character references. Throws Error(kXmlError) whose message carries the
// byte offset of the failure ("at byte N").
Node Parse(std::string_view text);

// Escapes '&', '<', '>', '"' and '\'' for text or attribute values.
std::string Escape(std::string_view text);

}  // namespace arasent::xml

#endif  // ARASENT_XML_H_

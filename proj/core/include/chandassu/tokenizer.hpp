/*
 * Copyright 2026 The Chandassu Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace chandassu {

// One perceivable unit of Telugu script (aksharam): a base letter with its
// diacritics, possibly preceded by virama-joined consonants and followed by
// a word-final pollu.
class AksharamToken {
 public:
  AksharamToken() = default;
  explicit AksharamToken(std::u32string text) : text_(std::move(text)) {}
  explicit AksharamToken(std::string_view utf8);

  const std::u32string& codepoints() const { return text_; }
  std::string str() const;
  bool empty() const { return text_.empty(); }
  char32_t back() const { return text_.back(); }

  AksharamToken& operator+=(std::u32string_view more) {
    text_ += more;
    return *this;
  }

  friend bool operator==(const AksharamToken&, const AksharamToken&) = default;

 private:
  std::u32string text_;
};

struct LocatedToken {
  AksharamToken token;
  std::size_t line = 0;  // 0-based source line of the token's first cluster
};

// Segments text into aksharam tokens. Whitespace separates words; Latin
// letters, digits, punctuation, ZWJ/ZWNJ and ara sunna are discarded.
// Throws InputShapeError when a word-final pollu has no token to attach to.
std::vector<AksharamToken> tokenize(std::string_view text);

// Same stream as tokenize(), tagged with source line numbers.
std::vector<LocatedToken> tokenize_located(std::string_view text);

// Tokenizes each newline-separated line on its own; empty lines are dropped.
std::vector<std::vector<AksharamToken>> tokenize_lines(std::string_view text);

std::vector<std::string> to_strings(const std::vector<AksharamToken>& tokens);

}  // namespace chandassu

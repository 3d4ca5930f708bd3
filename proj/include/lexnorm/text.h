// Copyright 2026 The Lexnorm Authors.
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


#ifndef LEXNORM_TEXT_H_
#define LEXNORM_TEXT_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lexnorm {

// UTF-8 helpers. Invalid byte sequences decode to U+FFFD, one per bad byte.
std::u32string DecodeUtf8(std::string_view text);
std::string EncodeUtf8(std::u32string_view text);

// Number of code points in a UTF-8 string.
size_t CodepointLength(std::string_view text);

// Byte offsets of every code point start, plus text.size() at the end.
std::vector<size_t> CodepointOffsets(std::string_view text);

// Unicode-aware lowercasing (simple case mapping, no special casing).
std::string ToLower(std::string_view text);
char32_t ToLower(char32_t c);

bool IsAlpha(char32_t c);
bool IsSpace(char c);

// Splits on runs of ASCII whitespace; never yields empty pieces.
std::vector<std::string> SplitWhitespace(std::string_view text);

// Splits on a single delimiter character, keeping empty fields.
std::vector<std::string_view> SplitOn(std::string_view text, char delim);

// Trims surrounding whitespace and collapses inner runs to one space.
std::string NormalizeSpaces(std::string_view text);

// Lowercase + NormalizeSpaces; the canonical form for all comparisons.
std::string CanonicalForm(std::string_view text);

bool StartsWithIgnoreCase(std::string_view text, std::string_view prefix);

// Shortest representation that parses back to the same double.
std::string FormatDouble(double value);
// Strict parse of the whole field; throws std::invalid_argument.
double ParseDouble(std::string_view text);
int64_t ParseInt(std::string_view text);

}  // namespace lexnorm

#endif  // LEXNORM_TEXT_H_

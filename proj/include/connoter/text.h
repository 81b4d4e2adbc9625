// Copyright 2026 The Connoter Authors.
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

#ifndef CONNOTER_TEXT_H_
#define CONNOTER_TEXT_H_

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace connoter {

// ASCII case folding. Non-ASCII bytes pass through untouched.
std::string ToLower(std::string_view text);

std::string_view Trim(std::string_view text);

std::vector<std::string_view> Split(std::string_view text, char delimiter);

// Splits on runs of ASCII whitespace; no empty pieces.
std::vector<std::string_view> SplitWhitespace(std::string_view text);

bool StartsWith(std::string_view text, std::string_view prefix);

bool IsValidUtf8(std::string_view bytes);

// Reads a whole file. Throws Error(kIo) if it cannot be opened and
// Error(kEncoding) if the bytes are not valid UTF-8.
std::string ReadTextFile(const std::filesystem::path &path);

// Writes |contents| to a sibling temp file and renames it over |path|.
void WriteFileAtomic(const std::filesystem::path &path, std::string_view contents);

size_t EditDistance(std::string_view a, std::string_view b);

// Closest candidate by case-insensitive edit distance; ties go to the
// earliest candidate. Empty when there are no candidates.
std::optional<std::string> NearestMatch(std::string_view query,
                                        std::span<const std::string> candidates);

// "a, b, c" for error messages.
std::string JoinNames(std::span<const std::string> names, size_t limit = 20);

// Fixed-point formatting independent of the global locale.
std::string FormatFixed(double value, int digits);

}  // namespace connoter

#endif  // CONNOTER_TEXT_H_

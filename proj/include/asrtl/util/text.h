// asrtl/util/text.h

// Copyright 2026  ASRTL Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef ASRTL_UTIL_TEXT_H_
#define ASRTL_UTIL_TEXT_H_

#include <string>
#include <vector>

namespace asrtl {

std::vector<std::string> Split(const std::string &s, char sep);

/// Splits on runs of spaces/tabs; no empty fields.
std::vector<std::string> SplitWhitespace(const std::string &s);

std::string Trim(const std::string &s);

std::string Join(const std::vector<std::string> &parts, const std::string &sep);

/// Splits a UTF-8 string into code points (each returned as a string).
/// Invalid bytes are passed through as single-byte units.
std::vector<std::string> Utf8Chars(const std::string &s);

/// Reads all lines of a text file; throws FileNotFoundError.
std::vector<std::string> ReadLines(const std::string &path);

void WriteTextFile(const std::string &path, const std::string &content);

std::string ReadTextFile(const std::string &path);

}  // namespace asrtl

#endif  // ASRTL_UTIL_TEXT_H_

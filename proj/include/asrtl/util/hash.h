// asrtl/util/hash.h

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

#ifndef ASRTL_UTIL_HASH_H_
#define ASRTL_UTIL_HASH_H_

#include <cstddef>
#include <cstdint>
#include <string>

namespace asrtl {

constexpr uint64_t kFnvOffset = 0xcbf29ce484222325ULL;

uint64_t Fnv1a64(const void *data, size_t n, uint64_t h = kFnvOffset);

uint64_t Fnv1a64(const std::string &s, uint64_t h = kFnvOffset);

/// Content hash of a file; throws FileNotFoundError if it cannot be opened.
uint64_t HashFile(const std::string &path);

std::string HashToHex(uint64_t h);

}  // namespace asrtl

#endif  // ASRTL_UTIL_HASH_H_

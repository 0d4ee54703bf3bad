// asrtl/util/hash.cc

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

#include "asrtl/util/hash.h"

#include <cstdio>
#include <fstream>
#include <vector>

#include "asrtl/common.h"

namespace asrtl {

uint64_t Fnv1a64(const void *data, size_t n, uint64_t h) {
  const unsigned char *p = static_cast<const unsigned char *>(data);
  for (size_t i = 0; i < n; i++) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

uint64_t Fnv1a64(const std::string &s, uint64_t h) {
  return Fnv1a64(s.data(), s.size(), h);
}

uint64_t HashFile(const std::string &path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw FileNotFoundError(path);
  uint64_t h = kFnvOffset;
  std::vector<char> buf(1 << 16);
  while (is) {
    is.read(buf.data(), buf.size());
    h = Fnv1a64(buf.data(), static_cast<size_t>(is.gcount()), h);
  }
  return h;
}

std::string HashToHex(uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace asrtl

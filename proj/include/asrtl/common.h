// asrtl/common.h

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

#ifndef ASRTL_COMMON_H_
#define ASRTL_COMMON_H_

#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace asrtl {

/// Base error type; module-specific errors derive from this.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

class FileNotFoundError : public Error {
 public:
  explicit FileNotFoundError(const std::string &path)
      : Error("file not found: " + path) {}
};

}  // namespace asrtl

#endif  // ASRTL_COMMON_H_

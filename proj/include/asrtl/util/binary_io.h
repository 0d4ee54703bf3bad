// asrtl/util/binary_io.h

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

#ifndef ASRTL_UTIL_BINARY_IO_H_
#define ASRTL_UTIL_BINARY_IO_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "asrtl/common.h"

namespace asrtl {

// Little-endian binary serialization with explicit field order.  All model
// and feature files go through these helpers so the on-disk layout is pinned
// in one place.

class BinaryWriter {
 public:
  explicit BinaryWriter(std::ostream &os) : os_(os) {}

  void WriteMagic(const char magic[4], uint32_t version);
  void WriteU32(uint32_t v);
  void WriteI32(int32_t v);
  void WriteU64(uint64_t v);
  void WriteF32(float v);
  void WriteF64(double v);
  void WriteString(const std::string &s);
  void WriteFloats(const float *data, size_t n);
  void WriteDoubles(const double *data, size_t n);

  void WriteMatrixF(const Eigen::MatrixXf &m);  // dims + row-major f32
  void WriteMatrixD(const Eigen::MatrixXd &m);  // dims + row-major f64
  void WriteVectorD(const Eigen::VectorXd &v);

 private:
  std::ostream &os_;
};

class BinaryReader {
 public:
  explicit BinaryReader(std::istream &is) : is_(is) {}

  /// Checks magic and returns the stored version; throws Error on mismatch.
  uint32_t ReadMagic(const char magic[4]);
  uint32_t ReadU32();
  int32_t ReadI32();
  uint64_t ReadU64();
  float ReadF32();
  double ReadF64();
  std::string ReadString();
  void ReadFloats(float *data, size_t n);
  void ReadDoubles(double *data, size_t n);

  Eigen::MatrixXf ReadMatrixF();
  Eigen::MatrixXd ReadMatrixD();
  Eigen::VectorXd ReadVectorD();

 private:
  void Fill(void *p, size_t n);
  std::istream &is_;
};

}  // namespace asrtl

#endif  // ASRTL_UTIL_BINARY_IO_H_

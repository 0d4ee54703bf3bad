// asrtl/util/binary_io.cc

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

#include "asrtl/util/binary_io.h"

#include <bit>
#include <cstring>
#include <istream>
#include <ostream>

static_assert(std::endian::native == std::endian::little,
              "serialization assumes a little-endian host");

namespace asrtl {

void BinaryWriter::WriteMagic(const char magic[4], uint32_t version) {
  os_.write(magic, 4);
  WriteU32(version);
}

void BinaryWriter::WriteU32(uint32_t v) {
  os_.write(reinterpret_cast<const char *>(&v), sizeof(v));
}

void BinaryWriter::WriteI32(int32_t v) {
  os_.write(reinterpret_cast<const char *>(&v), sizeof(v));
}

void BinaryWriter::WriteU64(uint64_t v) {
  os_.write(reinterpret_cast<const char *>(&v), sizeof(v));
}

void BinaryWriter::WriteF32(float v) {
  os_.write(reinterpret_cast<const char *>(&v), sizeof(v));
}

void BinaryWriter::WriteF64(double v) {
  os_.write(reinterpret_cast<const char *>(&v), sizeof(v));
}

void BinaryWriter::WriteString(const std::string &s) {
  WriteU32(static_cast<uint32_t>(s.size()));
  os_.write(s.data(), static_cast<std::streamsize>(s.size()));
}

void BinaryWriter::WriteFloats(const float *data, size_t n) {
  os_.write(reinterpret_cast<const char *>(data),
            static_cast<std::streamsize>(n * sizeof(float)));
}

void BinaryWriter::WriteDoubles(const double *data, size_t n) {
  os_.write(reinterpret_cast<const char *>(data),
            static_cast<std::streamsize>(n * sizeof(double)));
}

void BinaryWriter::WriteMatrixF(const Eigen::MatrixXf &m) {
  WriteU32(static_cast<uint32_t>(m.rows()));
  WriteU32(static_cast<uint32_t>(m.cols()));
  for (Eigen::Index r = 0; r < m.rows(); r++)
    for (Eigen::Index c = 0; c < m.cols(); c++) WriteF32(m(r, c));
}

void BinaryWriter::WriteMatrixD(const Eigen::MatrixXd &m) {
  WriteU32(static_cast<uint32_t>(m.rows()));
  WriteU32(static_cast<uint32_t>(m.cols()));
  for (Eigen::Index r = 0; r < m.rows(); r++)
    for (Eigen::Index c = 0; c < m.cols(); c++) WriteF64(m(r, c));
}

void BinaryWriter::WriteVectorD(const Eigen::VectorXd &v) {
  WriteU32(static_cast<uint32_t>(v.size()));
  WriteDoubles(v.data(), static_cast<size_t>(v.size()));
}

void BinaryReader::Fill(void *p, size_t n) {
  is_.read(static_cast<char *>(p), static_cast<std::streamsize>(n));
  if (static_cast<size_t>(is_.gcount()) != n)
    throw Error("truncated binary stream");
}

uint32_t BinaryReader::ReadMagic(const char magic[4]) {
  char got[4];
  Fill(got, 4);
  if (std::memcmp(got, magic, 4) != 0)
    throw Error(std::string("bad magic, expected ") + std::string(magic, 4));
  return ReadU32();
}

uint32_t BinaryReader::ReadU32() {
  uint32_t v;
  Fill(&v, sizeof(v));
  return v;
}

int32_t BinaryReader::ReadI32() {
  int32_t v;
  Fill(&v, sizeof(v));
  return v;
}

uint64_t BinaryReader::ReadU64() {
  uint64_t v;
  Fill(&v, sizeof(v));
  return v;
}

float BinaryReader::ReadF32() {
  float v;
  Fill(&v, sizeof(v));
  return v;
}

double BinaryReader::ReadF64() {
  double v;
  Fill(&v, sizeof(v));
  return v;
}

std::string BinaryReader::ReadString() {
  uint32_t n = ReadU32();
  std::string s(n, '\0');
  if (n > 0) Fill(s.data(), n);
  return s;
}

void BinaryReader::ReadFloats(float *data, size_t n) {
  Fill(data, n * sizeof(float));
}

void BinaryReader::ReadDoubles(double *data, size_t n) {
  Fill(data, n * sizeof(double));
}

Eigen::MatrixXf BinaryReader::ReadMatrixF() {
  uint32_t rows = ReadU32(), cols = ReadU32();
  Eigen::MatrixXf m(rows, cols);
  for (uint32_t r = 0; r < rows; r++)
    for (uint32_t c = 0; c < cols; c++) m(r, c) = ReadF32();
  return m;
}

Eigen::MatrixXd BinaryReader::ReadMatrixD() {
  uint32_t rows = ReadU32(), cols = ReadU32();
  Eigen::MatrixXd m(rows, cols);
  for (uint32_t r = 0; r < rows; r++)
    for (uint32_t c = 0; c < cols; c++) m(r, c) = ReadF64();
  return m;
}

Eigen::VectorXd BinaryReader::ReadVectorD() {
  uint32_t n = ReadU32();
  Eigen::VectorXd v(n);
  ReadDoubles(v.data(), n);
  return v;
}

}  // namespace asrtl

// asrtl/feat/feature_matrix.cc

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

#include "asrtl/feat/feature_matrix.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "asrtl/common.h"
#include "asrtl/util/binary_io.h"

namespace asrtl {

static const char kFeatMagic[4] = {'A', 'S', 'R', 'F'};
static const uint32_t kFeatVersion = 1;

void WriteFeature(const std::string &path, const FeatureMatrix &fm) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("cannot open for writing: " + path);
  BinaryWriter w(os);
  w.WriteMagic(kFeatMagic, kFeatVersion);
  w.WriteU32(static_cast<uint32_t>(fm.Dim()));
  w.WriteU32(static_cast<uint32_t>(fm.NumFrames()));
  w.WriteF32(fm.frame_shift_ms);
  w.WriteF32(fm.frame_length_ms);
  for (Eigen::Index r = 0; r < fm.NumFrames(); r++)
    for (Eigen::Index c = 0; c < fm.Dim(); c++) w.WriteF32(fm.values(r, c));
  if (!os) throw Error("write failed: " + path);
}

FeatureMatrix ReadFeature(const std::string &path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw FileNotFoundError(path);
  BinaryReader r(is);
  uint32_t version = r.ReadMagic(kFeatMagic);
  if (version != kFeatVersion)
    throw Error("unsupported feature archive version in " + path);
  uint32_t dims = r.ReadU32();
  uint32_t frames = r.ReadU32();
  FeatureMatrix fm;
  fm.frame_shift_ms = r.ReadF32();
  fm.frame_length_ms = r.ReadF32();
  fm.values.resize(frames, dims);
  for (uint32_t t = 0; t < frames; t++)
    for (uint32_t d = 0; d < dims; d++) fm.values(t, d) = r.ReadF32();
  return fm;
}

void WriteFeatureText(const std::string &path, const FeatureMatrix &fm) {
  std::ofstream os(path);
  if (!os) throw Error("cannot open for writing: " + path);
  os << fm.NumFrames() << " " << fm.Dim() << " " << fm.frame_shift_ms << " "
     << fm.frame_length_ms << "\n";
  char buf[32];
  for (Eigen::Index r = 0; r < fm.NumFrames(); r++) {
    for (Eigen::Index c = 0; c < fm.Dim(); c++) {
      std::snprintf(buf, sizeof(buf), "%.9g", fm.values(r, c));
      os << (c ? " " : "") << buf;
    }
    os << "\n";
  }
  if (!os) throw Error("write failed: " + path);
}

FeatureMatrix ReadFeatureText(const std::string &path) {
  std::ifstream is(path);
  if (!is) throw FileNotFoundError(path);
  Eigen::Index rows, cols;
  FeatureMatrix fm;
  if (!(is >> rows >> cols >> fm.frame_shift_ms >> fm.frame_length_ms))
    throw Error("bad text feature header in " + path);
  fm.values.resize(rows, cols);
  for (Eigen::Index r = 0; r < rows; r++)
    for (Eigen::Index c = 0; c < cols; c++)
      if (!(is >> fm.values(r, c)))
        throw Error("truncated text feature matrix in " + path);
  return fm;
}

}  // namespace asrtl

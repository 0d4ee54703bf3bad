// asrtl/feat/feature_matrix.h

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

#ifndef ASRTL_FEAT_FEATURE_MATRIX_H_
#define ASRTL_FEAT_FEATURE_MATRIX_H_

#include <string>

#include <Eigen/Dense>

namespace asrtl {

/// A frames x dims feature matrix with its frame geometry.
struct FeatureMatrix {
  Eigen::MatrixXf values;  // frames x dims
  float frame_shift_ms = 10.0f;
  float frame_length_ms = 25.0f;

  FeatureMatrix() = default;
  explicit FeatureMatrix(Eigen::MatrixXf v, float shift_ms = 10.0f,
                         float length_ms = 25.0f)
      : values(std::move(v)),
        frame_shift_ms(shift_ms),
        frame_length_ms(length_ms) {}

  Eigen::Index NumFrames() const { return values.rows(); }
  Eigen::Index Dim() const { return values.cols(); }
};

// Feature archive: "ASRF" magic, version, dims, frame count, frame geometry,
// then row-major 32-bit floats.
void WriteFeature(const std::string &path, const FeatureMatrix &fm);
FeatureMatrix ReadFeature(const std::string &path);

// Plain-text fixture format: "rows cols shift_ms length_ms" on the first
// line, then one row per line.
void WriteFeatureText(const std::string &path, const FeatureMatrix &fm);
FeatureMatrix ReadFeatureText(const std::string &path);

}  // namespace asrtl

#endif  // ASRTL_FEAT_FEATURE_MATRIX_H_

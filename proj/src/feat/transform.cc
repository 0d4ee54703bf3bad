// asrtl/feat/transform.cc

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

#include "asrtl/feat/transform.h"

#include <algorithm>

namespace asrtl {

FeatureMatrix ApplyCmn(const FeatureMatrix &fm) {
  if (fm.NumFrames() < 1) throw Error("apply_cmn: empty feature matrix");
  FeatureMatrix out = fm;
  // Accumulate the mean in double so repeated application is stable.
  Eigen::VectorXd mean = fm.values.cast<double>().colwise().mean();
  out.values = fm.values.rowwise() - mean.cast<float>().transpose();
  return out;
}

FeatureMatrix AppendDeltas(const FeatureMatrix &fm, int order) {
  if (order != 1 && order != 2)
    throw Error("append_deltas: order must be 1 or 2");
  const Eigen::Index T = fm.NumFrames(), D = fm.Dim();
  auto clamp = [T](Eigen::Index t) {
    return std::clamp<Eigen::Index>(t, 0, T - 1);
  };
  // delta[t] = sum_k k*(x[t+k]-x[t-k]) / (2*sum_k k^2), window k=1..2.
  auto delta_of = [&](const Eigen::MatrixXf &src) {
    Eigen::MatrixXf d(T, D);
    const float denom = 10.0f;  // 2*(1^2+2^2)
    for (Eigen::Index t = 0; t < T; t++) {
      d.row(t) = (src.row(clamp(t + 1)) - src.row(clamp(t - 1)) +
                  2.0f * (src.row(clamp(t + 2)) - src.row(clamp(t - 2)))) /
                 denom;
    }
    return d;
  };

  FeatureMatrix out;
  out.frame_shift_ms = fm.frame_shift_ms;
  out.frame_length_ms = fm.frame_length_ms;
  out.values.resize(T, D * (order + 1));
  out.values.leftCols(D) = fm.values;
  Eigen::MatrixXf d1 = delta_of(fm.values);
  out.values.middleCols(D, D) = d1;
  if (order == 2) out.values.middleCols(2 * D, D) = delta_of(d1);
  return out;
}

FeatureMatrix SpliceFrames(const FeatureMatrix &fm, int left, int right) {
  if (left < 0 || right < 0)
    throw Error("splice_frames: context sizes must be non-negative");
  const Eigen::Index T = fm.NumFrames(), D = fm.Dim();
  const int width = left + right + 1;
  FeatureMatrix out;
  out.frame_shift_ms = fm.frame_shift_ms;
  out.frame_length_ms = fm.frame_length_ms;
  out.values.resize(T, D * width);
  for (Eigen::Index t = 0; t < T; t++) {
    for (int o = -left; o <= right; o++) {
      Eigen::Index src = std::clamp<Eigen::Index>(t + o, 0, T - 1);
      out.values.block(t, (o + left) * D, 1, D) = fm.values.row(src);
    }
  }
  return out;
}

FeatureMatrix AssembleNnetInput(const FeatureMatrix &mfcc_hires,
                                const FeatureMatrix &pitch,
                                const Eigen::VectorXf &ivector) {
  if (mfcc_hires.NumFrames() != pitch.NumFrames())
    throw Error("assemble_nnet_input: frame count mismatch (" +
                std::to_string(mfcc_hires.NumFrames()) + " vs " +
                std::to_string(pitch.NumFrames()) + ")");
  const Eigen::Index T = mfcc_hires.NumFrames();
  const Eigen::Index dm = mfcc_hires.Dim(), dp = pitch.Dim(),
                     di = ivector.size();
  FeatureMatrix out;
  out.frame_shift_ms = mfcc_hires.frame_shift_ms;
  out.frame_length_ms = mfcc_hires.frame_length_ms;
  out.values.resize(T, dm + dp + di);
  out.values.leftCols(dm) = mfcc_hires.values;
  out.values.middleCols(dm, dp) = pitch.values;
  out.values.rightCols(di) = ivector.transpose().replicate(T, 1);
  return out;
}

}  // namespace asrtl

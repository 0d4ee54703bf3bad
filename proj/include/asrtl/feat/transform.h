// asrtl/feat/transform.h

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

#ifndef ASRTL_FEAT_TRANSFORM_H_
#define ASRTL_FEAT_TRANSFORM_H_

#include "asrtl/common.h"
#include "asrtl/feat/feature_matrix.h"

namespace asrtl {

/// Per-utterance cepstral mean normalization: subtracts the per-dimension
/// mean so every column of the result has mean zero.
FeatureMatrix ApplyCmn(const FeatureMatrix &fm);

/// Appends delta(+delta-delta) blocks computed with the standard +-2
/// regression window; boundary frames are replicated.  order must be 1 or 2.
FeatureMatrix AppendDeltas(const FeatureMatrix &fm, int order);

/// Concatenates frames t-left .. t+right (indices clamped to the matrix),
/// giving dims * (left + right + 1) columns.
FeatureMatrix SpliceFrames(const FeatureMatrix &fm, int left, int right);

/// Stacks hires MFCCs, pitch features and a per-utterance i-vector (repeated
/// on every frame) into the network input.  Frame counts must match.
FeatureMatrix AssembleNnetInput(const FeatureMatrix &mfcc_hires,
                                const FeatureMatrix &pitch,
                                const Eigen::VectorXf &ivector);

}  // namespace asrtl

#endif  // ASRTL_FEAT_TRANSFORM_H_

// asrtl/feat/pitch.h

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

#ifndef ASRTL_FEAT_PITCH_H_
#define ASRTL_FEAT_PITCH_H_

#include "asrtl/audio/audio_buffer.h"
#include "asrtl/common.h"
#include "asrtl/feat/feature_matrix.h"

namespace asrtl {

struct PitchConfig {
  float min_f0 = 60.0f;   // Hz, upper end of the lag search range
  float max_f0 = 400.0f;  // Hz, lower end of the lag search range
  float frame_shift_ms = 10.0f;
  float frame_length_ms = 25.0f;
  int num_feats = 3;  // 3: [pov, log-f0, delta-log-f0]; 4: + acorr peak
  float transition_weight = 2.0f;  // lag-change penalty in the Viterbi track
};

/// F0 track by normalized autocorrelation over the 60-400 Hz lag range with
/// Viterbi smoothing across frames.  Framing matches ComputeMfcc, so the two
/// agree in frame count on any buffer.
FeatureMatrix ComputePitch(const AudioBuffer &buf, const PitchConfig &cfg);

}  // namespace asrtl

#endif  // ASRTL_FEAT_PITCH_H_

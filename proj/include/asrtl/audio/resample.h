// asrtl/audio/resample.h

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

#ifndef ASRTL_AUDIO_RESAMPLE_H_
#define ASRTL_AUDIO_RESAMPLE_H_

#include "asrtl/audio/audio_buffer.h"
#include "asrtl/common.h"

namespace asrtl {

/// Band-limited resampling with a Kaiser-windowed sinc kernel (16 zero
/// crossings per side).  Output length is round(n * target / source).
AudioBuffer Resample(const AudioBuffer &buf, int target_rate);

/// Speed perturbation by resampling the waveform by 1/factor and relabeling
/// at the original rate: duration scales by 1/factor, pitch by factor.
/// Accepts factors in (0.5, 2.0).
AudioBuffer SpeedPerturb(const AudioBuffer &buf, double factor);

/// Multiplies every sample by gain (> 0) and clamps to [-1, 1].
/// If clamp_count is non-null it receives the number of clamped samples.
AudioBuffer VolumePerturb(const AudioBuffer &buf, double gain,
                          int64_t *clamp_count = nullptr);

}  // namespace asrtl

#endif  // ASRTL_AUDIO_RESAMPLE_H_

// asrtl/audio/audio_buffer.h

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

#ifndef ASRTL_AUDIO_AUDIO_BUFFER_H_
#define ASRTL_AUDIO_AUDIO_BUFFER_H_

#include <Eigen/Dense>

namespace asrtl {

/// Mono PCM audio.  Samples are amplitudes in [-1, 1]; operations treat
/// buffers as immutable and return new ones.
struct AudioBuffer {
  Eigen::VectorXf samples;
  int sample_rate = 0;  // Hz

  AudioBuffer() = default;
  AudioBuffer(Eigen::VectorXf s, int rate)
      : samples(std::move(s)), sample_rate(rate) {}

  Eigen::Index NumSamples() const { return samples.size(); }
  double DurationSeconds() const {
    return static_cast<double>(samples.size()) / sample_rate;
  }
};

}  // namespace asrtl

#endif  // ASRTL_AUDIO_AUDIO_BUFFER_H_

// asrtl/feat/mfcc.h

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

#ifndef ASRTL_FEAT_MFCC_H_
#define ASRTL_FEAT_MFCC_H_

#include <vector>

#include "asrtl/audio/audio_buffer.h"
#include "asrtl/common.h"
#include "asrtl/feat/feature_matrix.h"

namespace asrtl {

struct MfccConfig {
  int num_ceps = 13;
  int num_mel_bins = 23;
  float low_freq = 20.0f;
  float high_freq = 0.0f;  // 0 means Nyquist
  float frame_shift_ms = 10.0f;
  float frame_length_ms = 25.0f;
  float preemph = 0.97f;
  float lifter = 22.0f;
  bool use_energy = true;  // coefficient 0 is the raw log frame energy
  bool hires = false;      // append deltas and delta-deltas (13 -> 39)
};

inline double MelScale(double freq) {
  return 1127.0 * std::log(1.0 + freq / 700.0);
}
inline double InverseMelScale(double mel) {
  return 700.0 * (std::exp(mel / 1127.0) - 1.0);
}

/// Frame count for given audio length and geometry; 0 if audio is shorter
/// than one frame.
Eigen::Index NumFrames(Eigen::Index num_samples, int sample_rate,
                       float frame_shift_ms, float frame_length_ms);

/// Center frequencies (Hz) of the mel filters for a given config/rate.
std::vector<double> MelBinCenters(const MfccConfig &cfg, int sample_rate);

/// Log mel filterbank energies, frames x num_mel_bins.  Exposed for tests.
FeatureMatrix ComputeLogMelEnergies(const AudioBuffer &buf,
                                    const MfccConfig &cfg);

/// MFCCs: pre-emphasis, Hamming window, FFT power spectrum, mel filterbank,
/// log, orthonormal DCT-II, liftering.  Throws if the audio is shorter than
/// one frame.
FeatureMatrix ComputeMfcc(const AudioBuffer &buf, const MfccConfig &cfg);

}  // namespace asrtl

#endif  // ASRTL_FEAT_MFCC_H_

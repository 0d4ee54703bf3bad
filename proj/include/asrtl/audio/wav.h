// asrtl/audio/wav.h

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

#ifndef ASRTL_AUDIO_WAV_H_
#define ASRTL_AUDIO_WAV_H_

#include <string>

#include "asrtl/audio/audio_buffer.h"
#include "asrtl/common.h"

namespace asrtl {

/// Corrupt RIFF/fmt structure or truncated file.
class WavHeaderError : public Error {
 public:
  explicit WavHeaderError(const std::string &msg)
      : Error("wav header error: " + msg) {}
};

/// Well-formed container but not integer PCM (e.g. float, a-law).
class WavEncodingError : public Error {
 public:
  explicit WavEncodingError(const std::string &msg)
      : Error("wav encoding error: " + msg) {}
};

/// Reads a PCM WAV file (8- or 16-bit, any channel count; channels are
/// mixed down by averaging).  Samples come back normalized to [-1, 1].
/// Throws FileNotFoundError, WavHeaderError or WavEncodingError.
AudioBuffer ReadWav(const std::string &path);

/// Writes mono 16-bit PCM.  Samples are clamped to [-1, 1] before
/// quantization.
void WriteWav(const std::string &path, const AudioBuffer &buf);

}  // namespace asrtl

#endif  // ASRTL_AUDIO_WAV_H_

// asrtl/audio/wav.cc

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

#include "asrtl/audio/wav.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

namespace asrtl {

namespace {

struct ChunkHeader {
  char id[4];
  uint32_t size;
};

bool ReadChunkHeader(std::istream &is, ChunkHeader *h) {
  is.read(h->id, 4);
  if (is.gcount() != 4) return false;
  is.read(reinterpret_cast<char *>(&h->size), 4);
  return is.gcount() == 4;
}

}  // namespace

AudioBuffer ReadWav(const std::string &path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw FileNotFoundError(path);

  char riff[4], wave[4];
  uint32_t riff_size;
  is.read(riff, 4);
  is.read(reinterpret_cast<char *>(&riff_size), 4);
  is.read(wave, 4);
  if (!is) throw WavHeaderError("truncated header in " + path);
  if (std::memcmp(riff, "RIFF", 4) != 0 || std::memcmp(wave, "WAVE", 4) != 0)
    throw WavHeaderError("missing RIFF/WAVE magic in " + path);

  uint16_t format = 0, channels = 0, bits = 0;
  uint32_t sample_rate = 0;
  bool have_fmt = false;
  std::vector<char> data;

  ChunkHeader ch;
  while (ReadChunkHeader(is, &ch)) {
    if (std::memcmp(ch.id, "fmt ", 4) == 0) {
      if (ch.size < 16) throw WavHeaderError("fmt chunk too small in " + path);
      std::vector<char> fmt(ch.size);
      is.read(fmt.data(), ch.size);
      if (static_cast<uint32_t>(is.gcount()) != ch.size)
        throw WavHeaderError("truncated fmt chunk in " + path);
      std::memcpy(&format, fmt.data() + 0, 2);
      std::memcpy(&channels, fmt.data() + 2, 2);
      std::memcpy(&sample_rate, fmt.data() + 4, 4);
      std::memcpy(&bits, fmt.data() + 14, 2);
      have_fmt = true;
    } else if (std::memcmp(ch.id, "data", 4) == 0) {
      data.resize(ch.size);
      is.read(data.data(), ch.size);
      if (static_cast<uint32_t>(is.gcount()) != ch.size)
        throw WavHeaderError("truncated data chunk in " + path);
    } else {
      // Skip unknown chunks (LIST, fact, ...); chunks are word-aligned.
      is.seekg(ch.size + (ch.size & 1), std::ios::cur);
    }
    if (ch.size & 1) is.seekg(1, std::ios::cur);
  }

  if (!have_fmt) throw WavHeaderError("no fmt chunk in " + path);
  if (format != 1)  // 1 = integer PCM
    throw WavEncodingError("non-PCM format tag " + std::to_string(format) +
                           " in " + path);
  if (bits != 8 && bits != 16)
    throw WavEncodingError(std::to_string(bits) + "-bit PCM unsupported in " +
                           path);
  if (channels == 0 || sample_rate == 0)
    throw WavHeaderError("zero channels or sample rate in " + path);

  const size_t bytes_per_sample = bits / 8;
  const size_t frame_bytes = bytes_per_sample * channels;
  const size_t num_frames = data.size() / frame_bytes;

  Eigen::VectorXf samples(static_cast<Eigen::Index>(num_frames));
  for (size_t t = 0; t < num_frames; t++) {
    double acc = 0.0;
    for (size_t c = 0; c < channels; c++) {
      const char *p = data.data() + t * frame_bytes + c * bytes_per_sample;
      if (bits == 16) {
        int16_t v;
        std::memcpy(&v, p, 2);
        acc += v / 32768.0;
      } else {
        acc += (static_cast<unsigned char>(*p) - 128) / 128.0;
      }
    }
    samples[static_cast<Eigen::Index>(t)] =
        static_cast<float>(acc / channels);
  }
  return AudioBuffer(std::move(samples), static_cast<int>(sample_rate));
}

void WriteWav(const std::string &path, const AudioBuffer &buf) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("cannot open for writing: " + path);

  const uint32_t n = static_cast<uint32_t>(buf.NumSamples());
  const uint32_t data_bytes = n * 2;
  const uint32_t riff_size = 36 + data_bytes;
  const uint16_t channels = 1, bits = 16, format = 1;
  const uint32_t rate = static_cast<uint32_t>(buf.sample_rate);
  const uint32_t byte_rate = rate * 2;
  const uint16_t block_align = 2;
  const uint32_t fmt_size = 16;

  os.write("RIFF", 4);
  os.write(reinterpret_cast<const char *>(&riff_size), 4);
  os.write("WAVE", 4);
  os.write("fmt ", 4);
  os.write(reinterpret_cast<const char *>(&fmt_size), 4);
  os.write(reinterpret_cast<const char *>(&format), 2);
  os.write(reinterpret_cast<const char *>(&channels), 2);
  os.write(reinterpret_cast<const char *>(&rate), 4);
  os.write(reinterpret_cast<const char *>(&byte_rate), 4);
  os.write(reinterpret_cast<const char *>(&block_align), 2);
  os.write(reinterpret_cast<const char *>(&bits), 2);
  os.write("data", 4);
  os.write(reinterpret_cast<const char *>(&data_bytes), 4);

  for (uint32_t i = 0; i < n; i++) {
    float x = std::clamp(buf.samples[i], -1.0f, 1.0f);
    long q = std::lround(static_cast<double>(x) * 32768.0);
    int16_t v = static_cast<int16_t>(std::clamp(q, -32768L, 32767L));
    os.write(reinterpret_cast<const char *>(&v), 2);
  }
  if (!os) throw Error("write failed: " + path);
}

}  // namespace asrtl

// asrtl/audio/resample.cc

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

#include "asrtl/audio/resample.h"

#include <algorithm>
#include <cmath>

namespace asrtl {

namespace {

constexpr int kNumZeros = 16;       // sinc zero crossings per side
constexpr double kRolloff = 0.99;   // cutoff as a fraction of Nyquist
constexpr double kKaiserBeta = 5.0;

double BesselI0(double x) {
  // Power series; converges quickly for the betas used here.
  double sum = 1.0, term = 1.0;
  for (int k = 1; k < 64; k++) {
    term *= (x / (2.0 * k)) * (x / (2.0 * k));
    sum += term;
    if (term < 1e-16 * sum) break;
  }
  return sum;
}

double KaiserWindow(double alpha, double beta) {
  // alpha in [-1, 1]
  double t = 1.0 - alpha * alpha;
  if (t < 0.0) return 0.0;
  return BesselI0(beta * std::sqrt(t)) / BesselI0(beta);
}

double Sinc(double x) {
  if (std::abs(x) < 1e-12) return 1.0;
  return std::sin(M_PI * x) / (M_PI * x);
}

}  // namespace

AudioBuffer Resample(const AudioBuffer &buf, int target_rate) {
  if (target_rate <= 0) throw Error("resample: target rate must be positive");
  if (buf.sample_rate <= 0) throw Error("resample: invalid source rate");
  if (target_rate == buf.sample_rate) return buf;

  const Eigen::Index n_in = buf.NumSamples();
  const double ratio =
      static_cast<double>(target_rate) / static_cast<double>(buf.sample_rate);
  const Eigen::Index n_out =
      static_cast<Eigen::Index>(std::llround(n_in * ratio));

  // Kernel cutoff relative to the input Nyquist; when downsampling the sinc
  // stretches so the support still covers kNumZeros zero crossings.
  const double cutoff = kRolloff * std::min(1.0, ratio);
  const double half_width = kNumZeros / cutoff;

  Eigen::VectorXf out(n_out);
  for (Eigen::Index i = 0; i < n_out; i++) {
    const double pos = i / ratio;  // center in input sample coordinates
    const Eigen::Index j_lo = std::max<Eigen::Index>(
        0, static_cast<Eigen::Index>(std::ceil(pos - half_width)));
    const Eigen::Index j_hi = std::min<Eigen::Index>(
        n_in - 1, static_cast<Eigen::Index>(std::floor(pos + half_width)));
    double acc = 0.0;
    for (Eigen::Index j = j_lo; j <= j_hi; j++) {
      const double u = pos - j;
      acc += buf.samples[j] * cutoff * Sinc(cutoff * u) *
             KaiserWindow(u / half_width, kKaiserBeta);
    }
    out[i] = static_cast<float>(acc);
  }
  return AudioBuffer(std::move(out), target_rate);
}

AudioBuffer SpeedPerturb(const AudioBuffer &buf, double factor) {
  if (!(factor > 0.5 && factor < 2.0))
    throw Error("speed_perturb: factor " + std::to_string(factor) +
                " outside (0.5, 2.0)");
  if (factor == 1.0) return buf;
  // Resample to rate/factor, then relabel the result at the original rate.
  const int inner_rate =
      static_cast<int>(std::lround(buf.sample_rate / factor));
  AudioBuffer stretched = Resample(buf, inner_rate);
  stretched.sample_rate = buf.sample_rate;
  return stretched;
}

AudioBuffer VolumePerturb(const AudioBuffer &buf, double gain,
                          int64_t *clamp_count) {
  if (gain <= 0.0) throw Error("volume_perturb: gain must be positive");
  Eigen::VectorXf out(buf.NumSamples());
  int64_t clamped = 0;
  for (Eigen::Index i = 0; i < buf.NumSamples(); i++) {
    double v = buf.samples[i] * gain;
    if (v > 1.0) {
      v = 1.0;
      clamped++;
    } else if (v < -1.0) {
      v = -1.0;
      clamped++;
    }
    out[i] = static_cast<float>(v);
  }
  if (clamp_count != nullptr) *clamp_count = clamped;
  return AudioBuffer(std::move(out), buf.sample_rate);
}

}  // namespace asrtl

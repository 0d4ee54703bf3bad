// asrtl/feat/mfcc.cc

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

#include "asrtl/feat/mfcc.h"

#include <cmath>
#include <complex>
#include <vector>

#include <unsupported/Eigen/FFT>

#include "asrtl/feat/transform.h"

namespace asrtl {

Eigen::Index NumFrames(Eigen::Index num_samples, int sample_rate,
                       float frame_shift_ms, float frame_length_ms) {
  const Eigen::Index len =
      static_cast<Eigen::Index>(std::lround(frame_length_ms * sample_rate / 1000.0));
  const Eigen::Index shift =
      static_cast<Eigen::Index>(std::lround(frame_shift_ms * sample_rate / 1000.0));
  if (num_samples < len) return 0;
  return 1 + (num_samples - len) / shift;
}

namespace {

int NextPowerOfTwo(int n) {
  int p = 1;
  while (p < n) p <<= 1;
  return p;
}

double EffectiveHighFreq(const MfccConfig &cfg, int sample_rate) {
  return cfg.high_freq > 0.0f ? cfg.high_freq : sample_rate / 2.0;
}

// num_mel_bins x (nfft/2 + 1), triangles in the mel domain.
Eigen::MatrixXd MelFilterbank(const MfccConfig &cfg, int sample_rate,
                              int nfft) {
  const int num_fft_bins = nfft / 2 + 1;
  const double mel_low = MelScale(cfg.low_freq);
  const double mel_high = MelScale(EffectiveHighFreq(cfg, sample_rate));
  const double mel_delta = (mel_high - mel_low) / (cfg.num_mel_bins + 1);

  Eigen::MatrixXd bank = Eigen::MatrixXd::Zero(cfg.num_mel_bins, num_fft_bins);
  for (int b = 0; b < cfg.num_mel_bins; b++) {
    const double left = mel_low + b * mel_delta;
    const double center = left + mel_delta;
    const double right = center + mel_delta;
    for (int k = 0; k < num_fft_bins; k++) {
      const double mel = MelScale(static_cast<double>(k) * sample_rate / nfft);
      if (mel > left && mel < right) {
        bank(b, k) = mel <= center ? (mel - left) / mel_delta
                                   : (right - mel) / mel_delta;
      }
    }
  }
  return bank;
}

// Orthonormal DCT-II, num_ceps x num_mel_bins.
Eigen::MatrixXd DctMatrix(int num_ceps, int num_bins) {
  Eigen::MatrixXd dct(num_ceps, num_bins);
  for (int k = 0; k < num_ceps; k++) {
    const double scale =
        k == 0 ? std::sqrt(1.0 / num_bins) : std::sqrt(2.0 / num_bins);
    for (int j = 0; j < num_bins; j++)
      dct(k, j) = scale * std::cos(M_PI * k * (j + 0.5) / num_bins);
  }
  return dct;
}

struct FrameWork {
  Eigen::Index frame_len, frame_shift;
  int nfft;
  Eigen::VectorXd window;
  Eigen::FFT<double> fft;
};

void ValidateConfig(const MfccConfig &cfg, int sample_rate) {
  if (cfg.num_ceps > cfg.num_mel_bins)
    throw Error("mfcc: num_ceps exceeds num_mel_bins");
  double high = EffectiveHighFreq(cfg, sample_rate);
  if (!(cfg.low_freq >= 0.0f && cfg.low_freq < high &&
        high <= sample_rate / 2.0))
    throw Error("mfcc: bad low/high frequency range");
}

// Shared framing front end: fills log mel energies and raw log energies.
void ComputeMelFrames(const AudioBuffer &buf, const MfccConfig &cfg,
                      Eigen::MatrixXd *log_mel, Eigen::VectorXd *log_energy) {
  ValidateConfig(cfg, buf.sample_rate);
  const Eigen::Index T = NumFrames(buf.NumSamples(), buf.sample_rate,
                                   cfg.frame_shift_ms, cfg.frame_length_ms);
  if (T == 0) throw Error("mfcc: audio shorter than one frame");

  FrameWork fw;
  fw.frame_len = static_cast<Eigen::Index>(
      std::lround(cfg.frame_length_ms * buf.sample_rate / 1000.0));
  fw.frame_shift = static_cast<Eigen::Index>(
      std::lround(cfg.frame_shift_ms * buf.sample_rate / 1000.0));
  fw.nfft = NextPowerOfTwo(static_cast<int>(fw.frame_len));
  fw.window.resize(fw.frame_len);
  for (Eigen::Index i = 0; i < fw.frame_len; i++)
    fw.window[i] = 0.54 - 0.46 * std::cos(2.0 * M_PI * i / (fw.frame_len - 1));

  const Eigen::MatrixXd bank = MelFilterbank(cfg, buf.sample_rate, fw.nfft);
  const int num_fft_bins = fw.nfft / 2 + 1;

  log_mel->resize(T, cfg.num_mel_bins);
  log_energy->resize(T);
  std::vector<double> padded(fw.nfft);
  std::vector<std::complex<double>> spectrum(fw.nfft);
  Eigen::VectorXd frame(fw.frame_len), power(num_fft_bins);

  for (Eigen::Index t = 0; t < T; t++) {
    const Eigen::Index start = t * fw.frame_shift;
    for (Eigen::Index i = 0; i < fw.frame_len; i++)
      frame[i] = buf.samples[start + i];

    // Raw energy before pre-emphasis and windowing.
    (*log_energy)[t] = std::log(std::max(frame.squaredNorm(), 1e-15));

    for (Eigen::Index i = fw.frame_len - 1; i > 0; i--)
      frame[i] -= cfg.preemph * frame[i - 1];
    frame[0] -= cfg.preemph * frame[0];
    frame.array() *= fw.window.array();

    for (int i = 0; i < fw.nfft; i++)
      padded[i] = i < fw.frame_len ? frame[i] : 0.0;
    fw.fft.fwd(spectrum, padded);
    for (int k = 0; k < num_fft_bins; k++) power[k] = std::norm(spectrum[k]);

    log_mel->row(t) =
        (bank * power).array().max(1e-10).log().transpose();
  }
}

}  // namespace

std::vector<double> MelBinCenters(const MfccConfig &cfg, int sample_rate) {
  const double mel_low = MelScale(cfg.low_freq);
  const double mel_high = MelScale(EffectiveHighFreq(cfg, sample_rate));
  const double mel_delta = (mel_high - mel_low) / (cfg.num_mel_bins + 1);
  std::vector<double> centers(cfg.num_mel_bins);
  for (int b = 0; b < cfg.num_mel_bins; b++)
    centers[b] = InverseMelScale(mel_low + (b + 1) * mel_delta);
  return centers;
}

FeatureMatrix ComputeLogMelEnergies(const AudioBuffer &buf,
                                    const MfccConfig &cfg) {
  Eigen::MatrixXd log_mel;
  Eigen::VectorXd log_energy;
  ComputeMelFrames(buf, cfg, &log_mel, &log_energy);
  return FeatureMatrix(log_mel.cast<float>(), cfg.frame_shift_ms,
                       cfg.frame_length_ms);
}

FeatureMatrix ComputeMfcc(const AudioBuffer &buf, const MfccConfig &cfg) {
  Eigen::MatrixXd log_mel;
  Eigen::VectorXd log_energy;
  ComputeMelFrames(buf, cfg, &log_mel, &log_energy);
  const Eigen::Index T = log_mel.rows();

  const Eigen::MatrixXd dct = DctMatrix(cfg.num_ceps, cfg.num_mel_bins);
  Eigen::MatrixXd ceps = log_mel * dct.transpose();

  if (cfg.lifter > 0.0f) {
    Eigen::VectorXd lift(cfg.num_ceps);
    for (int k = 0; k < cfg.num_ceps; k++)
      lift[k] = 1.0 + 0.5 * cfg.lifter * std::sin(M_PI * k / cfg.lifter);
    ceps = ceps * lift.asDiagonal();
  }
  if (cfg.use_energy) ceps.col(0) = log_energy;

  FeatureMatrix out(ceps.cast<float>(), cfg.frame_shift_ms,
                    cfg.frame_length_ms);
  if (cfg.hires) out = AppendDeltas(out, 2);
  return out;
}

}  // namespace asrtl

// asrtl/feat/pitch.cc

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

#include "asrtl/feat/pitch.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "asrtl/feat/mfcc.h"

namespace asrtl {

FeatureMatrix ComputePitch(const AudioBuffer &buf, const PitchConfig &cfg) {
  if (cfg.num_feats != 3 && cfg.num_feats != 4)
    throw Error("compute_pitch: num_feats must be 3 or 4");
  const int sr = buf.sample_rate;
  const Eigen::Index T = NumFrames(buf.NumSamples(), sr, cfg.frame_shift_ms,
                                   cfg.frame_length_ms);
  if (T == 0) throw Error("compute_pitch: audio shorter than one frame");

  const Eigen::Index win = static_cast<Eigen::Index>(
      std::lround(cfg.frame_length_ms * sr / 1000.0));
  const Eigen::Index shift = static_cast<Eigen::Index>(
      std::lround(cfg.frame_shift_ms * sr / 1000.0));
  const int lag_min = std::max(2, static_cast<int>(sr / cfg.max_f0));
  const int lag_max = static_cast<int>(std::ceil(sr / cfg.min_f0));
  const int num_lags = lag_max - lag_min + 1;

  // Normalized cross-correlation per frame and lag.  The correlation window
  // reads lag_max samples past the nominal frame end (zero padded at the
  // buffer tail).
  Eigen::MatrixXd ncc(T, num_lags);
  Eigen::MatrixXd acorr_coef(T, num_lags);  // r(lag)/r(0)
  const Eigen::Index n = buf.NumSamples();
  auto sample = [&](Eigen::Index i) -> double {
    return i < n ? buf.samples[i] : 0.0;
  };
  for (Eigen::Index t = 0; t < T; t++) {
    const Eigen::Index s0 = t * shift;
    double e0 = 0.0;
    for (Eigen::Index i = 0; i < win; i++) e0 += sample(s0 + i) * sample(s0 + i);
    for (int li = 0; li < num_lags; li++) {
      const int lag = lag_min + li;
      double dot = 0.0, e1 = 0.0;
      for (Eigen::Index i = 0; i < win; i++) {
        const double b = sample(s0 + i + lag);
        dot += sample(s0 + i) * b;
        e1 += b * b;
      }
      ncc(t, li) = dot / std::sqrt(e0 * e1 + 1e-10);
      acorr_coef(t, li) = dot / (e0 + 1e-10);
    }
  }

  // Viterbi over lags: maximize sum of ncc minus a lag-change penalty
  // rho * min(|log(l/l')|, band).  Beyond the band the penalty saturates,
  // so those transitions reduce to the global best of the previous frame.
  const double rho = cfg.transition_weight;
  const double band = 0.7;
  std::vector<double> log_lag(num_lags);
  for (int li = 0; li < num_lags; li++) log_lag[li] = std::log(lag_min + li);

  Eigen::MatrixXd dp(T, num_lags);
  Eigen::MatrixXi back(T, num_lags);
  dp.row(0) = ncc.row(0);
  back.row(0).setConstant(-1);
  for (Eigen::Index t = 1; t < T; t++) {
    int global_best = 0;
    for (int li = 1; li < num_lags; li++)
      if (dp(t - 1, li) > dp(t - 1, global_best)) global_best = li;
    for (int li = 0; li < num_lags; li++) {
      double best = dp(t - 1, global_best) - rho * band;
      int best_prev = global_best;
      for (int lj = 0; lj < num_lags; lj++) {
        const double gap = std::abs(log_lag[li] - log_lag[lj]);
        if (gap >= band) continue;
        const double cand = dp(t - 1, lj) - rho * gap;
        if (cand > best) {
          best = cand;
          best_prev = lj;
        }
      }
      dp(t, li) = ncc(t, li) + best;
      back(t, li) = best_prev;
    }
  }

  std::vector<int> path(T);
  {
    int li = 0;
    for (int lj = 1; lj < num_lags; lj++)
      if (dp(T - 1, lj) > dp(T - 1, li)) li = lj;
    for (Eigen::Index t = T - 1; t >= 0; t--) {
      path[t] = li;
      if (t > 0) li = back(t, li);
    }
  }

  // Parabolic lag refinement around the chosen peak, then the feature set.
  Eigen::VectorXd pov(T), log_f0(T), acorr_peak(T);
  for (Eigen::Index t = 0; t < T; t++) {
    const int li = path[t];
    double lag = lag_min + li;
    if (li > 0 && li < num_lags - 1) {
      const double ym = ncc(t, li - 1), y0 = ncc(t, li), yp = ncc(t, li + 1);
      const double denom = ym - 2.0 * y0 + yp;
      if (std::abs(denom) > 1e-12) {
        const double offset = 0.5 * (ym - yp) / denom;
        if (std::abs(offset) <= 1.0) lag += offset;
      }
    }
    pov[t] = std::clamp(ncc(t, li), 0.0, 1.0);
    log_f0[t] = std::log(sr / lag);
    acorr_peak[t] = acorr_coef(t, li);
  }

  // Delta of log-f0 with the standard +-2 regression window.
  Eigen::VectorXd dlog_f0(T);
  auto clamp_t = [T](Eigen::Index t) {
    return std::clamp<Eigen::Index>(t, 0, T - 1);
  };
  for (Eigen::Index t = 0; t < T; t++) {
    dlog_f0[t] = (log_f0[clamp_t(t + 1)] - log_f0[clamp_t(t - 1)] +
                  2.0 * (log_f0[clamp_t(t + 2)] - log_f0[clamp_t(t - 2)])) /
                 10.0;
  }

  FeatureMatrix out;
  out.frame_shift_ms = cfg.frame_shift_ms;
  out.frame_length_ms = cfg.frame_length_ms;
  out.values.resize(T, cfg.num_feats);
  out.values.col(0) = pov.cast<float>();
  out.values.col(1) = log_f0.cast<float>();
  out.values.col(2) = dlog_f0.cast<float>();
  if (cfg.num_feats == 4) out.values.col(3) = acorr_peak.cast<float>();
  return out;
}

}  // namespace asrtl

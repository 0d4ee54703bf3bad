// asrtl/gmm/diag_gmm.h

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

#ifndef ASRTL_GMM_DIAG_GMM_H_
#define ASRTL_GMM_DIAG_GMM_H_

#include <cstdint>
#include <vector>

#include "asrtl/common.h"

namespace asrtl {

class BinaryReader;
class BinaryWriter;

/// Diagonal-covariance Gaussian mixture.  Weights sum to one; components
/// with weight zero are inert (they are skipped during evaluation).
struct DiagGmm {
  Eigen::VectorXd weights;  // K
  Eigen::MatrixXd means;    // K x D
  Eigen::MatrixXd vars;     // K x D, each entry >= the variance floor

  int NumComponents() const { return static_cast<int>(weights.size()); }
  int Dim() const { return static_cast<int>(means.cols()); }

  /// Total log-likelihood of each row of frames (frames x D) -> (frames).
  Eigen::VectorXd FrameLogLikes(const Eigen::MatrixXd &frames) const;

  /// Per-component posteriors (frames x K) and per-frame total
  /// log-likelihoods.
  void Posteriors(const Eigen::MatrixXd &frames, Eigen::MatrixXd *post,
                  Eigen::VectorXd *loglikes) const;
};

void WriteDiagGmm(BinaryWriter *w, const DiagGmm &gmm);
DiagGmm ReadDiagGmm(BinaryReader *r);

struct GmmEmOptions {
  int extra_kmeans_iters = 2;      // after k-means++ seeding
  double var_floor_fraction = 1e-4;  // of the global per-dim variance
};

/// EM fit with randomized k-means++ seeding.  The total log-likelihood is
/// non-decreasing across iterations.  Throws if frames < K or data is empty.
DiagGmm FitGmmEm(const Eigen::MatrixXd &data, int num_components, int iters,
                 uint64_t seed, const GmmEmOptions &opts = GmmEmOptions());

/// One EM iteration on `gmm` for the given data, respecting the variance
/// floor; returns the data log-likelihood under the *input* model.
double GmmEmStep(const Eigen::MatrixXd &data, const Eigen::VectorXd &var_floor,
                 DiagGmm *gmm);

/// Splits the heaviest component in two (deterministic seeded perturbation)
/// and refines with EM; keeps the split only if the data log-likelihood does
/// not decrease.  Returns true if the mixture grew.
bool TrySplitComponent(const Eigen::MatrixXd &data,
                       const Eigen::VectorXd &var_floor, uint64_t seed,
                       DiagGmm *gmm);

}  // namespace asrtl

#endif  // ASRTL_GMM_DIAG_GMM_H_

#pragma once

#include "siglearn/dataset.hpp"
#include "siglearn/rng.hpp"
#include "siglearn/signature.hpp"

namespace siglearn {

/// K-means signature of a dataset: Lloyd iterations from distance-weighted
/// seeding, run on the features only. Each representative is the mean of its
/// group's feature rows; the response summary is the group's response mean
/// (regression) or the stratum label (classification, which runs one
/// clustering per class). The within-group sum of squared distances is
/// non-increasing across iterations.
///
/// Throws std::invalid_argument when k < 1, k > n, or the dataset is empty.
Signature kmeans_signature(const Dataset& data, int k, RngHandle rng,
                           int max_iters = 100, double tol = 1e-6);

/// Lloyd result on a bare point set; building block for kmeans_signature and
/// for the theory checks that quantize unlabeled samples.
struct LloydResult {
  Eigen::MatrixXd centroids;          // k x d
  std::vector<std::int32_t> assignment;  // row -> centroid
  double objective = 0.0;             // within-group SSE at the last iteration
  int iterations = 0;
};

LloydResult lloyd_kmeans(const Eigen::MatrixXd& points, int k, Rng& rng,
                         int max_iters = 100, double tol = 1e-6);

}  // namespace siglearn

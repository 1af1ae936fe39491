#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "siglearn/dataset.hpp"
#include "siglearn/rng.hpp"

namespace siglearn {

enum class TransformKind { kKMeans, kKdTree, kRpTree };

std::string transform_kind_name(TransformKind kind);
TransformKind transform_kind_from_name(const std::string& name);

/// Configuration of a distortion-minimizing local transform. The target size
/// is given either explicitly (k for K-means, max_leaf for trees) or derived
/// from `ratio`: k = ceil(n / ratio), max_leaf = ratio.
struct TransformConfig {
  TransformKind kind = TransformKind::kKMeans;
  double ratio = 0.0;  // rows per representative; used when k/max_leaf are 0
  int k = 0;
  int max_leaf = 0;
  int kmeans_max_iters = 100;
  double kmeans_tol = 1e-6;
  /// Classification runs the transform within each class by default so each
  /// representative carries a pure label. Pooling instead groups across
  /// classes and labels each group by majority vote (comparison mode).
  bool pool_labels = false;
  /// Standardize features (zero mean, unit variance) before random
  /// projections; off by default.
  bool standardize = false;

  int resolve_k(Eigen::Index n) const;
  int resolve_max_leaf() const;
};

/// What produced a signature; recorded for the report config echo.
struct TransformDescriptor {
  TransformKind kind = TransformKind::kKMeans;
  int size_param = 0;  // k or max_leaf
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

/// Weighted representative set one site transmits: per representative a
/// centroid, a response summary (group response mean for regression, the
/// class label for classification), and the group size as weight. The
/// row-to-representative assignment is kept for local distortion evaluation
/// and never crosses the wire.
struct Signature {
  Eigen::MatrixXd centroids;                       // m x d
  Eigen::VectorXd responses;                       // length m
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1> weights;  // length m, >= 1
  std::string site_id;
  TransformDescriptor transform;
  std::vector<std::int32_t> assignment;            // local only; row -> rep

  Eigen::Index rep_count() const { return centroids.rows(); }
  Eigen::Index dim() const { return centroids.cols(); }
  std::int64_t total_weight() const { return weights.sum(); }

  /// Checks mass conservation against the source row count plus structural
  /// invariants; throws std::invalid_argument on violation.
  void validate(Eigen::Index source_rows) const;
};

/// Empirical distortion: mean over rows of ||x - rep(x)||^alpha, using the
/// signature's recorded assignment. alpha = 2 is the mean squared
/// quantization error.
double distortion(const Dataset& data, const Signature& sig, double alpha = 2.0);

/// Concatenates signatures from several sites into the coordinator's pooled
/// weighted design (Signature order preserved).
WeightedDesign pool_signatures(const std::vector<Signature>& signatures);

/// Unified entry point: dispatches on config.kind and handles per-class
/// stratification for classification datasets.
Signature dml_signature(const Dataset& data, const TransformConfig& config,
                        RngHandle rng);

}  // namespace siglearn

#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace siglearn {

enum class Task { kRegression, kClassification };

/// In-memory tabular dataset: an n x d feature matrix plus a response column.
/// The response is either real-valued (regression) or a class label stored as
/// an integral double in {0..num_classes-1} (classification).
struct Dataset {
  Eigen::MatrixXd features;               // n x d
  Eigen::VectorXd response;               // length n
  Task task = Task::kRegression;
  int num_classes = 0;                    // classification only
  std::vector<std::string> feature_names; // empty or length d

  Eigen::Index rows() const { return features.rows(); }
  Eigen::Index cols() const { return features.cols(); }

  int label(Eigen::Index i) const { return static_cast<int>(response(i)); }

  /// Throws std::invalid_argument if any structural invariant is violated:
  /// n >= 1, finite entries, labels integral and inside {0..num_classes-1}.
  void validate() const;

  /// New dataset holding the given rows (task metadata carried over).
  Dataset subset(const std::vector<int>& row_indices) const;

  /// Row indices per class, indexed by label.
  std::vector<std::vector<int>> rows_by_class() const;
};

/// Weighted design matrix a learner fits on: either raw data with unit
/// weights or pooled signature representatives with group-size weights.
struct WeightedDesign {
  Eigen::MatrixXd points;     // m x d
  Eigen::VectorXd responses;  // length m
  Eigen::VectorXd weights;    // length m, all > 0

  Eigen::Index rows() const { return points.rows(); }
  Eigen::Index cols() const { return points.cols(); }
  double total_weight() const { return weights.sum(); }

  void validate() const;
};

/// Unit-weight design over a dataset's raw rows (the non-distributed path).
WeightedDesign unit_design(const Dataset& data);

/// Expands integer weights by row replication. Oracle helper for the
/// weighted-fit equivalence checks; weights must be integral.
WeightedDesign replicate_design(const WeightedDesign& design);

}  // namespace siglearn

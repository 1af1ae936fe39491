#include "siglearn/dataset.hpp"

#include <cmath>
#include <stdexcept>

namespace siglearn {

void Dataset::validate() const {
  if (rows() < 1) throw std::invalid_argument("Dataset: needs at least one row");
  if (response.size() != rows())
    throw std::invalid_argument("Dataset: response length does not match row count");
  if (!features.allFinite() || !response.allFinite())
    throw std::invalid_argument("Dataset: non-finite entry");
  if (!feature_names.empty() &&
      feature_names.size() != static_cast<std::size_t>(cols()))
    throw std::invalid_argument("Dataset: feature name count does not match dimension");
  if (task == Task::kClassification) {
    if (num_classes < 1) throw std::invalid_argument("Dataset: num_classes must be >= 1");
    for (Eigen::Index i = 0; i < rows(); ++i) {
      const double y = response(i);
      if (y != std::floor(y) || y < 0 || y >= num_classes)
        throw std::invalid_argument("Dataset: label out of {0..C-1} at row " +
                                    std::to_string(i));
    }
  }
}

Dataset Dataset::subset(const std::vector<int>& row_indices) const {
  Dataset out;
  out.features.resize(static_cast<Eigen::Index>(row_indices.size()), cols());
  out.response.resize(static_cast<Eigen::Index>(row_indices.size()));
  for (std::size_t i = 0; i < row_indices.size(); ++i) {
    const int r = row_indices[i];
    if (r < 0 || r >= rows())
      throw std::out_of_range("Dataset::subset: row index " + std::to_string(r));
    out.features.row(static_cast<Eigen::Index>(i)) = features.row(r);
    out.response(static_cast<Eigen::Index>(i)) = response(r);
  }
  out.task = task;
  out.num_classes = num_classes;
  out.feature_names = feature_names;
  return out;
}

std::vector<std::vector<int>> Dataset::rows_by_class() const {
  if (task != Task::kClassification)
    throw std::logic_error("rows_by_class: regression dataset");
  std::vector<std::vector<int>> groups(static_cast<std::size_t>(num_classes));
  for (Eigen::Index i = 0; i < rows(); ++i)
    groups[static_cast<std::size_t>(label(i))].push_back(static_cast<int>(i));
  return groups;
}

void WeightedDesign::validate() const {
  if (rows() < 1) throw std::invalid_argument("WeightedDesign: needs at least one row");
  if (responses.size() != rows() || weights.size() != rows())
    throw std::invalid_argument("WeightedDesign: column lengths do not match");
  if (!points.allFinite() || !responses.allFinite() || !weights.allFinite())
    throw std::invalid_argument("WeightedDesign: non-finite entry");
  if ((weights.array() <= 0.0).any())
    throw std::invalid_argument("WeightedDesign: weights must be positive");
}

WeightedDesign unit_design(const Dataset& data) {
  WeightedDesign design;
  design.points = data.features;
  design.responses = data.response;
  design.weights = Eigen::VectorXd::Ones(data.rows());
  return design;
}

WeightedDesign replicate_design(const WeightedDesign& design) {
  Eigen::Index total = 0;
  for (Eigen::Index i = 0; i < design.rows(); ++i) {
    const double w = design.weights(i);
    if (w != std::floor(w) || w < 1)
      throw std::invalid_argument("replicate_design: weights must be positive integers");
    total += static_cast<Eigen::Index>(w);
  }
  WeightedDesign out;
  out.points.resize(total, design.cols());
  out.responses.resize(total);
  out.weights = Eigen::VectorXd::Ones(total);
  Eigen::Index at = 0;
  for (Eigen::Index i = 0; i < design.rows(); ++i) {
    const auto copies = static_cast<Eigen::Index>(design.weights(i));
    for (Eigen::Index c = 0; c < copies; ++c, ++at) {
      out.points.row(at) = design.points.row(i);
      out.responses(at) = design.responses(i);
    }
  }
  return out;
}

}  // namespace siglearn

#include "siglearn/kmeans.hpp"

#include <limits>
#include <stdexcept>

namespace siglearn {

namespace {

// Squared distances of every point to every centroid via
// |x|^2 - 2 x.c + |c|^2; argmin per row.
void assign_points(const Eigen::MatrixXd& points, const Eigen::VectorXd& point_norms,
                   const Eigen::MatrixXd& centroids,
                   std::vector<std::int32_t>& assignment, double& objective) {
  const Eigen::Index n = points.rows();
  const Eigen::VectorXd centroid_norms = centroids.rowwise().squaredNorm();
  const Eigen::MatrixXd cross = points * centroids.transpose();  // n x k
  objective = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::Index best = 0;
    double best_dist = std::numeric_limits<double>::infinity();
    for (Eigen::Index c = 0; c < centroids.rows(); ++c) {
      const double dist = point_norms(i) - 2.0 * cross(i, c) + centroid_norms(c);
      if (dist < best_dist) {
        best_dist = dist;
        best = c;
      }
    }
    assignment[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(best);
    objective += std::max(best_dist, 0.0);
  }
}

// k-means++ style seeding: first centroid uniform, the rest sampled with
// probability proportional to squared distance from the chosen set.
Eigen::MatrixXd seed_centroids(const Eigen::MatrixXd& points, int k, Rng& rng) {
  const Eigen::Index n = points.rows();
  Eigen::MatrixXd centroids(k, points.cols());
  centroids.row(0) = points.row(static_cast<Eigen::Index>(rng.uniform_below(n)));
  Eigen::VectorXd dist2 =
      (points.rowwise() - centroids.row(0)).rowwise().squaredNorm();
  for (int c = 1; c < k; ++c) {
    const double total = dist2.sum();
    Eigen::Index pick = 0;
    if (total > 0.0) {
      double target = rng.uniform() * total;
      for (Eigen::Index i = 0; i < n; ++i) {
        target -= dist2(i);
        if (target <= 0.0) {
          pick = i;
          break;
        }
        pick = i;
      }
    } else {
      pick = static_cast<Eigen::Index>(rng.uniform_below(n));
    }
    centroids.row(c) = points.row(pick);
    dist2 = dist2.cwiseMin(
        (points.rowwise() - centroids.row(c)).rowwise().squaredNorm());
  }
  return centroids;
}

}  // namespace

LloydResult lloyd_kmeans(const Eigen::MatrixXd& points, int k, Rng& rng,
                         int max_iters, double tol) {
  const Eigen::Index n = points.rows();
  if (n == 0) throw std::invalid_argument("lloyd_kmeans: empty point set");
  if (k < 1) throw std::invalid_argument("lloyd_kmeans: k must be >= 1");
  if (k > n)
    throw std::invalid_argument("lloyd_kmeans: k (" + std::to_string(k) +
                                ") exceeds point count (" + std::to_string(n) + ")");

  LloydResult result;
  result.centroids = seed_centroids(points, k, rng);
  result.assignment.resize(static_cast<std::size_t>(n));
  const Eigen::VectorXd point_norms = points.rowwise().squaredNorm();

  Eigen::MatrixXd sums(k, points.cols());
  Eigen::VectorXd counts(k);
  for (int iter = 0; iter < max_iters; ++iter) {
    assign_points(points, point_norms, result.centroids, result.assignment,
                  result.objective);
    result.iterations = iter + 1;

    sums.setZero();
    counts.setZero();
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto c = result.assignment[static_cast<std::size_t>(i)];
      sums.row(c) += points.row(i);
      counts(c) += 1.0;
    }
    // Empty-cluster repair: reseed at the point farthest from its centroid.
    for (int c = 0; c < k; ++c) {
      if (counts(c) > 0.0) continue;
      Eigen::Index farthest = 0;
      double worst = -1.0;
      for (Eigen::Index i = 0; i < n; ++i) {
        const auto a = result.assignment[static_cast<std::size_t>(i)];
        const double dist =
            (points.row(i) - result.centroids.row(a)).squaredNorm();
        if (dist > worst) {
          worst = dist;
          farthest = i;
        }
      }
      const auto old = result.assignment[static_cast<std::size_t>(farthest)];
      sums.row(old) -= points.row(farthest);
      counts(old) -= 1.0;
      sums.row(c) = points.row(farthest);
      counts(c) = 1.0;
      result.assignment[static_cast<std::size_t>(farthest)] =
          static_cast<std::int32_t>(c);
    }

    double movement = 0.0;
    for (int c = 0; c < k; ++c) {
      const Eigen::RowVectorXd updated = sums.row(c) / counts(c);
      movement = std::max(movement, (updated - result.centroids.row(c)).norm() /
                                        (1.0 + updated.norm()));
      result.centroids.row(c) = updated;
    }
    if (movement < tol) break;
  }
  // Final assignment against the settled centroids.
  assign_points(points, point_norms, result.centroids, result.assignment,
                result.objective);
  return result;
}

namespace {

Signature signature_from_groups(const Dataset& data, const Eigen::MatrixXd& centroids,
                                const std::vector<std::int32_t>& assignment) {
  const auto k = centroids.rows();
  Signature sig;
  sig.centroids = centroids;
  sig.responses = Eigen::VectorXd::Zero(k);
  sig.weights.setZero(k);
  sig.assignment = assignment;
  for (Eigen::Index i = 0; i < data.rows(); ++i) {
    const auto c = assignment[static_cast<std::size_t>(i)];
    sig.responses(c) += data.response(i);
    sig.weights(c) += 1;
  }
  for (Eigen::Index c = 0; c < k; ++c)
    sig.responses(c) /= static_cast<double>(sig.weights(c));
  return sig;
}

}  // namespace

Signature kmeans_signature(const Dataset& data, int k, RngHandle rng,
                           int max_iters, double tol) {
  if (data.rows() == 0) throw std::invalid_argument("kmeans_signature: empty dataset");
  if (k < 1 || k > data.rows())
    throw std::invalid_argument("kmeans_signature: k must be in [1, n]");

  Signature sig;
  if (data.task == Task::kClassification) {
    // Stratified: one clustering per class so every representative carries a
    // pure label. k is split across present classes proportionally to class
    // size (largest remainder, at least one representative each).
    const auto groups = data.rows_by_class();
    std::vector<int> present;
    for (std::size_t c = 0; c < groups.size(); ++c)
      if (!groups[c].empty()) present.push_back(static_cast<int>(c));

    const double n = static_cast<double>(data.rows());
    std::vector<int> alloc(present.size(), 0);
    std::vector<std::pair<double, std::size_t>> remainders;
    int used = 0;
    for (std::size_t j = 0; j < present.size(); ++j) {
      const double share = k * groups[static_cast<std::size_t>(present[j])].size() / n;
      alloc[j] = std::max(1, static_cast<int>(share));
      alloc[j] = std::min<int>(alloc[j],
                               static_cast<int>(groups[static_cast<std::size_t>(present[j])].size()));
      used += alloc[j];
      remainders.emplace_back(share - alloc[j], j);
    }
    std::sort(remainders.begin(), remainders.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    for (std::size_t r = 0; used < k && r < remainders.size(); ++r) {
      const std::size_t j = remainders[r].second;
      const auto cap =
          static_cast<int>(groups[static_cast<std::size_t>(present[j])].size());
      if (alloc[j] < cap) {
        ++alloc[j];
        ++used;
      }
    }

    sig.assignment.assign(static_cast<std::size_t>(data.rows()), 0);
    std::vector<Eigen::MatrixXd> all_centroids;
    std::vector<double> labels;
    std::vector<std::int64_t> weights;
    Eigen::Index rep_base = 0;
    for (std::size_t j = 0; j < present.size(); ++j) {
      const auto& rows = groups[static_cast<std::size_t>(present[j])];
      Eigen::MatrixXd class_points(rows.size(), data.cols());
      for (std::size_t i = 0; i < rows.size(); ++i)
        class_points.row(static_cast<Eigen::Index>(i)) = data.features.row(rows[i]);
      Rng engine(rng.fork(static_cast<std::uint64_t>(present[j])));
      const LloydResult fit = lloyd_kmeans(class_points, alloc[j], engine, max_iters, tol);

      std::vector<std::int64_t> class_weights(static_cast<std::size_t>(alloc[j]), 0);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto c = fit.assignment[i];
        sig.assignment[static_cast<std::size_t>(rows[i])] =
            static_cast<std::int32_t>(rep_base + c);
        ++class_weights[static_cast<std::size_t>(c)];
      }
      all_centroids.push_back(fit.centroids);
      for (int c = 0; c < alloc[j]; ++c) {
        labels.push_back(static_cast<double>(present[j]));
        weights.push_back(class_weights[static_cast<std::size_t>(c)]);
      }
      rep_base += alloc[j];
    }

    sig.centroids.resize(rep_base, data.cols());
    sig.responses.resize(rep_base);
    sig.weights.resize(rep_base);
    Eigen::Index at = 0;
    for (const auto& block : all_centroids) {
      sig.centroids.middleRows(at, block.rows()) = block;
      at += block.rows();
    }
    for (Eigen::Index r = 0; r < rep_base; ++r) {
      sig.responses(r) = labels[static_cast<std::size_t>(r)];
      sig.weights(r) = weights[static_cast<std::size_t>(r)];
    }
  } else {
    Rng engine(rng);
    const LloydResult fit = lloyd_kmeans(data.features, k, engine, max_iters, tol);
    sig = signature_from_groups(data, fit.centroids, fit.assignment);
  }

  sig.transform = TransformDescriptor{TransformKind::kKMeans, k, rng.seed, rng.stream};
  sig.validate(data.rows());
  return sig;
}

}  // namespace siglearn

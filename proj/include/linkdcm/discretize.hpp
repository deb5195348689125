#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace linkdcm {

// Result of 1-D k-means. Cluster indices are arbitrary (seeding order);
// assign_levels() relabels them into ordered emission levels.
struct Clustering {
    std::vector<double> centroids;  // one per cluster
    std::vector<int> assignment;    // per input point, cluster index
    double inertia = 0.0;           // within-cluster sum of squares
    int iterations = 0;
    bool converged = false;
};

// Per-row emission level in {1, 2, 3} plus the value thresholds that separate
// levels (midpoints between adjacent sorted centroids), so new observations
// can be labelled without re-clustering.
struct LevelSeries {
    std::vector<int> level;
    std::array<double, 2> thresholds{0.0, 0.0};
};

// Lloyd's algorithm with k-means++ seeding, best of `restarts` runs by
// inertia (ties broken toward the lower restart index). A run stops when the
// assignment is stationary, the maximum centroid shift drops below `tol`, or
// `max_iter` is reached. Requires at least k distinct values.
Clustering kmeans_1d(std::span<const double> values, int k, std::uint64_t seed,
                     int restarts = 10, double tol = 1e-10, int max_iter = 300);

// Relabels a k=3 clustering by ascending centroid into levels 1/2/3 and
// derives the two midpoint thresholds.
LevelSeries assign_levels(const Clustering& clustering,
                          std::span<const double> values);

// Level of a single value under the exported thresholds.
int level_of(const LevelSeries& series, double value);

// Canonical within-cluster sum of squares: centroids are the means of their
// members and the sum runs in input order. Shared by the estimator and the
// exhaustive test oracle so equal partitions give bit-equal inertia.
double clustering_inertia(std::span<const double> values,
                          std::span<const int> assignment,
                          std::span<const double> centroids);

}  // namespace linkdcm

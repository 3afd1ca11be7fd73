#pragma once

#include "tda/indices.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace tda {

struct EmptyIntersection : Error {
    using Error::Error;
};
struct KTooLarge : Error {
    using Error::Error;
};
struct RangeTooSmall : Error {
    using Error::Error;
};
struct TooFewRows : Error {
    using Error::Error;
};
struct UnknownLabel : Error {
    using Error::Error;
};

constexpr std::uint64_t kDefaultSeed = 42;

// Index family cropped to the common date span, each row min-max scaled to
// [0, 1] (constant rows map to zeros).
struct NormalizedIndexSet {
    std::vector<std::string> labels;
    std::vector<Date> dates;
    std::vector<std::vector<double>> rows;
};

NormalizedIndexSet normalize_indices(const std::vector<IndexSeries>& indices);

// Scales to [0, 1]; a constant input maps to all zeros.
std::vector<double> minmax_scale(std::span<const double> values);

struct ClusterResult {
    int k = 0;
    std::vector<int> assignments;
    std::vector<std::vector<double>> centroids;
    double inertia = 0.0;
};

// Lloyd iteration to an assignment fixpoint, k-means++ initialization from
// the given seed.
ClusterResult kmeans(const std::vector<std::vector<double>>& rows, int k,
                     std::uint64_t seed = kDefaultSeed);

// k with the largest discrete second difference of inertia over k_range
// (ties break toward smaller k). Needs at least 3 candidate values.
int elbow_select(const std::vector<std::vector<double>>& rows, const std::vector<int>& k_range,
                 std::uint64_t seed = kDefaultSeed);

struct Pca2Result {
    std::vector<std::array<double, 2>> projections;
    std::array<double, 2> explained{}; // variance along each component
    double total_variance = 0.0;
};

// Projection of centered rows onto the top-2 principal directions. Sign
// convention: each component's largest-magnitude loading is positive.
Pca2Result pca2(const std::vector<std::vector<double>>& rows);

// Pointwise mean across the selected rows.
IndexSeries average_index(const NormalizedIndexSet& set, const std::vector<std::string>& subset);

struct EwsVerdict {
    enum class Class { none, weak, strong };
    Class classification = Class::none;
    int cluster_id = -1;
    double fraction_above = 0.0; // share of the cluster's points with y > 0.5
    int max_gap = 0;             // largest gap between qualifying time indices
};

const char* to_string(EwsVerdict::Class c);

// k-means over (x_t, y_t); a cluster qualifies when its y > 0.5 points form
// a nearly contiguous time interval (max gap <= gap_tolerance). Strong when
// the qualifying fraction exceeds strong_threshold.
EwsVerdict detect_ews(std::span<const double> x, std::span<const double> y, int k,
                      std::uint64_t seed = kDefaultSeed, int gap_tolerance = 5,
                      double strong_threshold = 0.5);

} // namespace tda

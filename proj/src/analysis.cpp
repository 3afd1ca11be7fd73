#include "tda/analysis.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <random>
#include <set>

namespace tda {

NormalizedIndexSet normalize_indices(const std::vector<IndexSeries>& indices) {
    if (indices.empty()) throw Error("normalize_indices: no indices given");
    for (const auto& s : indices)
        if (s.points.empty()) throw Error("normalize_indices: index '" + s.label + "' is empty");

    std::set<Date> common;
    for (const auto& p : indices.front().points) common.insert(p.date);
    for (std::size_t i = 1; i < indices.size(); ++i) {
        std::set<Date> next;
        for (const auto& p : indices[i].points)
            if (common.count(p.date)) next.insert(p.date);
        common.swap(next);
    }
    if (common.empty()) throw EmptyIntersection("indices share no common dates");

    NormalizedIndexSet out;
    out.dates.assign(common.begin(), common.end());
    for (const auto& s : indices) {
        std::vector<double> row;
        row.reserve(out.dates.size());
        for (const auto& p : s.points)
            if (common.count(p.date)) row.push_back(p.value);
        out.labels.push_back(s.label);
        out.rows.push_back(minmax_scale(row));
    }
    return out;
}

std::vector<double> minmax_scale(std::span<const double> values) {
    std::vector<double> out(values.begin(), values.end());
    if (out.empty()) return out;
    const auto [mn, mx] = std::minmax_element(out.begin(), out.end());
    const double lo = *mn, hi = *mx;
    if (hi == lo) {
        std::fill(out.begin(), out.end(), 0.0);
        return out;
    }
    for (double& v : out) v = (v - lo) / (hi - lo);
    return out;
}

namespace {

// Self-contained uniform draws so clustering is reproducible across
// standard libraries.
struct SeededRng {
    std::mt19937_64 gen;
    explicit SeededRng(std::uint64_t seed) : gen(seed) {}
    double uniform() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }
    std::size_t below(std::size_t n) {
        return std::min<std::size_t>(static_cast<std::size_t>(uniform() * n), n - 1);
    }
};

double sq_dist(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

} // namespace

ClusterResult kmeans(const std::vector<std::vector<double>>& rows, int k, std::uint64_t seed) {
    const std::size_t n = rows.size();
    if (k < 1) throw Error("kmeans: k must be >= 1");
    if (static_cast<std::size_t>(k) > n)
        throw KTooLarge("kmeans: k=" + std::to_string(k) + " exceeds row count " +
                        std::to_string(n));
    const std::size_t dim = rows.front().size();
    for (const auto& r : rows)
        if (r.size() != dim) throw Error("kmeans: ragged row matrix");

    SeededRng rng(seed);
    std::vector<std::vector<double>> centroids;
    centroids.reserve(k);
    centroids.push_back(rows[rng.below(n)]);

    // k-means++ seeding: next centroid chosen with probability proportional
    // to squared distance from the nearest chosen one.
    std::vector<double> d2(n, 0.0);
    for (int c = 1; c < k; ++c) {
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double best = sq_dist(rows[i], centroids[0]);
            for (std::size_t j = 1; j < centroids.size(); ++j)
                best = std::min(best, sq_dist(rows[i], centroids[j]));
            d2[i] = best;
            total += best;
        }
        std::size_t pick;
        if (total <= 0.0) {
            pick = rng.below(n);
        } else {
            const double r = rng.uniform() * total;
            double acc = 0.0;
            pick = n - 1;
            for (std::size_t i = 0; i < n; ++i) {
                acc += d2[i];
                if (r < acc) {
                    pick = i;
                    break;
                }
            }
        }
        centroids.push_back(rows[pick]);
    }

    std::vector<int> assignment(n, -1);
    double prev_inertia = std::numeric_limits<double>::infinity();
    double inertia = 0.0;
    for (int iter = 0; iter < 1000; ++iter) {
        bool changed = false;
        inertia = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            int best = 0;
            double best_d = sq_dist(rows[i], centroids[0]);
            for (int c = 1; c < k; ++c) {
                const double d = sq_dist(rows[i], centroids[c]);
                if (d < best_d) {
                    best_d = d;
                    best = c;
                }
            }
            if (assignment[i] != best) {
                assignment[i] = best;
                changed = true;
            }
            inertia += best_d;
        }
        assert(inertia <= prev_inertia * (1.0 + 1e-12) + 1e-300);
        prev_inertia = inertia;
        if (!changed) break;

        std::vector<std::vector<double>> sums(k, std::vector<double>(dim, 0.0));
        std::vector<std::size_t> counts(k, 0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t f = 0; f < dim; ++f) sums[assignment[i]][f] += rows[i][f];
            ++counts[assignment[i]];
        }
        for (int c = 0; c < k; ++c) {
            if (counts[c] == 0) continue; // empty cluster keeps its centroid
            for (std::size_t f = 0; f < dim; ++f) centroids[c][f] = sums[c][f] / counts[c];
        }
    }

    ClusterResult out;
    out.k = k;
    out.assignments = std::move(assignment);
    out.centroids = std::move(centroids);
    out.inertia = inertia;
    return out;
}

int elbow_select(const std::vector<std::vector<double>>& rows, const std::vector<int>& k_range,
                 std::uint64_t seed) {
    if (k_range.size() < 3)
        throw RangeTooSmall("elbow_select: need at least 3 candidate k values, got " +
                            std::to_string(k_range.size()));
    std::vector<int> ks = k_range;
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    if (ks.size() < 3)
        throw RangeTooSmall("elbow_select: need at least 3 distinct k values");

    std::vector<double> inertia(ks.size());
    for (std::size_t i = 0; i < ks.size(); ++i) inertia[i] = kmeans(rows, ks[i], seed).inertia;

    // Endpoints carry no curvature evidence; they only win via the tie rule.
    double best_curv = 0.0;
    int best_k = ks.front();
    for (std::size_t i = 1; i + 1 < ks.size(); ++i) {
        const double curv = inertia[i - 1] - 2.0 * inertia[i] + inertia[i + 1];
        if (curv > best_curv) {
            best_curv = curv;
            best_k = ks[i];
        }
    }
    return best_k;
}

namespace {

// Cyclic Jacobi eigen-decomposition of a symmetric matrix; eigenvalues
// descending, eigenvectors as columns of v.
void jacobi_eigen(std::vector<std::vector<double>>& a, std::vector<double>& eig,
                  std::vector<std::vector<double>>& v) {
    const std::size_t n = a.size();
    v.assign(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
        if (off < 1e-30) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < 1e-300) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t i = 0; i < n; ++i) {
                    const double aip = a[i][p], aiq = a[i][q];
                    a[i][p] = c * aip - s * aiq;
                    a[i][q] = s * aip + c * aiq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double api = a[p][i], aqi = a[q][i];
                    a[p][i] = c * api - s * aqi;
                    a[q][i] = s * api + c * aqi;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double vip = v[i][p], viq = v[i][q];
                    v[i][p] = c * vip - s * viq;
                    v[i][q] = s * vip + c * viq;
                }
            }
        }
    }
    eig.resize(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a[i][i];
}

} // namespace

Pca2Result pca2(const std::vector<std::vector<double>>& rows) {
    const std::size_t n = rows.size();
    if (n < 2) throw TooFewRows("pca2: need at least 2 rows, got " + std::to_string(n));
    const std::size_t f = rows.front().size();
    for (const auto& r : rows)
        if (r.size() != f) throw Error("pca2: ragged row matrix");

    std::vector<std::vector<double>> x(rows);
    for (std::size_t j = 0; j < f; ++j) {
        double mean = 0.0;
        for (std::size_t i = 0; i < n; ++i) mean += x[i][j];
        mean /= static_cast<double>(n);
        for (std::size_t i = 0; i < n; ++i) x[i][j] -= mean;
    }

    // Eigen-decompose the Gram matrix (n x n): cheaper than the feature
    // covariance when rows are long, same nonzero spectrum.
    std::vector<std::vector<double>> gram(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            double s = 0.0;
            for (std::size_t c = 0; c < f; ++c) s += x[i][c] * x[j][c];
            gram[i][j] = s;
            gram[j][i] = s;
        }

    std::vector<double> eig;
    std::vector<std::vector<double>> vecs;
    double trace = 0.0;
    for (std::size_t i = 0; i < n; ++i) trace += gram[i][i];
    jacobi_eigen(gram, eig, vecs);

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&eig](std::size_t a, std::size_t b) { return eig[a] > eig[b]; });

    Pca2Result out;
    out.projections.assign(n, {0.0, 0.0});
    out.total_variance = trace / static_cast<double>(n - 1);
    for (int comp = 0; comp < 2; ++comp) {
        if (static_cast<std::size_t>(comp) >= n) break;
        const std::size_t e = order[comp];
        const double lambda = std::max(eig[e], 0.0);
        out.explained[comp] = lambda / static_cast<double>(n - 1);
        if (lambda <= 1e-18 * std::max(1.0, trace)) continue; // rank-deficient direction
        const double scale = std::sqrt(lambda);

        // Loading u = X^T v / sqrt(lambda); flip so its largest-magnitude
        // entry is positive.
        double max_abs = 0.0;
        double max_val = 0.0;
        for (std::size_t c = 0; c < f; ++c) {
            double u = 0.0;
            for (std::size_t i = 0; i < n; ++i) u += x[i][c] * vecs[i][e];
            if (std::abs(u) > max_abs) {
                max_abs = std::abs(u);
                max_val = u;
            }
        }
        const double sign = max_val < 0.0 ? -1.0 : 1.0;
        for (std::size_t i = 0; i < n; ++i)
            out.projections[i][comp] = sign * scale * vecs[i][e];
    }
    return out;
}

IndexSeries average_index(const NormalizedIndexSet& set, const std::vector<std::string>& subset) {
    if (subset.empty()) throw Error("average_index: empty subset");
    std::vector<std::size_t> rows;
    for (const auto& label : subset) {
        const auto it = std::find(set.labels.begin(), set.labels.end(), label);
        if (it == set.labels.end()) throw UnknownLabel("average_index: no index '" + label + "'");
        rows.push_back(static_cast<std::size_t>(it - set.labels.begin()));
    }
    IndexSeries out;
    out.label = "average";
    out.points.resize(set.dates.size());
    for (std::size_t c = 0; c < set.dates.size(); ++c) {
        double sum = 0.0;
        for (std::size_t r : rows) sum += set.rows[r][c];
        out.points[c] = {set.dates[c], sum / static_cast<double>(rows.size())};
    }
    return out;
}

const char* to_string(EwsVerdict::Class c) {
    switch (c) {
    case EwsVerdict::Class::none:
        return "none";
    case EwsVerdict::Class::weak:
        return "weak";
    case EwsVerdict::Class::strong:
        return "strong";
    }
    return "none";
}

EwsVerdict detect_ews(std::span<const double> x, std::span<const double> y, int k,
                      std::uint64_t seed, int gap_tolerance, double strong_threshold) {
    if (x.size() != y.size() || x.empty())
        throw Misalignment("detect_ews: price and C1 series must align and be nonempty");

    std::vector<std::vector<double>> points(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) points[i] = {x[i], y[i]};
    const auto clusters = kmeans(points, k, seed);

    EwsVerdict best;
    for (int c = 0; c < k; ++c) {
        std::vector<std::size_t> members, qualifying;
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (clusters.assignments[i] != c) continue;
            members.push_back(i);
            if (y[i] > 0.5) qualifying.push_back(i);
        }
        if (qualifying.empty()) continue;
        int max_gap = 0;
        for (std::size_t i = 1; i < qualifying.size(); ++i)
            max_gap = std::max(max_gap, static_cast<int>(qualifying[i] - qualifying[i - 1]));
        if (max_gap > gap_tolerance) continue;

        const double fraction =
            static_cast<double>(qualifying.size()) / static_cast<double>(members.size());
        if (best.cluster_id < 0 || fraction > best.fraction_above) {
            best.cluster_id = c;
            best.fraction_above = fraction;
            best.max_gap = max_gap;
        }
    }
    if (best.cluster_id >= 0)
        best.classification = best.fraction_above > strong_threshold ? EwsVerdict::Class::strong
                                                                     : EwsVerdict::Class::weak;
    return best;
}

} // namespace tda

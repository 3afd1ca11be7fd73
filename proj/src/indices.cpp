#include "tda/indices.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <tuple>

namespace tda {

std::vector<double> IndexSeries::values() const {
    std::vector<double> v;
    v.reserve(points.size());
    for (const auto& p : points) v.push_back(p.value);
    return v;
}

std::string config_label(const IndexConfig& c) {
    return "idx_d" + std::to_string(c.d) + "_tau" + std::to_string(c.tau) + "_w" +
           std::to_string(c.w) + "_T" + std::to_string(c.T) + "_dim" + std::to_string(c.dim);
}

std::vector<IndexConfig> parameter_grid() {
    std::vector<IndexConfig> grid;
    for (int d : {3, 4, 5, 10})
        for (int tau : {1, 2, 5})
            for (int w : {30, 60})
                for (int T : {1, 5, 15, 30, 60})
                    for (int dim : {0, 1}) {
                        IndexConfig c;
                        c.d = d;
                        c.tau = tau;
                        c.w = w;
                        c.T = T;
                        c.dim = dim;
                        grid.push_back(c);
                    }
    return grid;
}

namespace {

void validate_config(const IndexConfig& c) {
    if (c.d < 1 || c.tau < 1 || c.w < 2 || c.T < 1)
        throw Error("index config requires d >= 1, tau >= 1, w >= 2, T >= 1");
    if (c.dim != 0 && c.dim != 1)
        throw Error("index config homology dimension must be 0 or 1");
}

double threshold_of(double max_scale) {
    return max_scale > 0.0 ? max_scale : kNoThreshold;
}

LandscapeOptions window_options(EssentialPolicy policy, const DistanceMatrix& dm) {
    LandscapeOptions o;
    o.policy = policy;
    if (policy == EssentialPolicy::cap) o.cap_value = dm.max_entry();
    return o;
}

// One landscape per cloud, for every requested homology dimension, sharing a
// single filtration and reduction per window.
std::map<int, std::vector<PersistenceLandscape>> cloud_landscapes(
    const std::vector<PointCloud>& clouds, const std::set<int>& dims, EssentialPolicy policy,
    double max_scale, const Exec& exec) {
    const int max_dim = *dims.rbegin() + 1;
    const double thr = threshold_of(max_scale);
    PersistenceOptions popt;
    popt.h0_union_find = true;

    std::map<int, std::vector<PersistenceLandscape>> out;
    for (int k : dims) out[k].resize(clouds.size());
    for_each_index(clouds.size(), exec, [&](std::size_t i) {
        const auto dm = distance_matrix(clouds[i]);
        const auto f = vr_filtration(dm, max_dim, thr);
        const auto diags = compute_persistence(f, dims, popt);
        const auto opt = window_options(policy, dm);
        for (int k : dims) out.at(k)[i] = landscape_from_diagram(diags.at(k), opt);
    });
    return out;
}

std::vector<PersistenceDiagram> cloud_diagrams(const std::vector<PointCloud>& clouds, int dim,
                                               double max_scale, const Exec& exec) {
    const double thr = threshold_of(max_scale);
    PersistenceOptions popt;
    popt.h0_union_find = true;
    std::vector<PersistenceDiagram> out(clouds.size());
    for_each_index(clouds.size(), exec, [&](std::size_t i) {
        const auto dm = distance_matrix(clouds[i]);
        const auto f = vr_filtration(dm, dim + 1, thr);
        out[i] = compute_persistence(f, {dim}, popt).at(dim);
    });
    return out;
}

IndexSeries distance_series(const std::vector<PersistenceLandscape>& lands,
                            const std::vector<PointCloud>& clouds, int T, std::string label,
                            const Exec& exec) {
    IndexSeries out;
    out.label = std::move(label);
    out.points.resize(lands.size() - static_cast<std::size_t>(T));
    for_each_index(out.points.size(), exec, [&](std::size_t i) {
        const std::size_t t = i + static_cast<std::size_t>(T);
        out.points[i] = {clouds[t].anchor_date, landscape_distance(lands[t - T], lands[t], 2)};
    });
    return out;
}

void check_length(const ReturnSeries& x, const IndexConfig& c) {
    const std::size_t min_len = static_cast<std::size_t>(c.tau) * (c.d - 1) + c.w + c.T;
    if (x.size() < min_len)
        throw SeriesTooShort(config_label(c) + ": series of length " + std::to_string(x.size()) +
                             " is below the required minimum " + std::to_string(min_len));
}

} // namespace

IndexSeries turbulence_index(const ReturnSeries& x, const IndexConfig& c, const Exec& exec) {
    validate_config(c);
    check_length(x, c);
    const auto embedded = takens_embed(x, c.d, c.tau);
    const auto clouds = sliding_clouds(embedded, c.w);
    const auto lands =
        cloud_landscapes(clouds, {c.dim}, c.policy, c.max_scale, exec).at(c.dim);
    return distance_series(lands, clouds, c.T, config_label(c), exec);
}

std::vector<IndexSeries> turbulence_grid(const ReturnSeries& x,
                                         const std::vector<IndexConfig>& configs,
                                         const Exec& exec) {
    std::vector<IndexSeries> results(configs.size());

    using GroupKey = std::tuple<int, int, int, int, double>;
    std::map<GroupKey, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < configs.size(); ++i) {
        validate_config(configs[i]);
        check_length(x, configs[i]);
        const auto& c = configs[i];
        groups[{c.d, c.tau, c.w, static_cast<int>(c.policy), c.max_scale}].push_back(i);
    }

    for (const auto& [key, members] : groups) {
        const IndexConfig& c0 = configs[members.front()];
        std::set<int> dims;
        for (std::size_t i : members) dims.insert(configs[i].dim);

        const auto embedded = takens_embed(x, c0.d, c0.tau);
        const auto clouds = sliding_clouds(embedded, c0.w);
        const auto lands = cloud_landscapes(clouds, dims, c0.policy, c0.max_scale, exec);
        for (std::size_t i : members) {
            const auto& c = configs[i];
            results[i] =
                distance_series(lands.at(c.dim), clouds, c.T, config_label(c), exec);
        }
    }
    return results;
}

PhtiResult phti(const std::vector<ReturnSeries>& portfolio_returns, int p_wasserstein, int dim,
                const Exec& exec) {
    constexpr int kWindow = 60;
    constexpr int kSmooth = 60;
    if (portfolio_returns.size() < 2) throw Error("phti: need at least 2 portfolio series");
    if (dim != 0 && dim != 1) throw Error("phti: homology dimension must be 0 or 1");
    const std::size_t len = portfolio_returns.front().size();
    if (len < static_cast<std::size_t>(kWindow + kSmooth))
        throw TooShort("phti: need at least " + std::to_string(kWindow + kSmooth) +
                       " aligned days, got " + std::to_string(len));

    const auto clouds = multiasset_clouds(portfolio_returns, kWindow);
    const auto diagrams = cloud_diagrams(clouds, dim, 0.0, exec);

    PhtiResult out;
    out.raw.label = "phti_raw_dim" + std::to_string(dim);
    out.raw.points.resize(diagrams.size() - 1);
    for_each_index(out.raw.points.size(), exec, [&](std::size_t i) {
        const std::size_t t = i + 1;
        out.raw.points[i] = {clouds[t].anchor_date,
                             wasserstein(diagrams[t], diagrams[t - 1], p_wasserstein)};
    });

    out.smoothed.label = "phti_dim" + std::to_string(dim);
    for (std::size_t t = kSmooth - 1; t < out.raw.points.size(); ++t) {
        double sum = 0.0;
        for (int j = 0; j < kSmooth; ++j) sum += out.raw.points[t - j].value;
        out.smoothed.points.push_back({out.raw.points[t].date, sum / kSmooth});
    }
    return out;
}

CorrelationGraph correlation_graph(const std::vector<ReturnSeries>& returns, std::size_t t,
                                   int window) {
    if (returns.size() < 2) throw Error("correlation_graph: need at least 2 assets");
    if (window < 1) throw Error("correlation_graph: window must be >= 1");
    const std::size_t len = returns.front().size();
    for (const auto& s : returns) {
        if (s.size() != len)
            throw DateMisalignment("series '" + s.asset_id + "' has a different length");
        for (std::size_t i = 0; i < len; ++i)
            if (s.observations[i].date != returns.front().observations[i].date)
                throw DateMisalignment("series '" + s.asset_id + "' diverges at " +
                                       s.observations[i].date.to_string());
    }
    if (t >= len) throw Error("correlation_graph: t out of range");
    if (t < static_cast<std::size_t>(window))
        throw TooShort("correlation_graph: window " + std::to_string(window) +
                       " does not fit before t=" + std::to_string(t));

    const std::size_t k = returns.size();
    const std::size_t first = t - static_cast<std::size_t>(window);
    const std::size_t count = static_cast<std::size_t>(window) + 1;

    std::vector<double> mean(k, 0.0);
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t i = first; i <= t; ++i) mean[a] += returns[a].observations[i].value;
        mean[a] /= static_cast<double>(count);
    }
    std::vector<double> var(k, 0.0);
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t i = first; i <= t; ++i) {
            const double d = returns[a].observations[i].value - mean[a];
            var[a] += d * d;
        }
        if (var[a] == 0.0)
            throw ZeroVariance("asset '" + returns[a].asset_id +
                               "' is constant over the correlation window ending " +
                               returns[a].observations[t].date.to_string());
    }

    CorrelationGraph g;
    g.timestamp = returns.front().observations[t].date;
    for (const auto& s : returns) g.labels.push_back(s.asset_id);
    g.weights = DistanceMatrix::zero(k);
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a + 1; b < k; ++b) {
            double cov = 0.0;
            for (std::size_t i = first; i <= t; ++i)
                cov += (returns[a].observations[i].value - mean[a]) *
                       (returns[b].observations[i].value - mean[b]);
            double c = cov / std::sqrt(var[a] * var[b]);
            c = std::clamp(c, -1.0, 1.0);
            g.weights.at(a, b) = std::sqrt(2.0 * (1.0 - c));
        }
    }
    return g;
}

IndexSeries correlation_graph_index(const std::vector<ReturnSeries>& returns, std::size_t t0,
                                    int dim, int p_wasserstein, int window, const Exec& exec) {
    const std::size_t len = returns.empty() ? 0 : returns.front().size();
    if (len <= static_cast<std::size_t>(window))
        throw TooShort("correlation_graph_index: series shorter than the correlation window");
    const std::size_t first = static_cast<std::size_t>(window);
    if (t0 < first || t0 >= len)
        throw Error("correlation_graph_index: t0 must lie in [" + std::to_string(first) + ", " +
                    std::to_string(len - 1) + "]");

    const std::size_t count = len - first;
    std::vector<PersistenceDiagram> diagrams(count);
    PersistenceOptions popt;
    popt.h0_union_find = true;
    for_each_index(count, exec, [&](std::size_t i) {
        const auto g = correlation_graph(returns, first + i, window);
        const auto f = vr_filtration(g.weights, dim + 1);
        diagrams[i] = compute_persistence(f, {dim}, popt).at(dim);
    });

    const PersistenceDiagram& base = diagrams[t0 - first];
    IndexSeries out;
    out.label = "corrgraph_dim" + std::to_string(dim);
    out.points.resize(count);
    for_each_index(count, exec, [&](std::size_t i) {
        out.points[i] = {returns.front().observations[first + i].date,
                         wasserstein(diagrams[i], base, p_wasserstein)};
    });
    return out;
}

IndexSeries landscape_norm_index(const std::vector<ReturnSeries>& returns, int w, int p,
                                 const Exec& exec) {
    if (returns.empty() || returns.front().size() < static_cast<std::size_t>(w))
        throw TooShort("landscape_norm_index: need at least w = " + std::to_string(w) +
                       " aligned days");
    const auto clouds = multiasset_clouds(returns, w);
    const auto lands = cloud_landscapes(clouds, {1}, EssentialPolicy::drop, 0.0, exec).at(1);

    IndexSeries out;
    out.label = "lnorm_p" + std::to_string(p) + "_w" + std::to_string(w);
    out.points.resize(lands.size());
    for_each_index(out.points.size(), exec, [&](std::size_t i) {
        out.points[i] = {clouds[i].anchor_date, lp_norm(lands[i], p)};
    });
    return out;
}

IndexSeries moving_variance(const IndexSeries& s, int window) {
    if (window < 2) throw Error("moving_variance: window must be >= 2");
    if (s.size() < static_cast<std::size_t>(window))
        throw TooShort("moving_variance: series of length " + std::to_string(s.size()) +
                       " is shorter than window " + std::to_string(window));
    IndexSeries out;
    out.label = s.label + "_var" + std::to_string(window);
    for (std::size_t i = window - 1; i < s.size(); ++i) {
        double mean = 0.0;
        for (int j = 0; j < window; ++j) mean += s.points[i - j].value;
        mean /= window;
        double ss = 0.0;
        for (int j = 0; j < window; ++j) {
            const double d = s.points[i - j].value - mean;
            ss += d * d;
        }
        out.points.push_back({s.points[i].date, ss / (window - 1)});
    }
    return out;
}

} // namespace tda

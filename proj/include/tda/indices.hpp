#pragma once

#include "tda/diagmetrics.hpp"
#include "tda/embedding.hpp"
#include "tda/landscape.hpp"
#include "tda/parallel.hpp"

#include <string>
#include <vector>

namespace tda {

struct ZeroVariance : Error {
    using Error::Error;
};

// Parameters of the five-parameter turbulence index I_(d,tau,w,T,dim).
struct IndexConfig {
    int d = 4;
    int tau = 1;
    int w = 60;
    int T = 5;
    int dim = 0; // homology dimension, 0 or 1

    EssentialPolicy policy = EssentialPolicy::drop;
    double max_scale = 0.0; // filtration cutoff; 0 keeps the full complex
};

struct IndexSeries {
    std::string label;
    std::vector<DatedValue> points;

    std::size_t size() const { return points.size(); }
    std::vector<double> values() const;
};

std::string config_label(const IndexConfig& c);

// The 4 x 3 x 2 x 5 x 2 = 240 parameter grid.
std::vector<IndexConfig> parameter_grid();

// M_t = || lambda_{t-T} - lambda_t ||_2 over sliding delay-embedded clouds,
// one value per eligible window, dated by the window's anchor day.
IndexSeries turbulence_index(const ReturnSeries& x, const IndexConfig& c, const Exec& exec = {});

// Grid runner; shares the embedding/cloud/landscape work between configs
// that differ only in T and dim.
std::vector<IndexSeries> turbulence_grid(const ReturnSeries& x,
                                         const std::vector<IndexConfig>& configs,
                                         const Exec& exec = {});

struct PhtiResult {
    IndexSeries raw;      // W_t, Wasserstein distance between consecutive windows
    IndexSeries smoothed; // w_t, trailing 60-day mean of W
};

// 60-day rolling clouds over N aligned portfolio return series.
PhtiResult phti(const std::vector<ReturnSeries>& portfolio_returns, int p_wasserstein = 1,
                int dim = 1, const Exec& exec = {});

struct CorrelationGraph {
    Date timestamp;
    std::vector<std::string> labels;
    DistanceMatrix weights; // d_ij = sqrt(2 (1 - c_ij)), in [0, 2]
};

// Pearson-correlation graph over the trailing window [t - window, t].
CorrelationGraph correlation_graph(const std::vector<ReturnSeries>& returns, std::size_t t,
                                   int window = 15);

// Wasserstein distance between each day's correlation-graph diagram and the
// diagram at t0.
IndexSeries correlation_graph_index(const std::vector<ReturnSeries>& returns, std::size_t t0,
                                    int dim = 0, int p_wasserstein = 1, int window = 15,
                                    const Exec& exec = {});

// L^p landscape norm of the 1-dimensional diagram per multi-asset window.
IndexSeries landscape_norm_index(const std::vector<ReturnSeries>& returns, int w, int p,
                                 const Exec& exec = {});

// Trailing sample variance (denominator window - 1).
IndexSeries moving_variance(const IndexSeries& s, int window);

} // namespace tda

#pragma once

#include "tda/embedding.hpp"
#include "tda/marketdata.hpp"
#include "tda/persistence.hpp"

#include <initializer_list>
#include <random>
#include <vector>

namespace testutil {

inline tda::Date day(std::int64_t offset) {
    return tda::Date::from_serial(tda::Date{2020, 1, 1}.serial() + offset);
}

inline tda::ReturnSeries series_of(const std::vector<double>& values,
                                   std::string asset_id = "test") {
    tda::ReturnSeries s;
    s.asset_id = std::move(asset_id);
    for (std::size_t i = 0; i < values.size(); ++i)
        s.observations.push_back({day(static_cast<std::int64_t>(i)), values[i]});
    return s;
}

inline tda::PriceSeries prices_of(const std::vector<double>& closes) {
    tda::PriceSeries p;
    p.asset_id = "test";
    for (std::size_t i = 0; i < closes.size(); ++i)
        p.observations.push_back({day(static_cast<std::int64_t>(i)), closes[i]});
    return p;
}

inline tda::PointCloud cloud_of(std::initializer_list<std::initializer_list<double>> pts) {
    tda::PointCloud c;
    c.dim = pts.begin()->size();
    for (const auto& p : pts)
        for (double v : p) c.coords.push_back(v);
    c.anchor_date = day(0);
    return c;
}

inline tda::PointCloud random_cloud(std::mt19937_64& gen, std::size_t n, std::size_t dim,
                                    double scale = 1.0) {
    std::uniform_real_distribution<double> u(0.0, scale);
    tda::PointCloud c;
    c.dim = dim;
    c.coords.resize(n * dim);
    for (double& v : c.coords) v = u(gen);
    c.anchor_date = day(0);
    return c;
}

// Diagram with a handful of finite bars (and optionally one essential).
inline tda::PersistenceDiagram random_diagram(std::mt19937_64& gen, std::size_t max_points,
                                              bool with_essential = false, int dim = 1) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> count(0, max_points);
    tda::PersistenceDiagram d;
    d.dim = dim;
    std::vector<std::pair<double, double>> raw;
    const std::size_t n = count(gen);
    for (std::size_t i = 0; i < n; ++i) {
        const double b = 2.0 * u(gen);
        raw.push_back({b, b + u(gen) + 1e-3});
    }
    if (with_essential) raw.push_back({u(gen), std::numeric_limits<double>::infinity()});
    std::sort(raw.begin(), raw.end());
    for (const auto& [b, dd] : raw) d.bars.push_back({b, dd, 1});
    return d;
}

} // namespace testutil

#include "tda/embedding.hpp"

#include <string>

namespace tda {

EmbeddedPoints takens_embed(const ReturnSeries& x, int d, int tau) {
    if (d < 1 || tau < 1) throw Error("takens_embed: d and tau must be >= 1");
    const std::size_t n = x.size();
    const std::size_t span = static_cast<std::size_t>(tau) * (d - 1);
    if (n < span + 1)
        throw SeriesTooShort("takens_embed: series of length " + std::to_string(n) +
                             " is shorter than required minimum " + std::to_string(span + 1));
    const std::size_t count = n - span;
    EmbeddedPoints out;
    out.dim = static_cast<std::size_t>(d);
    out.coords.resize(count * out.dim);
    out.last_obs_dates.resize(count);
    for (std::size_t t = 0; t < count; ++t) {
        for (int j = 0; j < d; ++j)
            out.coords[t * out.dim + j] = x.observations[t + static_cast<std::size_t>(j) * tau].value;
        out.last_obs_dates[t] = x.observations[t + span].date;
    }
    return out;
}

std::vector<PointCloud> sliding_clouds(const EmbeddedPoints& points, int w) {
    if (w < 2) throw Error("sliding_clouds: w must be >= 2");
    const std::size_t n = points.size();
    if (n < static_cast<std::size_t>(w))
        throw TooFewPoints("sliding_clouds: have " + std::to_string(n) + " points, need " +
                           std::to_string(w));
    const std::size_t count = n - w + 1;
    std::vector<PointCloud> clouds(count);
    for (std::size_t t = 0; t < count; ++t) {
        PointCloud& c = clouds[t];
        c.dim = points.dim;
        c.coords.assign(points.coords.begin() + t * points.dim,
                        points.coords.begin() + (t + w) * points.dim);
        c.anchor_date = points.last_obs_dates[t + w - 1];
    }
    return clouds;
}

std::vector<PointCloud> multiasset_clouds(const std::vector<ReturnSeries>& series, int w) {
    if (series.size() < 2) throw Error("multiasset_clouds: need at least 2 series");
    if (w < 2) throw Error("multiasset_clouds: w must be >= 2");
    const std::size_t k = series.size();
    const std::size_t n = series.front().size();
    for (const auto& s : series) {
        if (s.size() != n)
            throw DateMisalignment("series '" + s.asset_id + "' has " + std::to_string(s.size()) +
                                   " observations, expected " + std::to_string(n));
        for (std::size_t i = 0; i < n; ++i)
            if (s.observations[i].date != series.front().observations[i].date)
                throw DateMisalignment("series '" + s.asset_id + "' diverges at " +
                                       s.observations[i].date.to_string());
    }
    if (n < static_cast<std::size_t>(w))
        throw TooFewPoints("multiasset_clouds: have " + std::to_string(n) + " days, need " +
                           std::to_string(w));

    const std::size_t count = n - w + 1;
    std::vector<PointCloud> clouds(count);
    for (std::size_t t = 0; t < count; ++t) {
        PointCloud& c = clouds[t];
        c.dim = k;
        c.coords.resize(static_cast<std::size_t>(w) * k);
        for (int j = 0; j < w; ++j)
            for (std::size_t a = 0; a < k; ++a)
                c.coords[static_cast<std::size_t>(j) * k + a] = series[a].observations[t + j].value;
        c.anchor_date = series.front().observations[t + w - 1].date;
    }
    return clouds;
}

} // namespace tda

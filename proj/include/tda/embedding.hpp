#pragma once

#include "tda/marketdata.hpp"

#include <span>
#include <vector>

namespace tda {

struct SeriesTooShort : Error {
    using Error::Error;
};
struct TooFewPoints : Error {
    using Error::Error;
};
struct DateMisalignment : Error {
    using Error::Error;
};

struct EmbeddingConfig {
    int d = 4;   // embedding dimension
    int tau = 1; // time delay, trading days
    int w = 50;  // window size, points per cloud
};

// w points in R^d; coords are row-major. anchor_date is the calendar day of
// the cloud's last contributing observation.
struct PointCloud {
    std::size_t dim = 0;
    std::vector<double> coords;
    Date anchor_date;

    std::size_t size() const { return dim == 0 ? 0 : coords.size() / dim; }
    std::span<const double> point(std::size_t i) const {
        return {coords.data() + i * dim, dim};
    }
};

// Delay-embedded points, each tagged with the date of its last contributing
// observation.
struct EmbeddedPoints {
    std::size_t dim = 0;
    std::vector<double> coords;
    std::vector<Date> last_obs_dates;

    std::size_t size() const { return last_obs_dates.size(); }
    std::span<const double> point(std::size_t i) const {
        return {coords.data() + i * dim, dim};
    }
};

// Point t has coordinates (x_t, x_{t+tau}, ..., x_{t+tau(d-1)}); exactly
// N - tau(d-1) points for a series of length N.
EmbeddedPoints takens_embed(const ReturnSeries& x, int d, int tau);

// Cloud t contains points t..t+w-1; cloud count = point count - w + 1.
std::vector<PointCloud> sliding_clouds(const EmbeddedPoints& points, int w);

// Stacks k date-aligned series into clouds of w points in R^k; point j of
// cloud n holds the k returns on day t_{n+j}.
std::vector<PointCloud> multiasset_clouds(const std::vector<ReturnSeries>& series, int w);

} // namespace tda

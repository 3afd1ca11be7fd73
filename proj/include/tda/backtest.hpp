#pragma once

#include "tda/indices.hpp"

#include <span>
#include <string>
#include <vector>

namespace tda {

struct BadLookback : Error {
    using Error::Error;
};
struct BadQuintile : Error {
    using Error::Error;
};
struct InsufficientHistory : Error {
    using Error::Error;
};

enum class StrategyKind { protection, flexible, leverage, buy_and_hold };

const char* to_string(StrategyKind k);
StrategyKind strategy_from_string(const std::string& s);

struct StrategySpec {
    StrategyKind kind = StrategyKind::buy_and_hold;
    int lookback = 60; // trailing index values the quintile is judged against
};

// Quintile n in 1..5 of `latest` relative to the empirical percentiles of
// `history` (linear interpolation between order statistics, inclusive
// endpoints): latest <= P20 -> 1, ..., latest > P80 -> 5.
int quintile_of(std::span<const double> history, double latest);

// Percent of equity invested for the coming month, by strategy and quintile.
double exposure(StrategyKind kind, int quintile);

struct StrategyResult {
    std::vector<double> exposures;        // percent, one per traded month
    std::vector<double> strategy_returns; // exposure-weighted monthly returns
    std::vector<double> equity;           // traded months + 1 values, starts at 1.0
    std::size_t first_traded_month = 0;   // offset into the input series
};

// Month m's exposure comes from the quintile of the latest index value
// within the trailing `lookback` values ending at month m-1; equity then
// compounds by exposure * return_m. buy_and_hold may run without an index.
StrategyResult run_strategy(std::span<const double> monthly_returns,
                            std::span<const double> index_monthly, const StrategySpec& spec);

struct Performance {
    double mu = 0.0;           // annualized mean return, percent
    double sigma = 0.0;        // annualized standard deviation, percent
    double sharpe = 0.0;       // mu / sigma
    double max_drawdown = 0.0; // percent, in [0, 100]
};

Performance performance(const StrategyResult& result);

// Last value of each calendar month of a daily series.
std::vector<DatedValue> monthly_sample(const IndexSeries& daily);

} // namespace tda

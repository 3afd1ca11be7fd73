#include "tda/backtest.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tda {

const char* to_string(StrategyKind k) {
    switch (k) {
    case StrategyKind::protection:
        return "protection";
    case StrategyKind::flexible:
        return "flexible";
    case StrategyKind::leverage:
        return "leverage";
    case StrategyKind::buy_and_hold:
        return "buy_and_hold";
    }
    return "buy_and_hold";
}

StrategyKind strategy_from_string(const std::string& s) {
    if (s == "protection") return StrategyKind::protection;
    if (s == "flexible") return StrategyKind::flexible;
    if (s == "leverage") return StrategyKind::leverage;
    if (s == "buy_and_hold" || s == "benchmark") return StrategyKind::buy_and_hold;
    throw Error("unknown strategy '" + s + "'");
}

namespace {

double percentile(const std::vector<double>& sorted, double q) {
    const double pos = q / 100.0 * static_cast<double>(sorted.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

} // namespace

int quintile_of(std::span<const double> history, double latest) {
    if (history.size() < 5)
        throw BadLookback("quintile_of: need at least 5 history values, got " +
                          std::to_string(history.size()));
    std::vector<double> sorted(history.begin(), history.end());
    std::sort(sorted.begin(), sorted.end());
    int n = 1;
    for (double q : {20.0, 40.0, 60.0, 80.0})
        if (latest > percentile(sorted, q)) ++n;
    return n;
}

double exposure(StrategyKind kind, int quintile) {
    if (quintile < 1 || quintile > 5)
        throw BadQuintile("exposure: quintile " + std::to_string(quintile) + " outside 1..5");
    const int n = quintile;
    switch (kind) {
    case StrategyKind::protection:
        return n == 5 ? 0.0 : 100.0;
    case StrategyKind::flexible:
        return 100.0 - 20.0 * (n - 1);
    case StrategyKind::leverage:
        return 120.0 - 5.0 * n * (n - 1);
    case StrategyKind::buy_and_hold:
        return 100.0;
    }
    return 100.0;
}

StrategyResult run_strategy(std::span<const double> monthly_returns,
                            std::span<const double> index_monthly, const StrategySpec& spec) {
    if (spec.lookback < 5) throw BadLookback("run_strategy: lookback must be >= 5");

    StrategyResult out;
    const bool needs_index = spec.kind != StrategyKind::buy_and_hold || !index_monthly.empty();
    std::size_t start = 0;
    if (needs_index) {
        if (index_monthly.size() != monthly_returns.size())
            throw Misalignment("run_strategy: index has " + std::to_string(index_monthly.size()) +
                               " months, returns have " + std::to_string(monthly_returns.size()));
        start = static_cast<std::size_t>(spec.lookback);
        if (monthly_returns.size() <= start)
            throw InsufficientHistory("run_strategy: need more than " +
                                      std::to_string(spec.lookback) + " months, got " +
                                      std::to_string(monthly_returns.size()));
    } else if (monthly_returns.empty()) {
        throw InsufficientHistory("run_strategy: empty return series");
    }

    out.first_traded_month = start;
    out.equity.push_back(1.0);
    for (std::size_t m = start; m < monthly_returns.size(); ++m) {
        double expo = 100.0;
        if (spec.kind != StrategyKind::buy_and_hold) {
            const auto history = index_monthly.subspan(m - spec.lookback, spec.lookback);
            expo = exposure(spec.kind, quintile_of(history, history.back()));
        }
        const double r = expo / 100.0 * monthly_returns[m];
        out.exposures.push_back(expo);
        out.strategy_returns.push_back(r);
        out.equity.push_back(out.equity.back() * (1.0 + r));
    }
    return out;
}

Performance performance(const StrategyResult& result) {
    const auto& r = result.strategy_returns;
    if (r.size() < 12)
        throw TooShort("performance: need at least 12 monthly returns, got " +
                       std::to_string(r.size()));
    const double n = static_cast<double>(r.size());
    const double mean = std::accumulate(r.begin(), r.end(), 0.0) / n;
    double ss = 0.0;
    for (double v : r) ss += (v - mean) * (v - mean);
    const double stdev = std::sqrt(ss / (n - 1.0));

    Performance p;
    p.mu = 12.0 * mean * 100.0;
    p.sigma = std::sqrt(12.0) * stdev * 100.0;
    p.sharpe = p.sigma != 0.0 ? p.mu / p.sigma : 0.0;

    double peak = result.equity.front();
    double max_dd = 0.0;
    for (double e : result.equity) {
        peak = std::max(peak, e);
        max_dd = std::max(max_dd, (peak - e) / peak);
    }
    p.max_drawdown = max_dd * 100.0;
    return p;
}

std::vector<DatedValue> monthly_sample(const IndexSeries& daily) {
    std::vector<DatedValue> out;
    for (std::size_t i = 0; i < daily.points.size(); ++i) {
        const bool month_ends = i + 1 == daily.points.size() ||
                                daily.points[i + 1].date.month != daily.points[i].date.month ||
                                daily.points[i + 1].date.year != daily.points[i].date.year;
        if (month_ends) out.push_back(daily.points[i]);
    }
    return out;
}

} // namespace tda

// Compares the serial reference pipeline against the OpenMP one on synthetic
// return series and checks the outputs agree bit for bit.

#include "tda/indices.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

namespace {

tda::ReturnSeries synthetic_returns(std::size_t days, double sigma, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> noise(0.0, sigma);
    tda::ReturnSeries s;
    s.asset_id = "synthetic";
    const auto start = tda::Date{2018, 1, 1}.serial();
    for (std::size_t i = 0; i < days; ++i)
        s.observations.push_back({tda::Date::from_serial(start + static_cast<std::int64_t>(i)),
                                  noise(gen)});
    return s;
}

double run_once(const tda::ReturnSeries& x, const tda::IndexConfig& c, const tda::Exec& exec,
                tda::IndexSeries& out) {
    const auto start = std::chrono::steady_clock::now();
    out = tda::turbulence_index(x, c, exec);
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

} // namespace

int main(int argc, char** argv) {
    std::size_t days = 400;
    if (argc > 1) days = std::stoul(argv[1]);
    const auto x = synthetic_returns(days, 0.01, 7);

    std::vector<tda::IndexConfig> configs;
    for (int dim : {0, 1})
        for (int w : {30, 60}) {
            tda::IndexConfig c;
            c.d = 4;
            c.tau = 2;
            c.w = w;
            c.T = 5;
            c.dim = dim;
            configs.push_back(c);
        }

    std::printf("%-28s %8s %12s %12s %8s %s\n", "config", "windows", "serial ms", "parallel ms",
                "speedup", "match");
    for (const auto& c : configs) {
        tda::IndexSeries serial_out, parallel_out;
        const double ts = run_once(x, c, tda::Exec::serial(), serial_out);
        const double tp = run_once(x, c, tda::Exec{}, parallel_out);

        bool match = serial_out.points.size() == parallel_out.points.size();
        if (match)
            for (std::size_t i = 0; i < serial_out.points.size(); ++i)
                if (serial_out.points[i].value != parallel_out.points[i].value) {
                    match = false;
                    break;
                }
        std::printf("%-28s %8zu %12.1f %12.1f %7.2fx %s\n", tda::config_label(c).c_str(),
                    serial_out.points.size(), ts, tp, ts / tp, match ? "yes" : "NO");
        if (!match) return 1;
    }
    return 0;
}

#include "tda/landscape.hpp"

#include "tda/io.hpp"

#include <algorithm>
#include <cmath>
#include <list>
#include <ostream>

namespace tda {

double PersistenceLandscape::value_at(std::size_t layer, double x) const {
    if (layer >= layers.size()) return 0.0;
    const auto& pts = layers[layer];
    if (pts.empty() || x < pts.front().x || x > pts.back().x) return 0.0;
    auto it = std::lower_bound(pts.begin(), pts.end(), x,
                               [](const CriticalPoint& c, double v) { return c.x < v; });
    if (it->x == x) return it->y;
    const CriticalPoint& b = *it;
    const CriticalPoint& a = *(it - 1);
    const double t = (x - a.x) / (b.x - a.x);
    return a.y + t * (b.y - a.y);
}

PersistenceLandscape landscape_from_diagram(const PersistenceDiagram& p,
                                            const LandscapeOptions& options) {
    std::vector<std::pair<double, double>> bars;
    for (const Bar& bar : p.bars) {
        double death = bar.death;
        if (bar.essential()) {
            switch (options.policy) {
            case EssentialPolicy::drop:
                continue;
            case EssentialPolicy::cap:
                death = std::max(bar.birth, options.cap_value);
                break;
            case EssentialPolicy::reject:
                throw InfinitePairPresent("diagram holds an infinite-death pair at birth " +
                                          format_double(bar.birth));
            }
        }
        if (!(death > bar.birth)) continue; // zero tent
        for (int i = 0; i < bar.multiplicity; ++i) bars.push_back({bar.birth, death});
    }
    // Ascending birth, descending death.
    std::sort(bars.begin(), bars.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second > b.second;
    });

    PersistenceLandscape out;
    std::list<std::pair<double, double>> pending(bars.begin(), bars.end());
    while (!pending.empty()) {
        auto [b, d] = pending.front();
        pending.pop_front();
        auto scan = pending.begin();

        std::vector<CriticalPoint> layer;
        layer.push_back({b, 0.0});
        layer.push_back({(b + d) / 2.0, (d - b) / 2.0});
        while (true) {
            while (scan != pending.end() && scan->second <= d) ++scan;
            if (scan == pending.end()) {
                layer.push_back({d, 0.0});
                break;
            }
            const auto [b2, d2] = *scan;
            scan = pending.erase(scan);
            if (b2 > d) {
                layer.push_back({d, 0.0});
                layer.push_back({b2, 0.0});
            } else if (b2 == d) {
                layer.push_back({b2, 0.0});
            } else {
                layer.push_back({(b2 + d) / 2.0, (d - b2) / 2.0});
                // Leftover piece of the current tent feeds lower layers.
                auto pos = scan;
                while (pos != pending.end() &&
                       (pos->first < b2 || (pos->first == b2 && pos->second > d)))
                    ++pos;
                pending.insert(pos, {b2, d});
            }
            layer.push_back({(b2 + d2) / 2.0, (d2 - b2) / 2.0});
            b = b2;
            d = d2;
        }
        out.layers.push_back(std::move(layer));
    }
    return out;
}

namespace {

double ipow(double x, int p) {
    double r = 1.0;
    for (int i = 0; i < p; ++i) r *= x;
    return r;
}

// Integral of |y(x)|^p over a segment of width dx where y runs linearly from
// ya to yb.
double segment_abs_pow(double ya, double yb, double dx, int p) {
    if (dx <= 0.0) return 0.0;
    if ((ya >= 0.0 && yb >= 0.0) || (ya <= 0.0 && yb <= 0.0)) {
        const double a = std::abs(ya);
        const double b = std::abs(yb);
        if (a == b) return dx * ipow(a, p);
        return dx * (ipow(b, p + 1) - ipow(a, p + 1)) / ((p + 1) * (b - a));
    }
    const double t = ya / (ya - yb); // zero crossing in (0,1)
    return segment_abs_pow(ya, 0.0, dx * t, p) + segment_abs_pow(0.0, yb, dx * (1.0 - t), p);
}

double layer_abs_pow(const std::vector<CriticalPoint>& pts, int p) {
    double total = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i)
        total += segment_abs_pow(pts[i - 1].y, pts[i].y, pts[i].x - pts[i - 1].x, p);
    return total;
}

// Integral of |f - g|^p across the union of both layers' critical abscissas.
double layer_diff_abs_pow(const std::vector<CriticalPoint>& f, const std::vector<CriticalPoint>& g,
                          const PersistenceLandscape& lf, const PersistenceLandscape& lg,
                          std::size_t layer, int p) {
    std::vector<double> xs;
    xs.reserve(f.size() + g.size());
    for (const auto& c : f) xs.push_back(c.x);
    for (const auto& c : g) xs.push_back(c.x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    double total = 0.0;
    double prev_x = 0.0, prev_y = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double y = lf.value_at(layer, xs[i]) - lg.value_at(layer, xs[i]);
        if (i > 0) total += segment_abs_pow(prev_y, y, xs[i] - prev_x, p);
        prev_x = xs[i];
        prev_y = y;
    }
    return total;
}

const std::vector<CriticalPoint> kEmptyLayer;

} // namespace

double lp_norm(const PersistenceLandscape& l, int p) {
    if (p < 1) throw Error("lp_norm: p must be >= 1");
    double total = 0.0;
    for (const auto& layer : l.layers) total += layer_abs_pow(layer, p);
    return std::pow(total, 1.0 / p);
}

double landscape_distance(const PersistenceLandscape& l1, const PersistenceLandscape& l2, int p) {
    if (p < 1) throw Error("landscape_distance: p must be >= 1");
    const std::size_t layers = std::max(l1.layer_count(), l2.layer_count());
    double total = 0.0;
    for (std::size_t k = 0; k < layers; ++k) {
        const auto& f = k < l1.layer_count() ? l1.layers[k] : kEmptyLayer;
        const auto& g = k < l2.layer_count() ? l2.layers[k] : kEmptyLayer;
        total += layer_diff_abs_pow(f, g, l1, l2, k, p);
    }
    return std::pow(total, 1.0 / p);
}

std::vector<double> c1_series(std::span<const double> norms) {
    if (norms.size() < 2)
        throw TooShort("c1_series: need at least 2 norms, got " + std::to_string(norms.size()));
    std::vector<double> out;
    out.reserve(norms.size() - 1);
    for (std::size_t t = 1; t < norms.size(); ++t)
        out.push_back(norms[t] + std::abs(norms[t] - norms[t - 1]));
    return out;
}

void write_landscape_csv(std::ostream& out, const PersistenceLandscape& l) {
    out << "layer,x,y\n";
    for (std::size_t k = 0; k < l.layers.size(); ++k)
        for (const auto& c : l.layers[k])
            out << (k + 1) << ',' << format_double(c.x) << ',' << format_double(c.y) << '\n';
}

} // namespace tda

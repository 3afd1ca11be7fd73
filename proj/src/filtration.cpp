#include "tda/filtration.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

namespace tda {

double DistanceMatrix::max_entry() const {
    double m = 0.0;
    for (double v : entries) m = std::max(m, v);
    return m;
}

DistanceMatrix DistanceMatrix::zero(std::size_t n) {
    DistanceMatrix dm;
    dm.n = n;
    dm.entries.assign(n * (n - 1) / 2, 0.0);
    return dm;
}

DistanceMatrix distance_matrix(const PointCloud& cloud) {
    const std::size_t n = cloud.size();
    if (n == 0) throw Error("distance_matrix: empty cloud");
    DistanceMatrix dm = DistanceMatrix::zero(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto pi = cloud.point(i);
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto pj = cloud.point(j);
            double s = 0.0;
            for (std::size_t c = 0; c < cloud.dim; ++c) {
                const double diff = pi[c] - pj[c];
                s += diff * diff;
            }
            dm.at(i, j) = std::sqrt(s);
        }
    }
    return dm;
}

namespace {

constexpr int kMaxSupportedDim = 7;

// Filtration-order sort key with the vertex list packed big-endian, so
// lexicographic comparison within a dimension is integer comparison.
struct SimplexRec {
    double value;
    std::int32_t dim;
    std::uint64_t key_hi;
    std::uint64_t key_lo;
};

struct Builder {
    const DistanceMatrix& dm;
    double threshold;
    int max_dim;
    std::vector<SimplexRec>& out;
    std::vector<std::uint32_t> combo;

    void add(double value) {
        std::uint64_t hi = 0, lo = 0;
        for (std::size_t j = 0; j < combo.size(); ++j) {
            const auto v = static_cast<std::uint64_t>(combo[j]) & 0xFFFF;
            if (j < 4)
                hi |= v << (48 - 16 * j);
            else
                lo |= v << (48 - 16 * (j - 4));
        }
        out.push_back({value, static_cast<std::int32_t>(combo.size()) - 1, hi, lo});
    }

    // Extends the current combo by vertices > last, carrying the running
    // max-edge value.
    void extend(std::uint32_t last, double value) {
        if (static_cast<int>(combo.size()) - 1 >= max_dim) return;
        const std::size_t n = dm.n;
        for (std::uint32_t v = last + 1; v < n; ++v) {
            double val = value;
            bool ok = true;
            for (std::uint32_t u : combo) {
                const double d = dm(u, v);
                if (d > threshold) {
                    ok = false;
                    break;
                }
                val = std::max(val, d);
            }
            if (!ok) continue;
            combo.push_back(v);
            add(val);
            extend(v, val);
            combo.pop_back();
        }
    }
};

} // namespace

Filtration vr_filtration(const DistanceMatrix& dm, int max_dim, double threshold) {
    if (max_dim < 0) throw Error("vr_filtration: max_dim must be >= 0");
    if (dm.n == 0) throw Error("vr_filtration: empty distance matrix");
    if (static_cast<std::size_t>(max_dim) >= dm.n)
        throw DimensionTooLarge("vr_filtration: max_dim " + std::to_string(max_dim) +
                                " needs more than " + std::to_string(dm.n) + " points");
    if (max_dim > kMaxSupportedDim)
        throw DimensionTooLarge("vr_filtration: max_dim above supported ceiling " +
                                std::to_string(kMaxSupportedDim));
    if (dm.n > 0xFFFF) throw Error("vr_filtration: more than 65535 points");

    std::vector<SimplexRec> recs;
    Builder b{dm, threshold, max_dim, recs, {}};
    for (std::uint32_t v = 0; v < dm.n; ++v) {
        b.combo = {v};
        b.add(0.0);
        b.extend(v, 0.0);
    }

    std::sort(recs.begin(), recs.end(), [](const SimplexRec& a, const SimplexRec& b) {
        if (a.value != b.value) return a.value < b.value;
        if (a.dim != b.dim) return a.dim < b.dim;
        if (a.key_hi != b.key_hi) return a.key_hi < b.key_hi;
        return a.key_lo < b.key_lo;
    });

    Filtration f;
    f.n_vertices = dm.n;
    f.max_dim = max_dim;
    f.simplices.reserve(recs.size());
    std::size_t total_verts = 0;
    for (const auto& r : recs) total_verts += static_cast<std::size_t>(r.dim) + 1;
    f.vertex_buffer.reserve(total_verts);
    for (const auto& r : recs) {
        Filtration::Simplex s;
        s.value = r.value;
        s.dim = r.dim;
        s.vertex_offset = static_cast<std::uint32_t>(f.vertex_buffer.size());
        for (int j = 0; j <= r.dim; ++j) {
            const std::uint64_t word = j < 4 ? r.key_hi : r.key_lo;
            const int shift = j < 4 ? 48 - 16 * j : 48 - 16 * (j - 4);
            f.vertex_buffer.push_back(static_cast<std::uint32_t>((word >> shift) & 0xFFFF));
        }
        f.simplices.push_back(s);
    }
    return f;
}

void dump_filtration(std::ostream& out, const Filtration& f) {
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto& s = f.simplices[i];
        out << s.value << ' ' << s.dim;
        for (std::uint32_t v : f.vertices_of(i)) out << ' ' << v;
        out << '\n';
    }
}

} // namespace tda

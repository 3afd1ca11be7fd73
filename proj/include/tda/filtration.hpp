#pragma once

#include "tda/embedding.hpp"

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <vector>

namespace tda {

struct DimensionTooLarge : Error {
    using Error::Error;
};

// Symmetric pairwise distances with zero diagonal, stored as the condensed
// upper triangle.
struct DistanceMatrix {
    std::size_t n = 0;
    std::vector<double> entries; // n*(n-1)/2 values, row-major upper triangle

    double operator()(std::size_t i, std::size_t j) const {
        if (i == j) return 0.0;
        if (i > j) std::swap(i, j);
        return entries[i * n - i * (i + 1) / 2 + (j - i - 1)];
    }
    double& at(std::size_t i, std::size_t j) {
        if (i > j) std::swap(i, j);
        return entries[i * n - i * (i + 1) / 2 + (j - i - 1)];
    }
    double max_entry() const; // cloud diameter

    static DistanceMatrix zero(std::size_t n);
};

DistanceMatrix distance_matrix(const PointCloud& cloud);

// Simplices with appearance values, sorted by (value, dimension,
// lexicographic vertex list). Vertices appear at 0, edges at d(i,j), and a
// k-simplex at the maximum over its edges.
struct Filtration {
    struct Simplex {
        double value = 0.0;
        std::int32_t dim = 0;
        std::uint32_t vertex_offset = 0;
    };

    std::size_t n_vertices = 0;
    int max_dim = 0;
    std::vector<Simplex> simplices;
    std::vector<std::uint32_t> vertex_buffer;

    std::size_t size() const { return simplices.size(); }
    std::span<const std::uint32_t> vertices_of(std::size_t idx) const {
        const auto& s = simplices[idx];
        return {vertex_buffer.data() + s.vertex_offset, static_cast<std::size_t>(s.dim) + 1};
    }
};

constexpr double kNoThreshold = std::numeric_limits<double>::infinity();

// Vietoris-Rips expansion up to max_dim. Simplices with appearance value
// above `threshold` are excluded (default: keep everything).
Filtration vr_filtration(const DistanceMatrix& dm, int max_dim, double threshold = kNoThreshold);

// Debug dump: one `value dim v0 v1 ...` line per simplex, in filtration order.
void dump_filtration(std::ostream& out, const Filtration& f);

} // namespace tda

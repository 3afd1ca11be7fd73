#include "tda/persistence.hpp"

#include "tda/io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <ostream>
#include <string>
#include <unordered_map>

namespace tda {

std::size_t PersistenceDiagram::total_count() const {
    std::size_t n = 0;
    for (const auto& b : bars) n += static_cast<std::size_t>(b.multiplicity);
    return n;
}

namespace {

constexpr std::uint32_t kNone = 0xFFFFFFFFu;

struct VertKey {
    std::array<std::uint16_t, 8> v;
    bool operator==(const VertKey&) const = default;
};

struct VertKeyHash {
    std::size_t operator()(const VertKey& k) const {
        std::size_t h = 1469598103934665603ull;
        for (std::uint16_t x : k.v) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

VertKey make_key(std::span<const std::uint32_t> verts) {
    VertKey k;
    k.v.fill(0xFFFF);
    for (std::size_t i = 0; i < verts.size(); ++i) k.v[i] = static_cast<std::uint16_t>(verts[i]);
    return k;
}

// Boundary columns for simplices whose dimension is in `column_dims`;
// other columns stay empty. Vertex faces are their own filtration index and
// edge faces go through a dense table; higher faces fall back to hashing.
std::vector<std::vector<std::uint32_t>> boundary_columns(const Filtration& f,
                                                         const std::set<int>& column_dims) {
    std::set<int> face_dims;
    for (int q : column_dims)
        if (q >= 1) face_dims.insert(q - 1);

    const std::size_t n = f.n_vertices;
    const bool use_edge_table = face_dims.count(1) && n <= 2048;
    std::vector<std::uint32_t> edge_index;
    if (use_edge_table) edge_index.assign(n * n, kNone);
    std::unordered_map<VertKey, std::uint32_t, VertKeyHash> face_index;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const int q = f.simplices[i].dim;
        if (q < 1 || !face_dims.count(q)) continue;
        if (q == 1 && use_edge_table) {
            const auto verts = f.vertices_of(i);
            edge_index[verts[0] * n + verts[1]] = static_cast<std::uint32_t>(i);
        } else {
            face_index.emplace(make_key(f.vertices_of(i)), static_cast<std::uint32_t>(i));
        }
    }

    std::vector<std::vector<std::uint32_t>> columns(f.size());
    std::vector<std::uint32_t> face;
    for (std::size_t j = 0; j < f.size(); ++j) {
        const int q = f.simplices[j].dim;
        if (q < 1 || !column_dims.count(q)) continue;
        const auto verts = f.vertices_of(j);
        auto& col = columns[j];
        col.reserve(verts.size());
        for (std::size_t drop = 0; drop < verts.size(); ++drop) {
            std::uint32_t idx = kNone;
            if (q == 1) {
                idx = verts[1 - drop]; // vertices occupy their own index
            } else if (q == 2 && use_edge_table) {
                const std::uint32_t a = verts[drop == 0 ? 1 : 0];
                const std::uint32_t b = verts[drop == 2 ? 1 : 2];
                idx = edge_index[a * n + b];
            } else {
                face.clear();
                for (std::size_t i = 0; i < verts.size(); ++i)
                    if (i != drop) face.push_back(verts[i]);
                const auto it = face_index.find(make_key(face));
                if (it != face_index.end()) idx = it->second;
            }
            if (idx == kNone) throw Error("filtration violates the filtering property");
            col.push_back(idx);
        }
        std::sort(col.begin(), col.end());
    }
    return columns;
}

void xor_into(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
              std::vector<std::uint32_t>& tmp) {
    tmp.clear();
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(tmp));
    a.swap(tmp);
}

struct Dsu {
    std::vector<std::uint32_t> parent;

    explicit Dsu(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0u);
    }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
};

} // namespace

BoundaryMatrix build_boundary_matrix(const Filtration& f) {
    std::set<int> all_dims;
    for (const auto& s : f.simplices) all_dims.insert(s.dim);
    BoundaryMatrix bm;
    bm.columns = boundary_columns(f, all_dims);
    bm.dims.reserve(f.size());
    bm.values.reserve(f.size());
    for (const auto& s : f.simplices) {
        bm.dims.push_back(s.dim);
        bm.values.push_back(s.value);
    }
    return bm;
}

std::map<int, PersistenceDiagram> compute_persistence(const Filtration& f,
                                                      const std::set<int>& dims,
                                                      const PersistenceOptions& options) {
    if (dims.empty()) return {};
    for (int k : dims) {
        if (k < 0) throw Error("compute_persistence: negative homology dimension");
        if (k + 1 > f.max_dim)
            throw InsufficientExpansion(
                "dimension " + std::to_string(k) + " needs simplices of dimension " +
                std::to_string(k + 1) + ", filtration expanded only to " +
                std::to_string(f.max_dim));
    }
    const std::size_t m = f.size();
    const std::size_t n = f.n_vertices;

    std::set<int> reduce_dims;
    for (int k : dims) {
        reduce_dims.insert(k + 1);
        if (k >= 1) reduce_dims.insert(k);
    }
    const bool use_uf = options.h0_union_find;
    if (use_uf) reduce_dims.erase(1);

    auto columns = boundary_columns(f, reduce_dims);

    std::vector<std::uint8_t> is_creator(m, 0), paired(m, 0), cleared(m, 0);
    std::vector<std::uint32_t> pivot_owner(m, kNone);
    std::map<int, std::vector<std::pair<std::uint32_t, std::uint32_t>>> index_pairs;
    for (int k : dims) index_pairs[k];

    // Vertices occupy filtration indices 0..n-1 and always create.
    for (std::size_t v = 0; v < n; ++v) is_creator[v] = 1;

    if (use_uf) {
        Dsu dsu(n);
        for (std::size_t j = 0; j < m; ++j) {
            if (f.simplices[j].dim != 1) continue;
            const auto verts = f.vertices_of(j);
            const std::uint32_t ru = dsu.find(verts[0]);
            const std::uint32_t rv = dsu.find(verts[1]);
            if (ru == rv) {
                is_creator[j] = 1; // positive edge, births a 1-cycle
                continue;
            }
            const std::uint32_t dying = std::max(ru, rv);
            const std::uint32_t living = std::min(ru, rv);
            dsu.parent[dying] = living;
            paired[dying] = 1;
            cleared[dying] = 1;
            if (dims.count(0)) index_pairs[0].push_back({dying, static_cast<std::uint32_t>(j)});
        }
    }

    std::vector<std::uint32_t> tmp;
    for (auto it = reduce_dims.rbegin(); it != reduce_dims.rend(); ++it) {
        const int q = *it;
        for (std::size_t j = 0; j < m; ++j) {
            if (f.simplices[j].dim != q) continue;
            if (cleared[j]) continue;
            auto& col = columns[j];
            std::uint32_t piv = kNone;
            while (!col.empty()) {
                piv = col.back();
                const std::uint32_t owner = pivot_owner[piv];
                if (owner == kNone) break;
                xor_into(col, columns[owner], tmp);
            }
            if (col.empty()) {
                is_creator[j] = 1;
                continue;
            }
            pivot_owner[piv] = static_cast<std::uint32_t>(j);
            is_creator[piv] = 1;
            paired[piv] = 1;
            cleared[piv] = 1;
            if (dims.count(q - 1))
                index_pairs[q - 1].push_back({piv, static_cast<std::uint32_t>(j)});
        }
    }

    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::map<int, PersistenceDiagram> out;
    for (int k : dims) {
        PersistenceDiagram diag;
        diag.dim = k;
        std::vector<std::pair<double, double>> raw;
        for (const auto& [bi, di] : index_pairs[k]) {
            const double birth = f.simplices[bi].value;
            const double death = f.simplices[di].value;
            if (birth == death && !options.keep_zero_persistence) continue;
            raw.push_back({birth, death});
        }
        for (std::size_t j = 0; j < m; ++j)
            if (f.simplices[j].dim == k && is_creator[j] && !paired[j])
                raw.push_back({f.simplices[j].value, kInf});
        std::sort(raw.begin(), raw.end());
        for (const auto& [b, d] : raw) {
            if (!diag.bars.empty() && diag.bars.back().birth == b && diag.bars.back().death == d)
                ++diag.bars.back().multiplicity;
            else
                diag.bars.push_back({b, d, 1});
        }
        out.emplace(k, std::move(diag));
    }
    return out;
}

int betti_at(const PersistenceDiagram& d, double eps) {
    int count = 0;
    for (const auto& b : d.bars)
        if (b.birth <= eps && eps < b.death) count += b.multiplicity;
    return count;
}

int betti_at(const Filtration& f, double eps, int k) {
    const auto diags = compute_persistence(f, {k});
    return betti_at(diags.at(k), eps);
}

void write_diagram_csv(std::ostream& out, const std::map<int, PersistenceDiagram>& diagrams) {
    out << "dim,birth,death,multiplicity\n";
    for (const auto& [dim, diag] : diagrams)
        for (const auto& b : diag.bars)
            out << dim << ',' << format_double(b.birth) << ','
                << (b.essential() ? "inf" : format_double(b.death)) << ',' << b.multiplicity
                << '\n';
}

} // namespace tda

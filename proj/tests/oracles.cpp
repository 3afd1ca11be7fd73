#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace oracle {

std::size_t gf2_rank(Gf2Matrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            for (std::size_t c = col; c < cols; ++c) m[r][c] ^= m[rank][c];
        }
        ++rank;
    }
    return rank;
}

namespace {

struct FullComplex {
    std::size_t n = 0;
    std::vector<double> edge_value;                       // index e = edge id
    std::vector<std::array<std::size_t, 2>> edges;        // vertex pairs
    std::vector<double> tri_value;                        // max edge
    std::vector<std::array<std::size_t, 3>> tris;         // vertex triples
    std::vector<std::array<std::size_t, 3>> tri_edge_ids; // edges of each triangle
    std::vector<double> critical;                         // 0 plus distinct edge values
};

FullComplex build_full_complex(const tda::PointCloud& cloud) {
    FullComplex fc;
    fc.n = cloud.size();
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_id;
    for (std::size_t i = 0; i < fc.n; ++i)
        for (std::size_t j = i + 1; j < fc.n; ++j) {
            double s = 0.0;
            for (std::size_t c = 0; c < cloud.dim; ++c) {
                const double d = cloud.point(i)[c] - cloud.point(j)[c];
                s += d * d;
            }
            edge_id[{i, j}] = fc.edges.size();
            fc.edges.push_back({i, j});
            fc.edge_value.push_back(std::sqrt(s));
        }
    for (std::size_t i = 0; i < fc.n; ++i)
        for (std::size_t j = i + 1; j < fc.n; ++j)
            for (std::size_t k = j + 1; k < fc.n; ++k) {
                const std::size_t e1 = edge_id[{i, j}];
                const std::size_t e2 = edge_id[{i, k}];
                const std::size_t e3 = edge_id[{j, k}];
                fc.tris.push_back({i, j, k});
                fc.tri_edge_ids.push_back({e1, e2, e3});
                fc.tri_value.push_back(
                    std::max({fc.edge_value[e1], fc.edge_value[e2], fc.edge_value[e3]}));
            }
    fc.critical.push_back(0.0);
    for (double v : fc.edge_value) fc.critical.push_back(v);
    std::sort(fc.critical.begin(), fc.critical.end());
    fc.critical.erase(std::unique(fc.critical.begin(), fc.critical.end()), fc.critical.end());
    return fc;
}

// rank of H_k(K_s) -> H_k(K_t), s <= t, by
//   beta = dim Z_k(K_s) - dim (B_k(K_t) ∩ C_k(K_s))
// where the intersection dimension is rank(D_t) - rank(D_t with the rows of
// K_s removed).
int persistent_betti(const FullComplex& fc, double eps_s, double eps_t, int k) {
    std::vector<std::size_t> edges_s, edges_t, tris_t;
    for (std::size_t e = 0; e < fc.edges.size(); ++e) {
        if (fc.edge_value[e] <= eps_s) edges_s.push_back(e);
        if (fc.edge_value[e] <= eps_t) edges_t.push_back(e);
    }
    for (std::size_t t = 0; t < fc.tris.size(); ++t)
        if (fc.tri_value[t] <= eps_t) tris_t.push_back(t);

    if (k == 0) {
        // Z_0(K_s) = #vertices; B_0(K_t) ∩ C_0(K_s) = B_0(K_t) since all
        // vertices are present at every scale.
        Gf2Matrix d1(fc.n, std::vector<std::uint8_t>(edges_t.size(), 0));
        for (std::size_t c = 0; c < edges_t.size(); ++c) {
            d1[fc.edges[edges_t[c]][0]][c] = 1;
            d1[fc.edges[edges_t[c]][1]][c] = 1;
        }
        return static_cast<int>(fc.n - gf2_rank(d1));
    }

    // k == 1. Z_1(K_s) = #edges(s) - rank d1(K_s).
    Gf2Matrix d1s(fc.n, std::vector<std::uint8_t>(edges_s.size(), 0));
    for (std::size_t c = 0; c < edges_s.size(); ++c) {
        d1s[fc.edges[edges_s[c]][0]][c] = 1;
        d1s[fc.edges[edges_s[c]][1]][c] = 1;
    }
    const std::size_t z1 = edges_s.size() - gf2_rank(d1s);

    // D = d2(K_t) with rows indexed by edges of K_t.
    std::vector<std::size_t> edge_row(fc.edges.size(), SIZE_MAX);
    for (std::size_t r = 0; r < edges_t.size(); ++r) edge_row[edges_t[r]] = r;
    Gf2Matrix d2(edges_t.size(), std::vector<std::uint8_t>(tris_t.size(), 0));
    for (std::size_t c = 0; c < tris_t.size(); ++c)
        for (std::size_t e : fc.tri_edge_ids[tris_t[c]]) d2[edge_row[e]][c] = 1;
    const std::size_t rank_d2 = gf2_rank(d2);

    // Projection onto edges outside K_s.
    Gf2Matrix proj;
    for (std::size_t r = 0; r < edges_t.size(); ++r)
        if (fc.edge_value[edges_t[r]] > eps_s) proj.push_back(d2[r]);
    const std::size_t rank_proj = proj.empty() ? 0 : gf2_rank(proj);

    const std::size_t boundaries_in_s = rank_d2 - rank_proj;
    return static_cast<int>(z1 - boundaries_in_s);
}

} // namespace

int betti_by_ranks(const tda::PointCloud& cloud, double eps, int k) {
    const auto fc = build_full_complex(cloud);
    return persistent_betti(fc, eps, eps, k);
}

tda::PersistenceDiagram rips_diagram_by_ranks(const tda::PointCloud& cloud, int k) {
    const auto fc = build_full_complex(cloud);
    const auto& vals = fc.critical;
    const std::size_t m = vals.size();

    // beta[s][t] for s <= t over critical-value indices.
    std::vector<std::vector<int>> beta(m, std::vector<int>(m, 0));
    for (std::size_t s = 0; s < m; ++s)
        for (std::size_t t = s; t < m; ++t) beta[s][t] = persistent_betti(fc, vals[s], vals[t], k);

    auto beta_at = [&](std::ptrdiff_t s, std::ptrdiff_t t) -> int {
        if (s < 0) return 0;
        return beta[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
    };

    tda::PersistenceDiagram out;
    out.dim = k;
    std::vector<std::pair<double, double>> raw;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const int mult = (beta_at(i, j - 1) - beta_at(i, j)) -
                             (beta_at(i - 1, j - 1) - beta_at(i - 1, j));
            for (int c = 0; c < mult; ++c) raw.push_back({vals[i], vals[j]});
        }
        const int essential = beta_at(i, m - 1) - beta_at(i - 1, m - 1);
        for (int c = 0; c < essential; ++c)
            raw.push_back({vals[i], std::numeric_limits<double>::infinity()});
    }
    std::sort(raw.begin(), raw.end());
    for (const auto& [b, d] : raw) {
        if (!out.bars.empty() && out.bars.back().birth == b && out.bars.back().death == d)
            ++out.bars.back().multiplicity;
        else
            out.bars.push_back({b, d, 1});
    }
    return out;
}

namespace {

struct MatchPoints {
    std::vector<std::array<double, 2>> a, b;
    std::vector<double> essential_costs;
};

MatchPoints expand(const tda::PersistenceDiagram& p1, const tda::PersistenceDiagram& p2) {
    MatchPoints mp;
    std::vector<double> e1, e2;
    for (const auto& bar : p1.bars)
        for (int i = 0; i < bar.multiplicity; ++i) {
            if (bar.essential())
                e1.push_back(bar.birth);
            else
                mp.a.push_back({bar.birth, bar.death});
        }
    for (const auto& bar : p2.bars)
        for (int i = 0; i < bar.multiplicity; ++i) {
            if (bar.essential())
                e2.push_back(bar.birth);
            else
                mp.b.push_back({bar.birth, bar.death});
        }
    if (e1.size() != e2.size()) throw tda::IncomparableEssentials("oracle: essential counts");
    std::sort(e1.begin(), e1.end());
    std::sort(e2.begin(), e2.end());
    for (std::size_t i = 0; i < e1.size(); ++i)
        mp.essential_costs.push_back(std::abs(e1[i] - e2[i]));
    return mp;
}

double ipow(double x, int p) {
    double r = 1.0;
    for (int i = 0; i < p; ++i) r *= x;
    return r;
}

double sup_cost(const std::array<double, 2>& q, const std::array<double, 2>& r) {
    return std::max(std::abs(q[0] - r[0]), std::abs(q[1] - r[1]));
}

double diag_cost(const std::array<double, 2>& q) { return (q[1] - q[0]) / 2.0; }

// Enumerates all ways to injectively match points of `a` into points of `b`
// (unmatched points of either side pair with the diagonal) and folds the
// per-match costs with `combine`.
template <typename Combine>
double enumerate_best(const MatchPoints& mp, Combine combine, double init) {
    double best = std::numeric_limits<double>::infinity();
    std::vector<char> used(mp.b.size(), 0);

    auto rec = [&](auto&& self, std::size_t i, double acc) -> void {
        if (acc >= best) return;
        if (i == mp.a.size()) {
            double total = acc;
            for (std::size_t j = 0; j < mp.b.size(); ++j)
                if (!used[j]) total = combine(total, diag_cost(mp.b[j]));
            best = std::min(best, total);
            return;
        }
        self(self, i + 1, combine(acc, diag_cost(mp.a[i])));
        for (std::size_t j = 0; j < mp.b.size(); ++j) {
            if (used[j]) continue;
            used[j] = 1;
            self(self, i + 1, combine(acc, sup_cost(mp.a[i], mp.b[j])));
            used[j] = 0;
        }
    };
    rec(rec, 0, init);
    return best;
}

} // namespace

double exhaustive_wasserstein(const tda::PersistenceDiagram& a, const tda::PersistenceDiagram& b,
                              int p) {
    const auto mp = expand(a, b);
    double essential = 0.0;
    for (double c : mp.essential_costs) essential += ipow(c, p);
    const double finite = enumerate_best(
        mp, [p](double acc, double cost) { return acc + ipow(cost, p); }, 0.0);
    return std::pow(essential + finite, 1.0 / p);
}

double exhaustive_bottleneck(const tda::PersistenceDiagram& a, const tda::PersistenceDiagram& b) {
    const auto mp = expand(a, b);
    double essential = 0.0;
    for (double c : mp.essential_costs) essential = std::max(essential, c);
    const double finite =
        enumerate_best(mp, [](double acc, double cost) { return std::max(acc, cost); }, 0.0);
    return std::max(essential, finite);
}

bool diagrams_equal(const tda::PersistenceDiagram& a, const tda::PersistenceDiagram& b) {
    if (a.dim != b.dim || a.bars.size() != b.bars.size()) return false;
    for (std::size_t i = 0; i < a.bars.size(); ++i) {
        const auto& x = a.bars[i];
        const auto& y = b.bars[i];
        const bool deaths_equal = (x.essential() && y.essential()) || x.death == y.death;
        if (x.birth != y.birth || !deaths_equal || x.multiplicity != y.multiplicity) return false;
    }
    return true;
}

} // namespace oracle

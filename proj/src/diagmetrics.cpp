#include "tda/diagmetrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tda {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void split_bars(const PersistenceDiagram& d, std::vector<std::array<double, 2>>& finite,
                std::vector<double>& essential_births) {
    for (const Bar& b : d.bars)
        for (int i = 0; i < b.multiplicity; ++i) {
            if (b.essential())
                essential_births.push_back(b.birth);
            else
                finite.push_back({b.birth, b.death});
        }
}

double ipow(double x, int p) {
    double r = 1.0;
    for (int i = 0; i < p; ++i) r *= x;
    return r;
}

// Kuhn-Munkres with potentials; returns row -> column of a minimal-cost
// perfect assignment.
std::vector<int> hungarian(const std::vector<std::vector<double>>& a) {
    const int n = static_cast<int>(a.size());
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<double> minv(n + 1, kInf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            const int i0 = p[j0];
            int j1 = -1;
            double delta = kInf;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = a[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }
    std::vector<int> row_to_col(n, -1);
    for (int j = 1; j <= n; ++j)
        if (p[j] > 0) row_to_col[p[j] - 1] = j - 1;
    return row_to_col;
}

// Perfect matching exists using only edges with cost <= limit?
bool feasible_at(const std::vector<std::vector<double>>& cost, double limit) {
    const int n = static_cast<int>(cost.size());
    std::vector<int> match_right(n, -1);
    std::vector<char> visited;

    auto try_augment = [&](auto&& self, int i) -> bool {
        for (int j = 0; j < n; ++j) {
            if (visited[j] || cost[i][j] > limit) continue;
            visited[j] = 1;
            if (match_right[j] < 0 || self(self, match_right[j])) {
                match_right[j] = i;
                return true;
            }
        }
        return false;
    };

    for (int i = 0; i < n; ++i) {
        visited.assign(n, 0);
        if (!try_augment(try_augment, i)) return false;
    }
    return true;
}

} // namespace

MatchingProblem MatchingProblem::build(const PersistenceDiagram& p1,
                                       const PersistenceDiagram& p2) {
    if (p1.dim != p2.dim)
        throw DimensionMismatch("diagrams of dimension " + std::to_string(p1.dim) + " vs " +
                                std::to_string(p2.dim));

    std::vector<std::array<double, 2>> f1, f2;
    std::vector<double> e1, e2;
    split_bars(p1, f1, e1);
    split_bars(p2, f2, e2);
    if (e1.size() != e2.size())
        throw IncomparableEssentials("essential class counts differ: " +
                                     std::to_string(e1.size()) + " vs " +
                                     std::to_string(e2.size()));
    std::sort(e1.begin(), e1.end());
    std::sort(e2.begin(), e2.end());

    MatchingProblem mp;
    mp.n1 = f1.size();
    mp.n2 = f2.size();
    for (std::size_t i = 0; i < e1.size(); ++i)
        mp.essential_costs.push_back(std::abs(e1[i] - e2[i]));

    mp.left = f1;
    for (const auto& q : f2) {
        const double m = (q[0] + q[1]) / 2.0;
        mp.left.push_back({m, m});
    }
    mp.right = f2;
    for (const auto& q : f1) {
        const double m = (q[0] + q[1]) / 2.0;
        mp.right.push_back({m, m});
    }

    const std::size_t n = mp.n1 + mp.n2;
    mp.cost.assign(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const bool left_real = i < mp.n1;
            const bool right_real = j < mp.n2;
            if (left_real && right_real)
                mp.cost[i][j] = std::max(std::abs(f1[i][0] - f2[j][0]),
                                         std::abs(f1[i][1] - f2[j][1]));
            else if (left_real)
                mp.cost[i][j] = (f1[i][1] - f1[i][0]) / 2.0;
            else if (right_real)
                mp.cost[i][j] = (f2[j][1] - f2[j][0]) / 2.0;
            else
                mp.cost[i][j] = 0.0;
        }
    }
    return mp;
}

double wasserstein(const PersistenceDiagram& p1, const PersistenceDiagram& p2, int p) {
    if (p < 1) throw Error("wasserstein: degree p must be >= 1");
    const auto mp = MatchingProblem::build(p1, p2);
    double total = 0.0;
    for (double c : mp.essential_costs) total += ipow(c, p);
    const std::size_t n = mp.cost.size();
    if (n > 0) {
        std::vector<std::vector<double>> powered(n, std::vector<double>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) powered[i][j] = ipow(mp.cost[i][j], p);
        const auto assignment = hungarian(powered);
        for (std::size_t i = 0; i < n; ++i) total += powered[i][assignment[i]];
    }
    return std::pow(total, 1.0 / p);
}

double bottleneck(const PersistenceDiagram& p1, const PersistenceDiagram& p2) {
    const auto mp = MatchingProblem::build(p1, p2);
    double essential_part = 0.0;
    for (double c : mp.essential_costs) essential_part = std::max(essential_part, c);

    const std::size_t n = mp.cost.size();
    if (n == 0) return essential_part;

    std::vector<double> candidates;
    candidates.reserve(n * n);
    for (const auto& row : mp.cost)
        for (double c : row) candidates.push_back(c);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::size_t lo = 0, hi = candidates.size() - 1;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (feasible_at(mp.cost, candidates[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    return std::max(candidates[lo], essential_part);
}

} // namespace tda

#pragma once

#include "tda/persistence.hpp"

#include <array>
#include <vector>

namespace tda {

struct DimensionMismatch : Error {
    using Error::Error;
};
struct IncomparableEssentials : Error {
    using Error::Error;
};

// Finite reduction of the diagonal-augmented matching problem: each side
// carries the other side's diagonal projections, so the cost matrix is
// square; diagonal-to-diagonal matches cost 0.
struct MatchingProblem {
    std::size_t n1 = 0; // off-diagonal points of the first diagram
    std::size_t n2 = 0;
    std::vector<std::array<double, 2>> left;  // n1 points then n2 diagonal slots
    std::vector<std::array<double, 2>> right; // n2 points then n1 diagonal slots
    std::vector<std::vector<double>> cost;    // sup-norm ground distance
    std::vector<double> essential_costs;      // |birth| gaps of matched essential pairs

    static MatchingProblem build(const PersistenceDiagram& p1, const PersistenceDiagram& p2);
};

// Degree-p Wasserstein distance via exact optimal assignment over the
// augmented problem. Essential classes must be equally many on both sides;
// they match by birth order.
double wasserstein(const PersistenceDiagram& p1, const PersistenceDiagram& p2, int p = 1);

// Minimizes the maximum matched cost.
double bottleneck(const PersistenceDiagram& p1, const PersistenceDiagram& p2);

} // namespace tda

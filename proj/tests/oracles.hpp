#pragma once

// Independent brute-force oracles the implementation is checked against.
// Everything here recomputes from first principles: full complexes per
// critical value, Gaussian elimination over GF(2), exhaustive matching
// enumeration. None of it shares code with the library's reduction,
// landscape, or assignment paths.

#include "tda/diagmetrics.hpp"
#include "tda/embedding.hpp"
#include "tda/persistence.hpp"

#include <cstdint>
#include <vector>

namespace oracle {

using Gf2Matrix = std::vector<std::vector<std::uint8_t>>;

std::size_t gf2_rank(Gf2Matrix m);

// Persistence diagram of the Vietoris-Rips filtration of a cloud, derived
// purely from persistent Betti numbers: beta_k(s,t) = rank of the map
// H_k(K_s) -> H_k(K_t) computed by ranks of boundary matrices of the full
// complex, and point multiplicities by inclusion-exclusion over the grid of
// critical values. Supports k = 0, 1; intended for small clouds.
tda::PersistenceDiagram rips_diagram_by_ranks(const tda::PointCloud& cloud, int k);

// Betti number of the full Rips complex at scale eps (k = 0 or 1).
int betti_by_ranks(const tda::PointCloud& cloud, double eps, int k);

// Exhaustive enumeration over all augmented bijections.
double exhaustive_wasserstein(const tda::PersistenceDiagram& a, const tda::PersistenceDiagram& b,
                              int p);
double exhaustive_bottleneck(const tda::PersistenceDiagram& a, const tda::PersistenceDiagram& b);

bool diagrams_equal(const tda::PersistenceDiagram& a, const tda::PersistenceDiagram& b);

} // namespace oracle

#pragma once

#include "tda/filtration.hpp"

#include <cmath>
#include <iosfwd>
#include <map>
#include <set>
#include <vector>

namespace tda {

struct InsufficientExpansion : Error {
    using Error::Error;
};

// (birth, death) with multiplicity; death is +infinity for essential classes.
struct Bar {
    double birth = 0.0;
    double death = 0.0;
    int multiplicity = 1;

    bool essential() const { return std::isinf(death); }
};

struct PersistenceDiagram {
    int dim = 0;
    std::vector<Bar> bars; // sorted by (birth, death), equal pairs aggregated

    bool empty() const { return bars.empty(); }
    std::size_t total_count() const;
};

struct PersistenceOptions {
    // Pairs with birth == death are dropped unless set.
    bool keep_zero_persistence = false;
    // Compute dimension 0 (and edge creator status) with union-find instead
    // of column reduction.
    bool h0_union_find = false;
};

// Boundary over the two-element field: column j lists the filtration indices
// of simplex j's codimension-1 faces, ascending.
struct BoundaryMatrix {
    std::vector<std::vector<std::uint32_t>> columns;
    std::vector<std::int32_t> dims;
    std::vector<double> values;
};

BoundaryMatrix build_boundary_matrix(const Filtration& f);

// Persistence diagrams for the requested homology dimensions, computed by
// left-to-right column reduction with clearing. Requires
// max(dims) + 1 <= f.max_dim so deaths and essentials are decidable.
std::map<int, PersistenceDiagram> compute_persistence(const Filtration& f,
                                                      const std::set<int>& dims,
                                                      const PersistenceOptions& options = {});

// Number of classes alive at eps: pairs with birth <= eps < death.
int betti_at(const PersistenceDiagram& d, double eps);
int betti_at(const Filtration& f, double eps, int k);

// CSV dump `dim,birth,death,multiplicity`, `inf` for essential deaths.
void write_diagram_csv(std::ostream& out, const std::map<int, PersistenceDiagram>& diagrams);

} // namespace tda

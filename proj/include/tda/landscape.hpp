#pragma once

#include "tda/persistence.hpp"

#include <iosfwd>
#include <span>
#include <vector>

namespace tda {

struct InfinitePairPresent : Error {
    using Error::Error;
};

// How landscape construction resolves infinite-death pairs.
enum class EssentialPolicy {
    drop,   // remove essential pairs (default)
    cap,    // replace death with a finite cap value
    reject, // throw InfinitePairPresent
};

struct LandscapeOptions {
    EssentialPolicy policy = EssentialPolicy::drop;
    double cap_value = 0.0; // used by EssentialPolicy::cap
};

struct CriticalPoint {
    double x = 0.0;
    double y = 0.0;
};

// Piecewise-linear layers lambda_k stored as critical points; implicitly zero
// outside each layer's support. Layers are pointwise ordered,
// lambda_k >= lambda_{k+1}, and 1-Lipschitz.
struct PersistenceLandscape {
    std::vector<std::vector<CriticalPoint>> layers;

    bool empty() const { return layers.empty(); }
    std::size_t layer_count() const { return layers.size(); }
    double value_at(std::size_t layer, double x) const;
};

// Layer k is the pointwise k-th maximum of the diagram's tent functions,
// counted with multiplicity.
PersistenceLandscape landscape_from_diagram(const PersistenceDiagram& p,
                                            const LandscapeOptions& options = {});

// ( sum_k integral |lambda_k|^p )^(1/p), integrated exactly per linear segment.
double lp_norm(const PersistenceLandscape& l, int p);

// L^p norm of the layerwise difference; missing layers are zero.
double landscape_distance(const PersistenceLandscape& l1, const PersistenceLandscape& l2, int p);

// out[t] = norms[t] + |norms[t] - norms[t-1]|, defined from the second
// element on.
std::vector<double> c1_series(std::span<const double> norms);

// CSV dump `layer,x,y` of critical points, layers 1-based.
void write_landscape_csv(std::ostream& out, const PersistenceLandscape& l);

} // namespace tda

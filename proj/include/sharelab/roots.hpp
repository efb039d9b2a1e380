#pragma once

#include <string>
#include <vector>

#include "sharelab/poly.hpp"

namespace sharelab {

struct Root {
    Scalar location;
    int multiplicity = 1;
    double residual = 0.0;  // |p_monic(location)|
};

struct RootSet {
    std::vector<Root> roots;
    // True when some exact factor had no roots in Q(i) and fell back to the
    // float solver.
    bool demoted = false;
    std::vector<std::string> warnings;

    int total_multiplicity() const {
        int n = 0;
        for (const auto& r : roots) n += r.multiplicity;
        return n;
    }
};

struct RootConfig {
    long precision_bits = BigFloat::kDefaultPrecision;
    int max_iterations = 500;
};

// All complex roots of p with multiplicities.
//
// Exact regime: the zero root is split off by the valuation at t = 0 and
// multiplicities come from the square-free decomposition (gcd with the
// derivative); degree-1 factors and degree-2 factors with a perfect-square
// discriminant keep exact roots, everything else demotes to the float
// solver.
//
// Float regime: simultaneous Aberth-Ehrlich iteration with residual
// certification; multiplicities by clustering within a radius derived from
// tol. Throws NoConvergence if certification fails within the iteration
// budget.
RootSet poly_roots(const Poly& p, double tol, const RootConfig& cfg = {});

}  // namespace sharelab

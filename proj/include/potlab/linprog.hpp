#pragma once

#include <vector>

namespace potlab {

struct LpResult {
    bool bounded = true;
    double value = 0.0;
    std::vector<double> x;
};

// Maximizes c'x subject to Ax <= b, x >= 0, for b >= 0 (the origin is
// feasible, so no phase-one pass is needed). Dense tableau simplex with
// Bland's rule, followed by a linear re-solve of the optimal basis to push
// the vertex to full double precision. Intended for the tiny problems that
// arise from maximum-principle subsets (at most ~12 variables).
LpResult simplex_maximize(const std::vector<std::vector<double>>& A, const std::vector<double>& b,
                          const std::vector<double>& c);

}  // namespace potlab

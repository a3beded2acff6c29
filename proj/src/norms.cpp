#include "potlab/norms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace potlab {

double lp_norm(const std::vector<double>& values, Exponent p, const FiniteSpace& sigma) {
    if (values.size() != sigma.size()) throw std::invalid_argument("lp_norm: shape mismatch");
    if (p.is_infinite()) {
        double m = 0.0;
        for (double v : values) m = std::max(m, std::abs(v));
        return m;
    }
    double pe = p.value();
    double acc = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        double a = std::abs(values[i]);
        if (std::isinf(a)) return kInf;
        if (a > 0.0) acc += std::pow(a, pe) * sigma.weight(i);
    }
    if (std::isinf(acc)) return kInf;
    return std::pow(acc, 1.0 / pe);
}

double weak_lp_norm(const std::vector<double>& values, Exponent p, const FiniteSpace& sigma) {
    if (values.size() != sigma.size()) throw std::invalid_argument("weak_lp_norm: shape mismatch");
    if (p.is_infinite()) {
        double m = 0.0;
        for (double v : values) m = std::max(m, std::abs(v));
        return m;
    }
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::abs(values[a]) > std::abs(values[b]);
    });
    double pe = p.value();
    double best = 0.0;
    double prefix = 0.0;
    for (std::size_t k = 0; k < order.size(); ++k) {
        double v = std::abs(values[order[k]]);
        prefix += sigma.weight(order[k]);
        // within a tie block only the last index attains the true value, but
        // intermediate ones are smaller, so a plain running max is exact
        if (v == 0.0) break;
        if (std::isinf(v)) return kInf;
        best = std::max(best, v * std::pow(prefix, 1.0 / pe));
    }
    return best;
}

double lp_norm(const FunctionOnSpace& f, Exponent p) { return lp_norm(f.values, p, *f.space); }

double weak_lp_norm(const FunctionOnSpace& f, Exponent p) {
    return weak_lp_norm(f.values, p, *f.space);
}

}  // namespace potlab

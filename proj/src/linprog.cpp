#include "potlab/linprog.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace potlab {

namespace {
constexpr double kPivotEps = 1e-11;

// Re-solve the active equality system of the reported vertex for a cleaner
// optimum: rows where Ax = b holds tightly plus variables at zero.
void polish(const std::vector<std::vector<double>>& A, const std::vector<double>& b,
            const std::vector<double>& c, LpResult& res) {
    const std::size_t m = A.size(), n = c.size();
    std::vector<std::size_t> tight_rows, free_vars;
    for (std::size_t j = 0; j < n; ++j)
        if (res.x[j] > 1e-9 * (1.0 + std::abs(res.x[j]))) free_vars.push_back(j);
    for (std::size_t i = 0; i < m; ++i) {
        double ax = 0.0, scale = std::abs(b[i]);
        for (std::size_t j = 0; j < n; ++j) {
            ax += A[i][j] * res.x[j];
            scale = std::max(scale, std::abs(A[i][j] * res.x[j]));
        }
        if (std::abs(ax - b[i]) <= 1e-7 * (1.0 + scale)) tight_rows.push_back(i);
    }
    if (free_vars.empty() || tight_rows.size() < free_vars.size()) return;

    Eigen::MatrixXd M(tight_rows.size(), free_vars.size());
    Eigen::VectorXd rhs(tight_rows.size());
    for (std::size_t r = 0; r < tight_rows.size(); ++r) {
        rhs(r) = b[tight_rows[r]];
        for (std::size_t k = 0; k < free_vars.size(); ++k) M(r, k) = A[tight_rows[r]][free_vars[k]];
    }
    Eigen::VectorXd y = M.colPivHouseholderQr().solve(rhs);
    std::vector<double> x(n, 0.0);
    for (std::size_t k = 0; k < free_vars.size(); ++k) x[free_vars[k]] = y(k);

    // accept only if still feasible and not worse
    double val = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        if (x[j] < -1e-12) return;
        if (x[j] < 0.0) x[j] = 0.0;
        val += c[j] * x[j];
    }
    for (std::size_t i = 0; i < m; ++i) {
        double ax = 0.0;
        for (std::size_t j = 0; j < n; ++j) ax += A[i][j] * x[j];
        if (ax > b[i] + 1e-9 * (1.0 + std::abs(b[i]))) return;
    }
    if (val >= res.value - 1e-9 * (1.0 + std::abs(res.value))) {
        res.value = std::max(res.value, val);
        res.x = std::move(x);
    }
}
}  // namespace

LpResult simplex_maximize(const std::vector<std::vector<double>>& A, const std::vector<double>& b,
                          const std::vector<double>& c) {
    const std::size_t m = A.size(), n = c.size();
    for (const auto& row : A)
        if (row.size() != n) throw std::invalid_argument("simplex_maximize: ragged constraint matrix");
    if (b.size() != m) throw std::invalid_argument("simplex_maximize: rhs size mismatch");
    for (double bi : b)
        if (bi < 0.0) throw std::invalid_argument("simplex_maximize: requires b >= 0");

    // tableau: m constraint rows + objective row, columns [x | slack | rhs]
    std::vector<std::vector<double>> T(m + 1, std::vector<double>(n + m + 1, 0.0));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) T[i][j] = A[i][j];
        T[i][n + i] = 1.0;
        T[i][n + m] = b[i];
        basis[i] = n + i;
    }
    for (std::size_t j = 0; j < n; ++j) T[m][j] = -c[j];

    const std::size_t rhs_col = n + m;
    const std::size_t max_pivots = 4000;
    for (std::size_t iter = 0; iter < max_pivots; ++iter) {
        // Bland: entering = lowest-index column with negative reduced cost
        std::size_t enter = rhs_col;
        for (std::size_t j = 0; j < rhs_col; ++j) {
            if (T[m][j] < -kPivotEps) {
                enter = j;
                break;
            }
        }
        if (enter == rhs_col) break;  // optimal

        std::size_t leave = m;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < m; ++i) {
            if (T[i][enter] > kPivotEps) {
                double ratio = T[i][rhs_col] / T[i][enter];
                if (ratio < best_ratio - 1e-15 ||
                    (std::abs(ratio - best_ratio) <= 1e-15 && (leave == m || basis[i] < basis[leave]))) {
                    best_ratio = ratio;
                    leave = i;
                }
            }
        }
        if (leave == m) {
            LpResult res;
            res.bounded = false;
            res.value = std::numeric_limits<double>::infinity();
            return res;
        }

        double piv = T[leave][enter];
        for (auto& v : T[leave]) v /= piv;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == leave) continue;
            double factor = T[i][enter];
            if (factor == 0.0) continue;
            for (std::size_t j = 0; j <= rhs_col; ++j) T[i][j] -= factor * T[leave][j];
        }
        basis[leave] = enter;
    }

    LpResult res;
    res.x.assign(n, 0.0);
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) res.x[basis[i]] = T[i][rhs_col];
    res.value = T[m][rhs_col];
    polish(A, b, c, res);
    return res;
}

}  // namespace potlab

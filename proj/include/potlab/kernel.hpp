#pragma once

#include <optional>
#include <vector>

#include "potlab/space.hpp"

namespace potlab {

struct KernelConstants {
    std::optional<double> quasi_symmetry;  // a
    std::optional<double> maximum_principle;  // h; +inf means the WMP fails
    std::optional<double> quasimetric;  // kappa
};

// Dense kernel G(x_i, x_j) over a FiniteSpace. Entries are nonnegative;
// +inf is allowed on the diagonal only (point kernels with a singularity at
// the diagonal). Immutable after construction.
class KernelMatrix {
public:
    KernelMatrix(SpacePtr space, std::vector<double> row_major_values);

    double operator()(std::size_t i, std::size_t j) const { return values_[i * n_ + j]; }
    std::size_t size() const noexcept { return n_; }
    const SpacePtr& space() const noexcept { return space_; }
    const std::vector<double>& raw_values() const noexcept { return values_; }

    bool is_symmetric() const noexcept;
    // strictly positive everywhere (an infinite diagonal entry still counts)
    bool is_positive() const noexcept;
    bool has_infinite_diagonal() const noexcept;

    const KernelConstants& constants() const noexcept { return constants_; }
    KernelMatrix with_constants(KernelConstants c) const;

private:
    SpacePtr space_;
    std::vector<double> values_;
    std::size_t n_ = 0;
    KernelConstants constants_;
};

// Least a >= 1 with a^-1 G(y,x) <= G(x,y) <= a G(y,x) for all pairs; empty
// when a zero off-diagonal entry faces a nonzero transpose entry (no finite
// a exists).
std::optional<double> quasi_symmetry_constant(const KernelMatrix& G);

// (G + G^T) / 2
KernelMatrix symmetrize(const KernelMatrix& G);

// Least h >= 1 such that every nu >= 0 with sup of G nu <= M on its own
// support satisfies G nu <= h M everywhere. On a finite space this is exact:
// for each nonempty proper subset S (the candidate support) and each atom x
// outside it, solve the linear program
//     max (G nu)(x)  over  nu >= 0 on S,  (G nu)(y) <= 1 for all y in S,
// and take the maximum over (S, x), floored at 1. Subsets containing an atom
// with infinite self-interaction are vacuous (no finite bound can hold on
// the support) and are skipped. Returns +inf when some LP is unbounded,
// which happens only for kernels with zero entries: the WMP fails outright.
// Cost grows like 2^N; refuses spaces larger than max_size.
double wmp_constant(const KernelMatrix& G, int max_size = 12, int jobs = 1);

// Least kappa with d(x,y) <= kappa (d(x,z) + d(z,y)) for d = 1/G off the
// diagonal, d(x,x) = 0. Requires a symmetric kernel, positive off-diagonal.
// Degenerate triples force kappa >= 1, so the result is floored at 1.
double quasimetric_constant(const KernelMatrix& G);

// Point kernel |x_i - x_j|^(two_alpha - n) on a coordinate space, diagonal
// +inf. Requires 0 < two_alpha < n and distinct points.
KernelMatrix make_riesz_kernel(SpacePtr space, double two_alpha);

// Same off-diagonal entries, but each diagonal entry is the mean of the
// kernel over a ball of radius rho_i = half the nearest-neighbor distance
// (n / two_alpha * rho^(two_alpha - n)), i.e. the self-interaction of a
// quadrature cell rather than of a point mass. Keeps every potential finite.
KernelMatrix make_riesz_cell_kernel(SpacePtr space, double two_alpha);

KernelMatrix scale_kernel(const KernelMatrix& G, double factor);

}  // namespace potlab

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "potlab/numeric.hpp"

namespace potlab {

// Atom of a finite measure space: a label plus optional coordinates in R^n.
struct Point {
    std::string id;
    std::vector<double> coords;  // empty when the space is purely abstract
};

// Finite atomic measure space (Omega, sigma). Every atom carries strictly
// positive mass, so sigma-a.e. statements become everywhere statements.
// Immutable after construction; safe to share across threads.
class FiniteSpace {
public:
    FiniteSpace(std::vector<Point> points, std::vector<double> weights);

    std::size_t size() const noexcept { return weights_.size(); }
    std::size_t dimension() const noexcept { return dim_; }
    double weight(std::size_t i) const { return weights_[i]; }
    const std::vector<double>& weights() const noexcept { return weights_; }
    const Point& point(std::size_t i) const { return points_[i]; }
    const std::vector<Point>& points() const noexcept { return points_; }
    double total_mass() const noexcept { return total_; }
    // Euclidean distance between atoms; requires coordinates.
    double distance(std::size_t i, std::size_t j) const;

private:
    std::vector<Point> points_;
    std::vector<double> weights_;
    std::size_t dim_ = 0;
    double total_ = 0.0;
};

using SpacePtr = std::shared_ptr<const FiniteSpace>;

SpacePtr make_space(std::vector<double> weights);
SpacePtr make_space(std::vector<std::vector<double>> coords, std::vector<double> weights);

// Values of a function at the atoms. Entries are finite unless a degenerate
// potential is being carried, in which case +inf is stored explicitly.
struct FunctionOnSpace {
    SpacePtr space;
    std::vector<double> values;

    std::size_t size() const noexcept { return values.size(); }
    double operator[](std::size_t i) const { return values[i]; }
    bool has_infinite() const noexcept;
};

using Potential = FunctionOnSpace;

// Nonnegative mass vector over a FiniteSpace (a measure nu).
struct DiscreteMeasure {
    SpacePtr space;
    std::vector<double> mass;

    std::size_t size() const noexcept { return mass.size(); }
    double total() const noexcept;
    std::vector<std::size_t> support() const;
};

FunctionOnSpace constant_function(SpacePtr space, double value);
// The measure f * sigma (mass_i = f_i * sigma_i), the usual density pairing.
DiscreteMeasure density_measure(const FunctionOnSpace& f);
DiscreteMeasure zero_measure(SpacePtr space);
DiscreteMeasure point_mass(SpacePtr space, std::size_t atom, double mass = 1.0);

void check_same_space(const FiniteSpace& a, const FiniteSpace& b);
void check_measure(const DiscreteMeasure& nu);

}  // namespace potlab

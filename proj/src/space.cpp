#include "potlab/space.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace potlab {

FiniteSpace::FiniteSpace(std::vector<Point> points, std::vector<double> weights)
    : points_(std::move(points)), weights_(std::move(weights)) {
    if (weights_.empty()) throw std::invalid_argument("FiniteSpace: at least one atom required");
    if (points_.size() != weights_.size())
        throw std::invalid_argument("FiniteSpace: points/weights length mismatch");
    for (double w : weights_) {
        if (!(w > 0.0) || !std::isfinite(w))
            throw std::invalid_argument("FiniteSpace: every atom needs strictly positive finite mass");
        total_ += w;
    }
    dim_ = points_[0].coords.size();
    std::set<std::string> ids;
    std::set<std::vector<double>> seen;
    for (const auto& p : points_) {
        if (p.coords.size() != dim_)
            throw std::invalid_argument("FiniteSpace: inconsistent coordinate dimensions");
        if (!p.id.empty() && !ids.insert(p.id).second)
            throw std::invalid_argument("FiniteSpace: duplicate point id '" + p.id + "'");
        if (dim_ > 0 && !seen.insert(p.coords).second)
            throw std::invalid_argument("FiniteSpace: duplicate point coordinates");
    }
}

double FiniteSpace::distance(std::size_t i, std::size_t j) const {
    if (dim_ == 0) throw std::logic_error("FiniteSpace: distance needs coordinates");
    double s = 0.0;
    for (std::size_t d = 0; d < dim_; ++d) {
        double diff = points_[i].coords[d] - points_[j].coords[d];
        s += diff * diff;
    }
    return std::sqrt(s);
}

SpacePtr make_space(std::vector<double> weights) {
    std::vector<Point> pts(weights.size());
    for (std::size_t i = 0; i < pts.size(); ++i) pts[i].id = "p" + std::to_string(i);
    return std::make_shared<FiniteSpace>(std::move(pts), std::move(weights));
}

SpacePtr make_space(std::vector<std::vector<double>> coords, std::vector<double> weights) {
    std::vector<Point> pts(coords.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        pts[i].id = "p" + std::to_string(i);
        pts[i].coords = std::move(coords[i]);
    }
    return std::make_shared<FiniteSpace>(std::move(pts), std::move(weights));
}

bool FunctionOnSpace::has_infinite() const noexcept {
    for (double v : values)
        if (std::isinf(v)) return true;
    return false;
}

double DiscreteMeasure::total() const noexcept {
    double t = 0.0;
    for (double m : mass) t += m;
    return t;
}

std::vector<std::size_t> DiscreteMeasure::support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < mass.size(); ++i)
        if (mass[i] > 0.0) s.push_back(i);
    return s;
}

FunctionOnSpace constant_function(SpacePtr space, double value) {
    FunctionOnSpace f;
    f.values.assign(space->size(), value);
    f.space = std::move(space);
    return f;
}

DiscreteMeasure density_measure(const FunctionOnSpace& f) {
    DiscreteMeasure nu;
    nu.space = f.space;
    nu.mass.resize(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) nu.mass[i] = f.values[i] * f.space->weight(i);
    return nu;
}

DiscreteMeasure zero_measure(SpacePtr space) {
    DiscreteMeasure nu;
    nu.mass.assign(space->size(), 0.0);
    nu.space = std::move(space);
    return nu;
}

DiscreteMeasure point_mass(SpacePtr space, std::size_t atom, double mass) {
    DiscreteMeasure nu = zero_measure(std::move(space));
    nu.mass.at(atom) = mass;
    return nu;
}

void check_same_space(const FiniteSpace& a, const FiniteSpace& b) {
    if (&a == &b) return;
    if (a.size() != b.size()) throw std::invalid_argument("operands live on different spaces");
}

void check_measure(const DiscreteMeasure& nu) {
    if (!nu.space || nu.mass.size() != nu.space->size())
        throw std::invalid_argument("DiscreteMeasure: shape mismatch with its space");
    for (double m : nu.mass)
        if (m < 0.0 || std::isnan(m))
            throw std::invalid_argument("DiscreteMeasure: masses must be nonnegative");
}

}  // namespace potlab

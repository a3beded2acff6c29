#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace potlab {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// L^p exponent. Infinity is a distinguished state, never a large float.
class Exponent {
public:
    Exponent(double p) : p_(p) {
        if (!(p > 0.0)) throw std::invalid_argument("Exponent: p must be > 0");
        if (std::isinf(p)) throw std::invalid_argument("Exponent: use Exponent::infinity()");
    }
    static Exponent infinity() noexcept { return Exponent(tag_inf{}); }
    bool is_infinite() const noexcept { return inf_; }
    double value() const {
        if (inf_) throw std::logic_error("Exponent: infinite exponent has no finite value");
        return p_;
    }

private:
    struct tag_inf {};
    explicit Exponent(tag_inf) noexcept : p_(0.0), inf_(true) {}
    double p_;
    bool inf_ = false;
};

// Compensated (Kahan) accumulator for long sums.
class KahanSum {
public:
    void add(double x) noexcept {
        double y = x - carry_;
        double t = sum_ + y;
        carry_ = (t - sum_) - y;
        sum_ = t;
    }
    KahanSum& operator+=(double x) noexcept {
        add(x);
        return *this;
    }
    double value() const noexcept { return sum_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

inline bool nearly_equal(double a, double b, double rel_tol) noexcept {
    if (a == b) return true;
    double scale = std::max({std::abs(a), std::abs(b), 1.0});
    return std::abs(a - b) <= rel_tol * scale;
}

}  // namespace potlab

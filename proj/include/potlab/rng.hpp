#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace potlab {

// Seeded generator with fully specified output mapping so that identical
// seeds give identical streams on every platform (std distributions are
// implementation-defined; we avoid them).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // uniform in [0, 1)
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // uniform integer in [lo, hi]
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(engine_() % span);
    }

    // flat Dirichlet sample via normalized exponentials; strictly positive
    std::vector<double> dirichlet(std::size_t n) {
        std::vector<double> v(n);
        double total = 0.0;
        for (auto& x : v) {
            double u = uniform01();
            if (u <= 0.0) u = 0x1.0p-53;
            x = -std::log(u);
            total += x;
        }
        for (auto& x : v) x /= total;
        return v;
    }

    // derive an independent stream, e.g. one per suite instance
    Rng fork(std::uint64_t salt) {
        return Rng(next_u64() ^ (salt * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull));
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace potlab

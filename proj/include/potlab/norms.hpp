#pragma once

#include "potlab/numeric.hpp"
#include "potlab/space.hpp"

namespace potlab {

// (sum |f_i|^p sigma_i)^(1/p); max |f_i| for the infinite exponent.
double lp_norm(const FunctionOnSpace& f, Exponent p);

// Weak L^p norm  sup_{t>0} t * sigma({|f| > t})^{1/p}, computed exactly:
// on a finite space the supremum is attained at a jump, i.e. it equals
// max_k |f|_(k) * (sigma of the atoms with |f| >= |f|_(k))^{1/p}.
double weak_lp_norm(const FunctionOnSpace& f, Exponent p);

double lp_norm(const std::vector<double>& values, Exponent p, const FiniteSpace& sigma);
double weak_lp_norm(const std::vector<double>& values, Exponent p, const FiniteSpace& sigma);

}  // namespace potlab

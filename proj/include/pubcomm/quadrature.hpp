#pragma once
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <string>
#include <utility>

#include "pubcomm/errors.hpp"

namespace pubcomm {

// Adaptive Gauss-Kronrod (15-point) integration over [a, b]. The error
// estimate is checked against an absolute budget; QuadratureError signals
// that the refinement budget was exhausted above tolerance.
template <class F>
double integrate(F&& f, double a, double b, double abs_tol = 1e-11, int max_depth = 15) {
    if (!(a < b)) return 0.0;
    double err = 0.0;
    const double value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        std::forward<F>(f), a, b, static_cast<unsigned>(max_depth), 1e-13, &err);
    if (err > abs_tol && err > 1e-12 * std::abs(value)) {
        throw QuadratureError("quadrature error estimate " + std::to_string(err) +
                              " above budget " + std::to_string(abs_tol));
    }
    return value;
}

}  // namespace pubcomm

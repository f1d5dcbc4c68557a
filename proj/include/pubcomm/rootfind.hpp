#pragma once
#include <boost/math/tools/roots.hpp>

#include <cmath>
#include <cstdint>
#include <vector>

namespace pubcomm {

struct SignChange {
    double a, b, fa, fb;
};

// Refine a sign-change bracket [a, b] (f(a), f(b) of opposite sign) down to
// absolute width tol. Returns the midpoint of the final bracket and adds the
// iteration count to *iterations when given.
template <class F>
double refine_root(F&& f, double a, double b, double fa, double fb, double tol,
                   std::uintmax_t max_iter = 200, std::uintmax_t* iterations = nullptr) {
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    std::uintmax_t iter = max_iter;
    auto done = [tol](double lo, double hi) { return std::abs(hi - lo) <= tol; };
    const auto bracket = boost::math::tools::toms748_solve(f, a, b, fa, fb, done, iter);
    if (iterations) *iterations += iter;
    return 0.5 * (bracket.first + bracket.second);
}

// Evaluate f on a uniform n-point grid over [lo, hi] and return each adjacent
// pair of finite values with a sign change as (a, b, fa, fb).
template <class F>
std::vector<SignChange> scan_sign_changes(F&& f, double lo, double hi, int n) {
    std::vector<SignChange> found;
    double prev_x = lo, prev_f = f(lo);
    for (int i = 1; i < n; ++i) {
        const double x = lo + (hi - lo) * i / (n - 1);
        const double fx = f(x);
        if (std::isfinite(prev_f) && std::isfinite(fx) &&
            ((prev_f < 0.0) != (fx < 0.0) || prev_f == 0.0)) {
            found.push_back({prev_x, x, prev_f, fx});
        }
        if (std::isfinite(fx)) {
            prev_x = x;
            prev_f = fx;
        }
    }
    return found;
}

}  // namespace pubcomm

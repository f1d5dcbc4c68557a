#pragma once
// Test-only oracles. Deliberately independent of the library's evaluation
// paths: the normal cdf/survival here come from quadrature of the density
// (no erf anywhere), payoffs from brute-force nested integration, and the
// silence posterior from dense-grid integration over primitive densities.

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "pubcomm/beliefs.hpp"
#include "pubcomm/continuation.hpp"

namespace oracle {

inline double npdf(double z) { return 0.39894228040143267794 * std::exp(-0.5 * z * z); }

// Phi by quadrature from the origin.
inline double ncdf(double z) {
    if (z < -12.0) return nsurv(-z);  // forward declared below? keep simple: fallthrough
    const double v = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        [](double t) { return npdf(t); }, 0.0, z, 12, 1e-15);
    return 0.5 + v;
}

// Survival by quadrature over the semi-infinite tail.
inline double nsurv(double z) {
    boost::math::quadrature::exp_sinh<double> integrator;
    return integrator.integrate([z](double t) { return npdf(z + t); }, 1e-15);
}

// E[X | X >= lower] for X ~ N(mean, 1/precision), both integrals numerical.
inline double truncated_mean(double mean, double precision, double lower) {
    const double s = std::sqrt(precision);
    const double zl = (lower - mean) * s;
    boost::math::quadrature::exp_sinh<double> integrator;
    const double mass = integrator.integrate([&](double t) { return npdf(zl + t); }, 1e-15);
    const double first = integrator.integrate(
        [&](double t) { return (mean + (zl + t) / s) * npdf(zl + t); }, 1e-15);
    return first / mass;
}

// Sender interim payoff by nested quadrature of
//   integral (r + b + theta) * Pr(x_tilde >= x | theta) dF(theta | y),
// with the inner tail probability itself computed by quadrature.
inline double sender_payoff_2d(const pubcomm::ModelParams& P, double x, double y) {
    const double h_ty = P.alpha + P.gamma;
    const double tbar = (P.alpha * y + P.gamma * P.mu) / h_ty;
    const double sd_t = 1.0 / std::sqrt(h_ty);
    const double sb = std::sqrt(P.beta);
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        [&](double theta) {
            const double z = (theta - tbar) / sd_t;
            return (P.r + P.b + theta) * nsurv((x - theta) * sb) * npdf(z) / sd_t;
        },
        tbar - 12.0 * sd_t, tbar + 12.0 * sd_t, 12, 1e-13);
}

// Posterior mean of theta at (x, silence) built from primitive densities on a
// dense theta grid (Simpson), with the concealment-interval mass per theta
// also done by Simpson. No conjugate shortcuts.
class SilenceMeanOracle {
  public:
    SilenceMeanOracle(const pubcomm::ModelParams& P, double y_lo, double y_hi, int n_theta = 4001,
                      int n_y = 1601)
        : P_(P) {
        const double sd_prior = 1.0 / std::sqrt(P.gamma);
        lo_ = P.mu - 14.0 * sd_prior - 14.0 / std::sqrt(P.beta);
        hi_ = P.mu + 14.0 * sd_prior + 14.0 / std::sqrt(P.beta);
        theta_.resize(n_theta);
        weight_.resize(n_theta);
        const double sa = std::sqrt(P.alpha);
        const double sg = std::sqrt(P.gamma);
        for (int i = 0; i < n_theta; ++i) {
            const double theta = lo_ + (hi_ - lo_) * i / (n_theta - 1);
            theta_[i] = theta;
            // Pr(y in [y_lo, y_hi] | theta) by Simpson over y.
            double mass = 0.0;
            for (int j = 0; j < n_y; ++j) {
                const double y = y_lo + (y_hi - y_lo) * j / (n_y - 1);
                const double w = (j == 0 || j == n_y - 1) ? 1.0 : (j % 2 ? 4.0 : 2.0);
                mass += w * sa * npdf((y - theta) * sa);
            }
            mass *= (y_hi - y_lo) / (n_y - 1) / 3.0;
            const double prior = sg * npdf((theta - P.mu) * sg);
            weight_[i] = prior * ((1.0 - P.p) + P.p * mass);
        }
    }

    double posterior_mean(double x) const {
        const double sb = std::sqrt(P_.beta);
        double num = 0.0, den = 0.0;
        const int n = static_cast<int>(theta_.size());
        for (int i = 0; i < n; ++i) {
            const double w = (i == 0 || i == n - 1) ? 1.0 : (i % 2 ? 4.0 : 2.0);
            const double like = sb * npdf((x - theta_[i]) * sb);
            num += w * theta_[i] * like * weight_[i];
            den += w * like * weight_[i];
        }
        return num / den;
    }

    // Root of posterior_mean by scan plus bisection.
    double threshold() const {
        double a = lo_, b = hi_;
        double fa = posterior_mean(a);
        bool bracketed = false;
        const int scan = 400;
        for (int i = 1; i <= scan; ++i) {
            const double x = lo_ + (hi_ - lo_) * i / scan;
            const double fx = posterior_mean(x);
            if ((fa < 0.0) != (fx < 0.0)) {
                a = lo_ + (hi_ - lo_) * (i - 1) / scan;
                b = x;
                bracketed = true;
                break;
            }
            fa = fx;
        }
        if (!bracketed) throw std::runtime_error("silence oracle: no bracket");
        for (int i = 0; i < 80; ++i) {
            const double mid = 0.5 * (a + b);
            if ((posterior_mean(a) < 0.0) != (posterior_mean(mid) < 0.0)) {
                b = mid;
            } else {
                a = mid;
            }
        }
        return 0.5 * (a + b);
    }

  private:
    pubcomm::ModelParams P_;
    double lo_, hi_;
    std::vector<double> theta_;
    std::vector<double> weight_;
};

}  // namespace oracle

#pragma once
// Gaussian conjugate-updating algebra for the disclosure game: the posterior
// and predictive laws implied by a normal prior and normal signal technology,
// plus the truncated-normal mean that shows up in the sender's payoff.
//
// Everything here is a pure function of (params, inputs); no cached state.

#include <cmath>

namespace pubcomm {

// The seven primitives defining one game instance.
struct ModelParams {
    double alpha;  // precision of the sender's signal y | theta
    double beta;   // precision of each receiver's private signal x_i | theta
    double gamma;  // prior precision of theta
    double mu;     // prior mean of theta
    double r;      // externality coefficient on the aggregate action
    double b;      // sender's exogenous bias toward the aggregate action
    double p;      // probability the sender is informed, 0 < p < 1

    // Throws std::invalid_argument naming the offending field.
    void validate() const;
};

// A one-dimensional Gaussian law, parameterized by mean and precision.
struct GaussianBelief {
    double mean = 0.0;
    double precision = 1.0;  // > 0

    double variance() const { return 1.0 / precision; }
    double sd() const { return std::sqrt(1.0 / precision); }

    double pdf(double t) const;
    double cdf(double t) const;
    double sf(double t) const;  // survival 1 - cdf, accurate in the upper tail
};

// Standard-normal helpers, erfc-based.
double norm_pdf(double z);
double norm_cdf(double z);
double norm_sf(double z);

// Mills ratio (1 - Phi(z)) / phi(z); continued fraction for large z, so it
// stays finite long after the survival function itself underflows.
double mills_ratio(double z);

GaussianBelief prior_theta(const ModelParams& params);
GaussianBelief posterior_theta_given_x(const ModelParams& params, double x);
GaussianBelief posterior_theta_given_y(const ModelParams& params, double y);
GaussianBelief posterior_theta_given_xy(const ModelParams& params, double x, double y);

// Law of a receiver's signal as the sender predicts it from y.
GaussianBelief predictive_x_given_y(const ModelParams& params, double y);
// Law of the sender's signal as a receiver predicts it from x.
GaussianBelief predictive_y_given_x(const ModelParams& params, double x);

GaussianBelief marginal_x(const ModelParams& params);
GaussianBelief marginal_y(const ModelParams& params);

// E[X | X >= lower] = mean + (1/precision) * pdf(lower) / sf(lower).
// Switches to the asymptotic Mills-ratio evaluation when sf underflows;
// lower = +inf returns +inf.
double truncated_normal_mean(const GaussianBelief& belief, double lower);

}  // namespace pubcomm

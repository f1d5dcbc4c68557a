#include "pubcomm/continuation.hpp"

#include <cmath>

#include "pubcomm/errors.hpp"
#include "pubcomm/quadrature.hpp"
#include "pubcomm/rootfind.hpp"

namespace pubcomm {

double disclosed_threshold(const ModelParams& params, double y) {
    return -(params.alpha * y + params.gamma * params.mu) / params.beta;
}

double full_disclosure_threshold(const ModelParams& params) {
    return -params.gamma * params.mu / params.beta;
}

double sender_optimal_threshold(const ModelParams& params, double y) {
    const double h_xy = params.alpha + params.beta + params.gamma;
    return -(params.alpha * y + params.gamma * params.mu + h_xy * (params.r + params.b)) /
           params.beta;
}

double conflict_of_interests(const ModelParams& params) {
    return (params.alpha + params.beta + params.gamma) * (params.r + params.b) / params.beta;
}

ThresholdRule threshold_rule(const ModelParams& params, double x_empty) {
    return {-params.alpha / params.beta, -params.gamma * params.mu / params.beta, x_empty};
}

double silence_posterior_mean(const ModelParams& params, double x,
                              const NonDisclosureInterval& interval, BayesForm form) {
    const double theta_x = posterior_theta_given_x(params, x).mean;
    if (interval.empty()) return theta_x;

    const double lo = interval.lower();
    const double hi = interval.upper();
    const GaussianBelief y_given_x = predictive_y_given_x(params, x);

    // Mass and conditional-mean integral of y|x over the interval. The mass
    // comes from the cdf; the mean integral uses adaptive quadrature.
    const double mass = y_given_x.cdf(hi) - y_given_x.cdf(lo);
    const double mean_integral = integrate(
        [&](double y) {
            return posterior_theta_given_xy(params, x, y).mean * y_given_x.pdf(y);
        },
        lo, hi, 1e-11);

    const double p = params.p;
    if (form == BayesForm::standard) {
        return ((1.0 - p) * theta_x + p * mean_integral) / ((1.0 - p) + p * mass);
    }

    // paper_literal: the uninformed term is not reweighted by the concealment
    // mass. When that mass underflows, the conditional mean collapses onto
    // the nearer endpoint.
    double conditional_mean;
    if (mass < 1e-280) {
        const double nearest = y_given_x.mean > hi ? hi : lo;
        conditional_mean = posterior_theta_given_xy(params, x, nearest).mean;
    } else {
        conditional_mean = mean_integral / mass;
    }
    return (1.0 - p) * theta_x + p * conditional_mean;
}

double empty_message_threshold(const ModelParams& params, const NonDisclosureInterval& interval,
                               BayesForm form, double x_tol) {
    params.validate();
    auto condition = [&](double x) { return silence_posterior_mean(params, x, interval, form); };

    const double prior_sd = prior_theta(params).sd();
    double half_width = 12.0 * prior_sd;
    for (int expansion = 0; expansion < 6; ++expansion) {
        const double lo = params.mu - half_width;
        const double hi = params.mu + half_width;
        const auto brackets = scan_sign_changes(condition, lo, hi, 256);
        if (!brackets.empty()) {
            const auto& br = brackets.front();
            return refine_root(condition, br.a, br.b, br.fa, br.fb, x_tol);
        }
        half_width *= 2.0;
    }
    throw NoRootError("empty_message_threshold: no sign change in the scan window");
}

}  // namespace pubcomm

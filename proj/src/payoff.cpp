#include "pubcomm/payoff.hpp"

#include <algorithm>
#include <cmath>

namespace pubcomm {

namespace {

// Phi(zb) - Phi(za) on the standard scale, routed through the survival
// function when both points sit in the upper half.
double std_cdf_difference(double za, double zb) {
    if (za + zb > 0.0) return norm_sf(za) - norm_sf(zb);
    return norm_cdf(zb) - norm_cdf(za);
}

}  // namespace

double cdf_difference(const GaussianBelief& belief, double a, double b) {
    const double s = std::sqrt(belief.precision);
    return std_cdf_difference((a - belief.mean) * s, (b - belief.mean) * s);
}

double sender_interim_payoff(const ModelParams& params, double x, double y) {
    const GaussianBelief x_given_y = predictive_x_given_y(params, y);
    const double theta_bar_y = posterior_theta_given_y(params, y).mean;
    return (params.r + params.b + theta_bar_y) * x_given_y.sf(x) +
           x_given_y.pdf(x) / (params.alpha + params.gamma);
}

double zeta(const ModelParams& params, double x, double y) {
    const GaussianBelief x_given_y = predictive_x_given_y(params, y);
    const double m = x_given_y.mean;
    const double h = x_given_y.precision;
    const double s = std::sqrt(h);
    const double xh = disclosed_threshold(params, y);
    const double za = (xh - m) * s;  // standardized x(y)
    const double zb = (x - m) * s;   // standardized x

    // Near the removable singularity the raw ratio is 0/0; use the Taylor
    // expansion of both differences around x(y) (common pdf factor cancels).
    if (std::abs(za - zb) < 1e-4) {
        const double d = x - xh;
        const double t = h * (xh - m);
        const double num = -t + 0.5 * (t * t - h) * d + t * (3.0 * h - t * t) * d * d / 6.0;
        const double den = 1.0 - 0.5 * t * d + (t * t - h) * d * d / 6.0;
        return num / den;
    }

    // Both points deep in the same tail: factor out the dominant pdf and use
    // Mills ratios, which stay representable after cdf/pdf underflow.
    const double tail = 34.0;
    if (std::min(za, zb) > tail || std::max(za, zb) < -tail) {
        const bool upper = za > 0.0;
        const double pa = upper ? za : -za;
        const double pb = upper ? zb : -zb;
        const double pmin = std::min(pa, pb);
        const double wa = std::exp(0.5 * (pmin * pmin - pa * pa));
        const double wb = std::exp(0.5 * (pmin * pmin - pb * pb));
        const double value = s * (wa - wb) / (wb * mills_ratio(pb) - wa * mills_ratio(pa));
        return upper ? value : -value;
    }

    const double num = s * (norm_pdf(za) - norm_pdf(zb));
    const double den = std_cdf_difference(zb, za);  // F(x(y)|y) - F(x|y)
    return num / den;
}

double disclosure_indifference(const ModelParams& params, double x_empty, double y) {
    const double theta_bar_y = posterior_theta_given_y(params, y).mean;
    return (params.r + params.b + theta_bar_y) -
           zeta(params, x_empty, y) / (params.alpha + params.gamma);
}

double concealment_gain(const ModelParams& params, double x_empty, double y) {
    const GaussianBelief x_given_y = predictive_x_given_y(params, y);
    const double f_diff = cdf_difference(x_given_y, x_empty, disclosed_threshold(params, y));
    return f_diff * disclosure_indifference(params, x_empty, y);
}

PayoffDiagnostics payoff_diagnostics(const ModelParams& params, double x_empty, double y) {
    PayoffDiagnostics d{};
    d.pi_disclose = sender_interim_payoff(params, disclosed_threshold(params, y), y);
    d.pi_conceal = sender_interim_payoff(params, x_empty, y);
    d.net_concealment_gain = d.pi_conceal - d.pi_disclose;
    return d;
}

}  // namespace pubcomm

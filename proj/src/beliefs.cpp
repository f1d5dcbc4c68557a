#include "pubcomm/beliefs.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace pubcomm {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kInvSqrt2Pi = 0.39894228040143267794;

[[noreturn]] void fail_param(const char* field, const char* requirement, double got) {
    std::ostringstream msg;
    msg << "invalid params: " << field << " " << requirement << " (got " << got << ")";
    throw std::invalid_argument(msg.str());
}

}  // namespace

void ModelParams::validate() const {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) fail_param("alpha", "must be finite and > 0", alpha);
    if (!(beta > 0.0) || !std::isfinite(beta)) fail_param("beta", "must be finite and > 0", beta);
    if (!(gamma > 0.0) || !std::isfinite(gamma)) fail_param("gamma", "must be finite and > 0", gamma);
    if (!std::isfinite(mu)) fail_param("mu", "must be finite", mu);
    if (!std::isfinite(r)) fail_param("r", "must be finite", r);
    if (!std::isfinite(b)) fail_param("b", "must be finite", b);
    if (!(p > 0.0 && p < 1.0)) fail_param("p", "must lie strictly in (0, 1)", p);
}

double norm_pdf(double z) { return kInvSqrt2Pi * std::exp(-0.5 * z * z); }

double norm_cdf(double z) { return 0.5 * std::erfc(-z * kInvSqrt2); }

double norm_sf(double z) { return 0.5 * std::erfc(z * kInvSqrt2); }

double mills_ratio(double z) {
    if (z < 30.0) return norm_sf(z) / norm_pdf(z);
    // Backward evaluation of the Laplace continued fraction
    // 1/(z + 1/(z + 2/(z + 3/(...)))); 24 terms is far past convergence here.
    double den = z;
    for (int k = 24; k >= 1; --k) den = z + k / den;
    return 1.0 / den;
}

double GaussianBelief::pdf(double t) const {
    const double s = std::sqrt(precision);
    return s * norm_pdf((t - mean) * s);
}

double GaussianBelief::cdf(double t) const { return norm_cdf((t - mean) * std::sqrt(precision)); }

double GaussianBelief::sf(double t) const { return norm_sf((t - mean) * std::sqrt(precision)); }

GaussianBelief prior_theta(const ModelParams& params) { return {params.mu, params.gamma}; }

GaussianBelief posterior_theta_given_x(const ModelParams& params, double x) {
    const double h = params.beta + params.gamma;
    return {(params.beta * x + params.gamma * params.mu) / h, h};
}

GaussianBelief posterior_theta_given_y(const ModelParams& params, double y) {
    const double h = params.alpha + params.gamma;
    return {(params.alpha * y + params.gamma * params.mu) / h, h};
}

GaussianBelief posterior_theta_given_xy(const ModelParams& params, double x, double y) {
    const double h = params.alpha + params.beta + params.gamma;
    return {(params.alpha * y + params.beta * x + params.gamma * params.mu) / h, h};
}

GaussianBelief predictive_x_given_y(const ModelParams& params, double y) {
    const double h = 1.0 / (1.0 / params.beta + 1.0 / (params.alpha + params.gamma));
    return {posterior_theta_given_y(params, y).mean, h};
}

GaussianBelief predictive_y_given_x(const ModelParams& params, double x) {
    const double h = 1.0 / (1.0 / (params.beta + params.gamma) + 1.0 / params.alpha);
    return {posterior_theta_given_x(params, x).mean, h};
}

GaussianBelief marginal_x(const ModelParams& params) {
    return {params.mu, 1.0 / (1.0 / params.beta + 1.0 / params.gamma)};
}

GaussianBelief marginal_y(const ModelParams& params) {
    return {params.mu, 1.0 / (1.0 / params.alpha + 1.0 / params.gamma)};
}

double truncated_normal_mean(const GaussianBelief& belief, double lower) {
    if (std::isinf(lower)) {
        return lower > 0 ? std::numeric_limits<double>::infinity() : belief.mean;
    }
    const double s = std::sqrt(belief.precision);
    const double z = (lower - belief.mean) * s;
    // mean + pdf/(precision * sf) == mean + 1/(sqrt(precision) * mills(z)).
    return belief.mean + 1.0 / (s * mills_ratio(z));
}

}  // namespace pubcomm

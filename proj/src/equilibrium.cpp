#include "pubcomm/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "pubcomm/errors.hpp"
#include "pubcomm/rootfind.hpp"

namespace pubcomm {

NonDisclosureInterval interval_given_x(const ModelParams& params, double x_empty, double y_tol) {
    params.validate();
    const double y2 = -(params.beta * x_empty + params.gamma * params.mu) / params.alpha;
    const double conflict = params.r + params.b;
    if (conflict == 0.0) return {y2, y2};

    auto margin = [&](double y) { return disclosure_indifference(params, x_empty, y); };

    // margin(y2) = r+b exactly; the far-side limit has the opposite sign, so
    // march away from y2 with doubling steps until the margin flips.
    const double direction = conflict > 0.0 ? -1.0 : 1.0;
    double step = marginal_y(params).sd();
    double near_y = y2 + direction * 1e-12 * std::max(1.0, std::abs(y2));
    double near_f = margin(near_y);
    if (!((near_f > 0.0) == (conflict > 0.0))) {
        near_y = y2;
        near_f = conflict;
    }
    for (int i = 0; i < 64; ++i) {
        const double far_y = near_y + direction * step;
        const double far_f = margin(far_y);
        if (std::isfinite(far_f) && (far_f < 0.0) != (near_f < 0.0)) {
            const double y1 = conflict > 0.0
                                  ? refine_root(margin, far_y, near_y, far_f, near_f, y_tol)
                                  : refine_root(margin, near_y, far_y, near_f, far_f, y_tol);
            return {y1, y2};
        }
        if (std::isfinite(far_f)) {
            near_y = far_y;
            near_f = far_f;
        }
        step *= 2.0;
    }
    throw BracketError("interval_given_x: indifference margin never changed sign");
}

Equilibrium solve_equilibrium(const ModelParams& params, const SolverConfig& config) {
    params.validate();
    if (params.r + params.b == 0.0) {
        throw std::invalid_argument("degenerate conflict: r+b=0");
    }

    auto collapsed = [&](double x) -> double {
        const NonDisclosureInterval interval = interval_given_x(params, x, config.y_tol);
        return silence_posterior_mean(params, x, interval, config.bayes_form);
    };
    auto collapsed_or_nan = [&](double x) -> double {
        try {
            return collapsed(x);
        } catch (const BracketError&) {
            return std::numeric_limits<double>::quiet_NaN();
        }
    };

    Equilibrium eq;
    const double prior_sd = prior_theta(params).sd();
    const double home = full_disclosure_threshold(params);

    std::vector<SignChange> brackets;
    double half_width = 12.0 * prior_sd;
    for (int expansion = 0; expansion < 5 && brackets.empty(); ++expansion) {
        brackets = scan_sign_changes(collapsed_or_nan, params.mu - half_width,
                                     params.mu + half_width, config.scan_points);
        half_width *= 2.0;
    }
    if (brackets.empty()) {
        // No sign change anywhere: report the full-disclosure point instead
        // of throwing; expected near p = 1 where existence can fail.
        eq.converged = false;
        eq.x_empty = home;
        try {
            eq.interval = interval_given_x(params, eq.x_empty, config.y_tol);
            eq.residual_marginal_receiver =
                silence_posterior_mean(params, eq.x_empty, eq.interval, config.bayes_form);
            eq.residual_indifference = concealment_gain(params, eq.x_empty, eq.interval.y1);
        } catch (const BracketError&) {
            eq.residual_marginal_receiver = std::numeric_limits<double>::quiet_NaN();
            eq.residual_indifference = std::numeric_limits<double>::quiet_NaN();
        }
        eq.residual_threshold_match = 0.0;
        return eq;
    }

    std::uintmax_t iterations = 0;
    for (const auto& br : brackets) {
        eq.candidate_roots.push_back(refine_root(collapsed_or_nan, br.a, br.b, br.fa, br.fb,
                                                 config.x_tol,
                                                 static_cast<std::uintmax_t>(config.max_iterations),
                                                 &iterations));
    }
    eq.iterations = static_cast<int>(iterations);
    eq.multiple_roots = eq.candidate_roots.size() > 1;
    eq.x_empty = *std::min_element(
        eq.candidate_roots.begin(), eq.candidate_roots.end(),
        [&](double a, double b) { return std::abs(a - home) < std::abs(b - home); });

    eq.interval = interval_given_x(params, eq.x_empty, std::min(config.y_tol, 1e-12));
    eq.residual_marginal_receiver =
        silence_posterior_mean(params, eq.x_empty, eq.interval, config.bayes_form);
    eq.residual_threshold_match = eq.x_empty - disclosed_threshold(params, eq.interval.y2);
    eq.residual_indifference = concealment_gain(params, eq.x_empty, eq.interval.y1);
    eq.converged = std::abs(eq.residual_marginal_receiver) <= config.residual_tol &&
                   std::abs(eq.residual_threshold_match) <= config.residual_tol &&
                   std::abs(eq.residual_indifference) <= config.residual_tol;
    return eq;
}

std::optional<double> disclosure_rule(const Equilibrium& eq, std::optional<double> y) {
    if (!y || eq.interval.contains(*y)) return std::nullopt;
    return y;
}

ThresholdRule equilibrium_threshold_rule(const ModelParams& params, const Equilibrium& eq) {
    return threshold_rule(params, eq.x_empty);
}

}  // namespace pubcomm

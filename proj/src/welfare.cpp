#include "pubcomm/welfare.hpp"

#include <cmath>
#include <stdexcept>

#include "pubcomm/quadrature.hpp"

namespace pubcomm {

namespace {

constexpr double kOuterSd = 10.0;  // theta window in prior sd
constexpr double kInnerSd = 12.0;  // y window around theta in signal sd
constexpr double kInnerTol = 1e-11;
constexpr double kOuterTol = 1e-9;

struct GameLaws {
    double sd_y;  // sd of y | theta
    const ModelParams* params;

    GaussianBelief x_given_theta(double theta) const { return {theta, params->beta}; }
    GaussianBelief y_given_theta(double theta) const { return {theta, 1.0 / (sd_y * sd_y)}; }
};

GameLaws laws_for(const ModelParams& params) {
    return {std::sqrt(1.0 / params.alpha), &params};
}

// Expected value of S(x(y)) under y|theta over [a, b], where S is the
// survival of a receiver's signal at the disclosed threshold.
double disclosed_action_mass(const ModelParams& params, const GameLaws& laws, double theta,
                             double a, double b) {
    if (!(a < b)) return 0.0;
    const GaussianBelief y_law = laws.y_given_theta(theta);
    const GaussianBelief x_law = laws.x_given_theta(theta);
    return integrate(
        [&](double y) { return x_law.sf(disclosed_threshold(params, y)) * y_law.pdf(y); }, a, b,
        kInnerTol);
}

template <class Weight>
double outer_theta_integral(const ModelParams& params, Weight&& w) {
    const GaussianBelief prior = prior_theta(params);
    const double lo = params.mu - kOuterSd * prior.sd();
    const double hi = params.mu + kOuterSd * prior.sd();
    return integrate([&](double theta) { return w(theta) * prior.pdf(theta); }, lo, hi, kOuterTol,
                     17);
}

double expected_under_equilibrium(const ModelParams& params, const Equilibrium& eq,
                                  bool payoff_weighted) {
    const GameLaws laws = laws_for(params);
    const double lo = eq.interval.lower();
    const double hi = eq.interval.upper();
    return outer_theta_integral(params, [&](double theta) {
        const GaussianBelief y_law = laws.y_given_theta(theta);
        const double silence_prob =
            (1.0 - params.p) + params.p * cdf_difference(y_law, lo, hi);
        // Complement of [lo, hi] intersected with the effective support of
        // y|theta, so quadrature nodes always land on the Gaussian bump.
        const double window = kInnerSd * laws.sd_y;
        const double disclosed =
            disclosed_action_mass(params, laws, theta, theta - window,
                                  std::min(theta + window, lo)) +
            disclosed_action_mass(params, laws, theta, std::max(theta - window, hi),
                                  theta + window);
        const double action =
            silence_prob * laws.x_given_theta(theta).sf(eq.x_empty) + params.p * disclosed;
        return payoff_weighted ? (params.r + theta) * action : action;
    });
}

}  // namespace

double ex_ante_welfare(const ModelParams& params, const Equilibrium& eq) {
    params.validate();
    return expected_under_equilibrium(params, eq, true);
}

double ex_ante_action(const ModelParams& params, const Equilibrium& eq) {
    params.validate();
    return expected_under_equilibrium(params, eq, false);
}

double full_disclosure_welfare(const ModelParams& params) {
    params.validate();
    const GameLaws laws = laws_for(params);
    const double x_hat = full_disclosure_threshold(params);
    return outer_theta_integral(params, [&](double theta) {
        const double window = kInnerSd * laws.sd_y;
        const double disclosed =
            disclosed_action_mass(params, laws, theta, theta - window, theta + window);
        const double action = (1.0 - params.p) * laws.x_given_theta(theta).sf(x_hat) +
                              params.p * disclosed;
        return (params.r + theta) * action;
    });
}

WelfareReport welfare_decomposition(const ModelParams& params, const Equilibrium& eq) {
    WelfareReport report;
    report.v_total = ex_ante_welfare(params, eq);
    report.v_full_disclosure = full_disclosure_welfare(params);

    const GameLaws laws = laws_for(params);
    const double x_hat = full_disclosure_threshold(params);
    const double lo = eq.interval.lower();
    const double hi = eq.interval.upper();

    // Uninformed sender: receivers play x_empty instead of the no-inference
    // threshold x_hat.
    report.misinterpretation_gain = (1.0 - params.p) * outer_theta_integral(params, [&](double theta) {
        return (params.r + theta) * cdf_difference(laws.x_given_theta(theta), eq.x_empty, x_hat);
    });

    // Concealed signals: receivers play x_empty instead of x(y).
    report.concealment_gain_total = params.p * outer_theta_integral(params, [&](double theta) {
        const GaussianBelief y_law = laws.y_given_theta(theta);
        const GaussianBelief x_law = laws.x_given_theta(theta);
        const double inner = integrate(
            [&](double y) {
                return cdf_difference(x_law, eq.x_empty, disclosed_threshold(params, y)) *
                       y_law.pdf(y);
            },
            lo, hi, kInnerTol);
        return (params.r + theta) * inner;
    });

    report.identity_residual =
        report.v_total - (report.v_full_disclosure + report.misinterpretation_gain +
                          report.concealment_gain_total);
    return report;
}

InterimGainCurve interim_gain_curve(const ModelParams& params, const Equilibrium& eq,
                                    const std::vector<double>& y_grid) {
    InterimGainCurve curve;
    curve.y_grid = y_grid;
    curve.sender_gain.reserve(y_grid.size());
    curve.aggregate_action_gain.reserve(y_grid.size());
    curve.welfare_gain.reserve(y_grid.size());
    for (double y : y_grid) {
        const double sg = concealment_gain(params, eq.x_empty, y);
        const double ag = cdf_difference(predictive_x_given_y(params, y), eq.x_empty,
                                         disclosed_threshold(params, y));
        curve.sender_gain.push_back(sg);
        curve.aggregate_action_gain.push_back(ag);
        curve.welfare_gain.push_back(sg - params.b * ag);
    }
    return curve;
}

double concealment_gain_total_from_curve(const ModelParams& params, const Equilibrium& eq) {
    const GaussianBelief y_marginal = marginal_y(params);
    return params.p *
           integrate(
               [&](double y) {
                   const double sg = concealment_gain(params, eq.x_empty, y);
                   const double ag = cdf_difference(predictive_x_given_y(params, y), eq.x_empty,
                                                    disclosed_threshold(params, y));
                   return (sg - params.b * ag) * y_marginal.pdf(y);
               },
               eq.interval.lower(), eq.interval.upper(), kInnerTol);
}

double interim_welfare_gain_by_quadrature(const ModelParams& params, const Equilibrium& eq,
                                          double y) {
    const GaussianBelief theta_law = posterior_theta_given_y(params, y);
    const double window = kOuterSd * theta_law.sd();
    return integrate(
        [&](double theta) {
            const GaussianBelief x_law{theta, params.beta};
            return (params.r + theta) *
                   cdf_difference(x_law, eq.x_empty, disclosed_threshold(params, y)) *
                   theta_law.pdf(theta);
        },
        theta_law.mean - window, theta_law.mean + window, 1e-13);
}

std::vector<BiasSweepRow> bias_sweep(const ModelParams& base, const std::vector<double>& b_grid,
                                     const SolverConfig& config) {
    std::vector<BiasSweepRow> rows;
    rows.reserve(b_grid.size());
    for (double b : b_grid) {
        BiasSweepRow row;
        row.b = b;
        ModelParams params = base;
        params.b = b;
        try {
            row.eq = solve_equilibrium(params, config);
            if (!row.eq.converged) {
                row.status = "no convergence";
            } else {
                row.report = welfare_decomposition(params, row.eq);
                row.status = "ok";
            }
        } catch (const std::exception& e) {
            row.status = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<double> default_bias_grid(const ModelParams& params) {
    if (params.r == 0.0) {
        throw std::invalid_argument("default bias grid needs r != 0; set the grid explicitly");
    }
    double lo = std::min(-params.r, params.r);
    double hi = std::max(-params.r, params.r);
    if (-params.r == lo) {
        lo += 1e-3;
    } else {
        hi -= 1e-3;
    }
    std::vector<double> grid;
    const int n = 41;
    grid.reserve(n);
    for (int i = 0; i < n; ++i) grid.push_back(lo + (hi - lo) * i / (n - 1));
    return grid;
}

}  // namespace pubcomm

#include "pubcomm/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "pubcomm/monte_carlo.hpp"
#include "pubcomm/welfare.hpp"

namespace pubcomm {

namespace {

void require_output_path(const RunConfig& cfg) {
    if (cfg.output_path.empty()) {
        throw std::invalid_argument("config: output.path missing (or pass --out)");
    }
}

std::string solve_result_text(const ModelParams& params, const Equilibrium& eq) {
    const ThresholdRule rule = equilibrium_threshold_rule(params, eq);
    std::ostringstream out;
    out << "converged=" << (eq.converged ? "true" : "false") << "\n"
        << "x_empty=" << fmt17(eq.x_empty) << "\n"
        << "y1=" << fmt17(eq.interval.y1) << "\n"
        << "y2=" << fmt17(eq.interval.y2) << "\n"
        << "residual_marginal_receiver=" << fmt17(eq.residual_marginal_receiver) << "\n"
        << "residual_threshold_match=" << fmt17(eq.residual_threshold_match) << "\n"
        << "residual_indifference=" << fmt17(eq.residual_indifference) << "\n"
        << "iterations=" << eq.iterations << "\n"
        << "multiple_roots=" << (eq.multiple_roots ? "true" : "false") << "\n"
        << "candidate_roots=" << eq.candidate_roots.size() << "\n"
        << "conflict=" << fmt17(conflict_of_interests(params)) << "\n"
        << "xhat_slope=" << fmt17(rule.slope) << "\n"
        << "xhat_intercept=" << fmt17(rule.intercept) << "\n"
        << "xstar_slope=" << fmt17(rule.slope) << "\n"
        << "xstar_intercept=" << fmt17(rule.intercept - conflict_of_interests(params)) << "\n";
    return out.str();
}

std::string sanitize_status(std::string status) {
    std::replace(status.begin(), status.end(), ',', ';');
    std::replace(status.begin(), status.end(), '\n', ' ');
    return status;
}

}  // namespace

int cmd_solve(const RunConfig& cfg) {
    require_output_path(cfg);
    const Equilibrium eq = solve_equilibrium(cfg.params, cfg.solver);
    write_text_file(cfg.output_path, solve_result_text(cfg.params, eq));
    if (!eq.converged) {
        std::fprintf(stderr,
                     "solve: no convergence (residuals %.3g / %.3g / %.3g); "
                     "expected when p is close to 1\n",
                     eq.residual_marginal_receiver, eq.residual_threshold_match,
                     eq.residual_indifference);
        return 2;
    }
    return 0;
}

int cmd_figure(const RunConfig& cfg) {
    require_output_path(cfg);
    const Equilibrium eq = solve_equilibrium(cfg.params, cfg.solver);
    if (!eq.converged) {
        std::fprintf(stderr, "figure: equilibrium solve did not converge\n");
        return 2;
    }

    double y_min, y_max;
    if (cfg.figure.y_min) {
        y_min = *cfg.figure.y_min;
        y_max = *cfg.figure.y_max;
    } else {
        const double pad = std::max(eq.interval.width() / 2.0, marginal_y(cfg.params).sd());
        y_min = eq.interval.lower() - pad;
        y_max = eq.interval.upper() + pad;
    }

    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(cfg.figure.y_points) + 2);
    for (int i = 0; i < cfg.figure.y_points; ++i) {
        grid.push_back(y_min + (y_max - y_min) * i / (cfg.figure.y_points - 1));
    }
    if (cfg.figure.include_bounds) {
        grid.push_back(eq.interval.lower());
        grid.push_back(eq.interval.upper());
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    const InterimGainCurve curve = interim_gain_curve(cfg.params, eq, grid);
    std::ostringstream out;
    out << "y,sender_gain,aggregate_action_gain,welfare_gain,in_interval\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
        out << fmt17(curve.y_grid[i]) << ',' << fmt17(curve.sender_gain[i]) << ','
            << fmt17(curve.aggregate_action_gain[i]) << ',' << fmt17(curve.welfare_gain[i])
            << ',' << (eq.interval.contains(curve.y_grid[i]) ? 1 : 0) << "\n";
    }
    write_text_file(cfg.output_path, out.str());
    return 0;
}

int cmd_sweep(const RunConfig& cfg) {
    require_output_path(cfg);
    std::vector<double> grid;
    if (cfg.sweep.explicit_grid()) {
        grid.reserve(static_cast<std::size_t>(cfg.sweep.b_points));
        for (int i = 0; i < cfg.sweep.b_points; ++i) {
            grid.push_back(*cfg.sweep.b_min +
                           (*cfg.sweep.b_max - *cfg.sweep.b_min) * i / (cfg.sweep.b_points - 1));
        }
    } else {
        grid = default_bias_grid(cfg.params);
    }

    const auto rows = bias_sweep(cfg.params, grid, cfg.solver);
    std::ostringstream out;
    out << "b,status,x_empty,y1,y2,width,v_total,v_full_disclosure,misinterpretation_gain,"
           "concealment_gain_total,identity_residual\n";
    for (const auto& row : rows) {
        out << fmt17(row.b) << ',' << sanitize_status(row.status);
        if (row.ok()) {
            out << ',' << fmt17(row.eq.x_empty) << ',' << fmt17(row.eq.interval.y1) << ','
                << fmt17(row.eq.interval.y2) << ',' << fmt17(row.eq.interval.width()) << ','
                << fmt17(row.report.v_total) << ',' << fmt17(row.report.v_full_disclosure) << ','
                << fmt17(row.report.misinterpretation_gain) << ','
                << fmt17(row.report.concealment_gain_total) << ','
                << fmt17(row.report.identity_residual) << "\n";
        } else {
            out << ",,,,,,,,,\n";
        }
    }
    write_text_file(cfg.output_path, out.str());
    return 0;
}

int cmd_simulate(const RunConfig& cfg) {
    require_output_path(cfg);
    const Equilibrium eq = solve_equilibrium(cfg.params, cfg.solver);
    if (!eq.converged) {
        std::fprintf(stderr, "simulate: equilibrium solve did not converge\n");
        return 2;
    }
    const SimOutcome sim = simulate(cfg.params, eq, cfg.simulate.draws, cfg.simulate.receivers,
                                    cfg.simulate.seed, cfg.threads);
    const double analytic_welfare = ex_ante_welfare(cfg.params, eq);
    const double analytic_action = ex_ante_action(cfg.params, eq);

    std::ostringstream out;
    out << "draws=" << sim.draws << "\n"
        << "receivers_per_draw=" << sim.receivers_per_draw << "\n"
        << "seed=" << sim.seed << "\n"
        << "mean_welfare=" << fmt17(sim.mean_welfare) << "\n"
        << "se_welfare=" << fmt17(sim.se_welfare) << "\n"
        << "mean_aggregate_action=" << fmt17(sim.mean_aggregate_action) << "\n"
        << "se_action=" << fmt17(sim.se_action) << "\n"
        << "analytic_welfare=" << fmt17(analytic_welfare) << "\n"
        << "analytic_action=" << fmt17(analytic_action) << "\n"
        << "z_welfare=" << fmt17((sim.mean_welfare - analytic_welfare) / sim.se_welfare) << "\n"
        << "z_action=" << fmt17((sim.mean_aggregate_action - analytic_action) / sim.se_action)
        << "\n";
    write_text_file(cfg.output_path, out.str());
    return 0;
}

}  // namespace pubcomm

#pragma once
// Full-game fixed point {x(empty), y1, y2}: the matching bound y2 is closed
// form in x, the indifference bound y1 is a 1-D root, so the whole system
// collapses to scalar root finding in x.

#include <optional>
#include <vector>

#include "pubcomm/continuation.hpp"
#include "pubcomm/payoff.hpp"

namespace pubcomm {

struct SolverConfig {
    double x_tol = 1e-10;
    double y_tol = 1e-10;
    double residual_tol = 1e-9;  // convergence check on the three residuals
    int max_iterations = 200;
    int scan_points = 512;
    BayesForm bayes_form = BayesForm::standard;
};

struct Equilibrium {
    double x_empty = 0.0;
    NonDisclosureInterval interval;

    // Marginal-receiver posterior mean at silence, threshold matching at y2,
    // sender indifference at y1.
    double residual_marginal_receiver = 0.0;
    double residual_threshold_match = 0.0;
    double residual_indifference = 0.0;

    int iterations = 0;
    bool converged = false;
    bool multiple_roots = false;
    std::vector<double> candidate_roots;  // every root the scan located
};

// Concealment interval the sender best-responds with when receivers play
// x_empty after silence: y2 = -(beta*x_empty + gamma*mu)/alpha exactly, y1 by
// bracketed root finding on the indifference margin, on the side of y2 given
// by sign(r+b). r+b = 0 returns the degenerate interval y1 = y2.
NonDisclosureInterval interval_given_x(const ModelParams& params, double x_empty,
                                       double y_tol = 1e-12);

// Solves the triple. Throws std::invalid_argument for r+b = 0 ("degenerate
// conflict"). A failed bracket or residual check comes back with
// converged = false rather than a throw; that is the expected outcome when p
// is close to 1 and no equilibrium exists. When the scan finds several roots
// the one closest to the full-disclosure threshold is returned and
// multiple_roots is set.
Equilibrium solve_equilibrium(const ModelParams& params, const SolverConfig& config = {});

// Sender's equilibrium communication: nullopt (silence) if y is absent or
// strictly inside the interval, otherwise the signal itself.
std::optional<double> disclosure_rule(const Equilibrium& eq, std::optional<double> y);

// Receiver policy induced by the equilibrium, with literal beliefs for any
// disclosed message, on or off path.
ThresholdRule equilibrium_threshold_rule(const ModelParams& params, const Equilibrium& eq);

}  // namespace pubcomm

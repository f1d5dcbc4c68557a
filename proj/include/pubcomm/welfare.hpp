#pragma once
// Ex-ante receiver welfare, the full-disclosure benchmark, the decomposition
// into misinterpretation and concealment gains, the per-signal interim gain
// curves, and bias sweeps.

#include <string>
#include <vector>

#include "pubcomm/equilibrium.hpp"

namespace pubcomm {

struct WelfareReport {
    double v_total = 0.0;
    double v_full_disclosure = 0.0;
    double misinterpretation_gain = 0.0;
    double concealment_gain_total = 0.0;
    double identity_residual = 0.0;  // v_total - (benchmark + two gains)
};

// Per-signal pieces of the concealment welfare gain: the sender's payoff gain
// from silence, the induced rise in expected aggregate action, and their
// bias-weighted difference (the receivers' welfare gain at that y).
struct InterimGainCurve {
    std::vector<double> y_grid;
    std::vector<double> sender_gain;            // Pi(x_empty, y) - Pi(x(y), y)
    std::vector<double> aggregate_action_gain;  // F(x(y)|y) - F(x_empty|y)
    std::vector<double> welfare_gain;           // sender_gain - b * aggregate_action_gain
};

// Expected (r + theta) * A under equilibrium play: silence pools the
// uninformed sender with concealed signals, everything else is disclosed.
double ex_ante_welfare(const ModelParams& params, const Equilibrium& eq);

// Expected aggregate action under equilibrium play (same weighting with the
// payoff factor dropped); used for simulation cross-checks.
double ex_ante_action(const ModelParams& params, const Equilibrium& eq);

// Benchmark with a nonstrategic sender who always discloses when informed.
double full_disclosure_welfare(const ModelParams& params);

// Both welfare levels plus the two gain terms by direct quadrature; the
// identity residual should vanish up to quadrature tolerance.
WelfareReport welfare_decomposition(const ModelParams& params, const Equilibrium& eq);

InterimGainCurve interim_gain_curve(const ModelParams& params, const Equilibrium& eq,
                                    const std::vector<double>& y_grid);

// Concealment welfare gain integrated from the interim curve against the
// marginal law of y; an independent route to concealment_gain_total.
double concealment_gain_total_from_curve(const ModelParams& params, const Equilibrium& eq);

// Direct theta-quadrature of the receivers' welfare change when signal y is
// concealed instead of disclosed; equals the curve's welfare_gain at y.
double interim_welfare_gain_by_quadrature(const ModelParams& params, const Equilibrium& eq,
                                          double y);

struct BiasSweepRow {
    double b = 0.0;
    std::string status;  // "ok" or the failure reason
    Equilibrium eq;
    WelfareReport report;
    bool ok() const { return status == "ok"; }
};

// Solve equilibrium and welfare across a bias grid; per-point failures are
// recorded in the row status and the sweep continues.
std::vector<BiasSweepRow> bias_sweep(const ModelParams& base, const std::vector<double>& b_grid,
                                     const SolverConfig& config = {});

// 41 points spanning the bias range [-r, r] with the degenerate point b = -r
// trimmed by 1e-3. Throws for r = 0 where no such span exists.
std::vector<double> default_bias_grid(const ModelParams& params);

}  // namespace pubcomm

#pragma once
// Closed-form interim sender payoff and the pieces of the disclose-vs-conceal
// comparison that pin down the concealment interval.
//
// Sign convention, fixed once: concealment_gain(x_empty, y) > 0 exactly when
// the sender strictly prefers silence, i.e. y strictly inside the
// non-disclosure interval.

#include "pubcomm/beliefs.hpp"
#include "pubcomm/continuation.hpp"

namespace pubcomm {

// Pi(x, y, b) = (r + b + theta_bar(y)) * (1 - F(x|y)) + f(x|y) / (alpha+gamma),
// the sender's interim payoff when every receiver plays cutoff x and the
// sender observed y. F, f are the predictive law of a receiver's signal.
double sender_interim_payoff(const ModelParams& params, double x, double y);

// zeta(x, y) = [f(x(y)|y) - f(x|y)] / [F(x(y)|y) - F(x|y)].
// The removable singularity at x = x(y) takes the L'Hopital value
// f'(x(y)|y)/f(x(y)|y) = precision * (theta_bar(y) - x(y)) = alpha*y + gamma*mu;
// a Taylor evaluation bridges the neighborhood where the raw ratio loses
// precision, and scaled Mills-ratio evaluation covers the deep tails.
double zeta(const ModelParams& params, double x, double y);

// (r + b + theta_bar(y)) - zeta(x_empty, y)/(alpha+gamma). Strictly positive
// between the indifference bound and beyond the matching bound; its root in y
// is the indifference bound of the concealment interval.
double disclosure_indifference(const ModelParams& params, double x_empty, double y);

// Pi(x_empty, y) - Pi(x(y), y) in factored form:
//   [F(x(y)|y) - F(x_empty|y)] * disclosure_indifference(x_empty, y).
double concealment_gain(const ModelParams& params, double x_empty, double y);

struct PayoffDiagnostics {
    double pi_disclose;           // Pi at x(y)
    double pi_conceal;            // Pi at x_empty
    double net_concealment_gain;  // pi_conceal - pi_disclose
};

PayoffDiagnostics payoff_diagnostics(const ModelParams& params, double x_empty, double y);

// F(b|belief) - F(a|belief) evaluated through whichever of the cdf/survival
// pair avoids cancellation.
double cdf_difference(const GaussianBelief& belief, double a, double b);

}  // namespace pubcomm

#pragma once
// Receiver best responses after each message: the disclosed-message threshold
// x(y), the silence threshold x(empty) for a given concealment interval, and
// the threshold the sender would impose if she could dictate play.

#include <optional>

#include "pubcomm/beliefs.hpp"

namespace pubcomm {

// Which form of the silence posterior ties the uninformed and the concealing
// sender together. `standard` is the textbook Bayes posterior over the pooled
// event; `paper_literal` weights the uninformed term by the probability that
// a signal falls in the concealment interval after clearing denominators.
// The two differ only when 0 < p < 1 and the interval is non-degenerate.
enum class BayesForm { standard, paper_literal };

// x(y) = -(alpha*y + gamma*mu)/beta; the marginal receiver at this cutoff has
// posterior mean zero after a disclosed y.
double disclosed_threshold(const ModelParams& params, double y);

// Cutoff used when silence carries no strategic content: -gamma*mu/beta.
double full_disclosure_threshold(const ModelParams& params);

// x*(y,b) = -(alpha*y + gamma*mu + (alpha+beta+gamma)(r+b))/beta, the cutoff
// maximizing the sender's interim payoff.
double sender_optimal_threshold(const ModelParams& params, double y);

// Delta = x(y) - x*(y,b) = (alpha+beta+gamma)(r+b)/beta, independent of y.
double conflict_of_interests(const ModelParams& params);

// Signal interval concealed by the sender. Fields carry fixed roles rather
// than an ordering: y2 is the matching bound where x(y2) equals the silence
// threshold, y1 is the indifference bound where disclosing and concealing pay
// the same. y1 < y2 when r+b > 0; the order flips when r+b < 0.
struct NonDisclosureInterval {
    double y1 = 0.0;
    double y2 = 0.0;

    double lower() const { return y1 < y2 ? y1 : y2; }
    double upper() const { return y1 < y2 ? y2 : y1; }
    double width() const { return upper() - lower(); }
    bool empty() const { return y1 == y2; }
    bool contains(double y) const { return y > lower() && y < upper(); }  // open interval
};

// Receiver switching policy: acts risky iff the private signal exceeds the
// threshold for the observed message. Disclosed messages are believed
// literally, including off-path ones inside the concealment interval.
struct ThresholdRule {
    double slope = 0.0;      // -alpha/beta
    double intercept = 0.0;  // -gamma*mu/beta
    double x_empty = 0.0;

    double threshold_for(std::optional<double> message) const {
        return message ? intercept + slope * *message : x_empty;
    }
};

ThresholdRule threshold_rule(const ModelParams& params, double x_empty);

// Posterior mean of theta for a receiver with signal x hearing silence, when
// silence pools the uninformed sender with concealed y in the interval.
double silence_posterior_mean(const ModelParams& params, double x,
                              const NonDisclosureInterval& interval,
                              BayesForm form = BayesForm::standard);

// Root x of silence_posterior_mean(params, x, interval) = 0. Throws
// NoRootError when the bracketing scan finds no sign change even after
// geometric window expansion (pathological parameters).
double empty_message_threshold(const ModelParams& params, const NonDisclosureInterval& interval,
                               BayesForm form = BayesForm::standard, double x_tol = 1e-12);

}  // namespace pubcomm

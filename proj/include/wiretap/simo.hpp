#pragma once

#include "wiretap/channel.hpp"

#include <optional>
#include <utility>

// Exact power control for single-transmit-antenna users. All solvers
// require T1 = 1 (and T2 = 1 where user 2 participates) and throw
// std::invalid_argument otherwise. Rates are recomputed through the
// channel-core formulas at the returned operating point.

namespace wiretap {

struct SimoSolution {
    double f1 = 0.0;
    double f2 = 0.0;
    double rs = 0.0;
};

/// Coefficients of the quadratic derivative numerator that drives the
/// GN-jamming case analysis. p0 is the smaller-root candidate and is only
/// present when the discriminant is positive and a != 0.
struct QuadraticCoefficients {
    double a = 0.0, b = 0.0, c = 0.0;
    double alpha2 = 0.0, alpha2_hat = 0.0;
    double beta2 = 0.0, beta2_hat = 0.0;
    std::optional<double> p0;
};

struct Breakpoint {
    double p0_prime = 0.0;
};

enum class SitCjCase { Hat, Tilde, Split };

/// No-jamming power control: full power when Bob's channel gain beats
/// Eve's, zero otherwise.
SimoSolution solve_no_jamming_simo(const ChannelRealization& ch, double p1);

QuadraticCoefficients gn_quadratic_coefficients(const ChannelRealization& ch,
                                                double p1);

/// GN-jamming power control: f1 = p1, f2 from the four-case quadratic
/// rule; ties between case candidates go to the smaller f2.
SimoSolution solve_gn_simo(const ChannelRealization& ch, double p1,
                           double p2);

/// Maximizer of the hat secrecy component over [p1_lb, p1_ub] x [0, p2]:
/// f2 = p2 and f1 at whichever interval end the sign condition selects.
std::pair<double, double> solve_subproblem_hat(const ChannelRealization& ch,
                                               double p1_lb, double p1_ub,
                                               double p2);

/// Maximizer of the tilde secrecy component over the same box: best of the
/// four corners, ties toward larger f1 then smaller f2.
std::pair<double, double> solve_subproblem_tilde(const ChannelRealization& ch,
                                                 double p1_lb, double p1_ub,
                                                 double p2);

/// Which of the three case branches applies at budget p1; boundary
/// equalities route to the earlier branch.
SitCjCase sit_cj_case(const ChannelRealization& ch, double p1);

/// The interval split point where the hat and tilde components cross
/// (case Split only). Returns nullopt when the defining equation is
/// degenerate or the root falls outside (0, p1).
std::optional<Breakpoint> sit_cj_breakpoint(const ChannelRealization& ch,
                                            double p1);

/// SIT-CJ power control via the case split, with the no-jamming operating
/// point always kept as a fallback candidate.
SimoSolution solve_sit_cj_simo(const ChannelRealization& ch, double p1,
                               double p2);

}  // namespace wiretap

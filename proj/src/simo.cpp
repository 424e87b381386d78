#include "wiretap/simo.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include <array>
#include <cmath>
#include <vector>

namespace wiretap {

namespace {

void require_simo1(const ChannelRealization& ch) {
    if (ch.t1 != 1)
        throw std::invalid_argument("solver requires a single-antenna user 1");
}

void require_simo2(const ChannelRealization& ch) {
    require_simo1(ch);
    if (ch.t2 != 1)
        throw std::invalid_argument("solver requires a single-antenna user 2");
}

// x^H (p * y y^H + I)^-1 x for column vectors x, y.
double shrunk_quadform(const Vector& x, const Vector& y, double p) {
    const int n = static_cast<int>(x.rows());
    Matrix m = p * (y * y.adjoint());
    m += Matrix::Identity(n, n);
    Eigen::LLT<Matrix> llt(m);
    return std::real(x.dot(llt.solve(x)));
}

InputCovariance scalar_cov(double f, double budget) {
    Matrix m(1, 1);
    m(0, 0) = f;
    return InputCovariance(std::move(m), budget);
}

}  // namespace

SimoSolution solve_no_jamming_simo(const ChannelRealization& ch, double p1) {
    require_simo1(ch);
    if (p1 < 0) throw std::invalid_argument("p1 must be nonnegative");
    const Vector h1 = ch.h1.col(0);
    const Vector g1 = ch.g1.col(0);
    SimoSolution sol;
    sol.f1 = h1.squaredNorm() > g1.squaredNorm() ? p1 : 0.0;
    sol.f2 = 0.0;
    sol.rs = rate_no_jamming(ch, scalar_cov(sol.f1, p1)).rs;
    return sol;
}

QuadraticCoefficients gn_quadratic_coefficients(const ChannelRealization& ch,
                                                double p1) {
    require_simo2(ch);
    const Vector h1 = ch.h1.col(0), h2 = ch.h2.col(0);
    const Vector g1 = ch.g1.col(0), g2 = ch.g2.col(0);
    QuadraticCoefficients qc;
    qc.alpha2 = h2.squaredNorm();
    qc.alpha2_hat = shrunk_quadform(h2, h1, p1);
    qc.beta2 = g2.squaredNorm();
    qc.beta2_hat = shrunk_quadform(g2, g1, p1);
    qc.a = (qc.alpha2_hat - qc.alpha2) * qc.beta2 * qc.beta2_hat -
           (qc.beta2_hat - qc.beta2) * qc.alpha2 * qc.alpha2_hat;
    qc.b = 2.0 * (qc.alpha2_hat * qc.beta2 - qc.alpha2 * qc.beta2_hat);
    qc.c = qc.alpha2_hat - qc.alpha2 - qc.beta2_hat + qc.beta2;
    const double disc = qc.b * qc.b - 4.0 * qc.a * qc.c;
    if (disc > 0.0 && qc.a != 0.0)
        qc.p0 = (-qc.b - std::sqrt(disc)) / (2.0 * qc.a);
    return qc;
}

SimoSolution solve_gn_simo(const ChannelRealization& ch, double p1,
                           double p2) {
    require_simo2(ch);
    if (p1 < 0 || p2 < 0)
        throw std::invalid_argument("power budgets must be nonnegative");
    const QuadraticCoefficients qc = gn_quadratic_coefficients(ch, p1);

    std::vector<double> candidates;
    const double ratio = qc.b != 0.0 ? -qc.c / qc.b : 0.0;
    if (qc.a == 0.0 && qc.b < 0.0 && 0.0 < ratio && ratio < p2) {
        candidates = {ratio};
    } else if (qc.a > 0.0 && qc.p0 && 0.0 < *qc.p0 && *qc.p0 < p2) {
        candidates = {*qc.p0, p2};
    } else if (qc.a < 0.0 && qc.p0 && 0.0 < *qc.p0 && *qc.p0 < p2) {
        candidates = {0.0, *qc.p0};
    } else {
        candidates = {0.0, p2};
    }

    SimoSolution sol;
    sol.f1 = p1;
    const InputCovariance f1 = scalar_cov(p1, p1);
    double best = -1.0;
    for (double f2 : candidates) {  // ascending, so ties keep the smaller f2
        const double rs = rate_gn_jamming(ch, f1, scalar_cov(f2, p2)).rs;
        if (rs > best) {
            best = rs;
            sol.f2 = f2;
        }
    }
    sol.rs = best;
    return sol;
}

std::pair<double, double> solve_subproblem_hat(const ChannelRealization& ch,
                                               double p1_lb, double p1_ub,
                                               double p2) {
    require_simo2(ch);
    if (!(0.0 <= p1_lb && p1_lb < p1_ub))
        throw std::invalid_argument("empty f1 interval");
    const Vector h1 = ch.h1.col(0), g1 = ch.g1.col(0), g2 = ch.g2.col(0);
    const double bob = h1.squaredNorm();
    const double eve = shrunk_quadform(g1, g2, p2);
    return {bob > eve ? p1_ub : p1_lb, p2};
}

std::pair<double, double> solve_subproblem_tilde(const ChannelRealization& ch,
                                                 double p1_lb, double p1_ub,
                                                 double p2) {
    require_simo2(ch);
    if (!(0.0 <= p1_lb && p1_lb < p1_ub))
        throw std::invalid_argument("empty f1 interval");
    // Corner order implements the tie-break: larger f1 first, then smaller f2.
    const std::array<std::pair<double, double>, 4> corners = {
        {{p1_ub, 0.0}, {p1_ub, p2}, {p1_lb, 0.0}, {p1_lb, p2}}};
    std::pair<double, double> best_pt = corners[0];
    double best = -1.0;
    for (const auto& [f1, f2] : corners) {
        const double val =
            secrecy_components(ch, scalar_cov(f1, p1_ub), scalar_cov(f2, p2))
                .r_tilde;
        if (val > best) {
            best = val;
            best_pt = {f1, f2};
        }
    }
    return best_pt;
}

SitCjCase sit_cj_case(const ChannelRealization& ch, double p1) {
    require_simo2(ch);
    const Vector h1 = ch.h1.col(0), h2 = ch.h2.col(0), g2 = ch.g2.col(0);
    const double beta2 = g2.squaredNorm();
    const double alpha2 = h2.squaredNorm();
    const double alpha2_hat = shrunk_quadform(h2, h1, p1);
    if (beta2 <= alpha2_hat) return SitCjCase::Hat;
    if (beta2 >= alpha2) return SitCjCase::Tilde;
    return SitCjCase::Split;
}

std::optional<Breakpoint> sit_cj_breakpoint(const ChannelRealization& ch,
                                            double p1) {
    require_simo2(ch);
    const Vector h1 = ch.h1.col(0), h2 = ch.h2.col(0), g2 = ch.g2.col(0);
    const double alpha1 = h1.squaredNorm();
    if (alpha1 <= 0.0) return std::nullopt;

    // Eigenbasis of h1 h1^H, ascending, so the h1-aligned vector is last.
    Eigen::SelfAdjointEigenSolver<Matrix> es(h1 * h1.adjoint());
    const Vector h2_hat = es.eigenvectors().adjoint() * h2;
    const int b = ch.b;
    double head = 0.0;
    for (int i = 0; i + 1 < b; ++i) head += std::norm(h2_hat(i));
    const double tail = std::norm(h2_hat(b - 1));

    const double denom = g2.squaredNorm() - head;
    if (denom <= 0.0) return std::nullopt;
    const double p0p = tail / (alpha1 * denom) - 1.0 / alpha1;
    if (!(0.0 < p0p && p0p < p1)) return std::nullopt;
    return Breakpoint{p0p};
}

SimoSolution solve_sit_cj_simo(const ChannelRealization& ch, double p1,
                               double p2) {
    require_simo2(ch);
    if (p1 < 0 || p2 < 0)
        throw std::invalid_argument("power budgets must be nonnegative");

    std::vector<std::pair<double, double>> candidates;
    if (p1 > 0.0) {
        switch (sit_cj_case(ch, p1)) {
            case SitCjCase::Hat:
                candidates.push_back(solve_subproblem_hat(ch, 0.0, p1, p2));
                break;
            case SitCjCase::Tilde:
                candidates.push_back(solve_subproblem_tilde(ch, 0.0, p1, p2));
                break;
            case SitCjCase::Split: {
                const auto bp = sit_cj_breakpoint(ch, p1);
                if (bp) {
                    candidates.push_back(
                        solve_subproblem_hat(ch, 0.0, bp->p0_prime, p2));
                    candidates.push_back(
                        solve_subproblem_tilde(ch, bp->p0_prime, p1, p2));
                } else {
                    // Degenerate split point; cover the whole interval twice.
                    candidates.push_back(
                        solve_subproblem_hat(ch, 0.0, p1, p2));
                    candidates.push_back(
                        solve_subproblem_tilde(ch, 0.0, p1, p2));
                }
                break;
            }
        }
    }
    candidates.emplace_back(solve_no_jamming_simo(ch, p1).f1, 0.0);

    SimoSolution sol;
    double best = -1.0;
    for (const auto& [f1, f2] : candidates) {
        const double rs =
            rate_sit_cj(ch, scalar_cov(f1, p1), scalar_cov(f2, p2)).rs;
        if (rs > best) {
            best = rs;
            sol.f1 = f1;
            sol.f2 = f2;
        }
    }
    sol.rs = best;
    return sol;
}

}  // namespace wiretap

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

// Two-user Gaussian vector wiretap channel: user 1 sends secret + open
// messages, user 2 is a cooperative jammer (Gaussian noise or decodable
// open messages). Bob has B antennas, Eve has E, noise is unit at both.
// All public rates are in bits per channel use.

namespace wiretap {

using cxd = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

enum class Scheme { No, GN, SitCj };

const char* scheme_name(Scheme s);

/// The four channel matrices of one realization, unit-noise normalized.
/// h1: B x T1 (user1 -> Bob), h2: B x T2, g1: E x T1 (user1 -> Eve), g2: E x T2.
struct ChannelRealization {
    Matrix h1, h2, g1, g2;
    int b = 0, e = 0, t1 = 0, t2 = 0;

    ChannelRealization() = default;
    ChannelRealization(Matrix h1_, Matrix h2_, Matrix g1_, Matrix g2_);
};

/// Hermitian PSD transmit covariance with a trace budget (linear power).
/// The matrix is symmetrized on entry; violations beyond tolerance throw.
class InputCovariance {
  public:
    InputCovariance(Matrix f, double budget);

    /// Zero covariance of dimension t with the given budget.
    static InputCovariance zero(int t, double budget);
    /// Uniform diagonal p/t * I (full budget split over antennas).
    static InputCovariance uniform(int t, double budget);

    const Matrix& f() const { return f_; }
    double budget() const { return budget_; }
    int dim() const { return static_cast<int>(f_.rows()); }

  private:
    Matrix f_;
    double budget_;
};

/// Upper bounds on user 1's secrecy rate in the two achievable regions,
/// each clamped at zero.
struct SecrecyComponents {
    double r_hat = 0.0;
    double r_tilde = 0.0;
    double r_bar = 0.0;
};

/// Secrecy rate and max open-message sum rate for one scheme at one
/// operating point. ro is forced to zero whenever rs is zero.
struct RateReport {
    Scheme scheme = Scheme::No;
    double rs = 0.0;
    double ro = 0.0;
};

struct RateTriple {
    double r1s = 0.0;
    double r1o = 0.0;
    double r2o = 0.0;
};

struct RegionMembership {
    bool in_r1 = false;
    bool in_r2 = false;
    bool in_r3 = false;
    bool any() const { return in_r1 || in_r2 || in_r3; }
};

/// log2|h f h^H n^-1 + I|, computed via Cholesky whitening (no explicit
/// inverse of n). Throws std::domain_error if n is not positive definite,
/// std::invalid_argument on dimension mismatch.
double weighted_logdet_rate(const Matrix& h, const InputCovariance& f,
                            const Matrix& n);

/// log2|h1 f1 h1^H + h2 f2 h2^H + I|, the two-user sum-rate log-det.
double sum_logdet_rate(const Matrix& h1, const InputCovariance& f1,
                       const Matrix& h2, const InputCovariance& f2);

SecrecyComponents secrecy_components(const ChannelRealization& ch,
                                     const InputCovariance& f1,
                                     const InputCovariance& f2);

RateReport rate_no_jamming(const ChannelRealization& ch,
                           const InputCovariance& f1);

RateReport rate_gn_jamming(const ChannelRealization& ch,
                           const InputCovariance& f1,
                           const InputCovariance& f2);

RateReport rate_sit_cj(const ChannelRealization& ch,
                       const InputCovariance& f1,
                       const InputCovariance& f2);

/// All Gaussian mutual-information terms needed by the region inequalities.
struct MutualInfo {
    double i_x1_y_given_x2 = 0.0;  // I(X1;Y|X2)
    double i_x2_y_given_x1 = 0.0;  // I(X2;Y|X1)
    double i_x12_y = 0.0;          // I(X1,X2;Y)
    double i_x1_z = 0.0;           // I(X1;Z)
    double i_x2_z = 0.0;           // I(X2;Z)
    double i_x12_z = 0.0;          // I(X1,X2;Z)
    double i_x1_z_given_x2 = 0.0;  // I(X1;Z|X2)
    double i_x2_z_given_x1 = 0.0;  // I(X2;Z|X1)
};

MutualInfo mutual_info(const ChannelRealization& ch, const InputCovariance& f1,
                       const InputCovariance& f2);

/// Membership of a rate triple in the three achievable sub-regions,
/// checked with 1e-9 bits of slack so boundary points test as members.
RegionMembership region_membership(const ChannelRealization& ch,
                                   const InputCovariance& f1,
                                   const InputCovariance& f2,
                                   const RateTriple& rates);

}  // namespace wiretap

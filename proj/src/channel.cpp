#include "wiretap/channel.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include <cmath>

namespace wiretap {

namespace {

constexpr double kLog2e = 1.4426950408889634074;  // 1/ln(2)

// [x]+ with tiny negative values from cancellation treated as zero.
double clamp_rate(double x) { return x > 0.0 ? x : 0.0; }

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

bool finite(const Matrix& m) { return m.allFinite(); }

// log2 det of a Hermitian positive definite matrix via Cholesky.
// Throws std::domain_error if the factorization fails.
double log2det_hpd(const Matrix& s, const char* what) {
    Eigen::LLT<Matrix> llt(s);
    if (llt.info() != Eigen::Success)
        throw std::domain_error(what);
    double acc = 0.0;
    const auto& l = llt.matrixLLT();
    for (Eigen::Index i = 0; i < l.rows(); ++i)
        acc += std::log(l(i, i).real());
    return 2.0 * acc * kLog2e;
}

}  // namespace

const char* scheme_name(Scheme s) {
    switch (s) {
        case Scheme::No: return "no";
        case Scheme::GN: return "gn";
        case Scheme::SitCj: return "sitcj";
    }
    return "?";
}

ChannelRealization::ChannelRealization(Matrix h1_, Matrix h2_, Matrix g1_,
                                       Matrix g2_)
    : h1(std::move(h1_)), h2(std::move(h2_)), g1(std::move(g1_)),
      g2(std::move(g2_)) {
    b = static_cast<int>(h1.rows());
    e = static_cast<int>(g1.rows());
    t1 = static_cast<int>(h1.cols());
    t2 = static_cast<int>(h2.cols());
    require(b >= 1 && e >= 1 && t1 >= 1 && t2 >= 1,
            "channel matrices must be non-empty");
    require(h2.rows() == b, "h1/h2 row count mismatch");
    require(g2.rows() == e, "g1/g2 row count mismatch");
    require(g1.cols() == t1, "h1/g1 column count mismatch");
    require(g2.cols() == t2, "h2/g2 column count mismatch");
    require(finite(h1) && finite(h2) && finite(g1) && finite(g2),
            "channel matrices must be finite");
}

InputCovariance::InputCovariance(Matrix f, double budget) : budget_(budget) {
    require(f.rows() == f.cols(), "covariance must be square");
    require(f.allFinite(), "covariance must be finite");
    require(budget >= 0.0, "power budget must be nonnegative");
    const double scale = 1.0 + f.norm();
    if ((f - f.adjoint().eval()).norm() > 1e-10 * scale)
        throw std::invalid_argument("covariance is not Hermitian");
    f_ = 0.5 * (f + f.adjoint().eval());
    const double tr = f_.trace().real();
    if (tr > budget * (1.0 + 1e-9))
        throw std::invalid_argument("covariance trace exceeds power budget");
    Eigen::SelfAdjointEigenSolver<Matrix> es(f_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10 * std::max(tr, 1e-300))
        throw std::invalid_argument("covariance is not positive semidefinite");
}

InputCovariance InputCovariance::zero(int t, double budget) {
    return InputCovariance(Matrix::Zero(t, t), budget);
}

InputCovariance InputCovariance::uniform(int t, double budget) {
    Matrix f = (budget / t) * Matrix::Identity(t, t);
    return InputCovariance(std::move(f), budget);
}

double weighted_logdet_rate(const Matrix& h, const InputCovariance& f,
                            const Matrix& n) {
    require(h.cols() == f.f().rows(), "h/f dimension mismatch");
    require(n.rows() == n.cols() && n.rows() == h.rows(),
            "n must be square with h's row count");
    Eigen::LLT<Matrix> llt(0.5 * (n + n.adjoint().eval()));
    if (llt.info() != Eigen::Success)
        throw std::domain_error("noise covariance is not positive definite");
    // Whiten: |h f h^H n^-1 + I| = |m f m^H + I| with m = L^-1 h.
    Matrix m = llt.matrixL().solve(h);
    Matrix s = m * f.f() * m.adjoint();
    s = 0.5 * (s + s.adjoint().eval());
    s += Matrix::Identity(s.rows(), s.cols());
    return clamp_rate(log2det_hpd(s, "whitened rate matrix not PD"));
}

double sum_logdet_rate(const Matrix& h1, const InputCovariance& f1,
                       const Matrix& h2, const InputCovariance& f2) {
    require(h1.rows() == h2.rows(), "receiver dimension mismatch");
    require(h1.cols() == f1.f().rows() && h2.cols() == f2.f().rows(),
            "h/f dimension mismatch");
    Matrix s = h1 * f1.f() * h1.adjoint() + h2 * f2.f() * h2.adjoint();
    s = 0.5 * (s + s.adjoint().eval());
    s += Matrix::Identity(s.rows(), s.cols());
    return clamp_rate(log2det_hpd(s, "sum rate matrix not PD"));
}

namespace {

void check_dims(const ChannelRealization& ch, const InputCovariance& f1,
                const InputCovariance& f2) {
    require(f1.dim() == ch.t1, "f1 dimension does not match channel");
    require(f2.dim() == ch.t2, "f2 dimension does not match channel");
}

Matrix eye(int n) { return Matrix::Identity(n, n); }

}  // namespace

MutualInfo mutual_info(const ChannelRealization& ch, const InputCovariance& f1,
                       const InputCovariance& f2) {
    check_dims(ch, f1, f2);
    const Matrix ib = eye(ch.b), ie = eye(ch.e);
    const Matrix d2 = ch.g2 * f2.f() * ch.g2.adjoint() + ie;
    const Matrix d1 = ch.g1 * f1.f() * ch.g1.adjoint() + ie;
    MutualInfo mi;
    mi.i_x1_y_given_x2 = weighted_logdet_rate(ch.h1, f1, ib);
    mi.i_x2_y_given_x1 = weighted_logdet_rate(ch.h2, f2, ib);
    mi.i_x12_y = sum_logdet_rate(ch.h1, f1, ch.h2, f2);
    mi.i_x1_z = weighted_logdet_rate(ch.g1, f1, d2);
    mi.i_x2_z = weighted_logdet_rate(ch.g2, f2, d1);
    mi.i_x12_z = sum_logdet_rate(ch.g1, f1, ch.g2, f2);
    mi.i_x1_z_given_x2 = weighted_logdet_rate(ch.g1, f1, ie);
    mi.i_x2_z_given_x1 = weighted_logdet_rate(ch.g2, f2, ie);
    return mi;
}

SecrecyComponents secrecy_components(const ChannelRealization& ch,
                                     const InputCovariance& f1,
                                     const InputCovariance& f2) {
    check_dims(ch, f1, f2);
    const Matrix ib = eye(ch.b), ie = eye(ch.e);
    const Matrix d2 = ch.g2 * f2.f() * ch.g2.adjoint() + ie;
    SecrecyComponents sc;
    const double bob1 = weighted_logdet_rate(ch.h1, f1, ib);
    sc.r_hat = clamp_rate(bob1 - weighted_logdet_rate(ch.g1, f1, d2));
    sc.r_tilde = clamp_rate(sum_logdet_rate(ch.h1, f1, ch.h2, f2) -
                            sum_logdet_rate(ch.g1, f1, ch.g2, f2));
    sc.r_bar = clamp_rate(bob1 - weighted_logdet_rate(ch.g1, f1, ie));
    return sc;
}

RateReport rate_no_jamming(const ChannelRealization& ch,
                           const InputCovariance& f1) {
    require(f1.dim() == ch.t1, "f1 dimension does not match channel");
    const Matrix ib = eye(ch.b), ie = eye(ch.e);
    const double bob = weighted_logdet_rate(ch.h1, f1, ib);
    const double eve = weighted_logdet_rate(ch.g1, f1, ie);
    RateReport r;
    r.scheme = Scheme::No;
    r.rs = clamp_rate(bob - eve);
    r.ro = r.rs > 0.0 ? eve : 0.0;
    return r;
}

RateReport rate_gn_jamming(const ChannelRealization& ch,
                           const InputCovariance& f1,
                           const InputCovariance& f2) {
    check_dims(ch, f1, f2);
    const Matrix c2 = ch.h2 * f2.f() * ch.h2.adjoint() + eye(ch.b);
    const Matrix d2 = ch.g2 * f2.f() * ch.g2.adjoint() + eye(ch.e);
    const double bob = weighted_logdet_rate(ch.h1, f1, c2);
    const double eve = weighted_logdet_rate(ch.g1, f1, d2);
    RateReport r;
    r.scheme = Scheme::GN;
    r.rs = clamp_rate(bob - eve);
    r.ro = r.rs > 0.0 ? eve : 0.0;
    return r;
}

RateReport rate_sit_cj(const ChannelRealization& ch, const InputCovariance& f1,
                       const InputCovariance& f2) {
    const SecrecyComponents sc = secrecy_components(ch, f1, f2);
    RateReport r;
    r.scheme = Scheme::SitCj;
    r.rs = std::max(std::min(sc.r_hat, sc.r_tilde), sc.r_bar);
    r.ro = r.rs > 0.0
               ? clamp_rate(sum_logdet_rate(ch.h1, f1, ch.h2, f2) - r.rs)
               : 0.0;
    return r;
}

RegionMembership region_membership(const ChannelRealization& ch,
                                   const InputCovariance& f1,
                                   const InputCovariance& f2,
                                   const RateTriple& rates) {
    require(rates.r1s >= 0 && rates.r1o >= 0 && rates.r2o >= 0,
            "rates must be nonnegative");
    const MutualInfo mi = mutual_info(ch, f1, f2);
    const double tol = 1e-9;
    const double r1s = rates.r1s, r1o = rates.r1o, r2o = rates.r2o;
    auto le = [tol](double lhs, double rhs) { return lhs <= rhs + tol; };
    auto pos = [](double x) { return x > 0.0 ? x : 0.0; };

    RegionMembership m;
    m.in_r1 = le(r1s + r1o, mi.i_x1_y_given_x2) &&
              le(r2o, mi.i_x2_y_given_x1) &&
              le(r1s + r1o + r2o, mi.i_x12_y) &&
              le(r1s, pos(mi.i_x1_y_given_x2 - mi.i_x1_z)) &&
              le(r1s, pos(mi.i_x12_y - mi.i_x12_z)) &&
              le(r1s + r1o, pos(mi.i_x12_y - mi.i_x2_z)) &&
              le(r1s + r2o, pos(mi.i_x12_y - mi.i_x1_z));
    m.in_r2 = le(r1s + r1o, mi.i_x1_y_given_x2) &&
              le(r2o, mi.i_x2_y_given_x1) &&
              le(r1s + r1o + r2o, mi.i_x12_y) &&
              le(r1s, pos(mi.i_x1_y_given_x2 - mi.i_x1_z_given_x2)) &&
              le(r1s + r2o, pos(mi.i_x12_y - mi.i_x1_z_given_x2));
    m.in_r3 = r1s <= tol && le(r1o, mi.i_x1_y_given_x2) &&
              le(r2o, mi.i_x2_y_given_x1) && le(r1o + r2o, mi.i_x12_y);
    return m;
}

}  // namespace wiretap

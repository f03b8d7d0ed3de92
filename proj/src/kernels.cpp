#include "revo/kernels.hpp"

#include <cmath>
#include <stdexcept>

#include "revo/basis.hpp"
#include "revo/quadrature.hpp"
#include "revo/scalar.hpp"

namespace revo {

namespace {

// Unit-mass rule for (1-x^2)^e on [-1,1]. The exponent e = -1 arises as an
// endpoint-mass limit of the normalized weight: half the mass at each of +-1.
Rule1D sym_rule(double e, int nq) {
    if (std::abs(e + 1.0) < 1e-13) {
        Rule1D r;
        r.x = {-1.0, 1.0};
        r.w = {0.5, 0.5};
        return r;
    }
    if (e < -1.0) throw std::domain_error("sym_rule: exponent must be >= -1");
    Rule1D r = gauss_jacobi_rule(nq, e, e);
    double mass = 0.0;
    for (double w : r.w) mass += w;
    for (double& w : r.w) w /= mass;
    return r;
}

double clamped_sqrt(double v) { return std::sqrt(std::max(0.0, v)); }

double norm2(const double* x, int d) {
    double p = 0.0;
    for (int i = 0; i < d; ++i) p += x[i] * x[i];
    return p;
}

double dot(const double* x, const double* y, int d) {
    double p = 0.0;
    for (int i = 0; i < d; ++i) p += x[i] * y[i];
    return p;
}

double dc_even_kernel_zarg(int d, double beta, double gamma, int n, double xy,
                           double px, double py, double t, double s, int nq) {
    if (nq <= 0) nq = 60 + 8 * n;
    const Rule1D ru = sym_rule(gamma - 0.5, nq);
    const Rule1D rv = sym_rule(beta - 0.5, nq);
    const double lam = beta + gamma + 0.5 * (d + 2);
    const double rx = clamped_sqrt(t * t - px);
    const double ry = clamped_sqrt(s * s - py);
    const double qx = clamped_sqrt(1.0 - t * t);
    const double qy = clamped_sqrt(1.0 - s * s);
    double acc = 0.0;
    for (size_t iu = 0; iu < ru.x.size(); ++iu) {
        const double base = xy + ru.x[iu] * rx * ry;
        for (size_t iv = 0; iv < rv.x.size(); ++iv) {
            const double zeta = base + rv.x[iv] * qx * qy;
            acc += ru.w[iu] * rv.w[iv] * zonal_eval(n, lam, zeta);
        }
    }
    return acc;
}

}  // namespace

double cone_kernel(int d, double mu, double gamma, int n, const double* x,
                   double t, const double* y, double s, int nq) {
    if (mu < 0.0 || gamma < -0.5)
        throw std::domain_error("cone_kernel: need mu >= 0 and gamma >= -1/2");
    if (nq <= 0) nq = 48 + 8 * n;
    const Rule1D ru = sym_rule(mu - 1.0, nq);
    const Rule1D rv1 = sym_rule(mu + 0.5 * (d - 3), nq);
    const Rule1D rv2 = sym_rule(gamma - 0.5, nq);
    const double lam = 2.0 * mu + gamma + d;
    const double px = norm2(x, d), py = norm2(y, d);
    const double xy = dot(x, y, d);
    const double rx = clamped_sqrt(t * t - px);
    const double ry = clamped_sqrt(s * s - py);
    const double qx = clamped_sqrt(1.0 - t);
    const double qy = clamped_sqrt(1.0 - s);
    double acc = 0.0;
    for (size_t iu = 0; iu < ru.x.size(); ++iu) {
        const double core = clamped_sqrt(0.5 * (t * s + xy + rx * ry * ru.x[iu]));
        for (size_t i1 = 0; i1 < rv1.x.size(); ++i1) {
            const double part = rv1.x[i1] * core;
            for (size_t i2 = 0; i2 < rv2.x.size(); ++i2) {
                const double xi = part + rv2.x[i2] * qx * qy;
                acc += ru.w[iu] * rv1.w[i1] * rv2.w[i2] * zonal_eval(2 * n, lam, xi);
            }
        }
    }
    return acc;
}

double doublecone_even_kernel(int d, double beta, double gamma, int n,
                              const double* x, double t, const double* y,
                              double s, int nq) {
    if (beta < -0.5 || gamma < -0.5)
        throw std::domain_error(
            "doublecone_even_kernel: need beta, gamma >= -1/2");
    return dc_even_kernel_zarg(d, beta, gamma, n, dot(x, y, d), norm2(x, d),
                               norm2(y, d), t, s, nq);
}

double mapped_even_kernel(const DomainSpec& dom, double beta, double gamma,
                          int n, const double* x, double t, const double* y,
                          double s, int nq) {
    switch (dom.family) {
        case Family::DoubleConic:
        case Family::Hyperboloid1b:
        case Family::DoubleHyperbolic:
        case Family::EllipsoidLens:
            break;
        default:
            throw capability_error("mapped_even_kernel: mapped families only");
    }
    dom.validate();
    const double px = norm2(x, dom.d), py = norm2(y, dom.d);
    const double zx = clamped_sqrt(map_zsq(dom, px, t * t));
    const double zy = clamped_sqrt(map_zsq(dom, py, s * s));
    return dc_even_kernel_zarg(dom.d, beta, gamma, n, dot(x, y, dom.d), px, py,
                               zx, zy, nq);
}

OddEvenPair oddeven_relation(int d, double beta, double gamma, double theta,
                             int n, const double* x, double t, const double* y,
                             double s) {
    if (n < 1)
        throw std::invalid_argument("oddeven_relation: need n >= 1");
    Basis odd({Family::DoubleCone, d}, {0.0, beta, gamma, theta, 0.0, 0.0});
    Basis even({Family::DoubleCone, d}, {0.0, beta, gamma, theta + 1.0, 0.0, 0.0});
    const double alpha = gamma + theta + 0.5 * d;
    const double ratio = (alpha + beta + 1.5) / (alpha + 0.5);
    OddEvenPair out;
    out.odd_kernel = odd.kernel_sum(n, Parity::Odd, x, t, y, s);
    out.relation_value =
        ratio * s * t * even.kernel_sum(n - 1, Parity::Even, x, t, y, s);
    return out;
}

}  // namespace revo

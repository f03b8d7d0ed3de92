#include "revo/spectral.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace revo {

namespace {

// All first and second partials of u at (x, t), each entry Richardson
// extrapolated from central differences at steps h, h/2, ...
struct Derivs {
    double val = 0.0;
    double dt = 0.0, dtt = 0.0;
    std::array<double, 3> dx{}, dxx{}, dxt{};
    std::array<std::array<double, 3>, 3> dij{};  // mixed second partials
};

double richardson(const std::vector<double>& g) {
    // Neville table for an O(h^2) base method: each level gains two orders.
    std::vector<double> r = g;
    double f = 4.0;
    for (size_t lvl = 1; lvl < g.size(); ++lvl) {
        for (size_t i = 0; i + lvl < g.size(); ++i)
            r[i] = (f * r[i + 1] - r[i]) / (f - 1.0);
        f *= 4.0;
    }
    return r[0];
}

template <typename G>
double extrapolate(const G& stencil, double h, int levels) {
    std::vector<double> g(levels);
    for (int l = 0; l < levels; ++l) g[l] = stencil(h / std::pow(2.0, l));
    return richardson(g);
}

Derivs fd_derivs(const EvalFn& u, int d, const double* x, double t, double h,
                 int levels) {
    Derivs out;
    double p[3] = {0.0, 0.0, 0.0};
    for (int i = 0; i < d; ++i) p[i] = x[i];
    const double v0 = u(p, t);
    out.val = v0;
    out.dt = extrapolate(
        [&](double s) { return (u(p, t + s) - u(p, t - s)) / (2.0 * s); }, h,
        levels);
    out.dtt = extrapolate(
        [&](double s) {
            return (u(p, t + s) - 2.0 * v0 + u(p, t - s)) / (s * s);
        },
        h, levels);
    for (int i = 0; i < d; ++i) {
        out.dx[i] = extrapolate(
            [&](double s) {
                p[i] = x[i] + s;
                const double up = u(p, t);
                p[i] = x[i] - s;
                const double um = u(p, t);
                p[i] = x[i];
                return (up - um) / (2.0 * s);
            },
            h, levels);
        out.dxx[i] = extrapolate(
            [&](double s) {
                p[i] = x[i] + s;
                const double up = u(p, t);
                p[i] = x[i] - s;
                const double um = u(p, t);
                p[i] = x[i];
                return (up - 2.0 * v0 + um) / (s * s);
            },
            h, levels);
        out.dxt[i] = extrapolate(
            [&](double s) {
                p[i] = x[i] + s;
                const double a = u(p, t + s) - u(p, t - s);
                p[i] = x[i] - s;
                const double b = u(p, t + s) - u(p, t - s);
                p[i] = x[i];
                return (a - b) / (4.0 * s * s);
            },
            h, levels);
        for (int j = i + 1; j < d; ++j) {
            out.dij[i][j] = extrapolate(
                [&](double s) {
                    p[i] = x[i] + s;
                    p[j] = x[j] + s;
                    const double pp = u(p, t);
                    p[j] = x[j] - s;
                    const double pm = u(p, t);
                    p[i] = x[i] - s;
                    const double mm = u(p, t);
                    p[j] = x[j] + s;
                    const double mp = u(p, t);
                    p[i] = x[i];
                    p[j] = x[j];
                    return (pp - pm - mp + mm) / (4.0 * s * s);
                },
                h, levels);
            out.dij[j][i] = out.dij[i][j];
        }
        out.dij[i][i] = out.dxx[i];
    }
    return out;
}

// The even double-cone operator assembled from the derivative table; used
// directly, conjugated for the odd spaces, and in (x, z) coordinates for
// the mapped families.
double dc_even_apply(const Derivs& g, int d, double beta, double gamma,
                     const double* x, double t) {
    double xdot = 0.0, lap = 0.0, xgrad2 = 0.0, xdt = 0.0;
    for (int i = 0; i < d; ++i) {
        xdot += x[i] * g.dx[i];
        lap += g.dxx[i];
        xdt += x[i] * g.dxt[i];
        for (int j = 0; j < d; ++j) xgrad2 += x[i] * x[j] * g.dij[i][j];
    }
    xgrad2 += xdot;  // <x,grad> applied twice
    const double omt2 = 1.0 - t * t;
    return omt2 * g.dtt + lap - xgrad2 + (2.0 / t) * omt2 * xdt +
           (2.0 * gamma + d + 1.0) * g.dt / t - t * g.dt -
           (2.0 * beta + 2.0 * gamma + d + 2.0) * (t * g.dt + xdot);
}

double norm2(const double* x, int d) {
    double s = 0.0;
    for (int i = 0; i < d; ++i) s += x[i] * x[i];
    return s;
}

}  // namespace

void OperatorSpec::validate() const {
    if (!(h >= 1e-5 && h <= 1e-2))
        throw std::domain_error("OperatorSpec: step must be in [1e-5, 1e-2]");
    if (levels < 1 || levels > 4)
        throw std::domain_error("OperatorSpec: levels must be in [1, 4]");
    dom.validate();
}

double spectral_eigenvalue(const OperatorSpec& spec, int n) {
    const int d = spec.dom.d;
    const WeightSpec& w = spec.w;
    switch (spec.op) {
        case OperatorId::ConeD:
            return -static_cast<double>(n) * (n + 2.0 * w.mu + w.gamma + d);
        case OperatorId::DoubleConeE:
        case OperatorId::MappedE:
            return -static_cast<double>(n) *
                   (n + 2.0 * w.beta + 2.0 * w.gamma + d + 2.0);
        case OperatorId::DoubleConeO:
            return -static_cast<double>(n - 1) *
                   (n + 2.0 * w.beta + 2.0 * w.gamma + d + 1.0);
        case OperatorId::BallD:
            return -static_cast<double>(n) * (n + 2.0 * w.mu + d - 1.0);
        case OperatorId::SphereLB:
            return -static_cast<double>(n) * (n + d - 2.0);
    }
    return 0.0;
}

double apply_operator(const OperatorSpec& spec, const EvalFn& u,
                      const double* x, double t) {
    spec.validate();
    const int d = spec.dom.d;
    const WeightSpec& w = spec.w;
    switch (spec.op) {
        case OperatorId::ConeD: {
            Derivs g = fd_derivs(u, d, x, t, spec.h, spec.levels);
            double xdot = 0.0, xdt = 0.0, diag = 0.0, mixed = 0.0;
            for (int i = 0; i < d; ++i) {
                xdot += x[i] * g.dx[i];
                xdt += x[i] * g.dxt[i];
                diag += (t - x[i] * x[i]) * g.dxx[i];
                for (int j = i + 1; j < d; ++j)
                    mixed += x[i] * x[j] * g.dij[i][j];
            }
            return t * (1.0 - t) * g.dtt + 2.0 * (1.0 - t) * xdt + diag -
                   2.0 * mixed + (2.0 * w.mu + d) * g.dt -
                   (2.0 * w.mu + w.gamma + d + 1.0) * (xdot + t * g.dt);
        }
        case OperatorId::DoubleConeE: {
            Derivs g = fd_derivs(u, d, x, t, spec.h, spec.levels);
            return dc_even_apply(g, d, w.beta, w.gamma, x, t);
        }
        case OperatorId::DoubleConeO: {
            // conjugation by t: apply the even operator to u/t, then scale
            EvalFn g = [&u](const double* xx, double tt) {
                return u(xx, tt) / tt;
            };
            Derivs gd = fd_derivs(g, d, x, t, spec.h, spec.levels);
            return t * dc_even_apply(gd, d, w.beta, w.gamma, x, t);
        }
        case OperatorId::BallD: {
            Derivs g = fd_derivs(u, d, x, 0.0, spec.h, spec.levels);
            double xdot = 0.0, lap = 0.0, xgrad2 = 0.0;
            for (int i = 0; i < d; ++i) {
                xdot += x[i] * g.dx[i];
                lap += g.dxx[i];
                for (int j = 0; j < d; ++j) xgrad2 += x[i] * x[j] * g.dij[i][j];
            }
            xgrad2 += xdot;
            return lap - xgrad2 - (2.0 * w.mu + d - 1.0) * xdot;
        }
        case OperatorId::SphereLB: {
            // Laplacian of the degree-0 homogeneous extension at ||x|| = 1
            EvalFn v = [&u, d](const double* xx, double) {
                const double r = std::sqrt(norm2(xx, d));
                double y[3] = {0.0, 0.0, 0.0};
                for (int i = 0; i < d; ++i) y[i] = xx[i] / r;
                return u(y, 0.0);
            };
            Derivs g = fd_derivs(v, d, x, 0.0, spec.h, spec.levels);
            double lap = 0.0;
            for (int i = 0; i < d; ++i) lap += g.dxx[i];
            return lap;
        }
        case OperatorId::MappedE: {
            // the operator acts in (x, z); evaluate u back through the map
            const DomainSpec dom = spec.dom;
            EvalFn v = [&u, dom](const double* xx, double z) {
                const double p = norm2(xx, dom.d);
                const double t2 = std::max(0.0, map_tsq(dom, p, z * z));
                return u(xx, std::sqrt(t2));  // u is even in t
            };
            const double z =
                std::sqrt(std::max(0.0, map_zsq(dom, norm2(x, d), t * t)));
            Derivs g = fd_derivs(v, d, x, z, spec.h, spec.levels);
            return dc_even_apply(g, d, w.beta, w.gamma, x, z);
        }
    }
    return 0.0;
}

double spectral_residual(const OperatorSpec& spec, const EvalFn& u,
                         double lambda,
                         const std::vector<std::array<double, 4>>& points) {
    spec.validate();
    const int d = spec.dom.d;
    const double margin = 0.1;
    double worst = 0.0;
    for (const auto& pt : points) {
        const double* x = pt.data();
        const double t = pt[3];
        const double s = std::sqrt(norm2(x, d));
        // margin / axial-variable checks with diagnostics
        std::ostringstream bad;
        switch (spec.op) {
            case OperatorId::ConeD:
                if (t < margin || t > 1.0 - margin || s > t - margin)
                    bad << "cone point (s=" << s << ", t=" << t
                        << ") violates the 0.1 interior margin";
                break;
            case OperatorId::DoubleConeE:
            case OperatorId::DoubleConeO:
                if (std::abs(t) < 0.2 || std::abs(t) > 1.0 - margin ||
                    s > std::abs(t) - margin)
                    bad << "double cone point (s=" << s << ", t=" << t
                        << ") violates margin 0.1 or |t| >= 0.2";
                break;
            case OperatorId::MappedE: {
                const double z2 = map_zsq(spec.dom, s * s, t * t);
                const double z = std::sqrt(std::max(0.0, z2));
                if (z < 0.2 || z > 1.0 - margin || s > z - margin)
                    bad << "mapped point (s=" << s << ", z=" << z
                        << ") violates margin 0.1 or |z| >= 0.2";
                break;
            }
            case OperatorId::BallD:
                if (s > 1.0 - margin)
                    bad << "ball point ||x|| = " << s
                        << " violates the 0.1 interior margin";
                break;
            case OperatorId::SphereLB:
                if (std::abs(s - 1.0) > 1e-10)
                    bad << "sphere point has ||x|| = " << s << ", expected 1";
                break;
        }
        if (!bad.str().empty()) throw std::invalid_argument(bad.str());
        const double du = apply_operator(spec, u, x, t);
        const double lu = lambda * u(x, t);
        const double r = std::abs(du - lu) / std::max(1.0, std::abs(lu));
        worst = std::max(worst, r);
    }
    return worst;
}

}  // namespace revo

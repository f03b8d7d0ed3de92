#include "revo/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "revo/scalar.hpp"

namespace revo {

namespace {

// Golub-Welsch for the Jacobi weight (1-x)^a (1+x)^b on [-1,1].
Rule1D gauss_jacobi_reference(int m, double a, double b) {
    if (m < 1) throw std::domain_error("gauss_jacobi_rule: need at least one node");
    if (!(a > -1.0) || !(b > -1.0))
        throw std::domain_error("gauss_jacobi_rule: exponents must be > -1");
    Eigen::MatrixXd jm = Eigen::MatrixXd::Zero(m, m);
    for (int k = 0; k < m; ++k) {
        const double s = 2.0 * k + a + b;
        double diag;
        if (k == 0 && a + b == 0.0)
            diag = (b - a) / (a + b + 2.0);
        else
            diag = (b * b - a * a) / (s * (s + 2.0));
        jm(k, k) = diag;
        if (k + 1 < m) {
            double off2;
            if (k == 0)
                off2 = 4.0 * (a + 1.0) * (b + 1.0) /
                       ((a + b + 2.0) * (a + b + 2.0) * (a + b + 3.0));
            else {
                const double kk = k + 1.0;
                const double ss = 2.0 * kk + a + b;
                off2 = 4.0 * kk * (kk + a) * (kk + b) * (kk + a + b) /
                       (ss * ss * (ss + 1.0) * (ss - 1.0));
            }
            jm(k, k + 1) = jm(k + 1, k) = std::sqrt(off2);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jm);
    const double mass = std::pow(2.0, a + b + 1.0) * beta_fn(a + 1.0, b + 1.0);
    Rule1D r;
    r.x.resize(m);
    r.w.resize(m);
    for (int i = 0; i < m; ++i) {
        r.x[i] = es.eigenvalues()(i);
        const double v0 = es.eigenvectors()(0, i);
        r.w[i] = mass * v0 * v0;
    }
    return r;
}

}  // namespace

Rule1D gauss_jacobi_rule(int m, double a, double b, double lo, double hi) {
    Rule1D r = gauss_jacobi_reference(m, a, b);
    if (lo == -1.0 && hi == 1.0) return r;
    const double half = 0.5 * (hi - lo);
    const double scale = std::pow(half, a + b + 1.0);
    for (int i = 0; i < static_cast<int>(r.x.size()); ++i) {
        r.x[i] = lo + half * (r.x[i] + 1.0);
        r.w[i] *= scale;
    }
    return r;
}

Rule1D gauss_jacobi01(int m, double e0, double e1) {
    // u^{e0}(1-u)^{e1} on [0,1]: map x -> (1+x)/2 from weight (1-x)^{e1}(1+x)^{e0}.
    return gauss_jacobi_rule(m, e1, e0, 0.0, 1.0);
}

Rule1D gauss_legendre(int m) { return gauss_jacobi_rule(m, 0.0, 0.0); }

double QuadratureRule::integrate(const EvalFn& f) const {
    double acc = 0.0, comp = 0.0;
    for (size_t i = 0; i < nodes.size(); ++i) {
        const double term = weights[i] * f(nodes[i].data(), nodes[i][3]);
        const double y = term - comp;
        const double t = acc + y;
        comp = (t - acc) - y;
        acc = t;
    }
    return acc;
}

QuadratureRule sphere_rule(int d, int degree) {
    if (d != 2 && d != 3) throw std::domain_error("sphere_rule: d must be 2 or 3");
    QuadratureRule r;
    r.d = d;
    r.exactness_degree = degree;
    r.domain_tag = "sphere";
    if (d == 2) {
        const int m = degree + 2;
        for (int i = 0; i < m; ++i) {
            const double th = 2.0 * std::numbers::pi * i / m;
            r.nodes.push_back({std::cos(th), std::sin(th), 0.0, 0.0});
            r.weights.push_back(1.0 / m);
        }
        return r;
    }
    const int mphi = degree + 2;
    const int mz = degree / 2 + 2;
    Rule1D gl = gauss_legendre(mz);
    for (int iz = 0; iz < mz; ++iz) {
        const double z = gl.x[iz];
        const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
        for (int ip = 0; ip < mphi; ++ip) {
            const double ph = 2.0 * std::numbers::pi * ip / mphi;
            r.nodes.push_back({rho * std::cos(ph), rho * std::sin(ph), z, 0.0});
            // gl weights sum to 2; the normalized surface measure splits as
            // dz/2 x dphi/(2 pi).
            r.weights.push_back(0.5 * gl.w[iz] / mphi);
        }
    }
    return r;
}

std::vector<std::vector<double>> gram(const std::vector<EvalFn>& fns,
                                      const QuadratureRule& rule) {
    const size_t n = fns.size();
    const size_t m = rule.nodes.size();
    std::vector<std::vector<double>> vals(n, std::vector<double>(m));
    for (size_t i = 0; i < n; ++i)
        for (size_t q = 0; q < m; ++q)
            vals[i][q] = fns[i](rule.nodes[q].data(), rule.nodes[q][3]);
    std::vector<std::vector<double>> g(n, std::vector<double>(n, 0.0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i; j < n; ++j) {
            double acc = 0.0, comp = 0.0;
            for (size_t q = 0; q < m; ++q) {
                const double term = rule.weights[q] * vals[i][q] * vals[j][q];
                const double y = term - comp;
                const double t = acc + y;
                comp = (t - acc) - y;
                acc = t;
            }
            g[i][j] = g[j][i] = acc;
        }
    }
    return g;
}

double max_offdiagonal(const std::vector<std::vector<double>>& g) {
    const size_t n = g.size();
    double worst = 0.0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const double den = std::sqrt(g[i][i] * g[j][j]);
            worst = std::max(worst, std::abs(g[i][j]) / den);
        }
    return worst;
}

}  // namespace revo

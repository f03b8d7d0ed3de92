#include "revo/scalar.hpp"

#include <cmath>

namespace revo {

namespace {

double clamp_unit(double t) {
    if (t > 1.0 && t <= 1.0 + 1e-12) return 1.0;
    if (t < -1.0 && t >= -1.0 - 1e-12) return -1.0;
    return t;
}

}  // namespace

double pochhammer(double a, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= a + i;
    return r;
}

double beta_fn(double a, double b) {
    return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

double jacobi_eval(int n, const JacobiPair& p, double t) {
    p.validate();
    if (n < 0) throw std::invalid_argument("jacobi_eval: degree must be >= 0");
    t = clamp_unit(t);
    const double a = p.alpha, b = p.beta;
    if (n == 0) return 1.0;
    double pm = 1.0;
    double pc = 0.5 * (a + b + 2.0) * t + 0.5 * (a - b);
    for (int k = 1; k < n; ++k) {
        const double s = 2.0 * k + a + b;
        const double c1 = 2.0 * (k + 1.0) * (k + a + b + 1.0) * s;
        const double c2 = (s + 1.0) * (a * a - b * b);
        const double c3 = s * (s + 1.0) * (s + 2.0);
        const double c4 = 2.0 * (k + a) * (k + b) * (s + 2.0);
        const double pn = ((c2 + c3 * t) * pc - c4 * pm) / c1;
        pm = pc;
        pc = pn;
    }
    return pc;
}

double jacobi_norm(int n, const JacobiPair& p) {
    p.validate();
    if (n < 0) throw std::invalid_argument("jacobi_norm: degree must be >= 0");
    const double a = p.alpha, b = p.beta;
    // h_n = (a+1)_n (b+1)_n (a+b+n+1) / (n! (a+b+2)_n (a+b+2n+1)),
    // accumulated as a product of bounded ratios.
    double h = 1.0;
    for (int i = 0; i < n; ++i)
        h *= (a + 1.0 + i) * (b + 1.0 + i) / ((i + 1.0) * (a + b + 2.0 + i));
    return h * (a + b + n + 1.0) / (a + b + 2.0 * n + 1.0);
}

std::pair<double, double> jacobi_normalizer(const JacobiPair& p) {
    p.validate();
    const double a = p.alpha, b = p.beta;
    const double c = std::exp(std::lgamma(a + b + 2.0) - std::lgamma(a + 1.0) -
                              std::lgamma(b + 1.0));
    return {c / std::pow(2.0, a + b + 1.0), c};
}

double gegenbauer_eval(int n, double lambda, double t) {
    if (!(lambda > -0.5) || lambda == 0.0)
        throw std::domain_error("gegenbauer_eval: lambda must be > -1/2, nonzero");
    if (n < 0) throw std::invalid_argument("gegenbauer_eval: degree must be >= 0");
    t = clamp_unit(t);
    if (n == 0) return 1.0;
    double cm = 1.0;
    double cc = 2.0 * lambda * t;
    for (int k = 1; k < n; ++k) {
        const double cn = (2.0 * (k + lambda) * t * cc - (k + 2.0 * lambda - 1.0) * cm) / (k + 1.0);
        cm = cc;
        cc = cn;
    }
    return cc;
}

double gen_gegenbauer_eval(int n, const GenGegenPair& g, double t) {
    g.validate();
    if (n < 0) throw std::invalid_argument("gen_gegenbauer_eval: degree must be >= 0");
    t = clamp_unit(t);
    const double lam = g.lambda, mu = g.mu;
    if (n % 2 == 0) {
        const int m = n / 2;
        return pochhammer(lam + mu, m) / pochhammer(mu + 0.5, m) *
               jacobi_eval(m, {lam - 0.5, mu - 0.5}, 2.0 * t * t - 1.0);
    }
    const int m = (n - 1) / 2;
    return pochhammer(lam + mu, m + 1) / pochhammer(mu + 0.5, m + 1) * t *
           jacobi_eval(m, {lam - 0.5, mu + 0.5}, 2.0 * t * t - 1.0);
}

double gen_gegenbauer_norm(int n, const GenGegenPair& g) {
    g.validate();
    if (n < 0) throw std::invalid_argument("gen_gegenbauer_norm: degree must be >= 0");
    const double lam = g.lambda, mu = g.mu;
    if (n % 2 == 0) {
        const int m = n / 2;
        double h = (lam + mu) / (lam + mu + 2.0 * m);
        for (int i = 0; i < m; ++i)
            h *= (lam + 0.5 + i) * (lam + mu + i) / ((i + 1.0) * (mu + 0.5 + i));
        return h;
    }
    const int m = (n - 1) / 2;
    double h = (lam + mu) / (lam + mu + 2.0 * m + 1.0);
    for (int i = 0; i < m; ++i)
        h *= (lam + 0.5 + i) * (lam + mu + i) / ((i + 1.0) * (mu + 0.5 + i));
    h *= (lam + mu + m) / (mu + 0.5 + m);
    return h;
}

double zonal_eval(int n, double lambda, double t) {
    if (lambda < 0.0) throw std::domain_error("zonal_eval: lambda must be >= 0");
    if (n < 0) throw std::invalid_argument("zonal_eval: degree must be >= 0");
    t = clamp_unit(t);
    if (lambda == 0.0) {
        if (n == 0) return 1.0;
        // 2 T_n(t) by recurrence (valid for all real t).
        double tm = 1.0, tc = t;
        for (int k = 1; k < n; ++k) {
            const double tn = 2.0 * t * tc - tm;
            tm = tc;
            tc = tn;
        }
        return 2.0 * tc;
    }
    return (n + lambda) / lambda * gegenbauer_eval(n, lambda, t);
}

double jacobi_homog(int j, double a, double b, double p, double q) {
    if (j < 0) throw std::invalid_argument("jacobi_homog: degree must be >= 0");
    if (j == 0) return 1.0;
    double qm = 1.0;
    double qc = 0.5 * (a + b + 2.0) * (2.0 * p - q) + 0.5 * (a - b) * q;
    for (int k = 1; k < j; ++k) {
        const double s = 2.0 * k + a + b;
        const double c1 = 2.0 * (k + 1.0) * (k + a + b + 1.0) * s;
        const double c2 = (s + 1.0) * (a * a - b * b);
        const double c3 = s * (s + 1.0) * (s + 2.0);
        const double c4 = 2.0 * (k + a) * (k + b) * (s + 2.0);
        const double qn = ((c2 * q + c3 * (2.0 * p - q)) * qc - c4 * q * q * qm) / c1;
        qm = qc;
        qc = qn;
    }
    return qc;
}

}  // namespace revo

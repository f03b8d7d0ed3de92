#include "revo/triangle.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "revo/quadrature.hpp"
#include "revo/scalar.hpp"

namespace revo {

namespace {

void check_index(int j, int m) {
    if (j < 0 || m < 0 || j > m)
        throw std::invalid_argument("triangle basis: indices must satisfy 0 <= j <= m");
}

// T-variant value with explicit parameters (theta = 0 recovers T).
double t_eval(int j, int m, double a, double b, double g, double th, double u, double v) {
    const double f1 = jacobi_eval(m - j, {2.0 * j + a + g + th + 1.0, b}, 2.0 * v - 1.0);
    // (1-v)^j P_j^{(a,g)}(1 - 2u/(1-v)) as a homogenized polynomial in (u, 1-v).
    const double sgn = (j % 2 == 0) ? 1.0 : -1.0;
    return f1 * sgn * jacobi_homog(j, g, a, u, 1.0 - v);
}

double t_norm_closed(int j, int m, double a, double b, double g) {
    const double bd = std::exp(std::lgamma(a + b + g + 3.0) - std::lgamma(a + 1.0) -
                               std::lgamma(b + 1.0) - std::lgamma(g + 1.0));
    const JacobiPair p1{2.0 * j + a + g + 1.0, b};
    const JacobiPair p2{a, g};
    return bd * jacobi_norm(m - j, p1) / jacobi_normalizer(p1).second *
           jacobi_norm(j, p2) / jacobi_normalizer(p2).second;
}

double t4_norm_quadrature(int j, int m, const TriangleParams& p) {
    using Key = std::tuple<int, int, double, double, double, double>;
    static std::map<Key, double> cache;
    static std::mutex mtx;
    const Key key{j, m, p.alpha, p.beta, p.gamma, p.theta};
    {
        std::lock_guard<std::mutex> lk(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    // Substituting u = (1-v) w factors the weight as
    // v^beta (1-v)^{alpha+gamma+theta+1} x w^alpha (1-w)^gamma.
    const int nq = m + 4;
    Rule1D rv = gauss_jacobi01(nq, p.beta, p.alpha + p.gamma + p.theta + 1.0);
    Rule1D rw = gauss_jacobi01(nq, p.alpha, p.gamma);
    double mass = 0.0, val = 0.0;
    for (size_t iv = 0; iv < rv.x.size(); ++iv) {
        for (size_t iw = 0; iw < rw.x.size(); ++iw) {
            const double v = rv.x[iv];
            const double u = (1.0 - v) * rw.x[iw];
            const double wq = rv.w[iv] * rw.w[iw];
            const double f = t_eval(j, m, p.alpha, p.beta, p.gamma, p.theta, u, v);
            mass += wq;
            val += wq * f * f;
        }
    }
    const double result = val / mass;
    std::lock_guard<std::mutex> lk(mtx);
    cache.emplace(key, result);
    return result;
}

}  // namespace

double tri_eval(TriVariant variant, int j, int m, const TriangleParams& p,
                double u, double v) {
    p.validate();
    check_index(j, m);
    switch (variant) {
        case TriVariant::T:
            if (p.theta != 0.0)
                throw std::domain_error("tri_eval: variant T requires theta = 0");
            return t_eval(j, m, p.alpha, p.beta, p.gamma, 0.0, u, v);
        case TriVariant::S:
            if (p.theta != 0.0)
                throw std::domain_error("tri_eval: variant S requires theta = 0");
            return t_eval(j, m, p.gamma, p.alpha, p.beta, 0.0, 1.0 - u - v, u);
        case TriVariant::R:
            if (p.theta != 0.0)
                throw std::domain_error("tri_eval: variant R requires theta = 0");
            return t_eval(j, m, p.beta, p.gamma, p.alpha, 0.0, v, 1.0 - u - v);
        case TriVariant::T4:
            return t_eval(j, m, p.alpha, p.beta, p.gamma, p.theta, u, v);
    }
    throw std::invalid_argument("tri_eval: unknown variant");
}

double tri_norm(TriVariant variant, int j, int m, const TriangleParams& p) {
    p.validate();
    check_index(j, m);
    switch (variant) {
        case TriVariant::T:
            return t_norm_closed(j, m, p.alpha, p.beta, p.gamma);
        case TriVariant::S:
            return t_norm_closed(j, m, p.gamma, p.alpha, p.beta);
        case TriVariant::R:
            return t_norm_closed(j, m, p.beta, p.gamma, p.alpha);
        case TriVariant::T4:
            return t4_norm_quadrature(j, m, p);
    }
    throw std::invalid_argument("tri_norm: unknown variant");
}

}  // namespace revo

#include "revo/basis.hpp"

#include <cmath>
#include <complex>

#include "revo/scalar.hpp"
#include "revo/sphereball.hpp"
#include "revo/triangle.hpp"

namespace revo {

namespace {

double chebyshev_t(int n, double t) {
    if (n == 0) return 1.0;
    double tm = 1.0, tc = t;
    for (int k = 1; k < n; ++k) {
        const double tn = 2.0 * t * tc - tm;
        tm = tc;
        tc = tn;
    }
    return tc;
}

// Jacobi recurrence over complex arguments, needed by the coupled-cone
// basis outside the diamond where the surds turn imaginary.
std::complex<double> jacobi_eval_c(int n, double a, double b, std::complex<double> t) {
    if (n == 0) return 1.0;
    std::complex<double> pm = 1.0;
    std::complex<double> pc = 0.5 * (a + b + 2.0) * t + 0.5 * (a - b);
    for (int k = 1; k < n; ++k) {
        const double s = 2.0 * k + a + b;
        const double c1 = 2.0 * (k + 1.0) * (k + a + b + 1.0) * s;
        const double c2 = (s + 1.0) * (a * a - b * b);
        const double c3 = s * (s + 1.0) * (s + 2.0);
        const double c4 = 2.0 * (k + a) * (k + b) * (s + 2.0);
        const std::complex<double> pn = ((c2 + c3 * t) * pc - c4 * pm) / c1;
        pm = pc;
        pc = pn;
    }
    return pc;
}

// Symmetrized two-variable Jacobi product on the diamond in the variables
// cm, cp = t^2 - s^2 -/+ sqrt((1+t)^2 - s^2) sqrt((1-t)^2 - s^2).
double coupled_radial(int deg, int j, double a, double b, double s2, double t) {
    const std::complex<double> sa = std::sqrt(std::complex<double>((1.0 + t) * (1.0 + t) - s2));
    const std::complex<double> sb = std::sqrt(std::complex<double>((1.0 - t) * (1.0 - t) - s2));
    const std::complex<double> cm = t * t - s2 - sa * sb;
    const std::complex<double> cp = t * t - s2 + sa * sb;
    if (deg % 2 == 0) {
        const int m = deg / 2;
        const std::complex<double> v = jacobi_eval_c(m, a, b, cm) * jacobi_eval_c(j, a, b, cp) +
                                       jacobi_eval_c(j, a, b, cm) * jacobi_eval_c(m, a, b, cp);
        return v.real();
    }
    const int m = (deg - 1) / 2;
    const std::complex<double> v =
        jacobi_eval_c(m, a, b + 1.0, cm) * jacobi_eval_c(j, a, b + 1.0, cp) +
        jacobi_eval_c(j, a, b + 1.0, cm) * jacobi_eval_c(m, a, b + 1.0, cp);
    return 2.0 * t * v.real();
}

bool is_mapped(Family f) {
    return f == Family::DoubleConic || f == Family::Hyperboloid1b ||
           f == Family::DoubleHyperbolic || f == Family::EllipsoidLens;
}

bool is_capped(Family f) {
    return f == Family::CappedCylinderQuadratic || f == Family::CappedCylinderEllipsoid;
}

bool even_only(Family f) {
    return is_capped(f) || (is_mapped(f) && f != Family::Hyperboloid1b);
}

struct ProfileRule {
    std::vector<double> s, t, w;  // normalized: sum w = 1
};

ProfileRule tensor_profile(const Rule1D& ru, const Rule1D& rv,
                           const std::function<void(double, double, double&, double&)>& map,
                           bool mirror_t) {
    ProfileRule r;
    double mass = 0.0;
    for (size_t iu = 0; iu < ru.x.size(); ++iu)
        for (size_t iv = 0; iv < rv.x.size(); ++iv) {
            double s = 0.0, t = 0.0;
            map(ru.x[iu], rv.x[iv], s, t);
            const double wq = ru.w[iu] * rv.w[iv];
            if (mirror_t) {
                r.s.push_back(s);
                r.t.push_back(t);
                r.w.push_back(0.5 * wq);
                r.s.push_back(s);
                r.t.push_back(-t);
                r.w.push_back(0.5 * wq);
                mass += wq;
            } else {
                r.s.push_back(s);
                r.t.push_back(t);
                r.w.push_back(wq);
                mass += wq;
            }
        }
    for (double& wi : r.w) wi /= mass;
    return r;
}

bool near_even_integer(double x, int& out) {
    const double r = std::round(x);
    if (std::abs(x - r) > 1e-12) return false;
    const long long i = static_cast<long long>(r);
    if (i < 0 || i % 2 != 0) return false;
    out = static_cast<int>(i);
    return true;
}

ProfileRule profile_rule(const DomainSpec& dom, const WeightSpec& w, int degree,
                         Parity parity) {
    const int d = dom.d;
    const int nq = degree / 2 + 3;
    switch (dom.family) {
        case Family::Cylinder: {
            Rule1D ru = gauss_jacobi01(nq, w.alpha + 0.5 * (d - 2), w.mu - 0.5);
            Rule1D rt = gauss_jacobi_rule(nq, w.lambda - 0.5, w.lambda - 0.5);
            return tensor_profile(ru, rt,
                                  [](double u, double t, double& so, double& to) {
                                      so = std::sqrt(u);
                                      to = t;
                                  },
                                  false);
        }
        case Family::Cone: {
            Rule1D ru = gauss_jacobi01(nq, w.alpha + 0.5 * (d - 2), w.mu - 0.5);
            Rule1D rt = gauss_jacobi01(
                nq, 2.0 * w.alpha + 2.0 * w.mu + w.beta + d - 1.0, w.gamma);
            return tensor_profile(ru, rt,
                                  [](double u, double t, double& so, double& to) {
                                      so = t * std::sqrt(u);
                                      to = t;
                                  },
                                  false);
        }
        case Family::CoupledCone: {
            int eu = 0, ev = 0;
            if (!near_even_integer(2.0 * w.alpha + d, eu) ||
                !near_even_integer(2.0 * w.beta + 1.0, ev))
                throw capability_error(
                    "coupled cone rule: 2 alpha + d and 2 beta + 1 must be even integers");
            const int m = degree + eu + ev + 4;
            ProfileRule r;
            double mass = 0.0;
            const double pi = std::acos(-1.0);
            std::vector<double> xs(m);
            for (int i = 0; i < m; ++i) xs[i] = std::cos((2.0 * i + 1.0) * pi / (2.0 * m));
            for (int iu = 0; iu < m; ++iu)
                for (int iv = 0; iv < m; ++iv) {
                    const double u = xs[iu], v = xs[iv];
                    double wq = 1.0;
                    for (int e = 0; e < eu; ++e) wq *= std::abs(u - v);
                    for (int e = 0; e < ev; ++e) wq *= std::abs(u + v);
                    if (wq == 0.0) continue;
                    r.s.push_back(0.5 * std::abs(v - u));
                    r.t.push_back(0.5 * (u + v));
                    r.w.push_back(wq);
                    mass += wq;
                }
            for (double& wi : r.w) wi /= mass;
            return r;
        }
        case Family::Paraboloid: {
            Rule1D ru = gauss_jacobi01(nq, w.alpha + 0.5 * (d - 2), w.gamma);
            Rule1D rt = gauss_jacobi01(nq, w.alpha + w.gamma + 0.5 * d, w.beta);
            return tensor_profile(ru, rt,
                                  [](double u, double t, double& so, double& to) {
                                      so = std::sqrt(t * u);
                                      to = t;
                                  },
                                  false);
        }
        case Family::DoubleCone: {
            Rule1D ru = gauss_jacobi01(nq, w.alpha + 0.5 * (d - 2), w.gamma);
            Rule1D rv = gauss_jacobi01(
                nq, w.alpha + w.gamma + w.theta + 0.5 * (d - 1), w.beta);
            return tensor_profile(ru, rv,
                                  [](double u, double v, double& so, double& to) {
                                      to = std::sqrt(v);
                                      so = to * std::sqrt(u);
                                  },
                                  true);
        }
        case Family::CappedCylinderQuadratic:
        case Family::CappedCylinderEllipsoid: {
            const bool quad = dom.family == Family::CappedCylinderQuadratic;
            Rule1D ru = gauss_jacobi01(nq, w.alpha + 0.5 * (d - 2), w.beta);
            Rule1D rw = gauss_jacobi01(nq, w.gamma, w.theta);
            const double fa = dom.fa, fb = dom.fb;
            return tensor_profile(
                ru, rw,
                [quad, fa, fb](double u, double ww, double& so, double& to) {
                    const double v = quad ? fb + (1.0 - fa) * u + (fa - fb) * ww
                                          : fb * (1.0 - u) + (fa - fb) * ww;
                    so = std::sqrt(u);
                    to = std::sqrt(std::max(0.0, v));
                },
                true);
        }
        default: {  // mapped families: pushforward of the base rule
            DomainSpec base = dom;
            base.family = Family::DoubleCone;
            ProfileRule r = profile_rule(base, w, degree, Parity::Even);
            const bool odd = parity == Parity::Odd;
            if (odd && dom.family != Family::Hyperboloid1b)
                throw capability_error("odd rule only available for hyperboloid1b");
            for (size_t i = 0; i < r.s.size(); ++i) {
                const double z = r.t[i];
                const double t2 = map_tsq(dom, r.s[i] * r.s[i], z * z);
                const double t = std::copysign(std::sqrt(std::max(0.0, t2)), z);
                r.t[i] = t;
                // the odd inner product carries a (z/t)^2 density relative
                // to the even one; deliberately not renormalized, so the
                // base closed norms are preserved exactly
                if (odd) r.w[i] *= (z * z) / t2;
            }
            return r;
        }
    }
}

}  // namespace

Basis::Basis(DomainSpec dom, WeightSpec w) : dom_(dom), w_(w) {
    validate_weight(dom_, w_);
}

std::vector<BasisIndex> Basis::enumerate(int n, Parity parity) const {
    if (n < 0) throw std::invalid_argument("enumerate: degree must be >= 0");
    if (!dom_.t_symmetric() && parity != Parity::Any)
        throw capability_error("parity split requires a t-symmetric family");
    if (even_only(dom_.family) && parity != Parity::Even)
        throw capability_error(family_to_string(dom_.family) +
                               ": only the even-parity basis is available");
    std::vector<BasisIndex> out;
    for (int k = 0; k <= n; ++k) {
        const Parity pk = !dom_.t_symmetric()
                              ? Parity::Any
                              : ((n - k) % 2 == 0 ? Parity::Even : Parity::Odd);
        if (parity != Parity::Any && pk != parity) continue;
        for (int j = 0; 2 * j <= n - k; ++j)
            for (int ell = 1; ell <= dim_harmonic(k, dom_.d); ++ell)
                out.push_back({n, k, j, ell, pk});
    }
    return out;
}

std::vector<BasisIndex> Basis::enumerate_upto(int nmax, Parity parity) const {
    std::vector<BasisIndex> out;
    for (int n = 0; n <= nmax; ++n) {
        auto part = enumerate(n, parity);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

double Basis::radial_eval(const BasisIndex& idx, double s2, double t) const {
    const int d = dom_.d;
    const int n = idx.n, k = idx.k, j = idx.j;
    if (k < 0 || k > n || j < 0 || 2 * j > n - k)
        throw std::invalid_argument("radial_eval: index out of range");
    switch (dom_.family) {
        case Family::Cylinder: {
            const int m = k + 2 * j;
            const double tf = (w_.lambda == 0.0)
                                  ? chebyshev_t(n - m, t)
                                  : gegenbauer_eval(n - m, w_.lambda, t);
            return tf * jacobi_eval(j, {w_.mu - 0.5, w_.alpha + k + 0.5 * (d - 2)},
                                    2.0 * s2 - 1.0);
        }
        case Family::Cone: {
            const int m = k + 2 * j;
            const double a1 = 2.0 * m + w_.beta + 2.0 * w_.alpha + 2.0 * w_.mu + d - 1.0;
            return jacobi_eval(n - m, {a1, w_.gamma}, 1.0 - 2.0 * t) *
                   jacobi_homog(j, w_.mu - 0.5, w_.alpha + k + 0.5 * (d - 2), s2, t * t);
        }
        case Family::CoupledCone:
            return coupled_radial(n - k, j, w_.alpha + k + 0.5 * (d - 1), w_.beta, s2, t);
        case Family::Paraboloid: {
            const double ak = w_.alpha + k + 0.5 * (d - 2);
            const double sgn = (j % 2 == 0) ? 1.0 : -1.0;
            return jacobi_eval(n - k - 2 * j, {2.0 * j + ak + w_.gamma + 1.0, w_.beta},
                               1.0 - 2.0 * t) *
                   sgn * jacobi_homog(j, w_.gamma, ak, s2, t);
        }
        case Family::DoubleCone: {
            const int kk = k + 2 * j;
            const double muk = kk + w_.alpha + w_.gamma + w_.theta + 0.5 * d;
            return gen_gegenbauer_eval(n - kk, {w_.beta + 0.5, muk}, t) *
                   jacobi_homog(j, w_.gamma, w_.alpha + k + 0.5 * (d - 2), s2, t * t);
        }
        case Family::CappedCylinderQuadratic:
        case Family::CappedCylinderEllipsoid: {
            if ((n - k) % 2 != 0)
                throw capability_error("capped cylinder: even-parity basis only");
            const int m = (n - k) / 2;
            const double t2 = t * t;
            const double arg =
                dom_.family == Family::CappedCylinderQuadratic
                    ? (t2 - (1.0 - dom_.fa) * s2 - dom_.fb) / (dom_.fa - dom_.fb)
                    : (t2 + dom_.fb * s2 - dom_.fb) / (dom_.fa - dom_.fb);
            return jacobi_eval(j, {w_.alpha + k + 0.5 * (d - 2), w_.beta},
                               1.0 - 2.0 * s2) *
                   jacobi_eval(m - j, {w_.gamma, w_.theta}, 1.0 - 2.0 * arg);
        }
        default: {  // mapped families
            const int kk = k + 2 * j;
            const double lam = w_.beta + 0.5;
            const double muk = kk + w_.alpha + w_.gamma + w_.theta + 0.5 * dom_.d;
            const double z2 = map_zsq(dom_, s2, t * t);
            const double hom =
                jacobi_homog(j, w_.gamma, w_.alpha + k + 0.5 * (d - 2), s2, z2);
            if ((n - kk) % 2 == 0) {
                const int h = (n - kk) / 2;
                const double c = pochhammer(lam + muk, h) / pochhammer(muk + 0.5, h);
                return c * jacobi_eval(h, {lam - 0.5, muk - 0.5}, 2.0 * z2 - 1.0) * hom;
            }
            if (dom_.family != Family::Hyperboloid1b)
                throw capability_error(family_to_string(dom_.family) +
                                       ": odd-parity basis is not polynomial");
            const int h = (n - kk - 1) / 2;
            const double c = pochhammer(lam + muk, h + 1) / pochhammer(muk + 0.5, h + 1);
            return t * c * jacobi_eval(h, {lam - 0.5, muk + 0.5}, 2.0 * z2 - 1.0) * hom;
        }
    }
}

double Basis::eval(const BasisIndex& idx, const double* x, double t) const {
    double s2 = 0.0;
    for (int i = 0; i < dom_.d; ++i) s2 += x[i] * x[i];
    return radial_eval(idx, s2, t) * solid_sph_eval({dom_.d, idx.k, idx.ell}, x);
}

double Basis::profile_eval(const BasisIndex& idx, double s, double t) const {
    return radial_eval(idx, s * s, t) * std::pow(s, idx.k);
}

bool Basis::has_closed_norms() const { return dom_.family != Family::CoupledCone; }

double Basis::closed_norm(const BasisIndex& idx) const {
    const int d = dom_.d;
    const int n = idx.n, k = idx.k, j = idx.j;
    switch (dom_.family) {
        case Family::Cylinder: {
            const int m = k + 2 * j;
            const double tnorm =
                (w_.lambda == 0.0)
                    ? (n - m == 0 ? 1.0 : 0.5)
                    : gen_gegenbauer_norm(n - m, {w_.lambda, 0.0});
            const double bk = w_.alpha + k + 0.5 * (d - 2);
            return tnorm * jacobi_norm(j, {w_.mu - 0.5, bk}) *
                   beta_fn(w_.mu + 0.5, bk + 1.0) /
                   beta_fn(w_.mu + 0.5, w_.alpha + 0.5 * d);
        }
        case Family::Cone: {
            const int m = k + 2 * j;
            const double am = 2.0 * m + w_.beta + 2.0 * w_.alpha + 2.0 * w_.mu + d - 1.0;
            const double a0 = w_.beta + 2.0 * w_.alpha + 2.0 * w_.mu + d - 1.0;
            const double bk = w_.alpha + k + 0.5 * (d - 2);
            return jacobi_norm(n - m, {am, w_.gamma}) * jacobi_norm(j, {w_.mu - 0.5, bk}) *
                   beta_fn(am + 1.0, w_.gamma + 1.0) / beta_fn(a0 + 1.0, w_.gamma + 1.0) *
                   beta_fn(w_.mu + 0.5, bk + 1.0) /
                   beta_fn(w_.mu + 0.5, w_.alpha + 0.5 * d);
        }
        case Family::Paraboloid: {
            const double ak = w_.alpha + k + 0.5 * (d - 2);
            const double tn =
                tri_norm(TriVariant::T, j, n - k - j, {ak, w_.beta, w_.gamma});
            const double ratio =
                beta_fn(w_.alpha + k + 0.5 * d, w_.gamma + 1.0) /
                beta_fn(w_.alpha + 0.5 * d, w_.gamma + 1.0) *
                beta_fn(w_.alpha + w_.gamma + k + 0.5 * d + 1.0, w_.beta + 1.0) /
                beta_fn(w_.alpha + w_.gamma + 0.5 * d + 1.0, w_.beta + 1.0);
            return tn * ratio;
        }
        case Family::CappedCylinderQuadratic:
        case Family::CappedCylinderEllipsoid: {
            const int m = (n - k) / 2;
            return jacobi_norm(j, {w_.alpha + k + 0.5 * (d - 2), w_.beta}) *
                   jacobi_norm(m - j, {w_.gamma, w_.theta}) *
                   beta_fn(w_.alpha + k + 0.5 * d, w_.beta + 1.0) /
                   beta_fn(w_.alpha + 0.5 * d, w_.beta + 1.0);
        }
        default: {  // double cone and mapped relatives share the base norm
            const int kk = k + 2 * j;
            const double lam = w_.beta + 0.5;
            const double mu0 = w_.alpha + w_.gamma + w_.theta + 0.5 * d;
            const double muk = kk + mu0;
            const double bj = w_.alpha + k + 0.5 * (d - 2);
            const double rho =
                beta_fn(muk + 0.5, lam + 0.5) / beta_fn(mu0 + 0.5, lam + 0.5) *
                beta_fn(w_.gamma + 1.0, bj + 1.0) /
                beta_fn(w_.gamma + 1.0, w_.alpha + 0.5 * d);
            return gen_gegenbauer_norm(n - kk, {lam, muk}) *
                   jacobi_norm(j, {bj, w_.gamma}) * rho;
        }
    }
}

double Basis::quadrature_norm(const BasisIndex& idx) const {
    const std::tuple<int, int, int> key{idx.n, idx.k, idx.j};
    {
        std::lock_guard<std::mutex> lk(cache_mutex_);
        auto it = norm_cache_.find(key);
        if (it != norm_cache_.end()) return it->second;
    }
    const Parity p = dom_.t_symmetric()
                         ? ((idx.n - idx.k) % 2 == 0 ? Parity::Even : Parity::Odd)
                         : Parity::Any;
    ProfileRule r = profile_rule(dom_, w_, 2 * idx.n + 2, p);
    double acc = 0.0;
    for (size_t q = 0; q < r.s.size(); ++q) {
        const double v = radial_eval(idx, r.s[q] * r.s[q], r.t[q]) *
                         std::pow(r.s[q], idx.k);
        acc += r.w[q] * v * v;
    }
    std::lock_guard<std::mutex> lk(cache_mutex_);
    norm_cache_.emplace(key, acc);
    return acc;
}

double Basis::norm(const BasisIndex& idx) const {
    if (has_closed_norms()) return closed_norm(idx);
    return quadrature_norm(idx);
}

QuadratureRule Basis::rule(int degree, Parity parity) const {
    if (dom_.family == Family::Hyperboloid1b && parity == Parity::Any && dom_.fb > 0.0)
        throw capability_error(
            "hyperboloid1b: even and odd bases use different measures; pick a parity");
    ProfileRule pr = profile_rule(dom_, w_, degree, parity);
    QuadratureRule sph = sphere_rule(dom_.d, degree);
    QuadratureRule out;
    out.d = dom_.d;
    out.exactness_degree = degree;
    out.domain_tag = family_to_string(dom_.family);
    out.nodes.reserve(pr.s.size() * sph.nodes.size());
    for (size_t i = 0; i < pr.s.size(); ++i)
        for (size_t q = 0; q < sph.nodes.size(); ++q) {
            std::array<double, 4> node{};
            for (int c = 0; c < dom_.d; ++c) node[c] = pr.s[i] * sph.nodes[q][c];
            node[3] = pr.t[i];
            out.nodes.push_back(node);
            out.weights.push_back(pr.w[i] * sph.weights[q]);
        }
    return out;
}

double Basis::kernel_sum(int n, Parity parity, const double* x, double tx,
                         const double* y, double ty) const {
    double sum = 0.0;
    for (const BasisIndex& idx : enumerate(n, parity))
        sum += eval(idx, x, tx) * eval(idx, y, ty) / norm(idx);
    return sum;
}

EvalFn fullsym_lift(std::function<double(double, double)> f, Parity parity) {
    if (parity == Parity::Any)
        throw capability_error("fullsym_lift: parity must be even or odd");
    const bool odd = parity == Parity::Odd;
    return [f = std::move(f), odd](const double* x, double t) {
        // callers supply planar profile points as (s, t) with s in x[0]
        const double v = f(x[0] * x[0], t * t);
        return odd ? t * v : v;
    };
}

double Projection::eval(const Basis& basis, const double* x, double t) const {
    double acc = 0.0;
    for (size_t i = 0; i < indices.size(); ++i)
        acc += coefficients[i] * basis.eval(indices[i], x, t);
    return acc;
}

Projection project(const Basis& basis, const EvalFn& f, int N, int quad_degree) {
    Projection out;
    const bool split = basis.domain().t_symmetric();
    std::vector<Parity> parities;
    if (!split)
        parities.push_back(Parity::Any);
    else if (even_only(basis.domain().family))
        parities.push_back(Parity::Even);
    else {
        parities.push_back(Parity::Even);
        parities.push_back(Parity::Odd);
    }
    for (Parity p : parities) {
        QuadratureRule rule = basis.rule(quad_degree, p);
        // parity projection of the integrand (exact two-point split)
        EvalFn fp = f;
        if (split) {
            const double sign = (p == Parity::Odd) ? -1.0 : 1.0;
            fp = [&f, sign](const double* x, double t) {
                return 0.5 * (f(x, t) + sign * f(x, -t));
            };
        }
        for (int n = 0; n <= N; ++n) {
            for (const BasisIndex& idx : basis.enumerate(n, p)) {
                double num = 0.0;
                for (size_t i = 0; i < rule.nodes.size(); ++i)
                    num += rule.weights[i] * fp(rule.nodes[i].data(), rule.nodes[i][3]) *
                           basis.eval(idx, rule.nodes[i].data(), rule.nodes[i][3]);
                out.indices.push_back(idx);
                out.coefficients.push_back(num / basis.norm(idx));
            }
        }
    }
    return out;
}

}  // namespace revo

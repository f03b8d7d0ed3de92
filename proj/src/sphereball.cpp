#include "revo/sphereball.hpp"

#include <cmath>
#include <vector>

#include "revo/quadrature.hpp"
#include "revo/scalar.hpp"

namespace revo {

namespace {

double binom(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1.0);
    return r;
}

void check_unit(const double* xi, int d) {
    double s = 0.0;
    for (int i = 0; i < d; ++i) s += xi[i] * xi[i];
    if (std::abs(std::sqrt(s) - 1.0) > 1e-10)
        throw std::domain_error("sph_eval: input must be a unit vector");
}

// Associated Legendre P_k^m(z) (Condon-Shortley phase), m >= 0.
double assoc_legendre(int k, int m, double z) {
    if (m > k) return 0.0;
    // P_m^m = (-1)^m (2m-1)!! (1-z^2)^{m/2}
    double pmm = 1.0;
    if (m > 0) {
        const double somx2 = std::sqrt(std::max(0.0, (1.0 - z) * (1.0 + z)));
        double fact = 1.0;
        for (int i = 1; i <= m; ++i) {
            pmm *= -fact * somx2;
            fact += 2.0;
        }
    }
    if (k == m) return pmm;
    double pmmp1 = z * (2.0 * m + 1.0) * pmm;
    if (k == m + 1) return pmmp1;
    double pk = 0.0;
    for (int kk = m + 2; kk <= k; ++kk) {
        pk = ((2.0 * kk - 1.0) * z * pmmp1 - (kk + m - 1.0) * pmm) / (kk - m);
        pmm = pmmp1;
        pmmp1 = pk;
    }
    return pk;
}

// Orthonormal real harmonic in d = 3 with label ell mapped to order
// mo = ell - k - 1 in [-k, k]; normalized against dsigma/omega_3.
double sph3(int k, int ell, double x, double y, double z) {
    const int mo = ell - k - 1;
    const int m = std::abs(mo);
    const double r = std::sqrt(x * x + y * y + z * z);
    const double ct = (r > 0.0) ? z / r : 1.0;
    double lg = 0.0;
    for (int i = k - m + 1; i <= k + m; ++i) lg += std::log(static_cast<double>(i));
    const double norm = std::sqrt((2.0 * k + 1.0) * std::exp(-lg));
    const double p = assoc_legendre(k, m, ct);
    if (mo == 0) return norm * p;
    const double phi = std::atan2(y, x);
    const double trig = (mo > 0) ? std::cos(m * phi) : std::sin(m * phi);
    return std::sqrt(2.0) * norm * p * trig;
}

}  // namespace

int dim_harmonic(int k, int d) {
    if (k < 0 || d < 2) throw std::domain_error("dim_harmonic: need k >= 0, d >= 2");
    const double v = binom(k + d - 1, k) - (k >= 2 ? binom(k + d - 3, k - 2) : 0.0);
    return static_cast<int>(v + 0.5);
}

double sphere_surface_area(int d) {
    return 2.0 * std::pow(std::acos(-1.0), 0.5 * d) / std::tgamma(0.5 * d);
}

double sph_eval(const HarmonicIndex& h, const double* xi) {
    if (h.d != 2 && h.d != 3) throw std::domain_error("sph_eval: d must be 2 or 3");
    if (h.k < 0 || h.ell < 1 || h.ell > dim_harmonic(h.k, h.d))
        throw std::invalid_argument("sph_eval: label out of range");
    check_unit(xi, h.d);
    if (h.k == 0) return 1.0;
    if (h.d == 2) {
        const double th = std::atan2(xi[1], xi[0]);
        return std::sqrt(2.0) * (h.ell == 1 ? std::cos(h.k * th) : std::sin(h.k * th));
    }
    return sph3(h.k, h.ell, xi[0], xi[1], xi[2]);
}

double solid_sph_eval(const HarmonicIndex& h, const double* x) {
    if (h.d != 2 && h.d != 3) throw std::domain_error("solid_sph_eval: d must be 2 or 3");
    if (h.k < 0 || h.ell < 1 || h.ell > dim_harmonic(h.k, h.d))
        throw std::invalid_argument("solid_sph_eval: label out of range");
    if (h.k == 0) return 1.0;
    if (h.d == 2) {
        // sqrt(2) Re/Im (x1 + i x2)^k by the angle-sum recurrence.
        double c = x[0], s = x[1];
        for (int i = 1; i < h.k; ++i) {
            const double cn = x[0] * c - x[1] * s;
            const double sn = x[0] * s + x[1] * c;
            c = cn;
            s = sn;
        }
        return std::sqrt(2.0) * (h.ell == 1 ? c : s);
    }
    const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
    if (r == 0.0) return 0.0;
    return std::pow(r, h.k) * sph3(h.k, h.ell, x[0], x[1], x[2]);
}

double sph_addition(int d, int n, const double* xi, const double* eta) {
    if (d != 2 && d != 3) throw std::domain_error("sph_addition: d must be 2 or 3");
    check_unit(xi, d);
    check_unit(eta, d);
    double dot = 0.0;
    for (int i = 0; i < d; ++i) dot += xi[i] * eta[i];
    const double zonal = zonal_eval(n, 0.5 * (d - 2), dot);
    double sum = 0.0;
    for (int ell = 1; ell <= dim_harmonic(n, d); ++ell) {
        sum += sph_eval({d, n, ell}, xi) * sph_eval({d, n, ell}, eta);
    }
    if (std::abs(sum - zonal) > 1e-8 * std::max(1.0, std::abs(zonal)))
        throw std::runtime_error("sph_addition: basis sum disagrees with zonal kernel");
    return zonal;
}

double ball_op_eval(const BallIndex& b, const double* x) {
    if (!(b.mu > -0.5)) throw std::domain_error("ball_op_eval: mu must be > -1/2");
    if (b.n < 0 || b.m < 0 || 2 * b.m > b.n)
        throw std::invalid_argument("ball_op_eval: need 0 <= m <= n/2");
    const int k = b.n - 2 * b.m;
    double r2 = 0.0;
    for (int i = 0; i < b.d; ++i) r2 += x[i] * x[i];
    const double rad = jacobi_eval(b.m, {b.mu - 0.5, k + 0.5 * (b.d - 2)}, 2.0 * r2 - 1.0);
    return rad * solid_sph_eval({b.d, k, b.ell}, x);
}

double ball_norm(const BallIndex& b) {
    if (!(b.mu > -0.5)) throw std::domain_error("ball_norm: mu must be > -1/2");
    if (b.n < 0 || b.m < 0 || 2 * b.m > b.n)
        throw std::invalid_argument("ball_norm: need 0 <= m <= n/2");
    const int k = b.n - 2 * b.m;
    const double bk = k + 0.5 * (b.d - 2);
    return jacobi_norm(b.m, {b.mu - 0.5, bk}) * beta_fn(b.mu + 0.5, bk + 1.0) /
           beta_fn(b.mu + 0.5, 0.5 * b.d);
}

double ball_kernel(int d, double mu, int n, const double* x, const double* y) {
    if (mu < 0.0) throw std::domain_error("ball_kernel: mu must be >= 0");
    double rx2 = 0.0, ry2 = 0.0, dot = 0.0;
    for (int i = 0; i < d; ++i) {
        rx2 += x[i] * x[i];
        ry2 += y[i] * y[i];
        dot += x[i] * y[i];
    }
    const double ax = std::sqrt(std::max(0.0, 1.0 - rx2));
    const double ay = std::sqrt(std::max(0.0, 1.0 - ry2));
    const double lam = mu + 0.5 * (d - 1);
    if (mu == 0.0) {
        return 0.5 * (zonal_eval(n, lam, dot + ax * ay) + zonal_eval(n, lam, dot - ax * ay));
    }
    const int nq = n / 2 + 6;
    Rule1D r = gauss_jacobi_rule(nq, mu - 1.0, mu - 1.0);
    double mass = 0.0, val = 0.0;
    for (size_t i = 0; i < r.x.size(); ++i) {
        mass += r.w[i];
        val += r.w[i] * zonal_eval(n, lam, dot + r.x[i] * ax * ay);
    }
    return val / mass;
}

}  // namespace revo

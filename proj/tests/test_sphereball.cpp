#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "revo/quadrature.hpp"
#include "revo/scalar.hpp"
#include "revo/sphereball.hpp"

using namespace revo;

namespace {

std::array<double, 3> random_unit(std::mt19937& rng, int d) {
    std::normal_distribution<double> gauss;
    std::array<double, 3> v{0.0, 0.0, 0.0};
    double n2 = 0.0;
    do {
        n2 = 0.0;
        for (int i = 0; i < d; ++i) {
            v[i] = gauss(rng);
            n2 += v[i] * v[i];
        }
    } while (n2 < 1e-12);
    const double n = std::sqrt(n2);
    for (int i = 0; i < d; ++i) v[i] /= n;
    return v;
}

// Rule for the unit-mass ball weight (1-||x||^2)^{mu-1/2}: radial
// Gauss-Jacobi in u = r^2 times a sphere rule.
QuadratureRule ball_rule(int d, double mu, int degree) {
    Rule1D ru = gauss_jacobi01(degree / 2 + 3, 0.5 * (d - 2), mu - 0.5);
    QuadratureRule sph = sphere_rule(d, degree);
    QuadratureRule r;
    r.d = d;
    r.exactness_degree = degree;
    r.domain_tag = "ball";
    double mass = 0.0;
    for (double w : ru.w) mass += w;
    for (size_t iu = 0; iu < ru.x.size(); ++iu) {
        const double rad = std::sqrt(ru.x[iu]);
        for (size_t q = 0; q < sph.nodes.size(); ++q) {
            std::array<double, 4> node{};
            for (int i = 0; i < d; ++i) node[i] = rad * sph.nodes[q][i];
            r.nodes.push_back(node);
            r.weights.push_back(ru.w[iu] / mass * sph.weights[q]);
        }
    }
    return r;
}

}  // namespace

TEST_CASE("harmonic dimensions") {
    CHECK(dim_harmonic(0, 2) == 1);
    CHECK(dim_harmonic(0, 3) == 1);
    for (int k = 1; k <= 10; ++k) {
        CHECK(dim_harmonic(k, 2) == 2);
        CHECK(dim_harmonic(k, 3) == 2 * k + 1);
    }
}

TEST_CASE("orthonormality of harmonics") {
    for (int d : {2, 3}) {
        QuadratureRule r = sphere_rule(d, 18);
        std::vector<EvalFn> fns;
        for (int k = 0; k <= 8; ++k)
            for (int ell = 1; ell <= dim_harmonic(k, d); ++ell)
                fns.push_back([d, k, ell](const double* x, double) {
                    return sph_eval({d, k, ell}, x);
                });
        auto g = gram(fns, r);
        for (size_t i = 0; i < fns.size(); ++i)
            CHECK(g[i][i] == doctest::Approx(1.0).epsilon(1e-11));
        CHECK(max_offdiagonal(g) < 1e-11);
    }
}

TEST_CASE("solid harmonics") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    // homogeneous extension agrees with r^k times the restriction
    for (int d : {2, 3})
        for (int it = 0; it < 30; ++it) {
            std::array<double, 3> x{uni(rng), uni(rng), d == 3 ? uni(rng) : 0.0};
            double r2 = 0.0;
            for (int i = 0; i < d; ++i) r2 += x[i] * x[i];
            const double r = std::sqrt(r2);
            std::array<double, 3> xi = x;
            for (int i = 0; i < d; ++i) xi[i] /= r;
            for (int k = 0; k <= 5; ++k)
                for (int ell = 1; ell <= dim_harmonic(k, d); ++ell) {
                    const double a = solid_sph_eval({d, k, ell}, x.data());
                    const double b = std::pow(r, k) * sph_eval({d, k, ell}, xi.data());
                    CHECK(a == doctest::Approx(b).epsilon(1e-12));
                }
        }
    // explicit degree-2 case in the plane
    const double x1 = 0.37, x2 = -0.61;
    double p[2] = {x1, x2};
    CHECK(solid_sph_eval({2, 2, 1}, p) ==
          doctest::Approx(std::sqrt(2.0) * (x1 * x1 - x2 * x2)).epsilon(1e-13));
    double origin[3] = {0.0, 0.0, 0.0};
    CHECK(solid_sph_eval({3, 4, 2}, origin) == 0.0);
}

TEST_CASE("addition formula") {
    std::mt19937 rng(11);
    for (int d : {2, 3})
        for (int n = 0; n <= 10; ++n)
            for (int it = 0; it < 20; ++it) {
                auto xi = random_unit(rng, d);
                auto eta = random_unit(rng, d);
                CHECK_NOTHROW(sph_addition(d, n, xi.data(), eta.data()));
            }
    // same point: kernel value is the dimension of the harmonic space
    auto xi = random_unit(rng, 3);
    for (int n = 0; n <= 6; ++n)
        CHECK(sph_addition(3, n, xi.data(), xi.data()) ==
              doctest::Approx(2.0 * n + 1.0).epsilon(1e-12));
    const double th = 0.9;
    double a[2] = {1.0, 0.0}, b[2] = {std::cos(th), std::sin(th)};
    CHECK(sph_addition(2, 3, a, b) == doctest::Approx(2.0 * std::cos(3.0 * th)));
}

TEST_CASE("ball basis orthogonality and norms") {
    for (int d : {2, 3})
        for (double mu : {0.5, 1.25}) {
            QuadratureRule r = ball_rule(d, mu, 14);
            std::vector<EvalFn> fns;
            std::vector<double> norms;
            for (int n = 0; n <= 6; ++n)
                for (int m = 0; 2 * m <= n; ++m)
                    for (int ell = 1; ell <= dim_harmonic(n - 2 * m, d); ++ell) {
                        BallIndex b{d, mu, n, m, ell};
                        fns.push_back([b](const double* x, double) {
                            return ball_op_eval(b, x);
                        });
                        norms.push_back(ball_norm(b));
                    }
            auto g = gram(fns, r);
            CHECK(max_offdiagonal(g) < 1e-9);
            for (size_t i = 0; i < fns.size(); ++i)
                CHECK(g[i][i] == doctest::Approx(norms[i]).epsilon(1e-9));
        }
}

TEST_CASE("ball kernel") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> uni(-0.6, 0.6);
    for (int d : {2, 3})
        for (double mu : {0.0, 0.5, 1.0})
            for (int n = 0; n <= 4; ++n) {
                double x[3] = {uni(rng), uni(rng), d == 3 ? uni(rng) : 0.0};
                double y[3] = {uni(rng), uni(rng), d == 3 ? uni(rng) : 0.0};
                const double closed = ball_kernel(d, mu, n, x, y);
                // basis-sum oracle
                double sum = 0.0;
                for (int m = 0; 2 * m <= n; ++m)
                    for (int ell = 1; ell <= dim_harmonic(n - 2 * m, d); ++ell) {
                        BallIndex b{d, mu, n, m, ell};
                        sum += ball_op_eval(b, x) * ball_op_eval(b, y) / ball_norm(b);
                    }
                CHECK(closed == doctest::Approx(sum).epsilon(1e-8));
            }
    // boundary collapse
    double xb[3] = {1.0, 0.0, 0.0};
    for (int n = 0; n <= 5; ++n)
        CHECK(ball_kernel(3, 0.75, n, xb, xb) ==
              doctest::Approx(zonal_eval(n, 0.75 + 1.0, 1.0)).epsilon(1e-10));
}

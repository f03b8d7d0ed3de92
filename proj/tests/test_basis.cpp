#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "revo/basis.hpp"
#include "revo/scalar.hpp"
#include "revo/sphereball.hpp"

using namespace revo;

namespace {

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Gram check of the basis up to degree nmax on one parity slice; verifies
// off-diagonal decay and diagonal agreement with the reported norms.
void check_gram(const Basis& basis, int nmax, Parity parity, double tol_off,
                double tol_diag) {
    QuadratureRule r = basis.rule(2 * nmax + 2, parity);
    for (size_t i = 0; i < r.nodes.size(); ++i)
        REQUIRE(basis.domain().contains(r.nodes[i].data(), r.nodes[i][3]));
    std::vector<EvalFn> fns;
    std::vector<double> norms;
    for (const BasisIndex& idx : basis.enumerate_upto(nmax, parity)) {
        fns.push_back([&basis, idx](const double* x, double t) {
            return basis.eval(idx, x, t);
        });
        norms.push_back(basis.norm(idx));
    }
    auto g = gram(fns, r);
    CHECK(max_offdiagonal(g) < tol_off);
    for (size_t i = 0; i < fns.size(); ++i)
        CHECK(g[i][i] == doctest::Approx(norms[i]).epsilon(tol_diag));
}

}  // namespace

TEST_CASE("enumeration counts") {
    Basis dc({Family::DoubleCone, 2}, {0.0, 0.0, 0.0, 0.5, 0.0, 0.0});
    for (int n = 0; n <= 12; ++n) {
        CHECK(static_cast<long long>(dc.enumerate(n, Parity::Any).size()) ==
              binom(n + 2, 2));
        long long even = 0, odd = 0;
        for (int m = 0; 2 * m <= n; ++m) even += binom(n - 2 * m + 1, 1);
        for (int m = 0; 2 * m + 1 <= n; ++m) odd += binom(n - 2 * m, 1);
        CHECK(static_cast<long long>(dc.enumerate(n, Parity::Even).size()) == even);
        CHECK(static_cast<long long>(dc.enumerate(n, Parity::Odd).size()) == odd);
    }
    Basis dc3({Family::DoubleCone, 3}, {0.0, 0.0, 0.0, 0.5, 0.0, 0.0});
    for (int n = 0; n <= 8; ++n)
        CHECK(static_cast<long long>(dc3.enumerate(n, Parity::Any).size()) ==
              binom(n + 3, 3));
    // frozen case: degree 4, d = 2, even slice
    CHECK(dc.enumerate(4, Parity::Even).size() == 9);
}

TEST_CASE("cylinder gram") {
    Basis b({Family::Cylinder, 2}, {0.25, 0.0, 0.0, 0.0, 0.75, 0.5});
    check_gram(b, 5, Parity::Any, 1e-10, 1e-9);
    // lambda = 0 runs through the Chebyshev branch
    Basis b0({Family::Cylinder, 2}, {0.0, 0.0, 0.0, 0.0, 0.5, 0.0});
    check_gram(b0, 5, Parity::Any, 1e-10, 1e-9);
    Basis b3({Family::Cylinder, 3}, {0.5, 0.0, 0.0, 0.0, 1.0, 1.5});
    check_gram(b3, 3, Parity::Any, 1e-10, 1e-9);
}

TEST_CASE("cone gram") {
    Basis b({Family::Cone, 2}, {0.0, 0.3, 0.7, 0.0, 0.5, 0.0});
    check_gram(b, 5, Parity::Any, 1e-10, 1e-9);
    Basis b2({Family::Cone, 2}, {0.25, 0.0, 0.0, 0.0, 1.0, 0.0});
    check_gram(b2, 5, Parity::Any, 1e-10, 1e-9);
    Basis b3({Family::Cone, 3}, {0.0, 0.5, 0.5, 0.0, 0.5, 0.0});
    check_gram(b3, 3, Parity::Any, 1e-10, 1e-9);
}

TEST_CASE("coupled cone gram") {
    Basis b({Family::CoupledCone, 2}, {0.0, 0.5, 0.0, 0.0, 0.0, 0.0});
    check_gram(b, 5, Parity::Any, 1e-9, 1e-8);
    Basis b3({Family::CoupledCone, 3}, {0.5, 0.5, 0.0, 0.0, 0.0, 0.0});
    check_gram(b3, 3, Parity::Any, 1e-9, 1e-8);
    // rule is restricted to even integer exponent combinations
    Basis bad({Family::CoupledCone, 2}, {0.3, 0.4, 0.0, 0.0, 0.0, 0.0});
    CHECK_THROWS_AS(bad.rule(4), capability_error);
}

TEST_CASE("paraboloid gram") {
    Basis b({Family::Paraboloid, 2}, {0.2, 0.4, 0.6, 0.0, 0.0, 0.0});
    check_gram(b, 5, Parity::Any, 1e-10, 1e-9);
    Basis b3({Family::Paraboloid, 3}, {0.0, 0.25, 0.5, 0.0, 0.0, 0.0});
    check_gram(b3, 3, Parity::Any, 1e-10, 1e-9);
}

TEST_CASE("double cone gram") {
    Basis b({Family::DoubleCone, 2}, {0.3, 0.25, 0.4, 0.6, 0.0, 0.0});
    check_gram(b, 5, Parity::Any, 1e-10, 1e-9);
    check_gram(b, 5, Parity::Even, 1e-10, 1e-9);
    check_gram(b, 5, Parity::Odd, 1e-10, 1e-9);
    Basis b3({Family::DoubleCone, 3}, {0.0, 0.5, 0.0, 0.5, 0.0, 0.0});
    check_gram(b3, 3, Parity::Any, 1e-10, 1e-9);
}

TEST_CASE("capped cylinder gram") {
    Basis bq({Family::CappedCylinderQuadratic, 2, 0.625, 0.0625},
             {0.3, 0.2, 0.4, 0.1, 0.0, 0.0});
    check_gram(bq, 5, Parity::Even, 1e-10, 1e-9);
    Basis be({Family::CappedCylinderEllipsoid, 2, 1.0, 0.5},
             {0.0, 0.5, 0.25, 0.75, 0.0, 0.0});
    check_gram(be, 5, Parity::Even, 1e-10, 1e-9);
    Basis bq3({Family::CappedCylinderQuadratic, 3, 0.625, 0.0625},
              {0.0, 0.0, 0.5, 0.5, 0.0, 0.0});
    check_gram(bq3, 3, Parity::Even, 1e-10, 1e-9);
    CHECK_THROWS_AS(bq.enumerate(3, Parity::Any), capability_error);
    CHECK_THROWS_AS(bq.enumerate(3, Parity::Odd), capability_error);
}

TEST_CASE("mapped families gram") {
    const WeightSpec w{0.3, 0.25, 0.4, 0.6, 0.0, 0.0};
    for (double a : {0.5, 2.0}) {
        Basis b({Family::DoubleConic, 2, a, 0.0}, w);
        check_gram(b, 5, Parity::Even, 1e-10, 1e-9);
    }
    Basis h({Family::Hyperboloid1b, 2, 1.0, 0.1}, w);
    check_gram(h, 5, Parity::Even, 1e-10, 1e-9);
    check_gram(h, 5, Parity::Odd, 1e-10, 1e-9);
    Basis dh({Family::DoubleHyperbolic, 2, 0.625, 0.125}, w);
    check_gram(dh, 5, Parity::Even, 1e-10, 1e-9);
    Basis el({Family::EllipsoidLens, 2, 1.0, 0.5}, w);
    check_gram(el, 5, Parity::Even, 1e-10, 1e-9);
    Basis dc3({Family::DoubleConic, 3, 2.0, 0.0}, {0.0, 0.5, 0.0, 0.5, 0.0, 0.0});
    check_gram(dc3, 3, Parity::Even, 1e-10, 1e-9);
    CHECK_THROWS_AS(dh.enumerate(3, Parity::Odd), capability_error);
    CHECK_THROWS_AS(h.rule(4, Parity::Any), capability_error);
}

TEST_CASE("mapped norms match the base family") {
    const WeightSpec w{0.2, 0.3, 0.4, 0.5, 0.0, 0.0};
    Basis base({Family::DoubleCone, 2}, w);
    for (Family f : {Family::DoubleConic, Family::Hyperboloid1b,
                     Family::DoubleHyperbolic, Family::EllipsoidLens}) {
        DomainSpec dom{f, 2, 1.0, 0.0};
        if (f == Family::DoubleConic) dom.fa = 0.5;
        if (f == Family::Hyperboloid1b) dom.fb = 0.1;
        if (f == Family::DoubleHyperbolic) { dom.fa = 0.625; dom.fb = 0.125; }
        if (f == Family::EllipsoidLens) { dom.fa = 1.0; dom.fb = 0.5; }
        Basis b(dom, w);
        for (const BasisIndex& idx : b.enumerate_upto(6, Parity::Even))
            CHECK(b.norm(idx) == doctest::Approx(base.norm(idx)).epsilon(1e-14));
    }
}

TEST_CASE("profile evaluation is consistent with the full element") {
    Basis b({Family::DoubleCone, 2}, {0.1, 0.2, 0.3, 0.4, 0.0, 0.0});
    const double s = 0.41, t = 0.73;
    double x[2] = {s, 0.0};
    for (const BasisIndex& idx : b.enumerate_upto(5, Parity::Any)) {
        const double angular = idx.k == 0 ? 1.0 : std::sqrt(2.0);
        // at (s, 0) the harmonic factor of ell = 1 reduces to sqrt(2) s^k
        if (idx.ell != 1) continue;
        CHECK(b.eval(idx, x, t) ==
              doctest::Approx(b.profile_eval(idx, s, t) * angular).epsilon(1e-12));
    }
}

TEST_CASE("parity of the elements") {
    Basis b({Family::Cylinder, 2}, {0.0, 0.0, 0.0, 0.0, 0.5, 0.5});
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> uni(-0.7, 0.7);
    for (int it = 0; it < 10; ++it) {
        double x[2] = {uni(rng), uni(rng)};
        const double t = uni(rng);
        for (const BasisIndex& idx : b.enumerate_upto(5, Parity::Any)) {
            const double sgn = idx.parity == Parity::Odd ? -1.0 : 1.0;
            CHECK(b.eval(idx, x, -t) ==
                  doctest::Approx(sgn * b.eval(idx, x, t)).epsilon(1e-11));
        }
    }
}

TEST_CASE("parity requests on asymmetric families fail") {
    Basis cone({Family::Cone, 2}, {0.0, 0.0, 0.0, 0.0, 0.5, 0.0});
    CHECK_THROWS_AS(cone.enumerate(3, Parity::Even), capability_error);
    Basis par({Family::Paraboloid, 2}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0});
    CHECK_THROWS_AS(par.enumerate(3, Parity::Odd), capability_error);
}

TEST_CASE("weight validation") {
    CHECK_THROWS_AS(Basis({Family::Cylinder, 2}, {-1.5, 0, 0, 0, 0.5, 0.5}),
                    std::domain_error);
    CHECK_THROWS_AS(Basis({Family::DoubleCone, 2}, {0, -1.5, 0, 0.5, 0, 0}),
                    std::domain_error);
    CHECK_THROWS_AS((DomainSpec{Family::DoubleHyperbolic, 2, 0.5, 0.7}.validate()),
                    std::domain_error);
    CHECK_THROWS_AS((DomainSpec{Family::Cylinder, 5}.validate()), std::domain_error);
}

TEST_CASE("kernel sum diagonal positivity") {
    Basis b({Family::DoubleCone, 2}, {0.0, 0.5, 0.0, 0.5, 0.0, 0.0});
    double x[2] = {0.2, -0.1};
    const double t = 0.6;
    for (int n = 0; n <= 4; ++n)
        CHECK(b.kernel_sum(n, Parity::Any, x, t, x, t) > 0.0);
}

TEST_CASE("projection reproduces polynomials") {
    Basis b({Family::DoubleCone, 2}, {0.0, 0.5, 0.25, 0.5, 0.0, 0.0});
    // degree-3 target with mixed parity
    EvalFn f = [](const double* x, double t) {
        return 1.0 + x[0] - 2.0 * x[1] * t + x[0] * x[0] * t + t * t * t - 0.5 * t;
    };
    Projection pr = project(b, f, 3, 12);
    std::mt19937 rng(19);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int it = 0; it < 50; ++it) {
        const double t = 2.0 * uni(rng) - 1.0;
        const double s = std::abs(t) * std::sqrt(uni(rng));
        const double ph = 2.0 * std::acos(-1.0) * uni(rng);
        double x[2] = {s * std::cos(ph), s * std::sin(ph)};
        CHECK(pr.eval(b, x, t) == doctest::Approx(f(x, t)).epsilon(1e-10));
    }
    // parity split is clean: even coefficients only from the even part
    EvalFn fe = [](const double* x, double t) { return x[0] + t * t; };
    Projection pe = project(b, fe, 3, 12);
    for (size_t i = 0; i < pe.indices.size(); ++i)
        if (pe.indices[i].parity == Parity::Odd)
            CHECK(std::abs(pe.coefficients[i]) < 1e-12);
}

TEST_CASE("fullsym lift") {
    auto even = fullsym_lift([](double u, double v) { return u + 2.0 * v; },
                             Parity::Even);
    auto odd = fullsym_lift([](double u, double v) { return u + 2.0 * v; },
                            Parity::Odd);
    double x[1] = {0.3};
    CHECK(even(x, -0.5) == doctest::Approx(0.09 + 0.5));
    CHECK(odd(x, -0.5) == doctest::Approx(-0.5 * (0.09 + 0.5)));
    CHECK_THROWS_AS(fullsym_lift([](double, double) { return 0.0; }, Parity::Any),
                    capability_error);
}

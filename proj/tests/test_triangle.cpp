#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "revo/quadrature.hpp"
#include "revo/scalar.hpp"
#include "revo/triangle.hpp"

using namespace revo;

namespace {

// Tensorized simplex rule via u = (1-v) w; integrates the weight
// u^a v^b (1-u-v)^g (1-v)^th exactly; weights are normalized to unit mass.
struct SimplexRule {
    std::vector<double> u, v, w;
};

SimplexRule simplex_rule(const TriangleParams& p, int nq) {
    Rule1D rv = gauss_jacobi01(nq, p.beta, p.alpha + p.gamma + p.theta + 1.0);
    Rule1D rw = gauss_jacobi01(nq, p.alpha, p.gamma);
    SimplexRule r;
    double mass = 0.0;
    for (size_t iv = 0; iv < rv.x.size(); ++iv)
        for (size_t iw = 0; iw < rw.x.size(); ++iw) {
            r.v.push_back(rv.x[iv]);
            r.u.push_back((1.0 - rv.x[iv]) * rw.x[iw]);
            r.w.push_back(rv.w[iv] * rw.w[iw]);
            mass += r.w.back();
        }
    for (double& wi : r.w) wi /= mass;
    return r;
}

}  // namespace

TEST_CASE("triangle basics") {
    TriangleParams p{0.5, 0.25, 1.0};
    CHECK(tri_eval(TriVariant::T, 0, 0, p, 0.3, 0.4) == 1.0);
    CHECK(tri_norm(TriVariant::T, 0, 0, p) == doctest::Approx(1.0));
    CHECK_THROWS_AS(tri_eval(TriVariant::T, 3, 2, p, 0.1, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(tri_eval(TriVariant::T, 0, 0, {-2.0, 0.0, 0.0}, 0.1, 0.1),
                    std::domain_error);

    TriangleParams p0{0.0, 0.0, 0.0};
    CHECK(tri_eval(TriVariant::T, 1, 2, p0, 0.2, 0.3) ==
          doctest::Approx(0.15).epsilon(1e-12));
    CHECK(tri_norm(TriVariant::T, 1, 2, p0) ==
          doctest::Approx(1.0 / 9.0).epsilon(1e-12));
}

TEST_CASE("permutation identities") {
    TriangleParams p{0.4, 0.7, 1.2};
    TriangleParams ps{p.gamma, p.alpha, p.beta};
    TriangleParams pr{p.beta, p.gamma, p.alpha};
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int it = 0; it < 100; ++it) {
        double u = uni(rng), v = uni(rng);
        if (u + v > 1.0) {
            u = 1.0 - u;
            v = 1.0 - v;
        }
        for (int m = 0; m <= 4; ++m)
            for (int j = 0; j <= m; ++j) {
                const double s = tri_eval(TriVariant::S, j, m, p, u, v);
                const double t1 = tri_eval(TriVariant::T, j, m, ps, 1.0 - u - v, u);
                CHECK(std::abs(s - t1) < 1e-13 * std::max(1.0, std::abs(t1)));
                const double r = tri_eval(TriVariant::R, j, m, p, u, v);
                const double t2 = tri_eval(TriVariant::T, j, m, pr, v, 1.0 - u - v);
                CHECK(std::abs(r - t2) < 1e-13 * std::max(1.0, std::abs(t2)));
            }
    }
}

TEST_CASE("removable singularity at v = 1") {
    TriangleParams p{0.3, 0.5, 0.8};
    for (int m = 1; m <= 5; ++m)
        for (int j = 1; j <= m; ++j) {
            const double a = tri_eval(TriVariant::T, j, m, p, 0.0, 1.0 - 1e-15);
            const double b = tri_eval(TriVariant::T, j, m, p, 0.0, 1.0);
            CHECK(std::abs(a - b) < 1e-10 * std::max(1.0, std::abs(b)));
        }
}

TEST_CASE("orthogonality and norms on the simplex") {
    const TriangleParams grid[] = {
        {0.0, 0.0, 0.0}, {1.0, 0.5, 2.0}, {-0.5, 0.3, 0.7}};
    for (const auto& p : grid) {
        SimplexRule r = simplex_rule(p, 24);
        for (auto variant : {TriVariant::T, TriVariant::S, TriVariant::R}) {
            std::vector<std::pair<int, int>> idx;
            for (int m = 0; m <= 6; ++m)
                for (int j = 0; j <= m; ++j) idx.emplace_back(j, m);
            std::vector<std::vector<double>> vals;
            for (auto [j, m] : idx) {
                std::vector<double> vv(r.u.size());
                for (size_t q = 0; q < r.u.size(); ++q)
                    vv[q] = tri_eval(variant, j, m, p, r.u[q], r.v[q]);
                vals.push_back(std::move(vv));
            }
            for (size_t i = 0; i < idx.size(); ++i) {
                double diag = 0.0;
                for (size_t q = 0; q < r.u.size(); ++q)
                    diag += r.w[q] * vals[i][q] * vals[i][q];
                const double closed = tri_norm(variant, idx[i].first, idx[i].second, p);
                CHECK(diag == doctest::Approx(closed).epsilon(1e-8));
                for (size_t l = 0; l < i; ++l) {
                    double ip = 0.0, dl = 0.0;
                    for (size_t q = 0; q < r.u.size(); ++q) {
                        ip += r.w[q] * vals[i][q] * vals[l][q];
                        dl += r.w[q] * vals[l][q] * vals[l][q];
                    }
                    CHECK(std::abs(ip) / std::sqrt(diag * dl) < 1e-9);
                }
            }
        }
    }
}

TEST_CASE("four-parameter variant") {
    TriangleParams p{0.4, 0.2, 0.9, 0.6};
    SimplexRule r = simplex_rule(p, 24);
    std::vector<std::pair<int, int>> idx;
    for (int m = 0; m <= 4; ++m)
        for (int j = 0; j <= m; ++j) idx.emplace_back(j, m);
    for (size_t i = 0; i < idx.size(); ++i) {
        double diag = 0.0;
        std::vector<double> vi(r.u.size());
        for (size_t q = 0; q < r.u.size(); ++q) {
            vi[q] = tri_eval(TriVariant::T4, idx[i].first, idx[i].second, p, r.u[q], r.v[q]);
            diag += r.w[q] * vi[q] * vi[q];
        }
        CHECK(tri_norm(TriVariant::T4, idx[i].first, idx[i].second, p) ==
              doctest::Approx(diag).epsilon(1e-9));
        for (size_t l = 0; l < i; ++l) {
            double ip = 0.0, dl = 0.0;
            for (size_t q = 0; q < r.u.size(); ++q) {
                const double vl = tri_eval(TriVariant::T4, idx[l].first, idx[l].second,
                                           p, r.u[q], r.v[q]);
                ip += r.w[q] * vi[q] * vl;
                dl += r.w[q] * vl * vl;
            }
            CHECK(std::abs(ip) / std::sqrt(diag * dl) < 1e-9);
        }
    }
}

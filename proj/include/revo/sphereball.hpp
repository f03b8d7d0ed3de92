#pragma once

#include <stdexcept>

// Real orthonormal spherical harmonics on S^{d-1} for d in {2,3}, the zonal
// addition formula, and classical orthogonal polynomials on the unit ball.

namespace revo {

struct HarmonicIndex {
    int d;    // ambient dimension, 2 or 3
    int k;    // harmonic degree >= 0
    int ell;  // label, 1 .. dim_harmonic(k, d)
};

struct BallIndex {
    int d;
    double mu;  // weight exponent, > -1/2
    int n;      // total degree
    int m;      // radial index, 0 <= m <= n/2
    int ell;    // harmonic label for degree n - 2m
};

// dim of the space of spherical harmonics of degree k in d variables.
int dim_harmonic(int k, int d);

// Surface area of S^{d-1}.
double sphere_surface_area(int d);

// Orthonormal real harmonic at a unit vector: (1/omega_d) int Y Y' = delta.
double sph_eval(const HarmonicIndex& h, const double* xi);

// ||x||^k sph_eval(h, x/||x||), finite at x = 0.
double solid_sph_eval(const HarmonicIndex& h, const double* x);

// Sum_ell Y_ell^n(xi) Y_ell^n(eta); asserted equal to
// Z_n^{(d-2)/2}(<xi,eta>) internally.
double sph_addition(int d, int n, const double* xi, const double* eta);

// Ball basis element P_m^{(mu-1/2, n-2m+(d-2)/2)}(2||x||^2-1) Y_ell^{n-2m}(x).
double ball_op_eval(const BallIndex& b, const double* x);

// Squared norm of the element under the unit-mass ball weight
// (1-||x||^2)^{mu-1/2}.
double ball_norm(const BallIndex& b);

// Degree-n reproducing kernel on the ball via the one-fold integral with
// Z_n^{mu+(d-1)/2}; mu = 0 uses the two-endpoint limit rule.
double ball_kernel(int d, double mu, int n, const double* x, const double* y);

}  // namespace revo

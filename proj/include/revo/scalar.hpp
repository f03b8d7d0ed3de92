#pragma once

#include <stdexcept>
#include <utility>

// Classical one-variable orthogonal polynomials: Jacobi, Gegenbauer and
// generalized Gegenbauer, together with their normalization constants and
// L2 norms under unit-mass weights.

namespace revo {

struct JacobiPair {
    double alpha;
    double beta;

    void validate() const {
        if (!(alpha > -1.0) || !(beta > -1.0))
            throw std::domain_error("JacobiPair: alpha and beta must be > -1");
    }
};

struct GenGegenPair {
    double lambda;
    double mu;

    void validate() const {
        if (!(lambda > -0.5) || !(mu > -0.5))
            throw std::domain_error("GenGegenPair: lambda and mu must be > -1/2");
    }
};

// (a)_n, computed as a plain product; safe for the moderate n used here.
double pochhammer(double a, int n);

// Euler Beta function, computed in log space.
double beta_fn(double a, double b);

// P_n^{(alpha,beta)}(t) by forward three-term recurrence. Arguments with
// |t| <= 1 + 1e-12 are clamped onto [-1,1]; larger |t| evaluates the
// polynomial as-is (global analytic continuation of the recurrence).
double jacobi_eval(int n, const JacobiPair& p, double t);

// h_n^{(alpha,beta)}: squared L2 norm of P_n under the unit-mass weight
// c'_{alpha,beta} (1-t)^alpha (1+t)^beta on [-1,1].
double jacobi_norm(int n, const JacobiPair& p);

// Returns (c_prime, c) with c = Gamma(a+b+2)/(Gamma(a+1)Gamma(b+1)) and
// c_prime = c / 2^{a+b+1}.
std::pair<double, double> jacobi_normalizer(const JacobiPair& p);

// Plain Gegenbauer C_n^{lambda}(t), lambda > -1/2, lambda != 0.
double gegenbauer_eval(int n, double lambda, double t);

// Generalized Gegenbauer C_n^{(lambda,mu)}(t), orthogonal for
// |t|^{2 mu} (1-t^2)^{lambda-1/2} on [-1,1].
double gen_gegenbauer_eval(int n, const GenGegenPair& g, double t);

// Squared norm of C_n^{(lambda,mu)} under the unit-mass version of the
// weight above.
double gen_gegenbauer_norm(int n, const GenGegenPair& g);

// Zonal kernel Z_n^{lambda}(t) = ((n+lambda)/lambda) C_n^{lambda}(t) for
// lambda > 0; the lambda = 0 branch is the Chebyshev limit 2 T_n(t)
// (1 for n = 0), evaluated by recurrence.
double zonal_eval(int n, double lambda, double t);

// Homogenized Jacobi polynomial q^j P_j^{(a,b)}((2p - q)/q), a polynomial
// in (p, q); evaluated by a homogenized recurrence so that q = 0 is clean.
double jacobi_homog(int j, double a, double b, double p, double q);

}  // namespace revo

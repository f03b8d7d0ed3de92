#pragma once

#include "revo/domain.hpp"

// Closed integral representations of the degree-n reproducing kernels on the
// cone, the double cone and the mapped domains, normalized so the degree-0
// kernel is 1.

namespace revo {

// Kernel of the degree-n space on the cone for the weight
// (1-t)^gamma (t^2 - ||x||^2)^{mu - 1/2}; mu >= 0, gamma >= -1/2,
// with the mu = 0 and gamma = -1/2 cases handled as endpoint limits.
// nq = 0 picks an automatic number of auxiliary quadrature nodes.
double cone_kernel(int d, double mu, double gamma, int n, const double* x,
                   double t, const double* y, double s, int nq = 0);

// Even-parity kernel on the double cone for the exponent pair (beta, gamma)
// with theta fixed at 1/2; beta, gamma >= -1/2 (limits included).
double doublecone_even_kernel(int d, double beta, double gamma, int n,
                              const double* x, double t, const double* y,
                              double s, int nq = 0);

// Even-parity kernel on a mapped domain: the double-cone formula evaluated
// at the z-mapped axial coordinates. dom must be one of the mapped families.
double mapped_even_kernel(const DomainSpec& dom, double beta, double gamma,
                          int n, const double* x, double t, const double* y,
                          double s, int nq = 0);

// Both sides of the odd/even kernel relation on the double cone for the
// exponents (beta, gamma, theta): the odd kernel at degree n, and
// (alpha+beta+3/2)/(alpha+1/2) * s * t times the even kernel of degree n-1
// with theta raised by one, alpha = gamma + theta + d/2. Both sides are
// computed as explicit basis sums.
struct OddEvenPair {
    double odd_kernel;
    double relation_value;
};
OddEvenPair oddeven_relation(int d, double beta, double gamma, double theta,
                             int n, const double* x, double t, const double* y,
                             double s);

}  // namespace revo

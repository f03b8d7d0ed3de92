#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

// Gauss-Jacobi rules (Golub-Welsch), sphere rules, product rules on the
// revolution domains, and Gram-matrix assembly.

namespace revo {

// A scalar function on points (x, t) of a revolution domain; x has up to
// three used components depending on the ambient dimension d.
using EvalFn = std::function<double(const double* x, double t)>;

struct Rule1D {
    std::vector<double> x;
    std::vector<double> w;
};

// Nodes/weights on [lo, hi] integrating (hi-x)^a (x-lo)^b exactly against
// polynomials of degree <= 2m-1; weights carry the full Beta mass.
Rule1D gauss_jacobi_rule(int m, double a, double b, double lo = -1.0, double hi = 1.0);

// Convenience: weight u^{e0} (1-u)^{e1} on [0,1].
Rule1D gauss_jacobi01(int m, double e0, double e1);

// Gauss-Legendre on [-1,1].
Rule1D gauss_legendre(int m);

struct QuadratureRule {
    // node i: (x_1, x_2, x_3, t); unused coordinates are zero.
    std::vector<std::array<double, 4>> nodes;
    std::vector<double> weights;
    int exactness_degree = 0;
    int d = 2;
    std::string domain_tag;

    double integrate(const EvalFn& f) const;
};

// Rule on the unit sphere S^{d-1} (d = 2 or 3), normalized so that the
// weights sum to 1 (measure dsigma/omega_d); exact for polynomials of
// total degree <= degree.
QuadratureRule sphere_rule(int d, int degree);

// Gram matrix G_ij = integral of f_i f_j against the rule, row-major.
std::vector<std::vector<double>> gram(const std::vector<EvalFn>& fns,
                                      const QuadratureRule& rule);

// Largest |G_ij| / sqrt(G_ii G_jj) over i != j.
double max_offdiagonal(const std::vector<std::vector<double>>& g);

}  // namespace revo

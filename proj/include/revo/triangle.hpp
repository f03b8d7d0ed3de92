#pragma once

#include <stdexcept>

// Jacobi polynomials on the triangle {(u,v): u,v >= 0, u+v <= 1}: the three
// permuted bases T, S, R and the four-parameter variant T4, with norms.

namespace revo {

struct TriangleParams {
    double alpha;
    double beta;
    double gamma;
    double theta = 0.0;

    void validate() const {
        if (!(alpha > -1.0) || !(beta > -1.0) || !(gamma > -1.0) || !(theta > -1.0))
            throw std::domain_error("TriangleParams: exponents must be > -1");
    }
};

enum class TriVariant { T, S, R, T4 };

// Value of the basis polynomial at (u, v); total degree m. Finite
// everywhere (the rational factors are evaluated in homogenized form).
double tri_eval(TriVariant variant, int j, int m, const TriangleParams& p,
                double u, double v);

// Squared norm under the unit-mass inner product with weight
// u^alpha v^beta (1-u-v)^gamma [(1-v)^theta for T4]. T4 norms are
// quadrature-backed; the others are closed-form.
double tri_norm(TriVariant variant, int j, int m, const TriangleParams& p);

}  // namespace revo

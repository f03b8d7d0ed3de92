#pragma once

#include <array>
#include <vector>

#include "revo/domain.hpp"
#include "revo/quadrature.hpp"

// Second-order operators that have the orthogonal spaces as eigenspaces,
// applied numerically by Richardson-extrapolated central differences.

namespace revo {

enum class OperatorId {
    ConeD,        // cone, weight (1-t)^gamma (t^2-||x||^2)^{mu-1/2}
    DoubleConeE,  // double cone, even spaces, theta = 1/2
    DoubleConeO,  // double cone, odd spaces, theta = -1/2
    BallD,        // unit ball in R^d, weight (1-||x||^2)^{mu-1/2}
    SphereLB,     // Laplace-Beltrami on the unit sphere
    MappedE,      // mapped even spaces: the double-cone operator in (x, z)
};

struct OperatorSpec {
    OperatorId op = OperatorId::DoubleConeE;
    DomainSpec dom;     // family/d and the map parameters for MappedE
    WeightSpec w;       // exponents the operator coefficients depend on
    double h = 1e-3;    // finite-difference step, in [1e-5, 1e-2]
    int levels = 2;     // Richardson extrapolation levels, >= 1

    void validate() const;
};

// Eigenvalue of the degree-n space (degree-k harmonics for SphereLB).
double spectral_eigenvalue(const OperatorSpec& spec, int n);

// The operator applied to u at (x, t) by finite differences. For SphereLB
// the point must be on the unit sphere; for BallD t is ignored.
double apply_operator(const OperatorSpec& spec, const EvalFn& u,
                      const double* x, double t);

// max over points of |Du - lambda u| / max(1, |lambda u|). Points must be
// interior with margin 0.1 and keep |t| (|z| for MappedE) >= 0.2 where the
// operator divides by the axial variable; violations throw
// std::invalid_argument with a diagnostic.
double spectral_residual(const OperatorSpec& spec, const EvalFn& u,
                         double lambda,
                         const std::vector<std::array<double, 4>>& points);

}  // namespace revo

#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "revo/domain.hpp"
#include "revo/quadrature.hpp"

// Orthogonal bases on the revolution domains: index enumeration, pointwise
// evaluation, norms (closed-form where available, quadrature-backed
// otherwise), domain quadrature rules, kernel sums and projections.

namespace revo {

class Basis {
  public:
    Basis(DomainSpec dom, WeightSpec w);

    const DomainSpec& domain() const { return dom_; }
    const WeightSpec& weight() const { return w_; }
    int dim() const { return dom_.d; }

    // Index set of the degree-n orthogonal space (one parity slice or all).
    std::vector<BasisIndex> enumerate(int n, Parity parity = Parity::Any) const;
    std::vector<BasisIndex> enumerate_upto(int nmax, Parity parity = Parity::Any) const;

    // Value of the basis polynomial at a point of R^{d+1}.
    double eval(const BasisIndex& idx, const double* x, double t) const;

    // Profile polynomial on the half-plane (s, t): the harmonic factor is
    // replaced by s^k, matching the generic wrap construction.
    double profile_eval(const BasisIndex& idx, double s, double t) const;

    // Radial part only (no harmonic factor, no s^k), as a function of
    // (||x||^2, t); used internally and by cross-checks.
    double radial_eval(const BasisIndex& idx, double s2, double t) const;

    // Squared norm under the unit-mass weighted inner product.
    double norm(const BasisIndex& idx) const;
    bool has_closed_norms() const;

    // Quadrature rule on the domain, unit mass, exact for
    // integrand degree <= degree against the family weight. The parity
    // argument matters only for families whose even and odd bases are
    // orthogonal under different measures (Hyperboloid1b).
    QuadratureRule rule(int degree, Parity parity = Parity::Even) const;

    // Reproducing kernel of the degree-n (parity slice of the) space as an
    // explicit basis sum.
    double kernel_sum(int n, Parity parity, const double* x, double tx,
                      const double* y, double ty) const;

  private:
    DomainSpec dom_;
    WeightSpec w_;
    mutable std::map<std::tuple<int, int, int>, double> norm_cache_;
    mutable std::mutex cache_mutex_;

    double closed_norm(const BasisIndex& idx) const;
    double quadrature_norm(const BasisIndex& idx) const;
};

// Even/odd lift from the quarter-plane profile: even branch
// (s,t) -> f(s^2, t^2), odd branch (s,t) -> t f(s^2, t^2).
EvalFn fullsym_lift(std::function<double(double, double)> f, Parity parity);

struct Projection {
    std::vector<BasisIndex> indices;
    std::vector<double> coefficients;

    double eval(const Basis& basis, const double* x, double t) const;
};

// Fourier coefficients of f against the basis up to total degree N, split
// by parity automatically on t-symmetric families.
Projection project(const Basis& basis, const EvalFn& f, int N, int quad_degree);

}  // namespace revo

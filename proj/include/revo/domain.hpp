#pragma once

#include <stdexcept>
#include <string>

// Domain and weight descriptors for the revolution-domain families.

namespace revo {

// Requested combination is outside what the construction supports (as
// opposed to a parameter merely being out of range).
class capability_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class Family {
    Cylinder,
    Cone,
    CoupledCone,
    Paraboloid,
    DoubleCone,
    DoubleConic,
    Hyperboloid1b,
    DoubleHyperbolic,
    EllipsoidLens,
    CappedCylinderQuadratic,
    CappedCylinderEllipsoid,
};

enum class Parity { Even, Odd, Any };

Family family_from_string(const std::string& name);
std::string family_to_string(Family f);

struct DomainSpec {
    Family family = Family::DoubleCone;
    int d = 2;
    double fa = 1.0;  // geometric parameter a (mapped/capped families)
    double fb = 0.0;  // geometric parameter b

    void validate() const;
    // membership with 1e-12 slack on every defining inequality
    bool contains(const double* x, double t) const;
    // whether the family's weight is even in t (parity split applies)
    bool t_symmetric() const;
};

struct WeightSpec {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double theta = 0.0;
    double mu = 0.0;
    double lambda = 0.0;
};

// Throws std::domain_error if the exponents are outside the family's
// validity range.
void validate_weight(const DomainSpec& dom, const WeightSpec& w);

// Quadratic change of the axial variable attached to the mapped families:
// z^2 as a function of (||x||^2, t^2), and its inverse t^2(||x||^2, z^2).
// For non-mapped families both are the identity in the last argument.
double map_zsq(const DomainSpec& dom, double p, double t2);
double map_tsq(const DomainSpec& dom, double p, double z2);

struct BasisIndex {
    int n = 0;       // total degree
    int k = 0;       // harmonic degree
    int j = 0;       // radial index, 0 <= j <= floor((n-k)/2)
    int ell = 1;     // harmonic label
    Parity parity = Parity::Any;
};

}  // namespace revo

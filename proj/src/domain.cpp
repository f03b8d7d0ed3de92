#include "revo/domain.hpp"

#include <cmath>
#include <map>

namespace revo {

namespace {
constexpr double kSlack = 1e-12;

double norm2(const double* x, int d) {
    double s = 0.0;
    for (int i = 0; i < d; ++i) s += x[i] * x[i];
    return s;
}
}  // namespace

Family family_from_string(const std::string& name) {
    static const std::map<std::string, Family> table = {
        {"cylinder", Family::Cylinder},
        {"cone", Family::Cone},
        {"coupledcone", Family::CoupledCone},
        {"paraboloid", Family::Paraboloid},
        {"doublecone", Family::DoubleCone},
        {"doubleconic", Family::DoubleConic},
        {"hyperboloid1b", Family::Hyperboloid1b},
        {"doublehyperbolic", Family::DoubleHyperbolic},
        {"ellipsoidlens", Family::EllipsoidLens},
        {"cappedquadratic", Family::CappedCylinderQuadratic},
        {"cappedellipsoid", Family::CappedCylinderEllipsoid},
    };
    auto it = table.find(name);
    if (it == table.end())
        throw std::invalid_argument("unknown family: " + name);
    return it->second;
}

std::string family_to_string(Family f) {
    switch (f) {
        case Family::Cylinder: return "cylinder";
        case Family::Cone: return "cone";
        case Family::CoupledCone: return "coupledcone";
        case Family::Paraboloid: return "paraboloid";
        case Family::DoubleCone: return "doublecone";
        case Family::DoubleConic: return "doubleconic";
        case Family::Hyperboloid1b: return "hyperboloid1b";
        case Family::DoubleHyperbolic: return "doublehyperbolic";
        case Family::EllipsoidLens: return "ellipsoidlens";
        case Family::CappedCylinderQuadratic: return "cappedquadratic";
        case Family::CappedCylinderEllipsoid: return "cappedellipsoid";
    }
    return "?";
}

void DomainSpec::validate() const {
    if (d != 2 && d != 3)
        throw std::domain_error("DomainSpec: d must be 2 or 3");
    switch (family) {
        case Family::DoubleConic:
            if (!(fa > 0.0)) throw std::domain_error("DoubleConic: need a > 0");
            break;
        case Family::Hyperboloid1b:
            if (!(fb >= 0.0 && fb < 1.0))
                throw std::domain_error("Hyperboloid1b: need 0 <= b < 1");
            break;
        case Family::DoubleHyperbolic:
            if (!(fb > 0.0 && fb < fa))
                throw std::domain_error("DoubleHyperbolic: need 0 < b < a");
            break;
        case Family::EllipsoidLens:
            if (!(fb >= 0.0 && fb < fa))
                throw std::domain_error("EllipsoidLens: need 0 <= b < a");
            break;
        case Family::CappedCylinderQuadratic:
        case Family::CappedCylinderEllipsoid:
            if (!(fa > fb && fb >= 0.0))
                throw std::domain_error("capped cylinder: need a > b >= 0");
            break;
        default:
            break;
    }
}

bool DomainSpec::t_symmetric() const {
    switch (family) {
        case Family::Cone:
        case Family::Paraboloid:
            return false;
        default:
            return true;
    }
}

bool DomainSpec::contains(const double* x, double t) const {
    const double p = norm2(x, d);
    const double s = std::sqrt(p);
    const double t2 = t * t;
    switch (family) {
        case Family::Cylinder:
            return p <= 1.0 + kSlack && std::abs(t) <= 1.0 + kSlack;
        case Family::Cone:
            return t >= -kSlack && t <= 1.0 + kSlack && s <= t + kSlack;
        case Family::CoupledCone:
            return s + std::abs(t) <= 1.0 + kSlack;
        case Family::Paraboloid:
            return t <= 1.0 + kSlack && p <= t + kSlack;
        case Family::DoubleCone:
            return std::abs(t) <= 1.0 + kSlack && s <= std::abs(t) + kSlack;
        case Family::DoubleConic:
            return t2 >= p - kSlack && p + (t2 - p) / fa <= 1.0 + kSlack;
        case Family::Hyperboloid1b:
            return t2 >= fb + (1.0 - fb) * p - kSlack && t2 <= 1.0 + kSlack;
        case Family::DoubleHyperbolic:
            return t2 >= fb + (1.0 - fb) * p - kSlack &&
                   t2 <= fa + (1.0 - fa) * p + kSlack && p <= 1.0 + kSlack;
        case Family::EllipsoidLens:
            return t2 + fb * p >= fb - kSlack && t2 + fa * p <= fa + kSlack;
        case Family::CappedCylinderQuadratic:
            return p <= 1.0 + kSlack && t2 >= fb + (1.0 - fa) * p - kSlack &&
                   t2 <= fa + (1.0 - fa) * p + kSlack;
        case Family::CappedCylinderEllipsoid:
            return p <= 1.0 + kSlack && t2 + fb * p >= fb - kSlack &&
                   t2 + fb * p <= fa + kSlack;
    }
    return false;
}

double map_zsq(const DomainSpec& dom, double p, double t2) {
    switch (dom.family) {
        case Family::DoubleConic: return p + (t2 - p) / dom.fa;
        case Family::Hyperboloid1b: return (t2 - dom.fb) / (1.0 - dom.fb);
        case Family::DoubleHyperbolic:
            return (t2 - dom.fb - (1.0 - dom.fa) * p) / (dom.fa - dom.fb);
        case Family::EllipsoidLens:
            return (t2 - dom.fb + dom.fa * p) / (dom.fa - dom.fb);
        default: return t2;
    }
}

double map_tsq(const DomainSpec& dom, double p, double z2) {
    switch (dom.family) {
        case Family::DoubleConic: return p + dom.fa * (z2 - p);
        case Family::Hyperboloid1b: return dom.fb + (1.0 - dom.fb) * z2;
        case Family::DoubleHyperbolic:
            return dom.fb + (1.0 - dom.fa) * p + (dom.fa - dom.fb) * z2;
        case Family::EllipsoidLens:
            return dom.fb - dom.fa * p + (dom.fa - dom.fb) * z2;
        default: return z2;
    }
}

void validate_weight(const DomainSpec& dom, const WeightSpec& w) {
    dom.validate();
    const double d = dom.d;
    switch (dom.family) {
        case Family::Cylinder:
            if (!(w.alpha > -1.0) || !(w.mu > -0.5) || !(w.lambda > -0.5))
                throw std::domain_error("cylinder weight: need alpha > -1, mu, lambda > -1/2");
            break;
        case Family::Cone:
            if (!(w.gamma > -1.0) || !(w.mu > -0.5) || !(w.alpha > -0.5 * d) ||
                !(2.0 * w.alpha + 2.0 * w.mu + w.beta + d - 1.0 > -1.0))
                throw std::domain_error("cone weight: exponent out of range");
            break;
        case Family::CoupledCone:
            if (!(w.alpha > -1.0) || !(w.beta > -1.0))
                throw std::domain_error("coupled cone weight: need alpha, beta > -1");
            break;
        case Family::Paraboloid:
            if (!(w.beta > -1.0) || !(w.gamma > -1.0) ||
                !(2.0 * w.alpha + w.gamma > -d))
                throw std::domain_error("paraboloid weight: exponent out of range");
            break;
        case Family::CappedCylinderQuadratic:
        case Family::CappedCylinderEllipsoid:
            if (!(w.beta > -1.0) || !(w.gamma > -1.0) || !(w.theta > -1.0) ||
                !(w.alpha > -0.5 * d))
                throw std::domain_error("capped cylinder weight: exponent out of range");
            break;
        default:  // double cone and its mapped relatives
            if (!(w.beta > -1.0) || !(w.gamma > -1.0) || !(w.alpha > -0.5 * d) ||
                !(w.alpha + w.gamma + w.theta >= -0.5 * d))
                throw std::domain_error("double cone weight: exponent out of range");
            break;
    }
}

}  // namespace revo

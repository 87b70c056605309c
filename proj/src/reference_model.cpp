#include "zdeform/reference_model.hpp"

#include <algorithm>
#include <cmath>

namespace zdeform {

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::underdamped: return "underdamped";
        case Regime::critical: return "critical";
        case Regime::overdamped: return "overdamped";
    }
    return "?";
}

ContinuousPoles poles_of(const ContinuousParams& c) {
    double disc = c.b * c.b - 4.0 * c.k;
    double scale = std::max({1.0, c.b * c.b, 4.0 * std::abs(c.k)});
    ContinuousPoles out;
    if (std::abs(disc) <= 1e-12 * scale) {
        out.regime = Regime::critical;
        out.first = out.second = Complex(-c.b / 2.0, 0.0);
        return out;
    }
    if (disc < 0.0) {
        out.regime = Regime::underdamped;
        double im = std::sqrt(-disc) / 2.0;
        out.first = Complex(-c.b / 2.0, im);
        out.second = std::conj(out.first);
        return out;
    }
    out.regime = Regime::overdamped;
    double sq = std::sqrt(disc);
    // avoid cancellation: compute the larger-magnitude pole first, the other
    // via the product k
    double s_far = (-c.b - std::copysign(sq, c.b)) / 2.0;
    double s_near = (s_far != 0.0) ? c.k / s_far : (-c.b + sq) / 2.0;
    double hi = std::max(s_far, s_near);
    double lo = std::min(s_far, s_near);
    out.first = Complex(hi, 0.0);
    out.second = Complex(lo, 0.0);
    return out;
}

ContinuousParams params_from_pole_pair(Complex s) {
    return {std::norm(s), -2.0 * s.real()};
}

ContinuousParams normalize(double k_phys, double b_phys, const PhysicalUnits& u) {
    return {k_phys * u.T * u.T / u.m, b_phys * u.T / u.m};
}

std::pair<double, double> denormalize(const ContinuousParams& c, const PhysicalUnits& u) {
    return {c.k * u.m / (u.T * u.T), c.b * u.m / u.T};
}

}  // namespace zdeform

#pragma once

#include "zdeform/poly.hpp"

namespace zdeform {

/// Normalized parameters of the continuous reference oscillator:
/// k = k_phys * T^2 / m, b = b_phys * T / m (dimensionless).
struct ContinuousParams {
    double k = 0.0;
    double b = 0.0;
};

/// Physical scaling used only at the I/O boundary; all internal computation
/// runs in normalized units (m = 1, T = 1).
struct PhysicalUnits {
    double m = 1.0;  // mass [kg]
    double T = 1.0;  // sampling period [s]
};

enum class Regime { underdamped, critical, overdamped };

/// Poles of s^2 + b s + k. For the underdamped regime `first` is the
/// upper-half-plane pole and `second` its conjugate; for the overdamped
/// regime both are real with first >= second; for the critical regime both
/// equal the repeated pole.
struct ContinuousPoles {
    Regime regime = Regime::underdamped;
    Complex first;
    Complex second;
};

const char* regime_name(Regime r);

/// Pole pair and regime of the reference oscillator. Critical is declared
/// when |b^2 - 4k| <= 1e-12 * max(1, b^2, 4k).
ContinuousPoles poles_of(const ContinuousParams& c);

/// Inverse of poles_of given one pole (the upper-half-plane representative
/// for a conjugate pair, or the repeated/real pole): b = -2 Re(s),
/// k = |s|^2.
ContinuousParams params_from_pole_pair(Complex s);

ContinuousParams normalize(double k_phys, double b_phys, const PhysicalUnits& u);
/// Exact inverse of normalize: returns (k_phys, b_phys).
std::pair<double, double> denormalize(const ContinuousParams& c, const PhysicalUnits& u);

}  // namespace zdeform

#include "zdeform/experiments.hpp"

#include <cmath>
#include <numbers>

namespace zdeform {

namespace {

constexpr double kPi = std::numbers::pi;

// Closed-loop 2x2 transition of the sampled hybrid: exact discretization of
// the (m, k) oscillator over one period, driven by the virtual spring force.
struct Closed2x2 {
    double a11, a12, a21, a22;
};

Closed2x2 closed_loop(double k, double K, const PhysicalUnits& u, HoldModel hold) {
    double w = std::sqrt(k / u.m);
    double wt = w * u.T;
    double c = std::cos(wt);
    double s = std::sin(wt);

    // free transition of the continuous (m, k) subsystem over one period
    double a11 = c;
    double a12 = (w > 0.0) ? s / w : u.T;
    double a21 = -w * s;
    double a22 = c;

    if (hold == HoldModel::zero_order_hold) {
        // held input column; sinc-style limits at k = 0
        double g1 = (w > 0.0) ? (1.0 - c) / (u.m * w * w) : u.T * u.T / (2.0 * u.m);
        double g2 = (w > 0.0) ? s / (u.m * w) : u.T / u.m;
        return {a11 - K * g1, a12, a21 - K * g2, a22};
    }
    // impulse train: the sampled force becomes a velocity jump K*T/m before
    // the free flight
    double j = K * u.T / u.m;
    return {a11 - a12 * j, a12, a21 - a22 * j, a22};
}

Complex dominant_eig(const Closed2x2& m) {
    double tr = m.a11 + m.a22;
    double det = m.a11 * m.a22 - m.a12 * m.a21;
    double disc = tr * tr - 4.0 * det;
    if (disc < 0.0) return {tr / 2.0, std::sqrt(-disc) / 2.0};
    double sq = std::sqrt(disc);
    double l1 = (tr + sq) / 2.0;
    double l2 = (tr - sq) / 2.0;
    return {std::abs(l1) >= std::abs(l2) ? l1 : l2, 0.0};
}

}  // namespace

const char* hold_model_name(HoldModel h) {
    return h == HoldModel::zero_order_hold ? "zero_order_hold" : "impulse_train";
}

Complex hybrid_system_V(double k, double K, const PhysicalUnits& u, HoldModel hold) {
    return dominant_eig(closed_loop(k, K, u, hold));
}

Table1Report run_table1(double k, const PhysicalUnits& u, HoldModel hold) {
    if (u.T * std::sqrt(2.0 * k / u.m) >= kPi)
        throw NyquistExceeded("run_table1: system III (stiffness 2k) is not sub-Nyquist");

    Table1Report rep;
    rep.hold = hold;
    rep.omega_I = std::sqrt(k / u.m);
    rep.K_used = tune(k, u);
    rep.omega_II = std::acos(1.0 - rep.K_used * u.T * u.T / (2.0 * u.m)) / u.T;
    rep.omega_III = std::sqrt(2.0 * k / u.m);
    double c4 = 1.0 - rep.K_used * u.T * u.T / u.m;  // doubled virtual stiffness 2K
    if (c4 < -1.0)
        throw NyquistExceeded("run_table1: system IV (stiffness 2K) is not sub-Nyquist");
    rep.omega_IV = std::acos(c4) / u.T;

    Complex pole_V = hybrid_system_V(k, rep.K_used, u, hold);
    rep.omega_V = std::abs(std::arg(pole_V)) / u.T;
    rep.detuning_IV = rep.omega_IV / rep.omega_III - 1.0;
    rep.detuning_V = rep.omega_V / rep.omega_III - 1.0;
    return rep;
}

}  // namespace zdeform

#pragma once

#include "zdeform/deformation_map.hpp"

namespace zdeform {

/// How the virtual spring force reaches the continuous mass in the hybrid
/// assembly: held constant over each period, or lumped into a velocity jump
/// at the sample instant.
enum class HoldModel { zero_order_hold, impulse_train };

const char* hold_model_name(HoldModel h);

/// Eigenfrequencies of the five coupling experiments (angular, normalized
/// rad/s): I real mass + real spring k; II real mass + tuned virtual spring
/// K; III real springs 2k; IV virtual springs 2K; V one real + one virtual
/// spring. I and II are equivalent by construction of the tuning relation;
/// III, IV and V are not.
struct Table1Report {
    double omega_I = 0.0;
    double omega_II = 0.0;
    double omega_III = 0.0;
    double omega_IV = 0.0;
    double omega_V = 0.0;
    double detuning_IV = 0.0;  // omega_IV / omega_III - 1
    double detuning_V = 0.0;   // omega_V  / omega_III - 1
    double K_used = 0.0;
    HoldModel hold = HoldModel::zero_order_hold;
};

/// Dominant eigenvalue of the sampled hybrid loop: the continuous (m, k)
/// oscillator discretized exactly over one period, closed through the
/// virtual spring u_n = -K x_n with no delay.
Complex hybrid_system_V(double k, double K, const PhysicalUnits& u = {},
                        HoldModel hold = HoldModel::zero_order_hold);

/// Run the five-system comparison at stiffness k.
/// Throws NyquistExceeded when system III (stiffness 2k) is not sub-Nyquist.
Table1Report run_table1(double k, const PhysicalUnits& u = {},
                        HoldModel hold = HoldModel::zero_order_hold);

}  // namespace zdeform

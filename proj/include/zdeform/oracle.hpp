#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zdeform/deformation_map.hpp"

namespace zdeform {

/// Fallback seed for the mode-exciting initial state; the ZDEFORM_SEED
/// environment variable overrides it in the CLI.
inline constexpr std::uint64_t kOracleFallbackSeed = 0xC0D15;

/// Difference-equation realization of an assembled characteristic
/// polynomial: top-row companion matrix of the monic polynomial, so the
/// first state component follows the scalar recurrence.
struct LoopStateModel {
    Eigen::MatrixXd transition;
    Eigen::VectorXd initial_state;  // defaults to the impulse (1, 0, ..., 0)
};

struct Trajectory {
    std::vector<double> samples;  // x_0 .. x_N, period T = 1
};

/// Companion realization of assemble(f, d). Throws DegenerateModel when the
/// assembled polynomial has degree 0 (or is zero).
LoopStateModel build_state_model(const CharacteristicForm& f, const DiscreteParams& d);

/// Characteristic polynomial of a square matrix by the Faddeev-LeVerrier
/// recurrence; used as an implementation-independent check on companion
/// construction.
Polynomial char_poly(const Eigen::MatrixXd& m);

/// First state component under repeated application of the transition.
/// Exact linear recurrence, no noise. Throws GrowthOverflow when |x_t|
/// exceeds 1e12.
Trajectory simulate(const LoopStateModel& m, int steps);

/// Least-squares linear prediction x_{t+order} = sum a_i x_{t+i} over the
/// post-transient window (the first `order` samples are excluded so that
/// nilpotent modes do not masquerade as identifiable ones); returns the
/// roots of z^order - sum a_i z^i.
/// Throws RankDeficient when the excited modes do not fill the requested
/// order; callers lower the order and retry.
std::vector<Complex> identify_poles(const Trajectory& tr, int order);

struct VariantGap {
    ContinuousParams as_printed;
    ContinuousParams reconstructed;
    double gap = 0.0;  // Euclidean distance in the (k, b) plane
};

struct CrossCheckReport {
    std::string form_name;
    DiscreteParams params;
    std::vector<Complex> roots_direct;      // polynomial roots of the assembled form
    std::vector<Complex> roots_eigen;       // eigenvalues of the companion realization
    std::vector<Complex> roots_identified;  // linear-prediction estimate (may be a subset)
    int identified_order = 0;
    bool used_fallback_state = false;
    double max_diff_direct_eigen = 0.0;
    double max_diff_direct_identified = 0.0;
    bool representable = false;
    ContinuousParams kb_direct;
    ContinuousParams kb_eigen;
    double kb_discrepancy = 0.0;
    bool pass_eigen = false;       // direct vs eigen within 1e-10
    bool pass_identified = false;  // direct vs identified within 1e-6
    bool pass = false;
    std::string note;
    std::optional<VariantGap> variant_gap;  // filled for real_damping built-ins
};

/// Compare three routes to the closed-loop poles: direct polynomial roots,
/// companion-matrix eigenvalues, and linear-prediction identification from a
/// simulated trajectory. PASS means direct/eigen agree within 1e-10 and
/// direct/identified within 1e-6.
CrossCheckReport cross_check(const CharacteristicForm& f, const DiscreteParams& d,
                             int steps = 64, std::uint64_t seed = kOracleFallbackSeed);

/// Equivalent (k, b) under both real-damping variants at the same (K, B),
/// and the distance between them. No ground truth is asserted either way.
VariantGap real_damping_variant_gap(double b0, const DiscreteParams& d);

}  // namespace zdeform

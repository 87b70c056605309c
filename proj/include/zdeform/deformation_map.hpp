#pragma once

#include <array>
#include <string>
#include <vector>

#include "zdeform/reference_model.hpp"
#include "zdeform/sim_config.hpp"

namespace zdeform {

/// Root set of an assembled characteristic polynomial together with the
/// dominant selection used to read off the equivalent continuous pair.
///
/// Selection rule: among conjugate pairs with nonzero imaginary part, the
/// pair of largest modulus wins (ties go to the smaller argument). With no
/// complex pair, the two largest strictly-positive real roots form the pair;
/// a repeated real counts as a degenerate pair. Anything else is not
/// representable as a continuous oscillator on the principal branch.
struct PoleReport {
    std::vector<Complex> all_roots;
    std::array<Complex, 2> dominant{};     // valid iff representable
    double dominant_modulus = 0.0;         // max modulus over the selected pair
    bool dominant_is_complex = false;
    std::vector<Complex> extra_roots;      // everything not selected
    bool representable = false;

    /// Largest modulus over all roots.
    double max_modulus() const;
    /// True iff every root lies strictly inside the unit circle.
    bool stable() const { return max_modulus() < 1.0; }
};

/// Local deformation of the forward map at one (K, B) point.
struct DistortionMetrics {
    std::array<std::array<double, 2>, 2> jacobian{};  // d(k,b)/d(K,B)
    double orthogonality_angle_deg = 90.0;            // between jacobian columns, folded to [0, 90]
    double sigma1 = 1.0;                              // singular values, sigma1 >= sigma2
    double sigma2 = 1.0;
    double identity_deviation = 0.0;                  // Frobenius norm of J - I
};

/// Classify the roots of assemble(f, d) without converting to (k, b).
/// Never throws on selection failure (representable = false instead).
PoleReport analyze(const CharacteristicForm& f, const DiscreteParams& d);

/// Forward map (K, B) -> (k, b) through the dominant poles.
/// Throws NonRepresentable when no valid dominant selection exists.
std::pair<ContinuousParams, PoleReport> map_params(const CharacteristicForm& f,
                                                   const DiscreteParams& d);

/// Inverse map (k, b) -> (K, B): impose the continuous-equivalent poles
/// z = e^{s} on the characteristic form and solve the resulting linear
/// system for (K, B). Underdamped targets use the single complex equation;
/// overdamped targets the 2x2 real system at both poles; critical targets
/// the value/derivative system at the repeated pole.
/// Throws NyquistExceeded (Im(s) >= pi) and SingularSystem.
DiscreteParams invmap(const CharacteristicForm& f, const ContinuousParams& c);

/// Tuning relation K = (m/T^2) * (2 - 2 cos(T*sqrt(k/m))).
/// Valid up to the Nyquist angle T*sqrt(k/m) = pi (K = 4m/T^2 there);
/// beyond it throws NyquistExceeded.
double tune(double k, const PhysicalUnits& u = {});

/// True when k sits exactly on the Nyquist boundary of the tuning relation.
bool tune_at_boundary(double k, const PhysicalUnits& u = {});

struct BoundaryPoint {
    double theta = 0.0;
    double K = 0.0;
    double B = 0.0;
};

struct SkippedTheta {
    double theta = 0.0;
    std::string reason;
};

struct Boundary {
    std::vector<BoundaryPoint> points;   // ordered by increasing theta
    std::vector<SkippedTheta> skipped;
};

/// Image of (k = theta^2, b = 0) under invmap for n_points values of theta
/// uniformly spaced over (theta_min, theta_max]. Failing points are skipped
/// and reported, never silently patched.
Boundary stability_boundary(const CharacteristicForm& f, double theta_min, double theta_max,
                            int n_points);

/// Locate the maximum-K point of the b = 0 curve on [theta_lo, theta_hi]
/// by golden-section search.
BoundaryPoint boundary_max_K(const CharacteristicForm& f, double theta_lo, double theta_hi);

/// Central-difference Jacobian of the forward map at d, with step
/// h = 1e-5 * max(1, |K|, |B|) unless overridden (h > 0).
/// Propagates map errors from the probe points.
DistortionMetrics distortion_at(const CharacteristicForm& f, const DiscreteParams& d,
                                double h = 0.0);

}  // namespace zdeform

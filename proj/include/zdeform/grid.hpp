#pragma once

#include <string>
#include <vector>

#include "zdeform/deformation_map.hpp"

namespace zdeform {

/// Sweep specification for one deformation grid.
struct GridSpec {
    CharacteristicForm form;
    std::vector<double> k_values;  // iso-k levels, strictly increasing
    std::vector<double> b_values;  // iso-b levels, strictly increasing
    int samples_per_curve = 60;
    double theta_max = 0.0;  // 0 -> default 0.95*pi
    int boundary_samples = 200;
};

/// Default desk-scale window: k in [0.05, 2.5] (12 levels), b in [0, 1]
/// (11 levels including b = 0), 60 samples per curve, theta_max = 0.95*pi.
GridSpec default_grid_spec(CharacteristicForm form);

struct GridVertex {
    double param = 0.0;  // the swept coordinate (b along iso-k, k along iso-b)
    double K = 0.0;
    double B = 0.0;
};

struct SkippedVertex {
    double param = 0.0;
    std::string reason;
};

struct IsoCurve {
    double level = 0.0;  // the held coordinate (k for iso-k, b for iso-b)
    std::vector<GridVertex> vertices;
    std::vector<SkippedVertex> skipped;
};

struct GridNode {
    double k = 0.0;
    double b = 0.0;
    double K = 0.0;
    double B = 0.0;
    bool representable = false;
    bool stable = false;
    bool has_metrics = false;
    DistortionMetrics metrics;
    std::string reason;  // nonempty when the node could not be evaluated
};

struct DeformationGrid {
    std::string form_name;
    std::string variant;  // empty when not applicable
    std::vector<double> k_values;
    std::vector<double> b_values;
    int samples_per_curve = 0;
    double theta_max = 0.0;
    std::vector<IsoCurve> iso_k_curves;
    std::vector<IsoCurve> iso_b_curves;
    Boundary boundary;
    bool has_boundary_max = false;
    BoundaryPoint boundary_max;  // golden-section-refined max-K vertex
    std::vector<GridNode> nodes;  // row-major: k outer, b inner
};

/// Run the sweep: iso-k and iso-b families, stability boundary (with the
/// refined max-K vertex spliced into the polyline), and per-node distortion
/// metrics. Per-point failures are collected, never aborting the grid.
DeformationGrid generate(const GridSpec& spec);

/// Identity-transformation grid (K = k, B = b) on the same lattice, used as
/// the undeformed baseline.
DeformationGrid reference_grid(const GridSpec& spec);

}  // namespace zdeform

#include "zdeform/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace zdeform {

namespace {

constexpr double kPi = std::numbers::pi;

void validate(const GridSpec& spec) {
    if (spec.samples_per_curve < 2) throw InvalidParam("grid: samples_per_curve must be >= 2");
    if (spec.boundary_samples < 2) throw InvalidParam("grid: boundary_samples must be >= 2");
    auto increasing = [](const std::vector<double>& v) {
        for (std::size_t i = 1; i < v.size(); ++i)
            if (!(v[i] > v[i - 1])) return false;
        return true;
    };
    if (!increasing(spec.k_values)) throw InvalidParam("grid: k_values must be strictly increasing");
    if (!increasing(spec.b_values)) throw InvalidParam("grid: b_values must be strictly increasing");
    double tmax = spec.theta_max > 0.0 ? spec.theta_max : 0.95 * kPi;
    if (!(tmax < kPi)) throw InvalidParam("grid: theta_max must be < pi");
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        v[static_cast<std::size_t>(i)] = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
    return v;
}

// Sweep window for one family: the span of the supplied iso levels, or the
// default desk-scale window when the level list is empty or degenerate.
std::vector<double> sweep_points(const std::vector<double>& levels, double def_lo, double def_hi,
                                 int n) {
    double lo = def_lo, hi = def_hi;
    if (levels.size() >= 2 && levels.front() < levels.back()) {
        lo = levels.front();
        hi = levels.back();
    }
    return linspace(lo, hi, n);
}

IsoCurve sweep_curve(const CharacteristicForm& f, double level, bool level_is_k,
                     const std::vector<double>& params) {
    IsoCurve curve;
    curve.level = level;
    for (double p : params) {
        double k = level_is_k ? level : p;
        double b = level_is_k ? p : level;
        try {
            DiscreteParams d = invmap(f, ContinuousParams{k, b});
            curve.vertices.push_back({p, d.K, d.B});
        } catch (const Error& e) {
            curve.skipped.push_back({p, e.what()});
        }
    }
    return curve;
}

}  // namespace

GridSpec default_grid_spec(CharacteristicForm form) {
    GridSpec spec;
    spec.form = std::move(form);
    spec.k_values = linspace(0.05, 2.5, 12);
    spec.b_values = linspace(0.0, 1.0, 11);
    spec.samples_per_curve = 60;
    spec.theta_max = 0.95 * kPi;
    spec.boundary_samples = 200;
    return spec;
}

DeformationGrid generate(const GridSpec& spec) {
    validate(spec);
    DeformationGrid g;
    g.form_name = spec.form.name;
    g.variant = spec.form.variant.value_or("");
    g.k_values = spec.k_values;
    g.b_values = spec.b_values;
    g.samples_per_curve = spec.samples_per_curve;
    g.theta_max = spec.theta_max > 0.0 ? spec.theta_max : 0.95 * kPi;

    const std::vector<double> k_sweep = sweep_points(spec.k_values, 0.05, 2.5, spec.samples_per_curve);
    const std::vector<double> b_sweep = sweep_points(spec.b_values, 0.0, 1.0, spec.samples_per_curve);

    for (double k : spec.k_values) g.iso_k_curves.push_back(sweep_curve(spec.form, k, true, b_sweep));
    for (double b : spec.b_values) g.iso_b_curves.push_back(sweep_curve(spec.form, b, false, k_sweep));

    double theta_min = g.theta_max / spec.boundary_samples;
    g.boundary = stability_boundary(spec.form, theta_min, g.theta_max, spec.boundary_samples);
    if (!g.boundary.points.empty()) {
        g.boundary_max = boundary_max_K(spec.form, theta_min, g.theta_max);
        g.has_boundary_max = true;
        // splice the refined vertex into the polyline at its theta position
        auto pos = std::lower_bound(g.boundary.points.begin(), g.boundary.points.end(),
                                    g.boundary_max.theta,
                                    [](const BoundaryPoint& p, double t) { return p.theta < t; });
        if (pos == g.boundary.points.end() || std::abs(pos->theta - g.boundary_max.theta) > 1e-12)
            g.boundary.points.insert(pos, g.boundary_max);
    }

    for (double k : spec.k_values) {
        for (double b : spec.b_values) {
            GridNode node;
            node.k = k;
            node.b = b;
            try {
                DiscreteParams d = invmap(spec.form, ContinuousParams{k, b});
                node.K = d.K;
                node.B = d.B;
                PoleReport rep = analyze(spec.form, d);
                node.representable = rep.representable;
                node.stable = rep.stable();
                if (rep.representable) {
                    try {
                        node.metrics = distortion_at(spec.form, d);
                        node.has_metrics = true;
                    } catch (const Error& e) {
                        node.reason = e.what();
                    }
                }
            } catch (const Error& e) {
                node.K = node.B = std::nan("");
                node.reason = e.what();
            }
            g.nodes.push_back(std::move(node));
        }
    }
    return g;
}

DeformationGrid reference_grid(const GridSpec& spec) {
    validate(spec);
    DeformationGrid g;
    g.form_name = "reference";
    g.k_values = spec.k_values;
    g.b_values = spec.b_values;
    g.samples_per_curve = spec.samples_per_curve;
    g.theta_max = spec.theta_max > 0.0 ? spec.theta_max : 0.95 * kPi;

    const std::vector<double> k_sweep = sweep_points(spec.k_values, 0.05, 2.5, spec.samples_per_curve);
    const std::vector<double> b_sweep = sweep_points(spec.b_values, 0.0, 1.0, spec.samples_per_curve);

    for (double k : spec.k_values) {
        IsoCurve c;
        c.level = k;
        for (double b : b_sweep) c.vertices.push_back({b, k, b});
        g.iso_k_curves.push_back(std::move(c));
    }
    for (double b : spec.b_values) {
        IsoCurve c;
        c.level = b;
        for (double k : k_sweep) c.vertices.push_back({k, k, b});
        g.iso_b_curves.push_back(std::move(c));
    }
    for (double k : k_sweep) g.boundary.points.push_back({std::sqrt(k), k, 0.0});
    for (double k : spec.k_values) {
        for (double b : spec.b_values) {
            GridNode node;
            node.k = k;
            node.b = b;
            node.K = k;
            node.B = b;
            node.representable = true;
            node.stable = b > 0.0;
            node.has_metrics = true;
            node.metrics.jacobian = {{{1.0, 0.0}, {0.0, 1.0}}};
            g.nodes.push_back(node);
        }
    }
    return g;
}

}  // namespace zdeform

#include "zdeform/oracle.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <random>

namespace zdeform {

namespace {

// Greedy nearest matching between two equally sized pole sets; degrees here
// are small, so quadratic matching is fine.
double max_matched_distance(std::vector<Complex> a, std::vector<Complex> b) {
    double worst = 0.0;
    for (const Complex& za : a) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_j = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            double dist = std::abs(za - b[j]);
            if (dist < best) {
                best = dist;
                best_j = j;
            }
        }
        worst = std::max(worst, best);
        b.erase(b.begin() + static_cast<std::ptrdiff_t>(best_j));
    }
    return worst;
}

// Max distance from each identified pole to the nearest reference pole
// (identification may see only the excited subset).
double max_subset_distance(const std::vector<Complex>& identified,
                           const std::vector<Complex>& reference) {
    double worst = 0.0;
    for (const Complex& z : identified) {
        double best = std::numeric_limits<double>::infinity();
        for (const Complex& r : reference) best = std::min(best, std::abs(z - r));
        worst = std::max(worst, best);
    }
    return worst;
}

Eigen::VectorXd fallback_state(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v(i) = u(rng);
    double nrm = v.norm();
    if (nrm == 0.0) v(0) = 1.0; else v /= nrm;
    return v;
}

}  // namespace

LoopStateModel build_state_model(const CharacteristicForm& f, const DiscreteParams& d) {
    Polynomial poly = assemble(f, d);
    int n = poly.degree();
    if (n < 1) throw DegenerateModel("build_state_model: assembled polynomial has degree < 1");
    double lead = poly.leading();
    LoopStateModel m;
    m.transition = Eigen::MatrixXd::Zero(n, n);
    for (int j = 0; j < n; ++j) m.transition(0, j) = -poly[static_cast<std::size_t>(n - 1 - j)] / lead;
    for (int i = 1; i < n; ++i) m.transition(i, i - 1) = 1.0;
    m.initial_state = Eigen::VectorXd::Zero(n);
    m.initial_state(0) = 1.0;
    return m;
}

Polynomial char_poly(const Eigen::MatrixXd& m) {
    int n = static_cast<int>(m.rows());
    // Faddeev-LeVerrier: c_n z^n + ... with c_n = 1
    std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
    c[static_cast<std::size_t>(n)] = 1.0;
    Eigen::MatrixXd aux = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k <= n; ++k) {
        aux = m * aux + c[static_cast<std::size_t>(n - k + 1)] * Eigen::MatrixXd::Identity(n, n);
        c[static_cast<std::size_t>(n - k)] = -(m * aux).trace() / k;
    }
    return Polynomial(std::move(c));
}

Trajectory simulate(const LoopStateModel& m, int steps) {
    int n = static_cast<int>(m.transition.rows());
    if (steps < n) throw InvalidParam("simulate: steps must be >= model order");
    Trajectory tr;
    tr.samples.reserve(static_cast<std::size_t>(steps) + 1);
    Eigen::VectorXd x = m.initial_state;
    for (int t = 0; t <= steps; ++t) {
        double sample = x(0);
        if (std::abs(sample) > 1e12)
            throw GrowthOverflow("simulate: trajectory magnitude exceeded 1e12");
        tr.samples.push_back(sample);
        x = m.transition * x;
    }
    return tr;
}

std::vector<Complex> identify_poles(const Trajectory& tr, int order) {
    if (order < 1) throw InvalidParam("identify_poles: order must be >= 1");
    int n_samples = static_cast<int>(tr.samples.size());
    if (n_samples < 2 * order + 2)
        throw InvalidParam("identify_poles: trajectory shorter than 2*order + 2");

    // fit on the post-transient window t in [order, N - order)
    int t0 = order;
    int rows = n_samples - order - t0;
    Eigen::MatrixXd mat(rows, order);
    Eigen::VectorXd rhs(rows);
    for (int r = 0; r < rows; ++r) {
        int t = t0 + r;
        for (int i = 0; i < order; ++i) mat(r, i) = tr.samples[static_cast<std::size_t>(t + i)];
        rhs(r) = tr.samples[static_cast<std::size_t>(t + order)];
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(mat, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    double smax = sv(0);
    double smin = sv(sv.size() - 1);
    if (smax <= 0.0 || smin <= 1e-10 * smax)
        throw RankDeficient("identify_poles: initial state does not excite the requested order");

    Eigen::VectorXd a = svd.solve(rhs);
    std::vector<double> coeffs(static_cast<std::size_t>(order) + 1);
    for (int i = 0; i < order; ++i) coeffs[static_cast<std::size_t>(i)] = -a(i);
    coeffs[static_cast<std::size_t>(order)] = 1.0;
    return roots(Polynomial(std::move(coeffs)));
}

CrossCheckReport cross_check(const CharacteristicForm& f, const DiscreteParams& d, int steps,
                             std::uint64_t seed) {
    CrossCheckReport rep;
    rep.form_name = f.name;
    rep.params = d;

    Polynomial poly = assemble(f, d);
    rep.roots_direct = roots(poly);

    LoopStateModel model = build_state_model(f, d);
    Eigen::VectorXcd ev = model.transition.eigenvalues();
    for (int i = 0; i < ev.size(); ++i) rep.roots_eigen.push_back(ev(i));
    rep.max_diff_direct_eigen = max_matched_distance(rep.roots_direct, rep.roots_eigen);
    rep.pass_eigen = rep.max_diff_direct_eigen <= 1e-10;

    // route (c): simulate with the impulse state and identify at the model
    // order; on rank deficiency switch to the pseudo-random unit state, and
    // only then walk the order down until the excited modes fill the fit
    int n = poly.degree();
    auto simulate_capped = [&](const LoopStateModel& m, Trajectory& tr) -> bool {
        int use_steps = steps;
        for (;;) {
            try {
                tr = simulate(m, use_steps);
            } catch (const GrowthOverflow&) {
                use_steps /= 2;
                if (use_steps < 2 * n + 2) return false;
                continue;
            }
            double peak = 0.0;
            for (double s : tr.samples) peak = std::max(peak, std::abs(s));
            return peak > 0.0;
        }
    };
    auto try_order = [&](const Trajectory& tr, int ord) -> bool {
        if (static_cast<int>(tr.samples.size()) < 2 * ord + 2) return false;
        try {
            rep.roots_identified = identify_poles(tr, ord);
            rep.identified_order = ord;
            return true;
        } catch (const RankDeficient&) {
            return false;
        }
    };

    bool identified = false;
    Trajectory tr;
    if (simulate_capped(model, tr)) identified = try_order(tr, n);
    if (!identified) {
        LoopStateModel excited = model;
        excited.initial_state = fallback_state(n, seed);
        rep.used_fallback_state = true;
        if (simulate_capped(excited, tr))
            for (int ord = n; ord >= 1 && !identified; --ord) identified = try_order(tr, ord);
    }
    if (identified) {
        rep.max_diff_direct_identified = max_subset_distance(rep.roots_identified, rep.roots_direct);
        rep.pass_identified = rep.max_diff_direct_identified <= 1e-6;
    } else {
        rep.note = "identification found no persistent excited modes";
        rep.pass_identified = false;
    }

    PoleReport direct = analyze(f, d);
    rep.representable = direct.representable;
    if (direct.representable) {
        rep.kb_direct = map_params(f, d).first;
        // same dominant-selection rule applied to the eigenvalue route
        double best = std::numeric_limits<double>::infinity();
        Complex match;
        for (const Complex& z : rep.roots_eigen) {
            double dist = std::abs(z - direct.dominant[0]);
            if (dist < best) {
                best = dist;
                match = z;
            }
        }
        if (direct.dominant_is_complex) {
            rep.kb_eigen = params_from_pole_pair(Complex(match.real(), std::abs(match.imag())));
        } else {
            // positive real pair: match the second member too
            double best2 = std::numeric_limits<double>::infinity();
            Complex match2;
            for (const Complex& z : rep.roots_eigen) {
                if (z == match) continue;
                double dist = std::abs(z - direct.dominant[1]);
                if (dist < best2) {
                    best2 = dist;
                    match2 = z;
                }
            }
            double l1 = std::log(match.real());
            double l2 = std::log(match2.real());
            rep.kb_eigen = {l1 * l2, -(l1 + l2)};
        }
        rep.kb_discrepancy = std::hypot(rep.kb_direct.k - rep.kb_eigen.k,
                                        rep.kb_direct.b - rep.kb_eigen.b);
    }

    if (f.provenance == Provenance::builtin && f.name == "real_damping") {
        auto it = f.params.find("b0");
        if (it != f.params.end()) rep.variant_gap = real_damping_variant_gap(it->second, d);
    }

    rep.pass = rep.pass_eigen && rep.pass_identified;
    return rep;
}

VariantGap real_damping_variant_gap(double b0, const DiscreteParams& d) {
    VariantGap gap;
    gap.as_printed = map_params(builtin_form("real_damping", b0, Variant::as_printed), d).first;
    gap.reconstructed =
        map_params(builtin_form("real_damping", b0, Variant::reconstructed), d).first;
    gap.gap = std::hypot(gap.as_printed.k - gap.reconstructed.k,
                         gap.as_printed.b - gap.reconstructed.b);
    return gap;
}

}  // namespace zdeform

#include "zdeform/deformation_map.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace zdeform {

namespace {

constexpr double kPi = std::numbers::pi;

// Equivalent (k, b) of a complex pole pair via s = ln z on the principal
// branch, or of a strictly-positive real pair via the product/sum of logs.
ContinuousParams kb_from_pair(const std::array<Complex, 2>& pair, bool complex_pair) {
    if (complex_pair) {
        const Complex& z = pair[0].imag() >= 0.0 ? pair[0] : pair[1];
        double lr = std::log(std::abs(z));
        double th = std::arg(z);
        return {lr * lr + th * th, -2.0 * lr};
    }
    double l1 = std::log(pair[0].real());
    double l2 = std::log(pair[1].real());
    return {l1 * l2, -(l1 + l2)};
}

// 2x2 real solve for the overdamped/critical branches of invmap.
std::pair<double, double> solve_real_2x2(double a11, double a12, double r1, double a21, double a22,
                                         double r2) {
    double det = a11 * a22 - a12 * a21;
    double scale = std::max({std::abs(a11) * std::abs(a22), std::abs(a12) * std::abs(a21), 1e-300});
    if (det == 0.0 || std::abs(det) <= 1e-14 * scale)
        throw SingularSystem("invmap: imposed-pole system is singular for this form");
    return {(r1 * a22 - a12 * r2) / det, (a11 * r2 - r1 * a21) / det};
}

}  // namespace

double PoleReport::max_modulus() const {
    double m = 0.0;
    for (const Complex& z : all_roots) m = std::max(m, std::abs(z));
    return m;
}

PoleReport analyze(const CharacteristicForm& f, const DiscreteParams& d) {
    Polynomial poly = assemble(f, d);
    if (poly.degree() < 1)
        throw DegenerateModel("analyze: assembled characteristic polynomial has degree < 1");

    PoleReport rep;
    rep.all_roots = roots(poly);

    // best conjugate pair: largest modulus, ties to the smaller argument
    int best = -1;
    for (int i = 0; i < static_cast<int>(rep.all_roots.size()); ++i) {
        const Complex& z = rep.all_roots[i];
        if (z.imag() <= 0.0) continue;
        if (best < 0) {
            best = i;
            continue;
        }
        double mb = std::abs(rep.all_roots[best]);
        double mz = std::abs(z);
        if (mz > mb * (1.0 + 1e-12)) {
            best = i;
        } else if (mz >= mb * (1.0 - 1e-12) &&
                   std::abs(std::arg(z)) < std::abs(std::arg(rep.all_roots[best]))) {
            best = i;
        }
    }

    std::vector<int> selected;
    if (best >= 0) {
        rep.dominant_is_complex = true;
        const Complex zb = rep.all_roots[best];
        rep.dominant = {zb, std::conj(zb)};
        selected.push_back(best);
        // locate the mirrored twin (exact by construction of roots())
        for (int i = 0; i < static_cast<int>(rep.all_roots.size()); ++i) {
            if (i != best && rep.all_roots[i] == std::conj(zb)) {
                selected.push_back(i);
                break;
            }
        }
        rep.representable = true;
    } else {
        // two largest strictly-positive real roots (a repeated real shows up
        // as two equal entries and forms a degenerate pair)
        std::vector<int> pos;
        for (int i = 0; i < static_cast<int>(rep.all_roots.size()); ++i) {
            const Complex& z = rep.all_roots[i];
            if (z.imag() == 0.0 && z.real() > 0.0) pos.push_back(i);
        }
        if (pos.size() >= 2) {
            std::sort(pos.begin(), pos.end(), [&](int a, int b) {
                return rep.all_roots[a].real() > rep.all_roots[b].real();
            });
            rep.dominant = {rep.all_roots[pos[0]], rep.all_roots[pos[1]]};
            rep.dominant_is_complex = false;
            selected = {pos[0], pos[1]};
            rep.representable = true;
        }
    }

    if (rep.representable) {
        rep.dominant_modulus = std::max(std::abs(rep.dominant[0]), std::abs(rep.dominant[1]));
        for (int i = 0; i < static_cast<int>(rep.all_roots.size()); ++i)
            if (std::find(selected.begin(), selected.end(), i) == selected.end())
                rep.extra_roots.push_back(rep.all_roots[i]);
    } else {
        rep.extra_roots = rep.all_roots;
    }
    return rep;
}

std::pair<ContinuousParams, PoleReport> map_params(const CharacteristicForm& f,
                                                   const DiscreteParams& d) {
    PoleReport rep = analyze(f, d);
    if (!rep.representable)
        throw NonRepresentable(
            "map: dominant root is not a complex pair or positive real pair; no principal-branch "
            "continuous equivalent");
    ContinuousParams c = kb_from_pair(rep.dominant, rep.dominant_is_complex);
    return {c, std::move(rep)};
}

DiscreteParams invmap(const CharacteristicForm& f, const ContinuousParams& c) {
    ContinuousPoles poles = poles_of(c);
    if (poles.regime == Regime::underdamped) {
        double theta = poles.first.imag();
        if (theta >= kPi)
            throw NyquistExceeded("invmap: target frequency at or above the Nyquist angle");
        Complex z = std::exp(poles.first);
        auto [K, B] = solve_complex_linear(f.P.eval(z), f.Q.eval(z), f.R.eval(z));
        return {K, B};
    }
    if (poles.regime == Regime::critical) {
        double zr = std::exp(poles.first.real());
        Polynomial dP = f.P.derivative();
        Polynomial dQ = f.Q.derivative();
        Polynomial dR = f.R.derivative();
        auto [K, B] = solve_real_2x2(f.P.eval(zr), f.Q.eval(zr), -f.R.eval(zr), dP.eval(zr),
                                     dQ.eval(zr), -dR.eval(zr));
        return {K, B};
    }
    double z1 = std::exp(poles.first.real());
    double z2 = std::exp(poles.second.real());
    auto [K, B] = solve_real_2x2(f.P.eval(z1), f.Q.eval(z1), -f.R.eval(z1), f.P.eval(z2),
                                 f.Q.eval(z2), -f.R.eval(z2));
    return {K, B};
}

double tune(double k, const PhysicalUnits& u) {
    double theta = u.T * std::sqrt(k / u.m);
    if (theta > kPi * (1.0 + 4e-16))
        throw NyquistExceeded("tune: T*sqrt(k/m) exceeds the Nyquist angle pi");
    return (u.m / (u.T * u.T)) * (2.0 - 2.0 * std::cos(std::min(theta, kPi)));
}

bool tune_at_boundary(double k, const PhysicalUnits& u) {
    double theta = u.T * std::sqrt(k / u.m);
    return std::abs(theta - kPi) <= 1e-12 * kPi;
}

Boundary stability_boundary(const CharacteristicForm& f, double theta_min, double theta_max,
                            int n_points) {
    if (n_points < 2) throw InvalidParam("stability_boundary: n_points must be >= 2");
    if (!(theta_min > 0.0) || !(theta_max < kPi) || !(theta_min < theta_max))
        throw InvalidParam("stability_boundary: need 0 < theta_min < theta_max < pi");
    Boundary out;
    out.points.reserve(static_cast<std::size_t>(n_points));
    for (int i = 0; i < n_points; ++i) {
        double theta =
            theta_min + (theta_max - theta_min) * static_cast<double>(i) / (n_points - 1);
        try {
            DiscreteParams d = invmap(f, ContinuousParams{theta * theta, 0.0});
            out.points.push_back({theta, d.K, d.B});
        } catch (const Error& e) {
            out.skipped.push_back({theta, e.what()});
        }
    }
    return out;
}

BoundaryPoint boundary_max_K(const CharacteristicForm& f, double theta_lo, double theta_hi) {
    auto K_of = [&f](double theta) {
        return invmap(f, ContinuousParams{theta * theta, 0.0}).K;
    };
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = theta_lo, b = theta_hi;
    double c1 = b - invphi * (b - a);
    double c2 = a + invphi * (b - a);
    double f1 = K_of(c1), f2 = K_of(c2);
    for (int it = 0; it < 200 && (b - a) > 1e-13; ++it) {
        if (f1 > f2) {
            b = c2;
            c2 = c1;
            f2 = f1;
            c1 = b - invphi * (b - a);
            f1 = K_of(c1);
        } else {
            a = c1;
            c1 = c2;
            f1 = f2;
            c2 = a + invphi * (b - a);
            f2 = K_of(c2);
        }
    }
    double theta = (a + b) / 2.0;
    DiscreteParams d = invmap(f, ContinuousParams{theta * theta, 0.0});
    return {theta, d.K, d.B};
}

DistortionMetrics distortion_at(const CharacteristicForm& f, const DiscreteParams& d, double h) {
    if (h <= 0.0) h = 1e-5 * std::max({1.0, std::abs(d.K), std::abs(d.B)});
    auto kb = [&](double K, double B) { return map_params(f, DiscreteParams{K, B}).first; };
    ContinuousParams kp = kb(d.K + h, d.B);
    ContinuousParams km = kb(d.K - h, d.B);
    ContinuousParams bp = kb(d.K, d.B + h);
    ContinuousParams bm = kb(d.K, d.B - h);

    DistortionMetrics m;
    m.jacobian[0][0] = (kp.k - km.k) / (2.0 * h);
    m.jacobian[1][0] = (kp.b - km.b) / (2.0 * h);
    m.jacobian[0][1] = (bp.k - bm.k) / (2.0 * h);
    m.jacobian[1][1] = (bp.b - bm.b) / (2.0 * h);

    // angle between the images of the K and B axis directions, folded to [0, 90]
    double ux = m.jacobian[0][0], uy = m.jacobian[1][0];
    double vx = m.jacobian[0][1], vy = m.jacobian[1][1];
    double nu = std::hypot(ux, uy), nv = std::hypot(vx, vy);
    if (nu > 0.0 && nv > 0.0) {
        double c = std::clamp(std::abs(ux * vx + uy * vy) / (nu * nv), 0.0, 1.0);
        m.orthogonality_angle_deg = std::acos(c) * 180.0 / kPi;
    } else {
        m.orthogonality_angle_deg = 0.0;
    }

    // singular values of a 2x2 in closed form
    double a = m.jacobian[0][0], b = m.jacobian[0][1];
    double c2 = m.jacobian[1][0], d2 = m.jacobian[1][1];
    double q1 = a * a + b * b + c2 * c2 + d2 * d2;
    double det = a * d2 - b * c2;
    double q2 = std::sqrt(std::max(0.0, q1 * q1 - 4.0 * det * det));
    m.sigma1 = std::sqrt(std::max(0.0, (q1 + q2) / 2.0));
    m.sigma2 = std::sqrt(std::max(0.0, (q1 - q2) / 2.0));

    m.identity_deviation =
        std::sqrt((a - 1.0) * (a - 1.0) + b * b + c2 * c2 + (d2 - 1.0) * (d2 - 1.0));
    return m;
}

}  // namespace zdeform

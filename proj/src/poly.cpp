#include "zdeform/poly.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>

namespace zdeform {

namespace {

constexpr double kPi = std::numbers::pi;

void sort_roots(std::vector<Complex>& r) {
    std::sort(r.begin(), r.end(), [](const Complex& a, const Complex& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
}

// One conjugate pair or two reals of a*z^2 + b*z + c, via the stable
// split: the larger-magnitude root from the non-cancelling branch, the
// other from the product.
void quadratic_roots(double a, double b, double c, std::vector<Complex>& out) {
    double disc = b * b - 4.0 * a * c;
    if (disc < 0.0) {
        double re = -b / (2.0 * a);
        double im = std::sqrt(-disc) / (2.0 * std::abs(a));
        out.emplace_back(re, im);
        out.emplace_back(re, -im);
        return;
    }
    double sq = std::sqrt(disc);
    double q = -(b + std::copysign(sq, b)) / 2.0;
    double r1, r2;
    if (q != 0.0) {
        r1 = q / a;
        r2 = c / q;
    } else {  // b == 0 and disc >= 0 -> c/a <= 0
        r1 = std::sqrt(-c / a);
        r2 = -r1;
    }
    out.emplace_back(r1, 0.0);
    out.emplace_back(r2, 0.0);
}

double newton_polish_real(const Polynomial& p, const Polynomial& dp, double x) {
    for (int i = 0; i < 3; ++i) {
        double f = p.eval(x);
        double d = dp.eval(x);
        if (d == 0.0) break;
        double step = f / d;
        if (!std::isfinite(step)) break;
        x -= step;
    }
    return x;
}

// Monic cubic z^3 + a2 z^2 + a1 z + a0.
void cubic_roots(double a2, double a1, double a0, std::vector<Complex>& out) {
    const Polynomial p{a0, a1, a2, 1.0};
    const Polynomial dp = p.derivative();

    double pp = a1 - a2 * a2 / 3.0;
    double qq = 2.0 * a2 * a2 * a2 / 27.0 - a2 * a1 / 3.0 + a0;
    double shift = -a2 / 3.0;
    double disc = -4.0 * pp * pp * pp - 27.0 * qq * qq;

    if (disc >= 0.0 && pp < 0.0) {
        // three real roots, trigonometric form
        double m = 2.0 * std::sqrt(-pp / 3.0);
        double arg = std::clamp(3.0 * qq / (pp * m), -1.0, 1.0);
        double phi = std::acos(arg);
        for (int k = 0; k < 3; ++k) {
            double t = m * std::cos((phi - 2.0 * kPi * k) / 3.0);
            out.emplace_back(newton_polish_real(p, dp, t + shift), 0.0);
        }
        return;
    }
    if (pp == 0.0 && qq == 0.0) {
        out.assign(3, Complex(shift, 0.0));
        return;
    }

    // one real root (Cardano, cancellation-safe branch), then the conjugate
    // pair from the deflated quadratic
    double half_q = qq / 2.0;
    double rad = std::sqrt(half_q * half_q + pp * pp * pp / 27.0);
    double s = (qq <= 0.0) ? -half_q + rad : -half_q - rad;
    double t0;
    if (s != 0.0) {
        double u = std::cbrt(s);
        t0 = u - pp / (3.0 * u);
    } else {
        t0 = 0.0;
    }
    double r0 = newton_polish_real(p, dp, t0 + shift);
    // synthetic division by (z - r0)
    double b1 = a2 + r0;
    double b0 = a1 + r0 * b1;
    quadratic_roots(1.0, b1, b0, out);
    out.emplace_back(r0, 0.0);
}

void companion_roots(const std::vector<double>& monic_low_to_high, std::vector<Complex>& out) {
    int n = static_cast<int>(monic_low_to_high.size()) - 1;
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int j = 0; j < n; ++j) a(0, j) = -monic_low_to_high[n - 1 - j];
    for (int i = 1; i < n; ++i) a(i, i - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> es(a, /*computeEigenvectors=*/false);
    for (int i = 0; i < n; ++i) out.push_back(es.eigenvalues()(i));
}

}  // namespace

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

Complex Polynomial::eval(Complex z) const {
    Complex acc(0.0, 0.0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

double Polynomial::eval(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial{};
    std::vector<double> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<double>(i);
    return Polynomial(std::move(d));
}

Polynomial Polynomial::operator*(double s) const {
    std::vector<double> c(coeffs_);
    for (double& v : c) v *= s;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    std::vector<double> c(std::max(coeffs_.size(), other.coeffs_.size()), 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) c[i] += other.coeffs_[i];
    return Polynomial(std::move(c));
}

std::vector<Complex> roots(const Polynomial& p) {
    if (p.is_zero()) throw ZeroPolynomial("roots: zero polynomial has no well-defined root set");
    if (p.degree() < 1)
        throw ZeroPolynomial("roots: degree-0 polynomial (nonzero constant) has no roots");

    // exact zero roots first: factor out z^m
    std::vector<double> c = p.coeffs();
    std::vector<Complex> out;
    std::size_t m = 0;
    while (m < c.size() - 1 && c[m] == 0.0) ++m;
    out.assign(m, Complex(0.0, 0.0));
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(m));

    int n = static_cast<int>(c.size()) - 1;
    double lead = c.back();
    switch (n) {
        case 0:
            break;
        case 1:
            out.emplace_back(-c[0] / c[1], 0.0);
            break;
        case 2:
            quadratic_roots(c[2], c[1], c[0], out);
            break;
        case 3:
            cubic_roots(c[2] / lead, c[1] / lead, c[0] / lead, out);
            break;
        default: {
            std::vector<double> monic(c);
            for (double& v : monic) v /= lead;
            companion_roots(monic, out);
            break;
        }
    }
    sort_roots(out);
    return out;
}

std::pair<double, double> solve_complex_linear(Complex a, Complex b, Complex c) {
    // det of [[Re a, Re b], [Im a, Im b]] equals Im(conj(a) * b)
    double det = a.real() * b.imag() - a.imag() * b.real();
    double scale = std::abs(a) * std::abs(b);
    if (std::abs(det) <= 1e-14 * scale || det == 0.0)
        throw SingularSystem("solve_complex_linear: a and b are collinear in the complex plane");
    double x = (-c.real() * b.imag() + c.imag() * b.real()) / det;
    double y = (-a.real() * c.imag() + a.imag() * c.real()) / det;
    return {x, y};
}

}  // namespace zdeform

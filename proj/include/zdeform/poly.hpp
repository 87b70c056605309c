#pragma once

#include <complex>
#include <initializer_list>
#include <utility>
#include <vector>

#include "zdeform/errors.hpp"

namespace zdeform {

using Complex = std::complex<double>;

/// Real-coefficient polynomial in z, stored as coefficients in ascending
/// degree (coeffs[i] multiplies z^i). The zero polynomial has an empty
/// coefficient list; any other polynomial has a nonzero leading coefficient.
class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(std::initializer_list<double> coeffs) : coeffs_(coeffs) { trim(); }
    explicit Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    const std::vector<double>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the polynomial; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    double leading() const { return coeffs_.empty() ? 0.0 : coeffs_.back(); }
    double operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0.0; }

    /// Horner evaluation at a complex argument.
    Complex eval(Complex z) const;
    /// Horner evaluation at a real argument.
    double eval(double x) const;

    /// Term-wise derivative; degree drops by one.
    Polynomial derivative() const;

    Polynomial operator*(double s) const;
    Polynomial operator+(const Polynomial& other) const;

    bool operator==(const Polynomial& other) const { return coeffs_ == other.coeffs_; }

  private:
    void trim();
    std::vector<double> coeffs_;
};

inline Polynomial operator*(double s, const Polynomial& p) { return p * s; }

/// All complex roots of p with multiplicity, sorted by (re, im). Degrees 1-3
/// use closed forms (stable quadratic split; Cardano/trigonometric cubic with
/// a short Newton polish); higher degrees fall back to companion-matrix
/// eigenvalues. Conjugate pairs are returned exactly conjugate.
///
/// Throws ZeroPolynomial when no degree-one-or-higher polynomial is given.
std::vector<Complex> roots(const Polynomial& p);

/// Solve the single complex equation a*x + b*y + c = 0 for real (x, y).
/// Throws SingularSystem when a and b are collinear in the complex plane,
/// i.e. |Im(conj(a)*b)| <= 1e-14 * |a||b|.
std::pair<double, double> solve_complex_linear(Complex a, Complex b, Complex c);

}  // namespace zdeform

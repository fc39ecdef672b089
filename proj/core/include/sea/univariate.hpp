#pragma once

#include <string>
#include <vector>

#include "sea/form.hpp"
#include "sea/scalar.hpp"

namespace sea {

/// Dense polynomial in x, ascending powers, trailing zeros trimmed.
class UnivariatePoly {
public:
    UnivariatePoly() = default;
    explicit UnivariatePoly(std::vector<Scalar> ascending);
    static UnivariatePoly monomial(int exp, Scalar c = 1);

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
    /// Coefficient of x^i, zero past the degree.
    Scalar coeff(int i) const;
    const Scalar& leading() const;

    Scalar evaluate(const Scalar& x) const;
    UnivariatePoly derivative() const;

    UnivariatePoly& operator+=(const UnivariatePoly& rhs);
    UnivariatePoly& operator-=(const UnivariatePoly& rhs);
    friend UnivariatePoly operator+(UnivariatePoly a, const UnivariatePoly& b) { return a += b; }
    friend UnivariatePoly operator-(UnivariatePoly a, const UnivariatePoly& b) { return a -= b; }
    friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b);
    friend UnivariatePoly operator*(const Scalar& c, const UnivariatePoly& p);
    UnivariatePoly operator-() const;
    friend bool operator==(const UnivariatePoly&, const UnivariatePoly&) = default;

    /// Canonical text such as "x^11+1" or "-1/2*x^2+sqrt(-3)*x-1". Non-rational
    /// coefficients are parenthesized when they have two parts.
    std::string str() const;

private:
    std::vector<Scalar> coeffs_;
    void trim();
};

/// Quotient and remainder over the coefficient field.
std::pair<UnivariatePoly, UnivariatePoly> divmod(const UnivariatePoly& a, const UnivariatePoly& b);
/// Monic greatest common divisor (zero when both inputs are zero).
UnivariatePoly poly_gcd(UnivariatePoly a, UnivariatePoly b);

/// sum c_i x^i -> sum c_i X^i Z^(d-i). Requires d >= deg p.
BinaryForm homogenize(const UnivariatePoly& p, int d);
/// Sets Z = 1.
UnivariatePoly dehomogenize(const BinaryForm& f);

/// Determinant of the Sylvester matrix, rows of p first, coefficients in
/// descending order. Both inputs must be nonzero.
Scalar resultant(const UnivariatePoly& p, const UnivariatePoly& q);
/// (-1)^(d(d-1)/2) res(p, p') / lc(p). Requires deg p >= 1.
Scalar discriminant(const UnivariatePoly& p);
bool is_squarefree(const UnivariatePoly& p);
/// Squarefree as a binary form: at most a simple root at infinity and a
/// squarefree affine part.
bool is_squarefree(const BinaryForm& f);

/// Exact determinant by Gaussian elimination over the coefficient field.
Scalar determinant(std::vector<std::vector<Scalar>> m);

}  // namespace sea

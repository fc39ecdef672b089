#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sea {

using Rational = mpq_class;
using Integer = mpz_class;

/// Exact element of Q or of a quadratic extension Q(sqrt D).
///
/// Stored as rational + radical * sqrt(disc). The representation is
/// canonical: a zero radical part always carries disc == 0, so equal values
/// compare equal member-wise. Arithmetic between two scalars whose radical
/// parts are nonzero with different discriminants throws FieldMismatchError.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : rational_(v) {}  // NOLINT(google-explicit-constructor)
    Scalar(int v) : rational_(v) {}   // NOLINT(google-explicit-constructor)
    Scalar(Rational q) : rational_(std::move(q)) { rational_.canonicalize(); }  // NOLINT
    Scalar(Integer z) : rational_(std::move(z)) {}                             // NOLINT

    /// rational + radical * sqrt(disc); disc must be squarefree and != 0, 1.
    static Scalar quadratic(Rational rational, Rational radical, long disc);
    static Scalar sqrt_of(long disc) { return quadratic(0, 1, disc); }

    /// Parses "p", "p/q", "p/q+r/s*sqrt(D)", "r/s*sqrt(D)", "-sqrt(D)", ...
    static Scalar parse(std::string_view text);

    const Rational& rational_part() const noexcept { return rational_; }
    const Rational& radical_part() const noexcept { return radical_; }
    long disc() const noexcept { return disc_; }

    bool is_zero() const noexcept { return sgn(rational_) == 0 && disc_ == 0; }
    bool is_rational() const noexcept { return disc_ == 0; }
    bool is_one() const noexcept { return disc_ == 0 && rational_ == 1; }

    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
    Scalar operator-() const;

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.disc_ == b.disc_ && a.rational_ == b.rational_ && a.radical_ == b.radical_;
    }

    Scalar pow(unsigned exponent) const;
    Scalar conjugate() const;
    /// (a + b sqrt D)(a - b sqrt D), always rational.
    Rational norm() const;

    /// Canonical text form, see parse().
    std::string str() const;

    /// Nearest complex value as (re, im); used only by floating-point cross-checks.
    double approx_real() const;
    double approx_imag() const;

private:
    Rational rational_;
    Rational radical_;
    long disc_ = 0;

    void normalize();
    static long common_disc(const Scalar& a, const Scalar& b);
};

/// Throws PreconditionError unless disc is squarefree and not 0 or 1.
void check_discriminant(long disc);

/// n! and binomial coefficients as exact integers.
Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

}  // namespace sea

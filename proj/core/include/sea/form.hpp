#pragma once

#include <span>
#include <string>
#include <vector>

#include "sea/scalar.hpp"

namespace sea {

enum class Var { X, Z };

/// Homogeneous polynomial F(X, Z) = sum a_i X^i Z^(d-i) of fixed degree d.
///
/// Coefficients are stored in ascending order of the X exponent. The degree is
/// part of the value: the zero form of degree 4 differs from the zero form of
/// degree 2. All coefficients share one quadratic extension (or none).
class BinaryForm {
public:
    /// Zero form of the given degree.
    explicit BinaryForm(int degree = 0);

    /// Builds sum coeffs[i] X^i Z^(d-i) with d = coeffs.size() - 1.
    static BinaryForm from_ascending(std::vector<Scalar> coeffs);
    /// Builds sum coeffs[i] X^(d-i) Z^i, the other common convention.
    static BinaryForm from_descending(std::vector<Scalar> coeffs);
    static BinaryForm monomial(int x_exp, int z_exp, Scalar c = 1);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    std::span<const Scalar> coeffs() const noexcept { return coeffs_; }
    const Scalar& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
    bool is_zero() const noexcept { return zero_; }
    /// Shared discriminant of the coefficients, 0 for a rational form.
    long disc() const noexcept;

    /// b_i = ((d-i)! i! / d!) a_i, so that F = sum C(d,i) b_i X^i Z^(d-i).
    std::vector<Scalar> binomial_normalized() const;

    Scalar evaluate(const Scalar& x, const Scalar& z) const;

    BinaryForm& operator*=(const Scalar& c);
    friend BinaryForm operator*(const Scalar& c, BinaryForm f) { return f *= c; }
    friend BinaryForm operator*(BinaryForm f, const Scalar& c) { return f *= c; }
    BinaryForm operator-() const;

    friend bool operator==(const BinaryForm& a, const BinaryForm& b) { return a.coeffs_ == b.coeffs_; }

    /// "x^2*z^4+..." style text, for diagnostics only.
    std::string str() const;

private:
    std::vector<Scalar> coeffs_;
    bool zero_ = true;

    void refresh();
    friend BinaryForm form_add(const BinaryForm&, const BinaryForm&);
    friend BinaryForm form_sub(const BinaryForm&, const BinaryForm&);
    friend BinaryForm form_mul(const BinaryForm&, const BinaryForm&);
};

/// Checked constructor: coeffs.size() must equal d + 1 and share one field.
BinaryForm make_form(int d, std::vector<Scalar> coeffs);

BinaryForm form_add(const BinaryForm& f, const BinaryForm& g);
BinaryForm form_sub(const BinaryForm& f, const BinaryForm& g);
BinaryForm form_mul(const BinaryForm& f, const BinaryForm& g);
inline BinaryForm operator+(const BinaryForm& f, const BinaryForm& g) { return form_add(f, g); }
inline BinaryForm operator-(const BinaryForm& f, const BinaryForm& g) { return form_sub(f, g); }
inline BinaryForm operator*(const BinaryForm& f, const BinaryForm& g) { return form_mul(f, g); }
BinaryForm form_pow(const BinaryForm& f, unsigned k);

/// Iterated formal partial derivative. Past the degree the result is the
/// degree-0 zero form.
BinaryForm partial_derivative(const BinaryForm& f, Var var, int order);
/// d^(x_order + z_order) f / dX^x_order dZ^z_order in one pass.
BinaryForm mixed_partial(const BinaryForm& f, int x_order, int z_order);

class Matrix2 {
public:
    Matrix2(Scalar a, Scalar b, Scalar c, Scalar d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}
    static Matrix2 identity() { return {1, 0, 0, 1}; }

    const Scalar& a() const noexcept { return a_; }
    const Scalar& b() const noexcept { return b_; }
    const Scalar& c() const noexcept { return c_; }
    const Scalar& d() const noexcept { return d_; }
    Scalar det() const { return a_ * d_ - b_ * c_; }

    friend Matrix2 operator*(const Matrix2& m, const Matrix2& n) {
        return {m.a_ * n.a_ + m.b_ * n.c_, m.a_ * n.b_ + m.b_ * n.d_,
                m.c_ * n.a_ + m.d_ * n.c_, m.c_ * n.b_ + m.d_ * n.d_};
    }
    friend bool operator==(const Matrix2&, const Matrix2&) = default;

private:
    Scalar a_, b_, c_, d_;
};

/// f(aX + bZ, cX + dZ). Throws PreconditionError when det M = 0.
///
/// This is a right action: moebius_act(M, moebius_act(N, f)) equals
/// moebius_act(N * M, f).
BinaryForm moebius_act(const Matrix2& m, const BinaryForm& f);

}  // namespace sea

#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sea/scalar.hpp"
#include "sea/univariate.hpp"

namespace sea {

/// Sorted (parameter index, exponent) pairs; empty for the constant monomial.
using ParamMonomial = std::vector<std::pair<int, int>>;

/// Polynomial in the parameters a1, a2, ... with exact coefficients.
class ParamPoly {
public:
    ParamPoly() = default;
    ParamPoly(Scalar c);  // NOLINT(google-explicit-constructor)
    static ParamPoly param(int index);

    const std::map<ParamMonomial, Scalar>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (zero when absent).
    Scalar constant() const;
    std::set<int> params() const;

    ParamPoly& operator+=(const ParamPoly& rhs);
    ParamPoly& operator-=(const ParamPoly& rhs);
    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
    friend bool operator==(const ParamPoly&, const ParamPoly&) = default;

    /// Replaces each listed parameter; the others stay symbolic.
    ParamPoly substitute(const std::map<int, ParamPoly>& values) const;
    /// Throws PreconditionError when a parameter has no value.
    Scalar evaluate(const std::map<int, Scalar>& values) const;

    std::string str() const;

private:
    std::map<ParamMonomial, Scalar> terms_;
    void add_term(const ParamMonomial& m, const Scalar& c);
};

/// Polynomial in x whose coefficients are parameter polynomials; zero
/// coefficients are never stored.
class SymbolicPoly {
public:
    SymbolicPoly() = default;
    static SymbolicPoly constant(const ParamPoly& c);
    static SymbolicPoly x_power(int k);

    const std::map<int, ParamPoly>& coeffs() const noexcept { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const;
    ParamPoly coeff(int k) const;
    std::set<int> params() const;

    SymbolicPoly& operator+=(const SymbolicPoly& rhs);
    SymbolicPoly& operator-=(const SymbolicPoly& rhs);
    friend SymbolicPoly operator+(SymbolicPoly a, const SymbolicPoly& b) { return a += b; }
    friend SymbolicPoly operator-(SymbolicPoly a, const SymbolicPoly& b) { return a -= b; }
    friend SymbolicPoly operator*(const SymbolicPoly& a, const SymbolicPoly& b);
    friend bool operator==(const SymbolicPoly&, const SymbolicPoly&) = default;

    SymbolicPoly substitute(const std::map<int, ParamPoly>& values) const;
    UnivariatePoly evaluate(const std::map<int, Scalar>& values) const;
    /// Shifts every parameter index by offset.
    SymbolicPoly renumbered(int offset) const;

private:
    std::map<int, ParamPoly> coeffs_;
    void add(int k, const ParamPoly& c);
};

/// Parametric right-hand side of y^n = f(x).
///
/// Grammar (whitespace ignored):
///   expr   := ['-'] term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ['^' (int | ident | '(' expr ')')]
///   atom   := int ['/' int] | 'x' | 'a' int | 'a_' ident | 'sqrt(' ['-'] int ')'
///           | ('sum' | 'prod') '(' ident '=' int '..' int ',' expr ')'
///           | ident | '(' expr ')'
/// Bound identifiers may appear only in exponents and in a_<ident>.
class EquationTemplate {
public:
    struct Node;

    /// Throws ParseError on malformed text.
    static EquationTemplate parse(std::string_view text);

    /// Canonical text; parse(t.str()).str() == t.str().
    std::string str() const;
    const SymbolicPoly& symbolic() const noexcept { return expanded_; }
    /// Top-level multiplicative factors with product blocks unrolled.
    const std::vector<SymbolicPoly>& factors() const noexcept { return factors_; }
    /// Sorted parameter indices k of the symbols a_k.
    const std::vector<int>& params() const noexcept { return params_; }
    int degree() const { return expanded_.degree(); }

    /// Requires values for exactly the template's parameters.
    UnivariatePoly expand(const std::map<int, Scalar>& values) const;

private:
    std::shared_ptr<const Node> root_;
    SymbolicPoly expanded_;
    std::vector<SymbolicPoly> factors_;
    std::vector<int> params_;
};

}  // namespace sea

#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sea/scalar.hpp"
#include "sea/univariate.hpp"

namespace sea {

/// y^n = f(x) with squarefree f.
class SuperellipticCurve {
public:
    int n() const noexcept { return n_; }
    const UnivariatePoly& f() const noexcept { return f_; }
    int degree() const noexcept { return f_.degree(); }
    int genus() const noexcept { return genus_; }
    /// Set when the genus is below 2.
    bool low_genus() const noexcept { return genus_ < 2; }

    /// {"n", "f", "genus"}.
    std::string to_json() const;

private:
    friend SuperellipticCurve make_curve(int n, UnivariatePoly f);
    SuperellipticCurve(int n, UnivariatePoly f, int genus) : n_(n), f_(std::move(f)), genus_(genus) {}

    int n_;
    UnivariatePoly f_;
    int genus_;
};

/// Throws PreconditionError for n < 2, deg f < 2 or a repeated root.
SuperellipticCurve make_curve(int n, UnivariatePoly f);

/// (n(d-1) - d - gcd(n, d)) / 2 + 1.
int genus_formula(int n, int d);
/// 84(g - 1), g >= 2.
long hurwitz_bound(int g);

/// Multiset of branch indices as sorted (index, multiplicity) pairs.
class Signature {
public:
    Signature() = default;
    /// Merges repeated indices. Every index must be >= 2.
    explicit Signature(std::vector<std::pair<int, int>> indices, bool complete = false);
    /// "2^3,3^2" or "2,3,10".
    static Signature parse(std::string_view text);

    const std::vector<std::pair<int, int>>& indices() const noexcept { return indices_; }
    bool complete() const noexcept { return complete_; }
    /// Number of branch points.
    int size() const;
    Signature with_index(int e) const;
    Signature marked_complete() const;

    /// Same text format as parse, e.g. "2^3,3^2".
    std::string str() const;
    /// {"indices": [[e, mult], ...], "complete": bool}.
    std::string to_json() const;

    friend bool operator==(const Signature&, const Signature&) = default;

private:
    std::vector<std::pair<int, int>> indices_;
    bool complete_ = false;
};

/// (2/|G|)(g - 1) - [2g' - 2 + sum (1 - 1/e)]. Throws PreconditionError when an
/// index does not divide the group order.
Rational rh_residual(int g, long group_order, const Signature& sig, int quotient_genus = 0);

enum class CompletionStatus { already_complete, completed, ambiguous, failed };
std::string_view to_string(CompletionStatus status);

struct Completion {
    Signature signature;
    CompletionStatus status = CompletionStatus::failed;
    std::vector<int> candidates;  // every index that zeroes the residual
    bool ok() const noexcept {
        return status == CompletionStatus::already_complete || status == CompletionStatus::completed;
    }
};

/// Accepts the printed signature when its residual is 0, otherwise searches a
/// single extra index among the divisors of the group order.
Completion complete_signature(int g, long group_order, const Signature& printed);

enum class ReducedKind { Cm, D2m, A4, S4, A5 };
std::string_view to_string(ReducedKind kind);
ReducedKind reduced_kind_from_string(std::string_view text);

struct ReducedGroup {
    ReducedKind kind = ReducedKind::Cm;
    int m = 0;  // unused for A4, S4, A5

    long order() const;
    /// "C11", "D14", "A4", ...
    std::string str() const;
    friend bool operator==(const ReducedGroup&, const ReducedGroup&) = default;
};

/// n * |reduced|.
long full_group_order(int n, const ReducedGroup& reduced);

}  // namespace sea

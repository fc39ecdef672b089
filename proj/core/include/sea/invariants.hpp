#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sea/form.hpp"
#include "sea/scalar.hpp"

namespace sea {

enum class SystemKind { sextic, octavic, decimic, general, genus10 };
std::string_view to_string(SystemKind kind);
SystemKind system_kind_from_string(std::string_view text);

struct InvariantEntry {
    std::string name;
    int degree = 0;      // homogeneity degree in the form's coefficients
    std::string source;  // defining transvectant expression
    std::optional<Scalar> value;  // empty: not defined for this form degree
};

/// Named invariant values of one system, in definition order.
class InvariantVector {
public:
    explicit InvariantVector(SystemKind kind) : kind_(kind) {}

    SystemKind kind() const noexcept { return kind_; }
    const std::vector<InvariantEntry>& entries() const noexcept { return entries_; }

    void add(std::string name, int degree, std::string source, std::optional<Scalar> value);
    const InvariantEntry* find(std::string_view name) const;
    bool available(std::string_view name) const;
    /// Throws PreconditionError when the entry is missing or unavailable.
    const Scalar& at(std::string_view name) const;

private:
    SystemKind kind_;
    std::vector<InvariantEntry> entries_;
};

enum class RatioState { defined, undefined, unavailable };

struct AbsoluteEntry {
    std::string name;
    RatioState state = RatioState::unavailable;
    std::optional<Scalar> value;
};

/// Degree-zero ratios of invariants. A zero denominator makes the entry
/// undefined; it is never reported as 0.
class AbsoluteInvariants {
public:
    explicit AbsoluteInvariants(SystemKind kind) : kind_(kind) {}

    SystemKind kind() const noexcept { return kind_; }
    const std::vector<AbsoluteEntry>& entries() const noexcept { return entries_; }

    /// num / den where either part may be unavailable.
    void add_ratio(std::string name, const std::optional<Scalar>& num, const std::optional<Scalar>& den);
    const AbsoluteEntry* find(std::string_view name) const;
    bool defined(std::string_view name) const;
    const Scalar& at(std::string_view name) const;

private:
    SystemKind kind_;
    std::vector<AbsoluteEntry> entries_;
};

/// Named intermediate covariants.
struct CovariantSet {
    std::vector<std::pair<std::string, BinaryForm>> forms;
    const BinaryForm& at(std::string_view name) const;
};

struct InvariantSystem {
    InvariantVector invariants;
    CovariantSet covariants;
};

// Binary sextics: H, i, l and J2, J4, J6, J10.
InvariantSystem sextic_invariants(const BinaryForm& f);
AbsoluteInvariants sextic_absolute(const InvariantVector& inv);
AbsoluteInvariants sextic_absolute(const BinaryForm& f);

// Binary octavics: g, k, h, m, n, p, q and J2 ... J10 with integer prefactors.
InvariantSystem octavic_invariants(const BinaryForm& f);
AbsoluteInvariants octavic_absolute(const InvariantVector& inv);
AbsoluteInvariants octavic_absolute(const BinaryForm& f);

// Binary decimics: k, q, m, r, k_q, k_m, m_q and J2, J4, A6, C6, J8, J9, J10, J14, A14.
InvariantSystem decimic_invariants(const BinaryForm& f);
/// J2, J4, A6, C6, J8, J9, J10, J14 + A14: the homogeneous system of parameters.
std::vector<std::pair<std::string, Scalar>> decimic_parameters(const InvariantVector& inv);

/// Even degree d >= 6: I2, I3, I4, I4p, I6, I6p, I6star, I12, with covariants
/// J4, J8, ..., J(2d-4) and M. Entries whose defining transvectants do not
/// exist for this d are marked unavailable.
InvariantSystem general_invariants(const BinaryForm& f);
AbsoluteInvariants general_absolute(const InvariantVector& inv);
AbsoluteInvariants general_absolute(const BinaryForm& f);

struct Genus10Special {
    InvariantVector invariants{SystemKind::genus10};  // I6star_g10, I12star
    BinaryForm s;                                      // S = (J12, J16)^12, order 4
    AbsoluteInvariants absolute{SystemKind::genus10};  // v5
};
/// Degree-22 forms with I12 = 0 only; throws PreconditionError otherwise.
Genus10Special genus10_special(const BinaryForm& f);

enum class IsoOutcome { isomorphic, not_isomorphic, inconclusive };
std::string_view to_string(IsoOutcome outcome);

struct IsoResult {
    IsoOutcome outcome = IsoOutcome::inconclusive;
    std::string reason;  // set when inconclusive
};

/// Genus-2 test on sextics: equality of t1, t2, t3. Inconclusive when a form
/// is not squarefree or has J10 = 0.
IsoResult genus2_isomorphic(const BinaryForm& f1, const BinaryForm& f2);
/// Genus-3 hyperelliptic test on octavics: equality of t1 ... t6. Inconclusive
/// unless both forms are squarefree with J2, J3, J4, J5 nonzero.
IsoResult genus3_isomorphic(const BinaryForm& f1, const BinaryForm& f2);

/// {"kind", "invariants", "absolute", "availability"} document.
std::string to_json(const InvariantVector& inv, const AbsoluteInvariants& abs);

}  // namespace sea

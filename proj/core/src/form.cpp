#include "sea/form.hpp"

#include <algorithm>
#include <sstream>

#include "sea/error.hpp"

namespace sea {

namespace {

long shared_disc(std::span<const Scalar> coeffs) {
    long d = 0;
    for (const Scalar& c : coeffs) {
        if (c.disc() == 0) continue;
        if (d == 0) {
            d = c.disc();
        } else if (d != c.disc()) {
            throw FieldMismatchError("form coefficients mix Q(sqrt " + std::to_string(d) + ") and Q(sqrt " +
                                     std::to_string(c.disc()) + ")");
        }
    }
    return d;
}

// i * (i-1) * ... * (i-k+1)
Integer falling(int i, int k) {
    Integer r = 1;
    for (int j = 0; j < k; ++j) r *= i - j;
    return r;
}

}  // namespace

BinaryForm::BinaryForm(int degree) {
    if (degree < 0) throw PreconditionError("form degree must be nonnegative");
    coeffs_.assign(static_cast<std::size_t>(degree) + 1, Scalar());
}

BinaryForm BinaryForm::from_ascending(std::vector<Scalar> coeffs) {
    if (coeffs.empty()) throw PreconditionError("a form needs at least one coefficient");
    shared_disc(coeffs);
    BinaryForm f;
    f.coeffs_ = std::move(coeffs);
    f.refresh();
    return f;
}

BinaryForm BinaryForm::from_descending(std::vector<Scalar> coeffs) {
    std::reverse(coeffs.begin(), coeffs.end());
    return from_ascending(std::move(coeffs));
}

BinaryForm BinaryForm::monomial(int x_exp, int z_exp, Scalar c) {
    BinaryForm f(x_exp + z_exp);
    f.coeffs_[static_cast<std::size_t>(x_exp)] = std::move(c);
    f.refresh();
    return f;
}

void BinaryForm::refresh() {
    zero_ = std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return c.is_zero(); });
}

long BinaryForm::disc() const noexcept {
    for (const Scalar& c : coeffs_) {
        if (c.disc() != 0) return c.disc();
    }
    return 0;
}

std::vector<Scalar> BinaryForm::binomial_normalized() const {
    const int d = degree();
    std::vector<Scalar> b;
    b.reserve(coeffs_.size());
    for (int i = 0; i <= d; ++i) {
        Rational w(factorial(static_cast<unsigned>(d - i)) * factorial(static_cast<unsigned>(i)),
                   factorial(static_cast<unsigned>(d)));
        w.canonicalize();
        b.push_back(coeffs_[static_cast<std::size_t>(i)] * Scalar(w));
    }
    return b;
}

Scalar BinaryForm::evaluate(const Scalar& x, const Scalar& z) const {
    // Horner in X with Z powers folded in.
    const int d = degree();
    Scalar acc;
    Scalar zpow(1);
    std::vector<Scalar> zp(coeffs_.size());
    for (int i = 0; i <= d; ++i) {
        zp[static_cast<std::size_t>(i)] = zpow;
        zpow *= z;
    }
    for (int i = d; i >= 0; --i) {
        acc = acc * x + coeffs_[static_cast<std::size_t>(i)] * zp[static_cast<std::size_t>(d - i)];
    }
    return acc;
}

BinaryForm& BinaryForm::operator*=(const Scalar& c) {
    for (Scalar& a : coeffs_) a *= c;
    refresh();
    return *this;
}

BinaryForm BinaryForm::operator-() const {
    BinaryForm f = *this;
    for (Scalar& a : f.coeffs_) a = -a;
    return f;
}

std::string BinaryForm::str() const {
    std::ostringstream os;
    const int d = degree();
    bool first = true;
    for (int i = d; i >= 0; --i) {
        const Scalar& c = coeffs_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << c.str() << ")";
        if (i > 0) os << "*X^" << i;
        if (d - i > 0) os << "*Z^" << (d - i);
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

BinaryForm make_form(int d, std::vector<Scalar> coeffs) {
    if (d < 0) throw PreconditionError("form degree must be nonnegative");
    if (coeffs.size() != static_cast<std::size_t>(d) + 1) {
        throw PreconditionError("degree " + std::to_string(d) + " form needs " + std::to_string(d + 1) +
                                " coefficients, got " + std::to_string(coeffs.size()));
    }
    return BinaryForm::from_ascending(std::move(coeffs));
}

BinaryForm form_add(const BinaryForm& f, const BinaryForm& g) {
    if (f.degree() != g.degree()) {
        throw PreconditionError("cannot add forms of degree " + std::to_string(f.degree()) + " and " +
                                std::to_string(g.degree()));
    }
    BinaryForm h = f;
    for (std::size_t i = 0; i < h.coeffs_.size(); ++i) h.coeffs_[i] += g.coeffs_[i];
    h.refresh();
    return h;
}

BinaryForm form_sub(const BinaryForm& f, const BinaryForm& g) {
    if (f.degree() != g.degree()) {
        throw PreconditionError("cannot subtract forms of degree " + std::to_string(f.degree()) + " and " +
                                std::to_string(g.degree()));
    }
    BinaryForm h = f;
    for (std::size_t i = 0; i < h.coeffs_.size(); ++i) h.coeffs_[i] -= g.coeffs_[i];
    h.refresh();
    return h;
}

BinaryForm form_mul(const BinaryForm& f, const BinaryForm& g) {
    BinaryForm h(f.degree() + g.degree());
    if (f.is_zero() || g.is_zero()) return h;
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
        if (f.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < g.coeffs_.size(); ++j) {
            if (g.coeffs_[j].is_zero()) continue;
            h.coeffs_[i + j] += f.coeffs_[i] * g.coeffs_[j];
        }
    }
    h.refresh();
    return h;
}

BinaryForm form_pow(const BinaryForm& f, unsigned k) {
    BinaryForm r = BinaryForm::monomial(0, 0, 1);
    for (unsigned i = 0; i < k; ++i) r = form_mul(r, f);
    return r;
}

BinaryForm mixed_partial(const BinaryForm& f, int x_order, int z_order) {
    if (x_order < 0 || z_order < 0) throw PreconditionError("derivative order must be nonnegative");
    const int d = f.degree();
    const int e = d - x_order - z_order;
    if (e < 0) return BinaryForm(0);
    std::vector<Scalar> out(static_cast<std::size_t>(e) + 1);
    // X^i Z^(d-i) -> falling(i, x_order) falling(d-i, z_order) X^(i-x_order) Z^(d-i-z_order)
    for (int i = x_order; i <= d - z_order; ++i) {
        const Scalar& a = f[i];
        if (a.is_zero()) continue;
        out[static_cast<std::size_t>(i - x_order)] = a * Scalar(Integer(falling(i, x_order) * falling(d - i, z_order)));
    }
    return BinaryForm::from_ascending(std::move(out));
}

BinaryForm partial_derivative(const BinaryForm& f, Var var, int order) {
    return var == Var::X ? mixed_partial(f, order, 0) : mixed_partial(f, 0, order);
}

BinaryForm moebius_act(const Matrix2& m, const BinaryForm& f) {
    if (m.det().is_zero()) throw PreconditionError("substitution matrix is singular");
    const int d = f.degree();
    const BinaryForm first = BinaryForm::from_ascending({m.b(), m.a()});   // aX + bZ
    const BinaryForm second = BinaryForm::from_ascending({m.d(), m.c()});  // cX + dZ
    std::vector<BinaryForm> p1{BinaryForm::monomial(0, 0, 1)};
    std::vector<BinaryForm> p2{BinaryForm::monomial(0, 0, 1)};
    for (int i = 1; i <= d; ++i) {
        p1.push_back(form_mul(p1.back(), first));
        p2.push_back(form_mul(p2.back(), second));
    }
    BinaryForm out(d);
    for (int i = 0; i <= d; ++i) {
        if (f[i].is_zero()) continue;
        out = form_add(out, f[i] * form_mul(p1[static_cast<std::size_t>(i)], p2[static_cast<std::size_t>(d - i)]));
    }
    return out;
}

}  // namespace sea
